/*
   Copyright 2026 The charsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "charsum/ffield.hpp"
#include "charsum/padic.hpp"

using namespace charsum;

namespace {

// Sum of base-p digits of c: the classical form of the Stickelberger exponent.
long digit_sum(long c, long p) {
    long s = 0;
    for (; c; c /= p) s += c % p;
    return s;
}

ZqElem random_zq(const std::shared_ptr<const ZqContext>& ctx, unsigned N, std::mt19937_64& rng, int shift = 0) {
    std::vector<BigInt> c;
    BigInt pn = pow(BigInt(ctx->p()), N);
    for (int i = 0; i < ctx->degree(); ++i) {
        BigInt v = BigInt(static_cast<unsigned long>(rng() % 1000003)) * pow(BigInt(ctx->p()), shift);
        c.push_back(v % pn);
    }
    return ZqElem::from_coefficients(ctx, std::move(c), N);
}

HomogPoly form(int n, int d, std::vector<std::pair<std::vector<int>, std::uint32_t>> terms) {
    std::vector<Monomial> ms;
    for (auto& [u, c] : terms) ms.push_back(Monomial{u, c});
    return HomogPoly::make(n, d, std::move(ms));
}

}  // namespace

TEST(Teichmuller, Examples) {
    auto F5 = build_field(5, 1);
    EXPECT_EQ(teichmuller(*F5, 1, 2), ZqElem::from_integer(zq_context(*F5), 1, 2));
    EXPECT_EQ(teichmuller(*F5, 2, 2), ZqElem::from_integer(zq_context(*F5), 7, 2));
    EXPECT_EQ(teichmuller(*F5, 4, 2), ZqElem::from_integer(zq_context(*F5), 24, 2));
    EXPECT_THROW(teichmuller(*F5, 0, 2), std::invalid_argument);
}

TEST(Teichmuller, MultiplicativeAndRootOfUnity) {
    for (auto [p, a] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}, {2, 3}}) {
        auto F = build_field(p, a);
        auto ctx = zq_context(*F);
        const unsigned N = 6;
        const auto q = F->order();
        std::vector<ZqElem> w(q);
        for (Gf::Elt x = 1; x < q; ++x) {
            w[x] = teichmuller(*F, x, N);
            EXPECT_EQ(w[x].pow(q - 1), ZqElem::one(ctx, N));
            EXPECT_EQ(w[x].residue(*F), x);
        }
        for (Gf::Elt x = 1; x < q; ++x)
            for (Gf::Elt y = 1; y < q; ++y) EXPECT_EQ(w[x] * w[y], w[F->mul(x, y)]) << p << "^" << a;
    }
}

TEST(Zq, RingAndValuation) {
    auto F = build_field(3, 2);
    auto ctx = zq_context(*F);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto x = random_zq(ctx, 10, rng), y = random_zq(ctx, 10, rng), z = random_zq(ctx, 10, rng);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x - x, ZqElem::zero(ctx, 10));
        auto vx = ord(x), vy = ord(y);
        if (vx.reliable && vy.reliable && vx.value + vy.value < 5) {
            auto vxy = ord(x * y);
            EXPECT_TRUE(vxy.reliable);
            EXPECT_EQ(vxy.value, vx.value + vy.value);
        }
    }
    // precision is the minimum of the operands
    auto a = random_zq(ctx, 10, rng), b = random_zq(ctx, 4, rng);
    EXPECT_EQ((a + b).precision(), 4u);
    EXPECT_EQ((a * b).precision(), 4u);

    auto q = ZqElem::from_integer(ctx, 9, 10);
    EXPECT_EQ(ord(q).value, 1);
    EXPECT_TRUE(ord(q).reliable);
    auto zero = ZqElem::zero(ctx, 10);
    EXPECT_FALSE(ord(zero).reliable);
    auto tiny = ZqElem::from_integer(ctx, 3, 10).pow(10);
    EXPECT_FALSE(ord(tiny).reliable);
}

TEST(Zq, UnitInverse) {
    auto F = build_field(5, 2);
    auto ctx = zq_context(*F);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        auto x = random_zq(ctx, 12, rng);
        if (ord(x).value != 0) continue;
        EXPECT_EQ(x * x.inverse(), ZqElem::one(ctx, 12));
    }
    EXPECT_THROW(ZqElem::from_integer(ctx, 5, 12).inverse(), std::domain_error);
}

TEST(Eisenstein, PiAndRelation) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        auto F = build_field(p, 1);
        auto ctx = zq_context(*F);
        auto pi = EisensteinElem::pi(ctx, 8);
        EXPECT_EQ(ord(pi).value, rational(1, p - 1));
        EXPECT_EQ(pi.pow(p - 1), EisensteinElem::from_zq(ZqElem::from_integer(ctx, -static_cast<long>(p), 8)));
    }
    auto F9 = build_field(3, 2);
    auto pi9 = EisensteinElem::pi(zq_context(*F9), 6);
    EXPECT_EQ(ord(pi9).value, rational(1, 4));  // 1/(a(p-1))
    EXPECT_FALSE(ord(EisensteinElem::zero(zq_context(*F9), 6)).reliable);
}

TEST(Eisenstein, ZetaP) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        auto F = build_field(p, 1);
        auto ctx = zq_context(*F);
        const unsigned N = 6;
        auto z = zeta_p(ctx, N);
        auto one = EisensteinElem::one(ctx, N);
        EXPECT_EQ(z.pow(p), one);
        EXPECT_NE(z, one);
        auto s = EisensteinElem::zero(ctx, N), pw = one;
        for (std::uint32_t k = 0; k < p; ++k) {
            s = s + pw;
            pw = pw * z;
        }
        EXPECT_EQ(s, EisensteinElem::zero(ctx, N));
        // ord_p(zeta - 1) = 1/(p-1): in ord_q units with a = 1 it is the same
        EXPECT_EQ(ord(z - one).value, rational(1, p - 1));
        // zeta = 1 + pi mod pi^2
        auto pi = EisensteinElem::pi(ctx, N);
        EXPECT_GE(ord(z - one - pi).value, rational(2, p - 1));
    }
    auto F2 = build_field(2, 1);
    EXPECT_THROW(zeta_p(zq_context(*F2), 4), std::invalid_argument);
}

TEST(Gauss, StickelbergerExamples) {
    EXPECT_EQ(ord(gauss_sum(2, *build_field(5, 1))).value, rational(1, 2));
    EXPECT_EQ(ord(gauss_sum(1, *build_field(7, 1))).value, rational(1, 6));
    EXPECT_EQ(ord(gauss_sum(1, *build_field(3, 2))).value, rational(1, 4));
    EXPECT_EQ(stickelberger_ord(1, 7, 1), rational(1, 6));
    EXPECT_EQ(stickelberger_ord(1, 3, 2), rational(1, 4));
    EXPECT_EQ(stickelberger_ord(7, 3, 2), rational(3, 4));
    EXPECT_THROW(stickelberger_ord(0, 7, 1), std::invalid_argument);
    EXPECT_THROW(stickelberger_ord(6, 7, 1), std::invalid_argument);
    EXPECT_THROW(gauss_sum(0, *build_field(7, 1)), std::invalid_argument);
    EXPECT_THROW(gauss_sum(1, *build_field(2, 2)), std::invalid_argument);
}

TEST(Gauss, StickelbergerAllCharacters) {
    for (auto [p, a] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {3, 3}, {5, 2}}) {
        auto F = build_field(p, a);
        const long q = static_cast<long>(F->order());
        for (long c = 1; c <= q - 2; ++c) {
            auto g = gauss_sum(c, *F);
            auto v = ord(g);
            EXPECT_TRUE(v.reliable);
            EXPECT_EQ(v.value, stickelberger_ord(c, p, a)) << p << "^" << a << " c=" << c;
            EXPECT_EQ(v.value, rational(digit_sum(c, p), a * static_cast<long>(p - 1)));
        }
    }
}

TEST(Gauss, NormIdentity) {
    // g(chi) g(chi^{-1}) = chi(-1) q with chi = omega^{-c}, chi(-1) = (-1)^c
    for (auto [p, a] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {3, 2}}) {
        auto F = build_field(p, a);
        auto ctx = zq_context(*F);
        const long q = static_cast<long>(F->order());
        const unsigned N = 8;
        for (long c = 1; c <= q - 2; ++c) {
            auto prod = gauss_sum(c, *F, N) * gauss_sum(q - 1 - c, *F, N);
            auto expect = EisensteinElem::from_zq(ZqElem::from_integer(ctx, (c % 2 ? -q : q), N));
            EXPECT_EQ(prod, expect) << c;
        }
    }
}

TEST(CycloToZq, HomomorphismAndGenerator) {
    auto F = build_field(3, 2);
    auto ctx = zq_context(*F);
    const unsigned N = 8;
    EXPECT_EQ(cyclo_to_zq(CycloElem::one(8), *F, N), ZqElem::one(ctx, N));
    EXPECT_EQ(cyclo_to_zq(CycloElem::zeta_power(8, 1), *F, N), teichmuller(*F, F->generator(), N));
    EXPECT_EQ(cyclo_to_zq(CycloElem::zeta_power(8, 1), *F, N, EmbeddingConvention::Inverse),
              teichmuller(*F, F->inv(F->generator()), N));
    std::mt19937_64 rng(3);
    auto rnd = [&] {
        std::vector<BigInt> v;
        for (int i = 0; i < 4; ++i) v.push_back(BigInt(static_cast<long>(rng() % 21) - 10));
        return CycloElem::from_poly(8, v);
    };
    for (int t = 0; t < 40; ++t) {
        auto x = rnd(), y = rnd();
        for (auto conv : {EmbeddingConvention::Teichmuller, EmbeddingConvention::Inverse}) {
            EXPECT_EQ(cyclo_to_zq(x * y, *F, N, conv), cyclo_to_zq(x, *F, N, conv) * cyclo_to_zq(y, *F, N, conv));
            EXPECT_EQ(cyclo_to_zq(x + y, *F, N, conv), cyclo_to_zq(x, *F, N, conv) + cyclo_to_zq(y, *F, N, conv));
        }
    }
    EXPECT_THROW(cyclo_to_zq(CycloElem::one(6), *F, N), std::invalid_argument);
}

TEST(CycloToZq, ValuationDependsOnTheEmbedding) {
    // J = sum chi2(t) chi3(1+t) at q=7 with c=(2,3): ord 0 under omega, ord 1 under omega^{-1}
    auto F = build_field(7, 1);
    auto ext = extend(F, 1);
    std::vector<HomogPoly> fs{form(1, 1, {{{1, 0}, 1}}), form(1, 1, {{{0, 1}, 1}}),
                              form(1, 1, {{{1, 0}, 1}, {{0, 1}, 1}})};
    std::vector<long> c{1, 2, 3};
    auto S = character_sum_exact(*ext, fs, c);
    auto v_teich = ord(cyclo_to_zq(S, *F, 6));
    auto v_inv = ord(cyclo_to_zq(S, *F, 6, EmbeddingConvention::Inverse));
    // ord_q J(omega^{-2}, omega^{-3}) = s(2)/6 + s(3)/6 - s(5)/6 = 0
    EXPECT_EQ(v_teich.value, 0);
    EXPECT_EQ(v_inv.value, 1);
}

TEST(CharSumValue, RepresentationsAgree) {
    for (auto [p, a, m] : std::vector<std::tuple<std::uint32_t, int, int>>{{7, 1, 1}, {7, 1, 2}, {3, 2, 1}, {3, 2, 2}}) {
        auto F = build_field(p, a);
        const long q = static_cast<long>(F->order());
        std::vector<HomogPoly> fs{form(1, 1, {{{1, 0}, 1}}), form(1, 1, {{{0, 1}, 1}}),
                                  form(1, 1, {{{1, 0}, 1}, {{0, 1}, 1}})};
        std::vector<long> c{1, 2, q - 4};
        auto v = char_sum(*extend(F, m), fs, c, 8);
        EXPECT_EQ(cyclo_to_zq(v.exact, *F, 8), v.padic);
        EXPECT_EQ(v.exact, character_sum_exact(*extend(F, m), fs, c));
    }
}
