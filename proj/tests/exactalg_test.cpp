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

#include <cmath>
#include <random>

#include "charsum/exactalg.hpp"

using namespace charsum;

namespace {

TruncSeries<BigRational> rat_series(std::vector<BigRational> c) { return TruncSeries<BigRational>(std::move(c), 0); }

// Unreduced product followed by long division by Phi_N, written independently of BasicCyclo.
std::vector<BigInt> naive_mul_reduce(unsigned long N, const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    const auto& phi = cyclotomic_polynomial(N);
    const std::size_t f = phi.size() - 1;
    for (std::size_t deg = prod.size(); deg-- > f;) {
        BigInt lead = prod[deg];
        for (std::size_t j = 0; j <= f; ++j) prod[deg - f + j] -= lead * phi[j];
    }
    prod.resize(f);
    return prod;
}

CycloElem random_cyclo(std::mt19937& rng, unsigned long N, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<BigInt> v(euler_phi(N));
    for (auto& c : v) c = dist(rng);
    return CycloElem::from_poly(N, v);
}

}  // namespace

TEST(Rational, CanonicalForm) {
    BigRational r = rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(parse_rational("10/4"), rational(5, 2));
    EXPECT_THROW(rational(1, 0), std::domain_error);
    EXPECT_THROW(parse_rational("x/2"), std::invalid_argument);
}

TEST(RatPoly, ZeroHasNoDegree) {
    RatPoly z;
    EXPECT_FALSE(z.degree().has_value());
    RatPoly p({1, 2, 0, 0});
    EXPECT_EQ(p.degree(), 1u);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_FALSE((p - p).degree().has_value());
}

TEST(RatPoly, DivisionAndReversal) {
    // (1-t)^3 (2 + t) / (1-t)^2 = (1-t)(2+t)
    RatPoly f = RatPoly::one_minus_t_pow(3) * RatPoly({2, 1});
    EXPECT_EQ(div_exact(f, RatPoly::one_minus_t_pow(2)), RatPoly({2, -1, -1}));
    EXPECT_THROW(div_exact(RatPoly({1, 1}), RatPoly::one_minus_t_pow(1)), std::domain_error);
    EXPECT_EQ(RatPoly({1, 2}).reversed(3), RatPoly({0, 0, 2, 1}));
    EXPECT_EQ(RatPoly({1, 2, 3}).evaluate(2), 17);
    auto [q, r] = divmod(RatPoly({1, 0, 1}), RatPoly({0, 2}));
    EXPECT_EQ(q, RatPoly({0, rational(1, 2)}));
    EXPECT_EQ(r, RatPoly({1}));
}

TEST(Series, ExpOfZeroIsOne) {
    auto e = series_exp(rat_series({0, 0, 0, 0}));
    EXPECT_EQ(e, rat_series({1, 0, 0, 0}));
}

TEST(Series, ExpOfT) {
    auto e = series_exp(rat_series({0, 1, 0, 0}));
    EXPECT_EQ(e, rat_series({1, 1, rational(1, 2), rational(1, 6)}));
}

TEST(Series, ExpLogOnePlusT) {
    const std::size_t order = 12;
    std::vector<BigRational> one_plus_t(order, 0);
    one_plus_t[0] = 1;
    one_plus_t[1] = 1;
    auto l = series_log(rat_series(one_plus_t));
    // log(1+t) = sum (-1)^{m+1} t^m / m
    for (std::size_t m = 1; m < order; ++m) EXPECT_EQ(l[m], rational(m % 2 ? 1 : -1, static_cast<long>(m)));
    EXPECT_EQ(series_exp(l), rat_series(one_plus_t));
}

TEST(Series, LogOfOneIsZero) {
    auto l = series_log(rat_series({1, 0, 0}));
    EXPECT_EQ(l, rat_series({0, 0, 0}));
}

TEST(Series, LogGeometric) {
    const long q = 7;
    auto l = series_log(rat_series({1, -q, 0, 0, 0, 0}));
    for (long m = 1; m < 6; ++m) EXPECT_EQ(l[m], -BigRational(pow(BigInt(q), m)) / m);
}

TEST(Series, LogGivesRootPowerSums) {
    // (1 - 2t)(1 - 3t): log coefficient of t^m is -(2^m + 3^m)/m
    auto l = series_log(rat_series({1, -5, 6, 0, 0, 0, 0}));
    for (long m = 1; m < 7; ++m) {
        BigRational oracle = -BigRational(pow(BigInt(2), m) + pow(BigInt(3), m)) / m;
        EXPECT_EQ(l[m], oracle) << "m=" << m;
    }
}

TEST(Series, PreconditionErrors) {
    EXPECT_THROW(series_exp(rat_series({1, 0})), std::invalid_argument);
    EXPECT_THROW(series_log(rat_series({2, 0})), std::invalid_argument);
}

TEST(Series, ExpLogRoundTripRandom) {
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    for (std::size_t order = 1; order <= 32; ++order) {
        std::vector<BigRational> c(order);
        c[0] = 1;
        for (std::size_t i = 1; i < order; ++i) c[i] = rational(num(rng), den(rng));
        auto s = rat_series(c);
        EXPECT_EQ(series_exp(series_log(s)), s) << "order " << order;
    }
}

TEST(Series, CyclotomicCoefficients) {
    const unsigned long N = 6;
    CycloRat zero = CycloRat::zero(N);
    std::vector<CycloRat> c(8, zero);
    c[0] = CycloRat::one(N);
    c[1] = CycloRat::zeta_power(N, 1);
    c[3] = CycloRat::zeta_power(N, 2) * BigRational(3);
    TruncSeries<CycloRat> s(c, zero);
    EXPECT_EQ(series_exp(series_log(s)), s);
}

TEST(Cyclotomic, KnownPolynomials) {
    EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<BigInt>{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<BigInt>{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<BigInt>{1, 0, -1, 0, 1}));
    EXPECT_EQ(euler_phi(30), 8u);
    // Phi_105 is the first with a coefficient of absolute value 2.
    const auto& phi105 = cyclotomic_polynomial(105);
    EXPECT_EQ(phi105.size() - 1, 48u);
    EXPECT_NE(std::find(phi105.begin(), phi105.end(), BigInt(-2)), phi105.end());
}

TEST(Cyclotomic, RootOfUnityProducts) {
    EXPECT_EQ(CycloElem::zeta_power(6, 1) * CycloElem::zeta_power(6, 5), CycloElem::one(6));
    EXPECT_EQ(CycloElem::zeta_power(4, 1) * CycloElem::zeta_power(4, 1), CycloElem::from_integer(4, -1));
    EXPECT_EQ(CycloElem::zeta_power(8, -1), CycloElem::zeta_power(8, 7));
}

TEST(Cyclotomic, MatchesUnreducedProduct) {
    const unsigned long N = 5;
    CycloElem x = CycloElem::one(N) + CycloElem::zeta_power(N, 1);
    CycloElem y = CycloElem::one(N) + CycloElem::zeta_power(N, 4);
    std::vector<BigInt> a{1, 1}, b{1, 0, 0, 0, 1};
    auto expected = naive_mul_reduce(N, a, b);
    auto got = x * y;
    EXPECT_EQ(std::vector<BigInt>(got.residue().begin(), got.residue().end()), expected);
}

TEST(Cyclotomic, ModulusMismatch) {
    EXPECT_THROW(CycloElem::one(4) * CycloElem::one(6), std::invalid_argument);
    EXPECT_THROW(CycloElem::one(4) + CycloElem::one(6), std::invalid_argument);
}

TEST(Cyclotomic, RingAxiomsRandom) {
    std::mt19937 rng(7);
    for (unsigned long N : {3UL, 4UL, 6UL, 8UL, 12UL, 15UL, 24UL, 48UL}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto x = random_cyclo(rng, N, 9), y = random_cyclo(rng, N, 9), z = random_cyclo(rng, N, 9);
            EXPECT_EQ(x * y, y * x);
            EXPECT_EQ((x * y) * z, x * (y * z));
            EXPECT_EQ(x * (y + z), x * y + x * z);
            std::vector<BigInt> a(x.residue().begin(), x.residue().end()), b(y.residue().begin(), y.residue().end());
            auto prod = x * y;
            EXPECT_EQ(std::vector<BigInt>(prod.residue().begin(), prod.residue().end()), naive_mul_reduce(N, a, b));
        }
    }
}

TEST(Cyclotomic, GaloisAction) {
    const unsigned long N = 8;
    auto x = CycloElem::zeta_power(N, 1) + CycloElem::from_integer(N, 2);
    EXPECT_EQ(x.galois(3), CycloElem::zeta_power(N, 3) + CycloElem::from_integer(N, 2));
    EXPECT_THROW(x.galois(2), std::invalid_argument);
}

TEST(Cyclotomic, ExactDivision) {
    auto x = CycloElem::zeta_power(6, 1) * BigInt(4) + CycloElem::from_integer(6, 8);
    EXPECT_EQ(div_exact(x, 4), CycloElem::zeta_power(6, 1) + CycloElem::from_integer(6, 2));
    EXPECT_THROW(div_exact(x, 3), std::domain_error);
    EXPECT_THROW(to_integral(to_rational(x) / BigRational(3)), std::domain_error);
}

TEST(Embeddings, One) {
    for (const auto& e : complex_embeddings(CycloElem::one(12))) {
        EXPECT_NEAR(static_cast<double>(e.value.real()), 1.0, 1e-15);
        EXPECT_NEAR(static_cast<double>(e.value.imag()), 0.0, 1e-15);
    }
    EXPECT_EQ(complex_embeddings(CycloElem::one(12)).size(), 4u);
}

TEST(Embeddings, ZetaFour) {
    auto emb = complex_embeddings(CycloElem::zeta_power(4, 1));
    ASSERT_EQ(emb.size(), 2u);
    EXPECT_NEAR(static_cast<double>(emb[0].value.imag()), 1.0, 1e-15);
    EXPECT_NEAR(static_cast<double>(emb[1].value.imag()), -1.0, 1e-15);
    EXPECT_THROW(complex_embeddings(CycloElem::one(4), 200), std::invalid_argument);
}

TEST(Embeddings, GaussSumModulusPFive) {
    // g(chi, psi) over F_5 with chi(2^k) = zeta_4^{kc}, psi(x) = zeta_5^x, inside Q(zeta_20).
    const unsigned long N = 20;
    for (long c = 1; c <= 3; ++c) {
        CycloElem g = CycloElem::zero(N);
        long x = 1;
        for (long k = 0; k < 4; ++k) {
            g += CycloElem::zeta_power(N, 5 * k * c + 4 * x);
            x = x * 2 % 5;
        }
        for (const auto& e : complex_embeddings(g)) EXPECT_NEAR(static_cast<double>(std::norm(e.value)), 5.0, 1e-9);
    }
}

TEST(Embeddings, RingHomomorphismRandom) {
    std::mt19937 rng(99);
    for (unsigned long N : {5UL, 7UL, 8UL, 9UL, 12UL, 16UL}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto x = random_cyclo(rng, N, 3), y = random_cyclo(rng, N, 3);
            auto ex = complex_embeddings(x), ey = complex_embeddings(y);
            auto es = complex_embeddings(x + y), ep = complex_embeddings(x * y);
            for (std::size_t i = 0; i < ex.size(); ++i) {
                EXPECT_LT(static_cast<double>(std::abs(es[i].value - (ex[i].value + ey[i].value))), 1e-12);
                EXPECT_LT(static_cast<double>(std::abs(ep[i].value - ex[i].value * ey[i].value)), 1e-12);
            }
        }
    }
}
