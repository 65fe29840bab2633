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

#ifndef CHARSUM_PADIC_EISENSTEIN_HPP
#define CHARSUM_PADIC_EISENSTEIN_HPP

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "zq.hpp"

namespace charsum {

/**
 * Element of Z_q[pi] with pi^{p-1} = -p, stored as p-1 coordinates in Z_q/p^N
 * for 1, pi, ..., pi^{p-2}. This is a pi-adic precision of (p-1)N.
 */
class EisensteinElem {
public:
    EisensteinElem() = default;

    static EisensteinElem zero(std::shared_ptr<const ZqContext> ctx, unsigned N) {
        if (ctx->p() == 2) throw std::invalid_argument("Eisenstein extension requires an odd prime");
        EisensteinElem e;
        e.c_.assign(ctx->p() - 1, ZqElem::zero(ctx, N));
        return e;
    }

    static EisensteinElem one(std::shared_ptr<const ZqContext> ctx, unsigned N) {
        return from_zq(ZqElem::one(std::move(ctx), N));
    }

    static EisensteinElem from_zq(const ZqElem& x) {
        EisensteinElem e = zero(x.context(), x.precision());
        e.c_[0] = x;
        return e;
    }

    static EisensteinElem pi(std::shared_ptr<const ZqContext> ctx, unsigned N) {
        EisensteinElem e = zero(ctx, N);
        if (e.c_.size() == 1) {
            e.c_[0] = ZqElem::from_integer(ctx, -static_cast<long>(ctx->p()), N);  // p = 2 never reaches here
        } else {
            e.c_[1] = ZqElem::one(ctx, N);
        }
        return e;
    }

    const std::shared_ptr<const ZqContext>& context() const { return c_.front().context(); }
    unsigned precision() const {
        unsigned N = c_.front().precision();
        for (const auto& x : c_) N = std::min(N, x.precision());
        return N;
    }
    std::span<const ZqElem> coefficients() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const ZqElem& x) { return x.is_zero(); });
    }

    friend EisensteinElem operator+(const EisensteinElem& a, const EisensteinElem& b) {
        EisensteinElem r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend EisensteinElem operator-(const EisensteinElem& a, const EisensteinElem& b) {
        EisensteinElem r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend EisensteinElem operator*(const EisensteinElem& a, const EisensteinElem& b) {
        const std::size_t e = a.c_.size();
        const auto& ctx = a.context();
        const unsigned N = std::min(a.precision(), b.precision());
        std::vector<ZqElem> prod(2 * e - 1, ZqElem::zero(ctx, N));
        for (std::size_t i = 0; i < e; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < e; ++j) {
                if (b.c_[j].is_zero()) continue;
                prod[i + j] += a.c_[i] * b.c_[j];
            }
        }
        const ZqElem minus_p = ZqElem::from_integer(ctx, -static_cast<long>(ctx->p()), N);
        EisensteinElem r = zero(ctx, N);
        for (std::size_t k = 0; k < prod.size(); ++k) {
            if (k < e)
                r.c_[k] += prod[k];
            else
                r.c_[k - e] += prod[k] * minus_p;
        }
        return r;
    }

    friend EisensteinElem operator*(const ZqElem& s, const EisensteinElem& a) {
        EisensteinElem r = a;
        for (auto& x : r.c_) x = s * x;
        return r;
    }

    EisensteinElem pow(std::uint64_t e) const {
        EisensteinElem result = one(context(), precision()), base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    /// Inverse of a unit (constant coordinate a Z_q unit) by Newton steps.
    EisensteinElem inverse() const {
        EisensteinElem v = from_zq(c_[0].inverse());
        const EisensteinElem two = from_zq(ZqElem::from_integer(context(), 2, precision()));
        const unsigned target = static_cast<unsigned>(c_.size()) * precision();
        for (unsigned correct = 1; correct < target; correct *= 2) v = v * (two - *this * v);
        return v;
    }

    friend bool operator==(const EisensteinElem& a, const EisensteinElem& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? " + " : "") + c_[i].to_string() + "*pi^" + std::to_string(i);
        return out;
    }

private:
    std::vector<ZqElem> c_;
};

/// min_i (i/(p-1) + ord_p c_i), converted to ord_q units.
inline ValuationResult ord(const EisensteinElem& x) {
    const auto& ctx = *x.context();
    const long e = static_cast<long>(ctx.p()) - 1;
    std::optional<BigRational> best;
    for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
        auto v = ord(x.coefficients()[i]);
        if (!v.reliable) continue;
        BigRational vp = v.value * ctx.degree() + rational(static_cast<long>(i), e);
        if (!best || vp < *best) best = vp;
    }
    if (!best) return {rational(static_cast<long>(x.precision()), ctx.degree()), false};
    return {*best / ctx.degree(), true};
}

/**
 * The root zeta_p = 1 + pi u of 1 + x + ... + x^{p-1} with u = 1 mod pi.
 * Dividing Phi_p(1 + pi u) by p gives
 *   G(u) = 1 - u^{p-1} + sum_{k=2}^{p-1} (C(p,k)/p) pi^{k-1} u^{k-1},
 * whose derivative is a unit at u = 1, so Newton's method converges.
 */
inline EisensteinElem zeta_p(std::shared_ptr<const ZqContext> ctx, unsigned N) {
    const std::uint32_t p = ctx->p();
    if (p == 2) throw std::invalid_argument("zeta_p: p = 2 is not supported on the Eisenstein path");
    const auto one = EisensteinElem::one(ctx, N);
    const auto pi = EisensteinElem::pi(ctx, N);
    auto scalar = [&](const BigInt& v) { return EisensteinElem::from_zq(ZqElem::from_integer(ctx, v, N)); };

    std::vector<EisensteinElem> pi_pow{one};
    for (std::uint32_t k = 1; k < p; ++k) pi_pow.push_back(pi_pow.back() * pi);

    auto G = [&](const EisensteinElem& u) {
        std::vector<EisensteinElem> up{one};
        for (std::uint32_t k = 1; k < p; ++k) up.push_back(up.back() * u);
        EisensteinElem g = one - up[p - 1], dg = scalar(-BigInt(p - 1)) * up[p - 2];
        for (std::uint32_t k = 2; k <= p - 1; ++k) {
            const BigInt c = binomial(p, k) / p;
            g = g + scalar(c) * pi_pow[k - 1] * up[k - 1];
            if (k >= 3) dg = dg + scalar(c * (k - 1)) * pi_pow[k - 1] * up[k - 2];
        }
        return std::make_pair(g, dg);
    };

    EisensteinElem u = one;
    for (int it = 0; it < 64; ++it) {
        auto [g, dg] = G(u);
        if (g.is_zero()) return one + pi * u;
        u = u - g * dg.inverse();
    }
    throw std::runtime_error("zeta_p: Hensel iteration did not converge");
}

/// p-adic working precision for Gauss sums: pi-adic 2(p-1)+4, and at least a+2 p-adic digits.
inline unsigned default_gauss_precision(std::uint32_t p, int a) {
    const unsigned pi_adic = 2 * (p - 1) + 4;
    return std::max<unsigned>((pi_adic + p - 2) / (p - 1), static_cast<unsigned>(a) + 2);
}

/// sum_{x != 0} omega(x)^{-c} zeta_p^{Tr x}.
inline EisensteinElem gauss_sum(long c, const Gf& F, unsigned N = 0) {
    const long q = static_cast<long>(F.order());
    if (c < 1 || c > q - 2) throw std::invalid_argument("gauss_sum: character numerator must lie in [1, q-2]");
    if (F.p() == 2) throw std::invalid_argument("gauss_sum: p = 2 is not supported on the Eisenstein path");
    if (N == 0) N = default_gauss_precision(F.p(), F.degree());
    auto ctx = zq_context(F);
    const ZqElem w = teichmuller(F, F.generator(), N).pow(static_cast<std::uint64_t>(q - 1 - c));
    std::vector<ZqElem> by_trace(F.p(), ZqElem::zero(ctx, N));
    ZqElem pw = ZqElem::one(ctx, N);
    for (long j = 0; j < q - 1; ++j) {
        by_trace[F.trace(F.exp(static_cast<std::uint64_t>(j)))] += pw;
        pw *= w;
    }
    const auto z = zeta_p(ctx, N);
    EisensteinElem acc = EisensteinElem::zero(ctx, N), zt = EisensteinElem::one(ctx, N);
    for (std::uint32_t t = 0; t < F.p(); ++t) {
        acc = acc + by_trace[t] * zt;
        zt = zt * z;
    }
    return acc;
}

/// (1/a) sum over the Frobenius orbit of c of c^(i)/(q-1).
inline BigRational stickelberger_ord(long c, std::uint32_t p, int a) {
    long q = 1;
    for (int i = 0; i < a; ++i) q *= p;
    if (c < 1 || c > q - 2) throw std::invalid_argument("stickelberger_ord: numerator must lie in [1, q-2]");
    long s = 0, ci = c;
    for (int i = 0; i < a; ++i) {
        s += ci;
        ci = ci * static_cast<long>(p) % (q - 1);
    }
    return rational(s, a * (q - 1));
}

}  // namespace charsum

#endif
