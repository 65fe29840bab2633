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

#ifndef CHARSUM_PADIC_ZQ_HPP
#define CHARSUM_PADIC_ZQ_HPP

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "../exactalg.hpp"
#include "../ffield/gf.hpp"

namespace charsum {

/// Z_q = Z_p[x]/(M~) with M~ the digit-wise integer lift of the residue field's modulus.
class ZqContext {
public:
    explicit ZqContext(const Gf& F) : p_(F.p()), a_(F.degree()) {
        for (auto d : F.modulus()) modulus_.emplace_back(static_cast<unsigned long>(d));
        for (unsigned i = 0; i < kCachedPowers; ++i) powers_.push_back(charsum::pow(BigInt(p_), i));
    }

    std::uint32_t p() const { return p_; }
    int degree() const { return a_; }
    std::span<const BigInt> modulus() const { return modulus_; }

    BigInt p_power(unsigned N) const { return N < kCachedPowers ? powers_[N] : charsum::pow(BigInt(p_), N); }

private:
    static constexpr unsigned kCachedPowers = 256;
    std::uint32_t p_;
    int a_;
    std::vector<BigInt> modulus_;
    std::vector<BigInt> powers_;
};

inline std::shared_ptr<const ZqContext> zq_context(const Gf& F) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, int>, std::shared_ptr<const ZqContext>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{F.p(), F.degree()}];
    if (!slot) slot = std::make_shared<const ZqContext>(F);
    return slot;
}

/// ord_q of a p-adic quantity; unreliable means indistinguishable from zero, value is then a lower bound.
struct ValuationResult {
    BigRational value;
    bool reliable = false;
};

/**
 * Element of Z_q / p^N: coordinates in the basis 1, x, ..., x^{a-1}, each in
 * [0, p^N). Binary operations work at the smaller of the two precisions.
 */
class ZqElem {
public:
    ZqElem() = default;

    static ZqElem zero(std::shared_ptr<const ZqContext> ctx, unsigned N) {
        ZqElem z;
        z.ctx_ = std::move(ctx);
        z.N_ = N;
        z.c_.assign(z.ctx_->degree(), BigInt(0));
        return z;
    }

    static ZqElem one(std::shared_ptr<const ZqContext> ctx, unsigned N) { return from_integer(std::move(ctx), 1, N); }

    static ZqElem from_integer(std::shared_ptr<const ZqContext> ctx, const BigInt& v, unsigned N) {
        ZqElem z = zero(std::move(ctx), N);
        z.c_[0] = v;
        z.normalize();
        return z;
    }

    static ZqElem from_coefficients(std::shared_ptr<const ZqContext> ctx, std::vector<BigInt> c, unsigned N) {
        if (c.size() != static_cast<std::size_t>(ctx->degree()))
            throw std::invalid_argument("ZqElem: coefficient count must equal the residue degree");
        ZqElem z;
        z.ctx_ = std::move(ctx);
        z.N_ = N;
        z.c_ = std::move(c);
        z.normalize();
        return z;
    }

    /// Digit-wise lift of a residue-field element.
    static ZqElem lift(std::shared_ptr<const ZqContext> ctx, const Gf& F, Gf::Elt x, unsigned N) {
        std::vector<BigInt> c;
        for (auto d : F.digits(x)) c.emplace_back(static_cast<unsigned long>(d));
        return from_coefficients(std::move(ctx), std::move(c), N);
    }

    const std::shared_ptr<const ZqContext>& context() const { return ctx_; }
    unsigned precision() const { return N_; }
    std::span<const BigInt> coefficients() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
    }

    /// Reduction mod p as a residue-field element.
    Gf::Elt residue(const Gf& F) const {
        std::vector<std::uint32_t> d;
        for (const auto& v : c_) d.push_back(static_cast<std::uint32_t>(mod_floor(v, BigInt(ctx_->p())).get_ui()));
        return F.from_digits(d);
    }

    ZqElem with_precision(unsigned N) const {
        ZqElem r = *this;
        r.N_ = std::min(N, N_);
        r.normalize();
        return r;
    }

    ZqElem operator-() const {
        ZqElem r = *this;
        for (auto& v : r.c_) v = -v;
        r.normalize();
        return r;
    }

    friend ZqElem operator+(const ZqElem& a, const ZqElem& b) {
        ZqElem r = a.combine_base(b);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        r.normalize();
        return r;
    }

    friend ZqElem operator-(const ZqElem& a, const ZqElem& b) {
        ZqElem r = a.combine_base(b);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        r.normalize();
        return r;
    }

    friend ZqElem operator*(const ZqElem& a, const ZqElem& b) {
        ZqElem r = a.combine_base(b);
        const std::size_t k = r.c_.size();
        std::vector<BigInt> prod(2 * k - 1, BigInt(0));
        for (std::size_t i = 0; i < k; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        const auto mod = r.ctx_->modulus();
        for (std::size_t i = prod.size(); i-- > k;) {
            if (prod[i] == 0) continue;
            BigInt c = prod[i];
            for (std::size_t j = 0; j <= k; ++j) prod[i - k + j] -= c * mod[j];
        }
        prod.resize(k);
        r.c_ = std::move(prod);
        r.normalize();
        return r;
    }

    ZqElem& operator+=(const ZqElem& o) { return *this = *this + o; }
    ZqElem& operator*=(const ZqElem& o) { return *this = *this * o; }

    ZqElem pow(std::uint64_t e) const {
        ZqElem result = one(ctx_, N_), base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Inverse of a unit: residue inverse x^{q-2}, refined by Newton steps v <- v(2 - xv).
    ZqElem inverse() const {
        const BigInt p(ctx_->p());
        const bool unit = std::any_of(c_.begin(), c_.end(), [&](const BigInt& v) { return mod_floor(v, p) != 0; });
        if (!unit) throw std::domain_error("ZqElem::inverse: not a unit");
        std::uint64_t q = 1;
        for (int i = 0; i < ctx_->degree(); ++i) q *= ctx_->p();
        ZqElem v = pow(q - 2);
        const ZqElem two = from_integer(ctx_, 2, N_);
        for (unsigned correct = 1; correct < N_; correct *= 2) v = v * (two - *this * v);
        return v;
    }

    /// Equality at the smaller precision.
    friend bool operator==(const ZqElem& a, const ZqElem& b) {
        if (a.ctx_ != b.ctx_) return false;
        const unsigned N = std::min(a.N_, b.N_);
        const BigInt pn = a.ctx_->p_power(N);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (mod_floor(a.c_[i] - b.c_[i], pn) != 0) return false;
        return true;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? ", " : "") + c_[i].get_str();
        return out + "] mod " + std::to_string(ctx_->p()) + "^" + std::to_string(N_);
    }

private:
    ZqElem combine_base(const ZqElem& b) const {
        if (!ctx_ || ctx_ != b.ctx_) throw std::invalid_argument("ZqElem: mismatched rings");
        ZqElem r;
        r.ctx_ = ctx_;
        r.N_ = std::min(N_, b.N_);
        r.c_.assign(c_.size(), BigInt(0));
        return r;
    }

    void normalize() {
        const BigInt pn = ctx_->p_power(N_);
        for (auto& v : c_) v = mod_floor(v, pn);
    }

    std::shared_ptr<const ZqContext> ctx_;
    unsigned N_ = 0;
    std::vector<BigInt> c_;
};

/// ord_q = (min coordinate valuation) / a.
inline ValuationResult ord(const ZqElem& x) {
    const auto& ctx = *x.context();
    const BigInt p(ctx.p());
    std::optional<unsigned long> best;
    for (const auto& v : x.coefficients()) {
        if (v == 0) continue;
        const unsigned long vv = valuation(v, p);
        if (!best || vv < *best) best = vv;
    }
    if (!best) return {rational(static_cast<long>(x.precision()), ctx.degree()), false};
    return {rational(static_cast<long>(*best), ctx.degree()), true};
}

/**
 * omega(x): the (q-1)-st root of unity congruent to x mod p, by iterating
 * z -> z^q from the digit lift until it is stable mod p^N.
 */
inline ZqElem teichmuller(const Gf& F, Gf::Elt x, unsigned N) {
    if (x == 0) throw std::invalid_argument("teichmuller: zero has no Teichmuller lift");
    auto ctx = zq_context(F);
    ZqElem z = ZqElem::lift(ctx, F, x, N);
    for (unsigned it = 0; it <= N + 1; ++it) {
        ZqElem next = z.pow(F.order());
        if (next == z) return z;
        z = std::move(next);
    }
    throw std::logic_error("teichmuller: iteration did not stabilize");
}

/// Which Teichmuller power zeta_{q-1} is sent to.
enum class EmbeddingConvention { Teichmuller, Inverse };

/// zeta_{q-1} -> omega(g) (or its inverse) applied to an element of Z[zeta_{q-1}].
inline ZqElem cyclo_to_zq(const CycloElem& x, const Gf& F, unsigned N,
                          EmbeddingConvention conv = EmbeddingConvention::Teichmuller) {
    if (x.modulus() != F.order() - 1)
        throw std::invalid_argument("cyclo_to_zq: cyclotomic modulus must be q-1 = " + std::to_string(F.order() - 1));
    auto ctx = zq_context(F);
    const Gf::Elt base = conv == EmbeddingConvention::Teichmuller ? F.generator() : F.inv(F.generator());
    const ZqElem w = teichmuller(F, base, N);
    ZqElem acc = ZqElem::zero(ctx, N), pw = ZqElem::one(ctx, N);
    for (const auto& c : x.residue()) {
        if (c != 0) acc += ZqElem::from_integer(ctx, c, N) * pw;
        pw *= w;
    }
    return acc;
}

}  // namespace charsum

#endif
