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

#ifndef CHARSUM_EXACTALG_CYCLO_HPP
#define CHARSUM_EXACTALG_CYCLO_HPP

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace charsum {

namespace detail {

inline std::vector<BigInt> poly_div_monic_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> quo(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        BigInt f = num[i];
        quo[i - dd] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic polynomial: inexact division");
    return quo;
}

}  // namespace detail

/// Phi_N as integer coefficients, constant term first. Cached; safe for concurrent callers.
inline const std::vector<BigInt>& cyclotomic_polynomial(unsigned long N) {
    if (N == 0) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
    static std::mutex mu;
    static std::map<unsigned long, std::vector<BigInt>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(N); it != cache.end()) return it->second;
    }
    // x^N - 1 divided by Phi_d for every proper divisor d.
    std::vector<BigInt> acc(N + 1);
    acc[0] = -1;
    acc[N] = 1;
    for (unsigned long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        acc = detail::poly_div_monic_exact(std::move(acc), cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(N, std::move(acc)).first->second;
}

inline unsigned long euler_phi(unsigned long N) { return cyclotomic_polynomial(N).size() - 1; }

/**
 * Element of Q(zeta_N) (or Z[zeta_N] for integer coefficients) stored as its
 * residue modulo Phi_N in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
 * The residue vector always has exactly phi(N) entries.
 */
template <class Coeff>
class BasicCyclo {
public:
    BasicCyclo() = default;

    static BasicCyclo zero(unsigned long N) { return BasicCyclo(N); }

    static BasicCyclo one(unsigned long N) { return from_integer(N, 1); }

    static BasicCyclo from_integer(unsigned long N, const Coeff& c) {
        BasicCyclo x(N);
        x.residue_[0] = c;
        return x;
    }

    /// zeta_N^k for any integer k.
    static BasicCyclo zeta_power(unsigned long N, long k) {
        std::vector<Coeff> v(N);
        v[static_cast<std::size_t>(mod_floor(k, static_cast<std::int64_t>(N)))] = 1;
        return from_poly(N, std::move(v));
    }

    /// Reduces an arbitrary-length polynomial in zeta modulo Phi_N.
    static BasicCyclo from_poly(unsigned long N, std::vector<Coeff> poly) {
        BasicCyclo x(N);
        x.residue_ = reduce(N, std::move(poly));
        return x;
    }

    unsigned long modulus() const { return modulus_; }

    std::span<const Coeff> residue() const { return residue_; }

    bool is_zero() const {
        for (const auto& c : residue_)
            if (c != 0) return false;
        return true;
    }

    BasicCyclo operator-() const {
        BasicCyclo r = *this;
        for (auto& c : r.residue_) c = -c;
        return r;
    }

    BasicCyclo& operator+=(const BasicCyclo& o) {
        check_same(o);
        for (std::size_t i = 0; i < residue_.size(); ++i) residue_[i] += o.residue_[i];
        return *this;
    }

    BasicCyclo& operator-=(const BasicCyclo& o) {
        check_same(o);
        for (std::size_t i = 0; i < residue_.size(); ++i) residue_[i] -= o.residue_[i];
        return *this;
    }

    BasicCyclo& operator*=(const Coeff& s) {
        for (auto& c : residue_) c *= s;
        return *this;
    }

    friend BasicCyclo operator+(BasicCyclo a, const BasicCyclo& b) { return a += b; }
    friend BasicCyclo operator-(BasicCyclo a, const BasicCyclo& b) { return a -= b; }
    friend BasicCyclo operator*(BasicCyclo a, const Coeff& s) { return a *= s; }
    friend BasicCyclo operator*(const Coeff& s, BasicCyclo a) { return a *= s; }

    friend BasicCyclo operator*(const BasicCyclo& a, const BasicCyclo& b) {
        a.check_same(b);
        const std::size_t f = a.residue_.size();
        std::vector<Coeff> prod(2 * f - 1);
        for (std::size_t i = 0; i < f; ++i) {
            if (a.residue_[i] == 0) continue;
            for (std::size_t j = 0; j < f; ++j) prod[i + j] += a.residue_[i] * b.residue_[j];
        }
        return from_poly(a.modulus_, std::move(prod));
    }

    BasicCyclo& operator*=(const BasicCyclo& o) { return *this = *this * o; }

    friend bool operator==(const BasicCyclo& a, const BasicCyclo& b) {
        return a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
    }

    BasicCyclo pow(unsigned long e) const {
        BasicCyclo result = one(modulus_);
        BasicCyclo base = *this;
        while (e > 0) {
            if (e & 1UL) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Image under the automorphism zeta -> zeta^k (gcd(k, N) = 1).
    BasicCyclo galois(long k) const {
        if (std::gcd(mod_floor(k, static_cast<std::int64_t>(modulus_)), static_cast<std::int64_t>(modulus_)) != 1)
            throw std::invalid_argument("galois: exponent not a unit mod N");
        std::vector<Coeff> v(modulus_);
        for (std::size_t i = 0; i < residue_.size(); ++i) {
            auto idx = mod_floor(static_cast<std::int64_t>(i) * k, static_cast<std::int64_t>(modulus_));
            v[static_cast<std::size_t>(idx)] += residue_[i];
        }
        return from_poly(modulus_, std::move(v));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < residue_.size(); ++i) {
            if (residue_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += "(" + charsum::to_string(residue_[i]) + ")";
            if (i > 0) out += "*z^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    explicit BasicCyclo(unsigned long N) : modulus_(N), residue_(euler_phi(N)) {}

    void check_same(const BasicCyclo& o) const {
        if (modulus_ != o.modulus_) throw std::invalid_argument("cyclotomic modulus mismatch");
    }

    static std::vector<Coeff> reduce(unsigned long N, std::vector<Coeff> poly) {
        const auto& phi = cyclotomic_polynomial(N);
        const std::size_t f = phi.size() - 1;
        for (std::size_t i = poly.size(); i-- > f;) {
            if (poly[i] == 0) continue;
            Coeff c = poly[i];
            for (std::size_t j = 0; j <= f; ++j) poly[i - f + j] -= c * Coeff(phi[j]);
        }
        poly.resize(f);
        return poly;
    }

    unsigned long modulus_ = 1;
    std::vector<Coeff> residue_ = std::vector<Coeff>(1);
};

using CycloElem = BasicCyclo<BigInt>;
using CycloRat = BasicCyclo<BigRational>;

inline CycloRat to_rational(const CycloElem& x) {
    std::vector<BigRational> v(x.residue().begin(), x.residue().end());
    return CycloRat::from_poly(x.modulus(), std::move(v));
}

/// Throws std::domain_error if some coefficient is not an integer.
inline CycloElem to_integral(const CycloRat& x) {
    std::vector<BigInt> v;
    for (const auto& c : x.residue()) {
        if (!is_integer(c)) throw std::domain_error("cyclotomic element is not integral: " + x.to_string());
        v.push_back(c.get_num());
    }
    return CycloElem::from_poly(x.modulus(), std::move(v));
}

inline CycloRat operator/(CycloRat x, const BigRational& s) {
    if (s == 0) throw std::domain_error("division by zero");
    return x * (1 / s);
}

/// x / k, throwing std::domain_error when k does not divide every coordinate.
inline CycloElem div_exact(const CycloElem& x, const BigInt& k) {
    std::vector<BigInt> v;
    for (const auto& c : x.residue()) {
        if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
            throw std::domain_error("cyclotomic exact division failed by " + k.get_str());
        v.push_back(c / k);
    }
    return CycloElem::from_poly(x.modulus(), std::move(v));
}

/// Sum of h[k] zeta^k over k in [0, N).
inline CycloElem cyclo_from_histogram(unsigned long N, std::span<const std::int64_t> h) {
    std::vector<BigInt> v(N);
    for (std::size_t k = 0; k < h.size(); ++k) v[k % N] += BigInt(static_cast<long>(h[k]));
    return CycloElem::from_poly(N, std::move(v));
}

using Complex = std::complex<long double>;

struct Embedding {
    unsigned long k;  ///< zeta -> exp(2 pi i k / N)
    Complex value;
};

/**
 * Every complex embedding of x: one value per k coprime to N.
 * precision_bits is the requested mantissa width and may not exceed long double's.
 */
template <class Coeff>
std::vector<Embedding> complex_embeddings(const BasicCyclo<Coeff>& x,
                                          int precision_bits = std::numeric_limits<long double>::digits) {
    if (precision_bits <= 0 || precision_bits > std::numeric_limits<long double>::digits)
        throw std::invalid_argument("complex_embeddings: unsupported precision " + std::to_string(precision_bits));
    const unsigned long N = x.modulus();
    const long double two_pi = 2.0L * std::acos(-1.0L);
    std::vector<Embedding> out;
    for (unsigned long k = 1; k <= N; ++k) {
        if (std::gcd(k, N) != 1) continue;
        Complex acc = 0;
        for (std::size_t j = 0; j < x.residue().size(); ++j) {
            const auto& c = x.residue()[j];
            if (c == 0) continue;
            long double angle = two_pi * static_cast<long double>((k * j) % N) / static_cast<long double>(N);
            acc += static_cast<long double>(c.get_d()) * Complex(std::cos(angle), std::sin(angle));
        }
        out.push_back({k, acc});
    }
    return out;
}

}  // namespace charsum

#endif  // CHARSUM_EXACTALG_CYCLO_HPP
