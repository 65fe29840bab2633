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

#ifndef CHARSUM_FFIELD_GF_HPP
#define CHARSUM_FFIELD_GF_HPP

#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charsum {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace detail {

/// Dense polynomials over F_p, low degree first, used only while constructing fields.
class FpPolyOps {
public:
    using Poly = std::vector<std::uint32_t>;

    explicit FpPolyOps(std::uint32_t p) : p_(p) {}

    void trim(Poly& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    Poly sub(Poly a, const Poly& b) const {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p_ - b[i]) % p_;
        trim(a);
        return a;
    }

    Poly mod(Poly a, const Poly& m) const {
        trim(a);
        const std::size_t dm = m.size() - 1;
        const std::uint32_t inv_lead = inverse(m.back());
        while (a.size() > dm) {
            const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * inv_lead % p_;
            const std::size_t shift = a.size() - 1 - dm;
            for (std::size_t j = 0; j <= dm; ++j)
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p_ - c) * m[j]) % p_);
            trim(a);
        }
        return a;
    }

    Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const {
        if (a.empty() || b.empty()) return {};
        Poly prod(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
        }
        return mod(std::move(prod), m);
    }

    Poly powmod(Poly a, std::uint64_t e, const Poly& m) const {
        Poly r = mod(Poly{1}, m);
        a = mod(std::move(a), m);
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            e >>= 1;
            if (e) a = mulmod(a, a, m);
        }
        return r;
    }

    Poly gcd(Poly a, Poly b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Poly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::uint32_t inverse(std::uint32_t a) const {
        std::uint64_t r = 1, b = a, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }

    /// Rabin: x^{p^k} = x mod m and gcd(x^{p^{k/l}} - x, m) = 1 for primes l | k.
    bool irreducible(const Poly& m) const {
        const std::uint64_t k = m.size() - 1;
        if (k == 1) return true;
        auto frob_iter = [&](std::uint64_t times) {
            Poly x = mod(Poly{0, 1}, m);
            for (std::uint64_t i = 0; i < times; ++i) x = powmod(x, p_, m);
            return x;
        };
        const Poly xpoly = mod(Poly{0, 1}, m);
        if (sub(frob_iter(k), xpoly).size() != 0) return false;
        for (auto l : prime_factors(k)) {
            Poly g = gcd(m, sub(frob_iter(k / l), xpoly));
            if (g.size() != 1) return false;
        }
        return true;
    }

private:
    std::uint32_t p_;
};

}  // namespace detail

/**
 * The field F_{p^k} = F_p[x]/(M) with M the monic irreducible of smallest code
 * (lower coefficients read as base-p digits) and the generator of smallest code.
 *
 * Elements are codes sum d_i p^i of their coordinates in the power basis.
 * Multiplication goes through discrete-log tables; addition in the log
 * domain uses a Zech table.
 */
class Gf {
public:
    using Elt = std::uint32_t;
    using Log = std::uint32_t;

    static constexpr Log kZeroLog = std::numeric_limits<Log>::max();
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 27;

    Gf(std::uint32_t p, int k) : p_(p), k_(k) {
        if (!is_prime(p)) throw std::invalid_argument("build_field: " + std::to_string(p) + " is not prime");
        if (k < 1) throw std::invalid_argument("build_field: extension degree must be positive");
        q_ = 1;
        for (int i = 0; i < k; ++i) {
            q_ *= p;
            if (q_ > kMaxOrder)
                throw std::invalid_argument("build_field: field of order " + std::to_string(p) + "^" +
                                            std::to_string(k) + " is too large for discrete-log tables");
        }
        choose_modulus();
        build_tables();
    }

    std::uint32_t p() const { return p_; }
    int degree() const { return k_; }
    std::uint64_t order() const { return q_; }
    std::span<const std::uint32_t> modulus() const { return modulus_; }
    Elt generator() const { return generator_; }

    std::vector<std::uint32_t> digits(Elt x) const {
        std::vector<std::uint32_t> d(k_);
        for (int i = 0; i < k_; ++i) {
            d[i] = x % p_;
            x /= p_;
        }
        return d;
    }

    Elt from_digits(std::span<const std::uint32_t> d) const {
        if (d.size() != static_cast<std::size_t>(k_)) throw std::invalid_argument("Gf: wrong digit count");
        Elt x = 0;
        for (int i = k_ - 1; i >= 0; --i) {
            if (d[i] >= p_) throw std::invalid_argument("Gf: digit out of range");
            x = x * p_ + d[i];
        }
        return x;
    }

    /// Image of an integer in the prime subfield.
    Elt from_int(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<Elt>(r < 0 ? r + p_ : r);
    }

    Elt add(Elt a, Elt b) const {
        Elt out = 0, pw = 1;
        while (a || b) {
            out += ((a % p_ + b % p_) % p_) * pw;
            a /= p_;
            b /= p_;
            pw *= p_;
        }
        return out;
    }

    Elt neg(Elt a) const {
        Elt out = 0, pw = 1;
        while (a) {
            out += ((p_ - a % p_) % p_) * pw;
            a /= p_;
            pw *= p_;
        }
        return out;
    }

    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
    }

    Elt inv(Elt a) const {
        if (a == 0) throw std::domain_error("Gf: inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    Elt pow(Elt a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
    }

    /// Discrete log with respect to generator().
    Log log(Elt a) const {
        if (a == 0) throw std::domain_error("Gf: log of zero");
        return log_[a];
    }

    Log log_or_zero(Elt a) const { return a == 0 ? kZeroLog : log_[a]; }

    Elt exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

    Elt exp_or_zero(Log l) const { return l == kZeroLog ? 0 : exp_[l]; }

    Log log_mul(Log a, Log b) const {
        if (a == kZeroLog || b == kZeroLog) return kZeroLog;
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<Log>(s >= q_ - 1 ? s - (q_ - 1) : s);
    }

    /// log(g^a + g^b) through the Zech table.
    Log log_add(Log a, Log b) const {
        if (a == kZeroLog) return b;
        if (b == kZeroLog) return a;
        std::uint64_t d = b >= a ? b - a : b + (q_ - 1) - a;
        Log z = zech_[d];
        if (z == kZeroLog) return kZeroLog;
        return log_mul(a, z);
    }

    /// Absolute trace to F_p, returned as the prime-field value.
    std::uint32_t trace(Elt x) const {
        Elt s = 0, y = x;
        for (int i = 0; i < k_; ++i) {
            s = add(s, y);
            y = pow(y, p_);
        }
        return s;
    }

private:
    using Poly = detail::FpPolyOps::Poly;

    void choose_modulus() {
        detail::FpPolyOps ops(p_);
        for (std::uint64_t c = 0; c < q_; ++c) {
            Poly m(k_ + 1, 0);
            std::uint64_t t = c;
            for (int i = 0; i < k_; ++i) {
                m[i] = static_cast<std::uint32_t>(t % p_);
                t /= p_;
            }
            m[k_] = 1;
            if (ops.irreducible(m)) {
                modulus_ = std::move(m);
                return;
            }
        }
        throw std::logic_error("Gf: no irreducible polynomial found");
    }

    Poly poly_of(Elt x) const {
        Poly d = digits(x);
        detail::FpPolyOps(p_).trim(d);
        return d;
    }

    void build_tables() {
        detail::FpPolyOps ops(p_);
        const auto factors = prime_factors(q_ - 1);
        generator_ = 0;
        for (std::uint64_t c = 1; c < q_ && generator_ == 0; ++c) {
            const Poly g = poly_of(static_cast<Elt>(c));
            bool full = true;
            for (auto l : factors) {
                if (ops.powmod(g, (q_ - 1) / l, modulus_) == Poly{1}) {
                    full = false;
                    break;
                }
            }
            if (q_ == 2 || full) generator_ = static_cast<Elt>(c);
        }
        if (generator_ == 0) throw std::logic_error("Gf: no generator found");

        // exp table by repeated multiplication with the generator's digits
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, kZeroLog);
        const auto gd = digits(generator_);
        std::vector<std::uint32_t> cur(k_, 0), next(k_);
        cur[0] = 1;
        for (std::uint64_t j = 0; j + 1 < q_; ++j) {
            Elt code = 0;
            for (int i = k_ - 1; i >= 0; --i) code = code * p_ + cur[i];
            if (log_[code] != kZeroLog) throw std::logic_error("Gf: generator order too small");
            exp_[j] = code;
            log_[code] = static_cast<Log>(j);
            std::vector<std::uint64_t> prod(2 * k_, 0);
            for (int a = 0; a < k_; ++a)
                for (int b = 0; b < k_; ++b) prod[a + b] += static_cast<std::uint64_t>(cur[a]) * gd[b];
            for (int i = 2 * k_ - 1; i >= k_; --i) {
                std::uint64_t c = prod[i] % p_;
                if (c == 0) continue;
                for (int t = 0; t <= k_; ++t) prod[i - k_ + t] += (p_ - c) * modulus_[t];
            }
            for (int i = 0; i < k_; ++i) next[i] = static_cast<std::uint32_t>(prod[i] % p_);
            cur.swap(next);
        }
        zech_.assign(q_ - 1, kZeroLog);
        for (std::uint64_t j = 0; j + 1 < q_; ++j) {
            Elt x = exp_[j];
            Elt y = x - x % p_ + (x % p_ + 1) % p_;  // x + 1
            zech_[j] = log_or_zero(y);
        }
    }

    std::uint32_t p_;
    int k_;
    std::uint64_t q_ = 1;
    Poly modulus_;
    Elt generator_ = 0;
    std::vector<Elt> exp_;
    std::vector<Log> log_;
    std::vector<Log> zech_;
};

using FieldDesc = Gf;

/// Fields are built once per (p, k) and shared.
inline std::shared_ptr<const Gf> build_field(std::uint32_t p, int k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, int>, std::shared_ptr<const Gf>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, k}); it != cache.end()) return it->second;
    }
    auto f = std::make_shared<const Gf>(p, k);
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(p, k), std::move(f)).first->second;
}

}  // namespace charsum

#endif
