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

#ifndef CHARSUM_HODGE_HPP
#define CHARSUM_HODGE_HPP

#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactalg.hpp"

namespace charsum {

/// Ambient P^n together with the degrees d_1..d_r of the forms.
struct DegreeProfile {
    int n = 0;
    std::vector<int> degrees;

    static DegreeProfile make(int n, std::vector<int> degrees) {
        if (n < 0) throw std::invalid_argument("DegreeProfile: n must be nonnegative");
        if (degrees.empty()) throw std::invalid_argument("DegreeProfile: need at least one form");
        for (int d : degrees)
            if (d < 1) throw std::invalid_argument("DegreeProfile: degrees must be positive");
        return DegreeProfile{n, std::move(degrees)};
    }

    int r() const { return static_cast<int>(degrees.size()); }

    long degree_sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0L); }

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/**
 * Character data e = (c_1/(q-1), ..., c_r/(q-1)) with chi_i = omega^{-c_i}.
 *
 * Only numerators are stored. Admissibility (every c_i in [1, q-2] and
 * sum c_i d_i = 0 mod q-1) is checked by make(); the Frobenius step and bar()
 * preserve it.
 */
class ExponentVector {
public:
    static ExponentVector make(long q, std::vector<long> numerators, const DegreeProfile& profile) {
        if (q < 3) throw std::invalid_argument("ExponentVector: q must be at least 3 for a nontrivial character");
        if (static_cast<int>(numerators.size()) != profile.r())
            throw std::invalid_argument("ExponentVector: expected " + std::to_string(profile.r()) +
                                        " character numerators, got " + std::to_string(numerators.size()));
        long weighted = 0;
        for (std::size_t i = 0; i < numerators.size(); ++i) {
            const long c = numerators[i];
            if (c == 0 || c % (q - 1) == 0)
                throw std::invalid_argument("ExponentVector: character " + std::to_string(i + 1) +
                                            " is trivial; every character must be nontrivial");
            if (c < 1 || c > q - 2)
                throw std::invalid_argument("ExponentVector: numerator " + std::to_string(c) + " outside [1, q-2]");
            weighted = (weighted + c % (q - 1) * (profile.degrees[i] % (q - 1))) % (q - 1);
        }
        if (weighted != 0)
            throw std::invalid_argument(
                "ExponentVector: homogeneity condition violated: sum c_i d_i is not divisible by q-1 (product "
                "chi_1^{d_1}...chi_r^{d_r} is not trivial)");
        return ExponentVector(q, std::move(numerators));
    }

    long q() const { return q_; }
    std::span<const long> numerators() const { return c_; }
    int r() const { return static_cast<int>(c_.size()); }

    BigRational value(std::size_t i) const { return rational(c_.at(i), q_ - 1); }

    std::vector<BigRational> values() const {
        std::vector<BigRational> v;
        for (std::size_t i = 0; i < c_.size(); ++i) v.push_back(value(i));
        return v;
    }

    /// (1 - e_1, ..., 1 - e_r)
    ExponentVector bar() const {
        std::vector<long> c;
        for (long x : c_) c.push_back(q_ - 1 - x);
        return ExponentVector(q_, std::move(c));
    }

    /// e' with (q-1)e' = p (q-1) e mod q-1.
    friend ExponentVector frobenius_step(const ExponentVector& e, long p) {
        std::vector<long> c;
        for (long x : e.c_) c.push_back(static_cast<long>(mod_floor(static_cast<std::int64_t>(p) * x, e.q_ - 1)));
        return ExponentVector(e.q_, std::move(c));
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
        return s + ")/" + std::to_string(q_ - 1);
    }

private:
    ExponentVector(long q, std::vector<long> c) : q_(q), c_(std::move(c)) {}

    long q_;
    std::vector<long> c_;
};

/// d_e = sum e_i d_i; strictly between 0 and sum d_i for admissible e.
inline long d_of(const ExponentVector& e, const DegreeProfile& profile) {
    if (e.r() != profile.r()) throw std::invalid_argument("d_of: profile/exponent length mismatch");
    long num = 0;
    for (int i = 0; i < e.r(); ++i) num += e.numerators()[i] * profile.degrees[i];
    if (num % (e.q() - 1) != 0) throw std::domain_error("d_of: non-integral d_e, homogeneity condition violated");
    return num / (e.q() - 1);
}

/// e^(0) = e, e^(i) = (e^(i-1))'; a entries.
inline std::vector<ExponentVector> frobenius_orbit(const ExponentVector& e, long p, int a) {
    if (a < 1) throw std::invalid_argument("frobenius_orbit: a must be positive");
    std::vector<ExponentVector> orbit{e};
    for (int i = 1; i < a; ++i) orbit.push_back(frobenius_step(orbit.back(), p));
    return orbit;
}

/// S_i(values), the i-th elementary symmetric function.
inline BigInt elementary_symmetric(std::span<const BigInt> values, std::size_t i) {
    if (i > values.size()) throw std::invalid_argument("elementary_symmetric: index exceeds number of values");
    std::vector<BigInt> s(i + 1);
    s[0] = 1;
    for (const auto& v : values)
        for (std::size_t k = i; k >= 1; --k) s[k] += v * s[k - 1];
    return s[i];
}

namespace detail {

inline int total(std::span<const int> b) { return std::accumulate(b.begin(), b.end(), 0); }

inline void check_b(std::span<const int> b, const DegreeProfile& profile) {
    if (static_cast<int>(b.size()) != profile.r()) throw std::invalid_argument("b has wrong length");
    for (int x : b)
        if (x < 0) throw std::invalid_argument("b entries must be nonnegative");
    if (total(b) > profile.n) throw std::invalid_argument("b: B = sum b_i exceeds n");
}

/// All b in N^r with |b| <= n, in lexicographic order.
inline std::vector<std::vector<int>> b_vectors(int r, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == r) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[pos] = x;
            self(self, pos + 1, left - x);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace detail

/// a^{(l)}_b = (-1)^{n-B} B! / (n! b_1!...b_r!) S_{n-B}(1-l, ..., n-l) d_1^{b_1}...d_r^{b_r}.
inline BigRational coeff_a(long l, std::span<const int> b, const DegreeProfile& profile) {
    detail::check_b(b, profile);
    const int n = profile.n;
    const int B = detail::total(b);
    std::vector<BigInt> shifted;
    for (int s = 1; s <= n; ++s) shifted.emplace_back(static_cast<long>(s - l));
    BigInt num = factorial(B) * elementary_symmetric(shifted, static_cast<std::size_t>(n - B));
    BigInt den = factorial(n);
    for (int i = 0; i < profile.r(); ++i) {
        num *= pow(BigInt(profile.degrees[i]), static_cast<unsigned long>(b[i]));
        den *= factorial(b[i]);
    }
    if ((n - B) % 2 == 1) num = -num;
    return rational(num, den);
}

/// A_b(t) = sum_{l=0}^{n+1} (-1)^l C(n+1, l) a^{(l)}_b t^l.
inline RatPoly poly_A(std::span<const int> b, const DegreeProfile& profile) {
    detail::check_b(b, profile);
    const int n = profile.n;
    std::vector<BigRational> v;
    for (int l = 0; l <= n + 1; ++l) {
        BigRational c = coeff_a(l, b, profile) * BigRational(binomial(n + 1, l));
        v.push_back(l % 2 == 0 ? c : BigRational(-c));
    }
    return RatPoly(std::move(v));
}

/**
 * Q_b^{(alpha)} with t^{-alpha} (t d/dt)^b (t^alpha / (1-t)) = Q_b / (1-t)^{b+1}.
 * Recurrence: Q_{b+1} = (1-t)(alpha Q_b + t Q_b') + (b+1) t Q_b.
 */
inline RatPoly poly_Q(const BigRational& alpha, int b) {
    if (b < 0) throw std::invalid_argument("poly_Q: b must be nonnegative");
    const RatPoly t = RatPoly::monomial(1, 1);
    const RatPoly one_minus_t = RatPoly::one_minus_t_pow(1);
    RatPoly q = RatPoly::constant(1);
    for (int k = 0; k < b; ++k) {
        RatPoly inner = q * alpha + t * q.derivative();
        q = one_minus_t * inner + t * q * BigRational(k + 1);
    }
    return q;
}

/**
 * Evaluates H_alpha(t) for one degree profile. The quotients A_b / (1-t)^{B+1}
 * depend only on the profile and are computed once.
 */
class HodgePolynomial {
public:
    explicit HodgePolynomial(DegreeProfile profile) : profile_(std::move(profile)) {
        for (auto& b : detail::b_vectors(profile_.r(), profile_.n)) {
            const int B = detail::total(b);
            RatPoly a = poly_A(b, profile_);
            RatPoly quotient;
            try {
                quotient = div_exact(a, RatPoly::one_minus_t_pow(B + 1));
            } catch (const std::domain_error&) {
                throw std::logic_error("poly_H: A_b not divisible by (1-t)^{B+1}");
            }
            terms_.push_back({std::move(b), std::move(quotient)});
        }
    }

    const DegreeProfile& profile() const { return profile_; }

    /// H_alpha(t) for alpha_i in (0,1) with sum alpha_i d_i integral.
    RatPoly operator()(std::span<const BigRational> alpha) const {
        if (static_cast<int>(alpha.size()) != profile_.r()) throw std::invalid_argument("poly_H: alpha has wrong length");
        BigRational d_alpha = 0;
        for (int i = 0; i < profile_.r(); ++i) {
            if (alpha[i] <= 0 || alpha[i] >= 1) throw std::invalid_argument("poly_H: alpha_i must lie in (0,1)");
            d_alpha += alpha[i] * profile_.degrees[i];
        }
        if (!is_integer(d_alpha)) throw std::invalid_argument("poly_H: sum alpha_i d_i is not an integer");

        std::vector<std::vector<RatPoly>> q_tables;
        for (const auto& a : alpha) {
            std::vector<RatPoly> row;
            for (int b = 0; b <= profile_.n; ++b) row.push_back(poly_Q(a, b));
            q_tables.push_back(std::move(row));
        }
        RatPoly h;
        for (const auto& term : terms_) {
            RatPoly prod = term.quotient;
            for (int i = 0; i < profile_.r(); ++i) prod *= q_tables[i][term.b[i]];
            h += prod;
        }
        if (auto deg = h.degree(); deg && *deg > static_cast<std::size_t>(profile_.n))
            throw std::logic_error("poly_H: degree exceeds n");
        for (const auto& c : h.coefficients())
            if (!is_integer(c) || c < 0)
                throw std::logic_error("poly_H: coefficient " + to_string(c) + " is not a nonnegative integer");
        return h;
    }

private:
    struct Term {
        std::vector<int> b;
        RatPoly quotient;
    };

    DegreeProfile profile_;
    std::vector<Term> terms_;
};

inline RatPoly poly_H(std::span<const BigRational> alpha, const DegreeProfile& profile) {
    return HodgePolynomial(profile)(alpha);
}

/// k^0 .. k^n
struct HodgeVector {
    std::vector<long> k;

    long total() const { return std::accumulate(k.begin(), k.end(), 0L); }

    HodgeVector reversed() const { return HodgeVector{std::vector<long>(k.rbegin(), k.rend())}; }

    friend bool operator==(const HodgeVector&, const HodgeVector&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
        return s + ")";
    }
};

inline HodgeVector hodge_vector_of(const RatPoly& h, int n) {
    HodgeVector v;
    for (int j = 0; j <= n; ++j) v.k.push_back(h.coeff(j).get_num().get_si());
    return v;
}

/// k^j(d_e) = coefficient of t^j in H_e(t).
inline HodgeVector hodge_numbers(const ExponentVector& e, const HodgePolynomial& hp) {
    d_of(e, hp.profile());
    auto alpha = e.values();
    return hodge_vector_of(hp(alpha), hp.profile().n);
}

inline HodgeVector hodge_numbers(const ExponentVector& e, const DegreeProfile& profile) {
    return hodge_numbers(e, HodgePolynomial(profile));
}

}  // namespace charsum

#endif  // CHARSUM_HODGE_HPP
