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

#ifndef CHARSUM_EXACTALG_RATPOLY_HPP
#define CHARSUM_EXACTALG_RATPOLY_HPP

#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace charsum {

/**
 * Dense univariate polynomial in t over Q.
 *
 * Canonical form has no trailing zero coefficient, so the zero polynomial is
 * the empty coefficient list and has no degree (degree() returns nullopt).
 */
class RatPoly {
public:
    RatPoly() = default;

    explicit RatPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static RatPoly constant(const BigRational& c) { return RatPoly(std::vector<BigRational>{c}); }

    static RatPoly monomial(const BigRational& c, std::size_t deg) {
        std::vector<BigRational> v(deg + 1);
        v[deg] = c;
        return RatPoly(std::move(v));
    }

    /// (1 - t)^k
    static RatPoly one_minus_t_pow(std::size_t k) {
        std::vector<BigRational> v(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
            v[i] = binomial(k, i);
            if (i % 2 == 1) v[i] = -v[i];
        }
        return RatPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Coefficient of t^i; zero past the degree.
    BigRational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

    std::span<const BigRational> coefficients() const { return coeffs_; }

    RatPoly derivative() const {
        std::vector<BigRational> v;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * static_cast<unsigned long>(i));
        return RatPoly(std::move(v));
    }

    BigRational evaluate(const BigRational& t) const {
        BigRational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// t^n p(1/t). Requires deg p <= n.
    RatPoly reversed(std::size_t n) const {
        if (coeffs_.size() > n + 1) throw std::invalid_argument("RatPoly::reversed: degree exceeds n");
        std::vector<BigRational> v(n + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[n - i] = coeffs_[i];
        return RatPoly(std::move(v));
    }

    RatPoly operator-() const {
        RatPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    RatPoly& operator+=(const RatPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    RatPoly& operator-=(const RatPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    RatPoly& operator*=(const BigRational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const BigRational& s) { return a *= s; }
    friend RatPoly operator*(const BigRational& s, RatPoly a) { return a *= s; }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return RatPoly(std::move(v));
    }

    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
        if (b.is_zero()) throw std::domain_error("RatPoly division by zero");
        std::vector<BigRational> rem = a.coeffs_;
        const std::size_t db = b.coeffs_.size() - 1;
        if (rem.size() <= db) return {RatPoly{}, a};
        std::vector<BigRational> quo(rem.size() - db);
        const BigRational& lead = b.coeffs_.back();
        for (std::size_t i = rem.size(); i-- > db;) {
            if (rem[i] == 0) continue;
            BigRational f = rem[i] / lead;
            quo[i - db] = f;
            for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs_[j];
        }
        rem.resize(db);
        return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
    }

    /// a / b, throwing std::domain_error when b does not divide a.
    friend RatPoly div_exact(const RatPoly& a, const RatPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("RatPoly::div_exact: nonzero remainder");
        return q;
    }

    std::string to_string(const std::string& var = "t") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            std::string c = charsum::to_string(coeffs_[i]);
            if (!out.empty()) {
                if (c[0] == '-') {
                    out += " - ";
                    c = c.substr(1);
                } else {
                    out += " + ";
                }
            }
            if (i == 0) {
                out += c;
            } else {
                if (c != "1") out += (c == "-1" ? std::string("-") : c + "*");
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

}  // namespace charsum

#endif  // CHARSUM_EXACTALG_RATPOLY_HPP
