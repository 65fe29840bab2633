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

#ifndef CHARSUM_FFIELD_HOMOG_HPP
#define CHARSUM_FFIELD_HOMOG_HPP

#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tower.hpp"

namespace charsum {

struct Monomial {
    std::vector<int> exponents;  ///< over x_0..x_n
    Gf::Elt coeff = 0;           ///< base-field code
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Homogeneous form in x_0..x_n with coefficients in the base field F_q.
class HomogPoly {
public:
    HomogPoly() = default;

    /// Zero coefficients are dropped; duplicate exponent vectors are rejected.
    static HomogPoly make(int n, int degree, std::vector<Monomial> terms) {
        if (n < 0 || degree < 0) throw std::invalid_argument("HomogPoly: negative dimension or degree");
        std::set<std::vector<int>> seen;
        HomogPoly f;
        f.n_ = n;
        f.degree_ = degree;
        for (auto& t : terms) {
            if (t.exponents.size() != static_cast<std::size_t>(n + 1))
                throw std::invalid_argument("HomogPoly: exponent vector must have n+1 entries");
            int s = 0;
            for (int e : t.exponents) {
                if (e < 0) throw std::invalid_argument("HomogPoly: negative exponent");
                s += e;
            }
            if (s != degree) throw std::invalid_argument("HomogPoly: monomial of degree " + std::to_string(s) +
                                                         " in a form of degree " + std::to_string(degree));
            if (!seen.insert(t.exponents).second) throw std::invalid_argument("HomogPoly: repeated monomial");
            if (t.coeff != 0) f.terms_.push_back(std::move(t));
        }
        std::sort(f.terms_.begin(), f.terms_.end(),
                  [](const Monomial& a, const Monomial& b) { return a.exponents > b.exponents; });
        return f;
    }

    int n() const { return n_; }
    int degree() const { return degree_; }
    std::span<const Monomial> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Throws unless every coefficient is an element of F.
    void check_field(const Gf& F) const {
        for (const auto& t : terms_)
            if (t.coeff >= F.order()) throw std::invalid_argument("HomogPoly: coefficient outside the field");
    }

    HomogPoly derivative(int j, const Gf& F) const {
        if (j < 0 || j > n_) throw std::out_of_range("HomogPoly::derivative: bad variable");
        HomogPoly d;
        d.n_ = n_;
        d.degree_ = std::max(degree_ - 1, 0);
        for (const auto& t : terms_) {
            if (t.exponents[j] == 0) continue;
            Gf::Elt c = F.mul(t.coeff, F.from_int(t.exponents[j]));
            if (c == 0) continue;
            Monomial m = t;
            m.exponents[j] -= 1;
            m.coeff = c;
            d.terms_.push_back(std::move(m));
        }
        return d;
    }

    /// Value at a point with coordinates in F (codes).
    Gf::Elt evaluate(const Gf& F, std::span<const Gf::Elt> x) const {
        Gf::Elt acc = 0;
        for (const auto& t : terms_) {
            Gf::Elt v = t.coeff;
            for (int j = 0; j <= n_ && v != 0; ++j) v = F.mul(v, F.pow(x[j], t.exponents[j]));
            acc = F.add(acc, v);
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            if (!out.empty()) out += " + ";
            out += std::to_string(t.coeff);
            for (int j = 0; j <= n_; ++j) {
                if (t.exponents[j] == 0) continue;
                out += "*x" + std::to_string(j);
                if (t.exponents[j] > 1) out += "^" + std::to_string(t.exponents[j]);
            }
        }
        return out;
    }

    friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

private:
    int n_ = 0;
    int degree_ = 0;
    std::vector<Monomial> terms_;
};

/// A base-field form with coefficients pushed into F_{q^m} and stored as logs.
class CompiledForm {
public:
    CompiledForm(const HomogPoly& f, const ExtField& ext) : n_(f.n()), F_(&ext.field()) {
        f.check_field(ext.base());
        for (const auto& t : f.terms()) {
            Term term;
            term.coeff_log = F_->log(ext.embed(t.coeff));
            term.exponents = t.exponents;
            terms_.push_back(std::move(term));
        }
    }

    /// Value as a log (Gf::kZeroLog for zero) at a point given by coordinate logs.
    Gf::Log eval_log(std::span<const Gf::Log> xlog) const {
        const std::uint64_t ord = F_->order() - 1;
        Gf::Log acc = Gf::kZeroLog;
        for (const auto& t : terms_) {
            std::uint64_t l = t.coeff_log;
            bool zero = false;
            for (int j = 0; j <= n_; ++j) {
                const int e = t.exponents[j];
                if (e == 0) continue;
                if (xlog[j] == Gf::kZeroLog) {
                    zero = true;
                    break;
                }
                l += static_cast<std::uint64_t>(xlog[j]) * static_cast<std::uint64_t>(e);
            }
            if (zero) continue;
            acc = F_->log_add(acc, static_cast<Gf::Log>(l % ord));
        }
        return acc;
    }

private:
    struct Term {
        Gf::Log coeff_log = 0;
        std::vector<int> exponents;
    };
    int n_;
    const Gf* F_;
    std::vector<Term> terms_;
};

}  // namespace charsum

#endif
