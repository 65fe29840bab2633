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

#ifndef CHARSUM_FFIELD_SMOOTHNESS_HPP
#define CHARSUM_FFIELD_SMOOTHNESS_HPP

#pragma once

#include <span>
#include <string>
#include <vector>

#include "homog.hpp"
#include "sums.hpp"

namespace charsum {

/// Outcome of the transversality check on a family of forms.
struct SmoothnessReport {
    bool pass = true;
    bool complete = false;  ///< true only for the exact binary-form check (n = 1)
    int m_checked = 0;      ///< largest m whose F_{q^m}-points were scanned
    std::string witness;    ///< empty on PASS
    std::vector<Gf::Elt> witness_point;  ///< codes in F_{q^witness_m}
    int witness_m = 0;
    std::vector<int> witness_subset;

    std::string level() const {
        if (complete) return "complete";
        return "rational points through degree " + std::to_string(m_checked);
    }
};

namespace detail {

/// Rank of a dense matrix over F by Gaussian elimination; destroys the input.
inline std::size_t rank_over(const Gf& F, std::vector<std::vector<Gf::Elt>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const Gf::Elt inv = F.inv(rows[rank][c]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const Gf::Elt factor = F.neg(F.mul(rows[r][c], inv));
            for (std::size_t k = c; k < cols; ++k) rows[r][k] = F.add(rows[r][k], F.mul(factor, rows[rank][k]));
        }
        ++rank;
    }
    return rank;
}

inline Gf::Elt determinant(const Gf& F, std::vector<std::vector<Gf::Elt>> a) {
    const std::size_t n = a.size();
    Gf::Elt det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = F.neg(det);
        }
        det = F.mul(det, a[c][c]);
        const Gf::Elt inv = F.inv(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const Gf::Elt factor = F.neg(F.mul(a[r][c], inv));
            for (std::size_t k = c; k < n; ++k) a[r][k] = F.add(a[r][k], F.mul(factor, a[c][k]));
        }
    }
    return det;
}

using UPoly = std::vector<Gf::Elt>;  // low degree first, trimmed

inline void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline UPoly umod(const Gf& F, UPoly a, const UPoly& b) {
    trim(a);
    const Gf::Elt inv = F.inv(b.back());
    while (a.size() >= b.size()) {
        const Gf::Elt c = F.mul(a.back(), inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
        trim(a);
    }
    return a;
}

inline UPoly ugcd(const Gf& F, UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = umod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Coefficients a_i of x0^{d-i} x1^i for a binary form.
inline std::vector<Gf::Elt> binary_coefficients(const HomogPoly& f) {
    std::vector<Gf::Elt> a(f.degree() + 1, 0);
    for (const auto& t : f.terms()) a[t.exponents[1]] = t.coeff;
    return a;
}

inline std::string squarefree_failure(const Gf& F, const HomogPoly& f) {
    if (f.is_zero()) return "form is identically zero";
    const auto a = binary_coefficients(f);
    const int d = f.degree();
    // dehomogenize at x1 = 1: g(x) = sum a_i x^{d-i}
    UPoly g(d + 1, 0);
    for (int i = 0; i <= d; ++i) g[d - i] = a[i];
    trim(g);
    const int e = static_cast<int>(g.size()) - 1;
    if (d - e >= 2) return "not squarefree: repeated root at (1:0)";
    if (e >= 1) {
        UPoly dg;
        for (int i = 1; i <= e; ++i) dg.push_back(F.mul(F.from_int(i), g[i]));
        trim(dg);
        if (ugcd(F, g, dg).size() > 1) return "not squarefree: gcd with derivative is nonconstant";
    }
    return {};
}

inline Gf::Elt binary_resultant(const Gf& F, const HomogPoly& f, const HomogPoly& g) {
    const auto a = binary_coefficients(f), b = binary_coefficients(g);
    const std::size_t df = a.size() - 1, dg = b.size() - 1, n = df + dg;
    if (n == 0) return 1;
    std::vector<std::vector<Gf::Elt>> s(n, std::vector<Gf::Elt>(n, 0));
    for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t i = 0; i <= df; ++i) s[r][r + i] = a[i];
    for (std::size_t r = 0; r < df; ++r)
        for (std::size_t i = 0; i <= dg; ++i) s[dg + r][r + i] = b[i];
    return determinant(F, std::move(s));
}

}  // namespace detail

/**
 * Transversality of the divisors f_i = 0: at every F_{q^m}-point (m <= m_max)
 * where the forms indexed by I vanish, their Jacobian must have rank |I|.
 * For n = 1 also runs the exact check (squarefree forms, pairwise nonzero
 * resultants), which is conclusive.
 */
inline SmoothnessReport smoothness_check_partial(const Gf& base, std::span<const HomogPoly> forms, int m_max) {
    SmoothnessReport rep;
    if (forms.empty()) return rep;
    const int n = forms.front().n();
    for (const auto& f : forms) {
        if (f.n() != n) throw std::invalid_argument("smoothness_check_partial: mixed dimensions");
        f.check_field(base);
    }
    const auto base_ptr = build_field(base.p(), base.degree());
    const std::size_t r = forms.size();

    if (n == 1) {
        rep.complete = true;
        for (std::size_t i = 0; i < r && rep.pass; ++i) {
            auto why = detail::squarefree_failure(base, forms[i]);
            if (!why.empty()) {
                rep.pass = false;
                rep.witness = "form " + std::to_string(i + 1) + " " + why;
                rep.witness_subset = {static_cast<int>(i)};
            }
        }
        for (std::size_t i = 0; i < r && rep.pass; ++i)
            for (std::size_t j = i + 1; j < r && rep.pass; ++j)
                if (detail::binary_resultant(base, forms[i], forms[j]) == 0) {
                    rep.pass = false;
                    rep.witness = "forms " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " share a root: resultant vanishes";
                    rep.witness_subset = {static_cast<int>(i), static_cast<int>(j)};
                }
    }

    std::vector<std::vector<HomogPoly>> grads(r);
    for (std::size_t i = 0; i < r; ++i)
        for (int j = 0; j <= n; ++j) grads[i].push_back(forms[i].derivative(j, base));

    for (int m = 1; m <= m_max && rep.pass; ++m) {
        auto ext = extend(base_ptr, m);
        const auto& F = ext->field();
        std::vector<CompiledForm> cf;
        std::vector<std::vector<CompiledForm>> cg(r);
        for (std::size_t i = 0; i < r; ++i) {
            cf.emplace_back(forms[i], *ext);
            for (const auto& g : grads[i]) cg[i].emplace_back(g, *ext);
        }
        std::vector<Gf::Log> xl(n + 1);
        bool failed = false;
        for_each_projective_point(F, n, [&](std::span<const Gf::Elt> x) {
            if (failed) return;
            for (int j = 0; j <= n; ++j) xl[j] = F.log_or_zero(x[j]);
            std::vector<int> zero;
            for (std::size_t i = 0; i < r; ++i)
                if (cf[i].eval_log(xl) == Gf::kZeroLog) zero.push_back(static_cast<int>(i));
            if (zero.empty()) return;
            std::vector<std::vector<Gf::Elt>> jac;
            for (int i : zero) {
                std::vector<Gf::Elt> row;
                for (const auto& g : cg[i]) row.push_back(F.exp_or_zero(g.eval_log(xl)));
                jac.push_back(std::move(row));
            }
            // full rank of all vanishing rows implies full rank of every subset
            if (detail::rank_over(F, jac) == zero.size()) return;
            failed = true;
            rep.pass = false;
            rep.witness_point.assign(x.begin(), x.end());
            rep.witness_m = m;
            rep.witness_subset = zero;
            std::string pt;
            for (auto c : x) pt += (pt.empty() ? "" : ":") + std::to_string(c);
            std::string idx;
            for (int i : zero) idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
            rep.witness = "Jacobian of forms {" + idx + "} drops rank at (" + pt + ") over F_{q^" +
                          std::to_string(m) + "}";
        });
        rep.m_checked = m;
    }
    return rep;
}

}  // namespace charsum

#endif
