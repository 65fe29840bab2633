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

#ifndef CHARSUM_KOSZUL_HPP
#define CHARSUM_KOSZUL_HPP

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffield/gf.hpp"
#include "ffield/homog.hpp"
#include "hodge.hpp"

namespace charsum {

/**
 * Basis form x^u y^v dx_I (dy/y)_J of the graded de Rham algebra in
 * x_0..x_n, y_1..y_r. The wedge is ordered dx by index, then dy/y by index.
 *   deg1 = |u| - sum_j v_j d_j + |I|,  deg2 = |v|.
 */
struct FormBasisIndex {
    std::vector<int> u;
    std::vector<int> v;
    std::uint32_t I = 0;  ///< bit i set when dx_i occurs
    std::uint32_t J = 0;  ///< bit j set when dy_{j+1}/y_{j+1} occurs

    int form_degree() const { return std::popcount(I) + std::popcount(J); }

    long deg1(const DegreeProfile& prof) const {
        long s = std::popcount(I);
        for (int x : u) s += x;
        for (std::size_t j = 0; j < v.size(); ++j) s -= static_cast<long>(v[j]) * prof.degrees[j];
        return s;
    }

    long deg2() const {
        long s = 0;
        for (int x : v) s += x;
        return s;
    }

    std::string to_string() const {
        std::string s = "x^(";
        for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
        s += ") y^(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        s += ")";
        for (std::size_t i = 0; i < u.size(); ++i)
            if (I >> i & 1U) s += " dx" + std::to_string(i);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (J >> j & 1U) s += " dy" + std::to_string(j + 1) + "/y" + std::to_string(j + 1);
        return s;
    }

    friend bool operator==(const FormBasisIndex&, const FormBasisIndex&) = default;
    friend auto operator<=>(const FormBasisIndex&, const FormBasisIndex&) = default;
};

namespace detail {

/// Calls fn on every vector of `parts` nonnegative integers summing to `total`.
template <class Fn>
void for_each_composition(int parts, long total, Fn&& fn) {
    if (total < 0) return;
    std::vector<int> x(parts, 0);
    if (parts == 0) {
        if (total == 0) fn(x);
        return;
    }
    auto rec = [&](auto&& self, int pos, long left) -> void {
        if (pos == parts - 1) {
            x[pos] = static_cast<int>(left);
            fn(x);
            return;
        }
        for (long e = left; e >= 0; --e) {
            x[pos] = static_cast<int>(e);
            self(self, pos + 1, left - e);
        }
    };
    rec(rec, 0, total);
}

}  // namespace detail

/// Sorted basis of Omega^k in bidegree (i1, i2); empty when i2 < 0.
inline std::vector<FormBasisIndex> basis(int k, long i1, long i2, const DegreeProfile& prof) {
    std::vector<FormBasisIndex> out;
    const int n = prof.n, r = prof.r();
    if (i2 < 0 || k < 0 || k > n + 1 + r) return out;
    for (std::uint32_t I = 0; I < (1U << (n + 1)); ++I) {
        const int ki = std::popcount(I);
        if (ki > k) continue;
        for (std::uint32_t J = 0; J < (1U << r); ++J) {
            if (ki + std::popcount(J) != k) continue;
            detail::for_each_composition(r, i2, [&](const std::vector<int>& v) {
                long wd = 0;
                for (int j = 0; j < r; ++j) wd += static_cast<long>(v[j]) * prof.degrees[j];
                detail::for_each_composition(n + 1, i1 + wd - ki, [&](const std::vector<int>& u) {
                    out.push_back(FormBasisIndex{u, v, I, J});
                });
            });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Dense matrix over a finite field; rows[t][s] is the coefficient of target t in the image of source s.
struct Matrix {
    std::size_t cols = 0;
    std::vector<std::vector<Gf::Elt>> rows;

    static Matrix zero(std::size_t r, std::size_t c) { return Matrix{c, std::vector<std::vector<Gf::Elt>>(r, std::vector<Gf::Elt>(c, 0))}; }
};

inline Matrix multiply(const Gf& F, const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows.size()) throw std::invalid_argument("multiply: shape mismatch");
    Matrix out = Matrix::zero(a.rows.size(), b.cols);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Gf::Elt x = a.rows[i][k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (b.rows[k][j] != 0) out.rows[i][j] = F.add(out.rows[i][j], F.mul(x, b.rows[k][j]));
        }
    return out;
}

inline Matrix add(const Gf& F, const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols || a.rows.size() != b.rows.size()) throw std::invalid_argument("add: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out.rows[i][j] = F.add(a.rows[i][j], b.rows[i][j]);
    return out;
}

/**
 * Rank by row reduction. Prime fields use plain modular arithmetic on the
 * codes, which are the residues themselves; other fields go through the tables.
 */
inline std::size_t rank(const Gf& F, Matrix m) {
    auto& rows = m.rows;
    const std::size_t cols = m.cols;
    std::size_t rk = 0;
    const bool prime = F.degree() == 1;
    const std::uint64_t p = F.p();
    for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
        std::size_t piv = rk;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rk]);
        const Gf::Elt inv = F.inv(rows[rk][c]);
        const auto& pr = rows[rk];
        for (std::size_t r = rk + 1; r < rows.size(); ++r) {
            auto& row = rows[r];
            if (row[c] == 0) continue;
            const Gf::Elt factor = F.neg(F.mul(row[c], inv));
            if (prime) {
                for (std::size_t k = c; k < cols; ++k)
                    if (pr[k] != 0) row[k] = static_cast<Gf::Elt>((row[k] + std::uint64_t{factor} * pr[k]) % p);
            } else {
                for (std::size_t k = c; k < cols; ++k)
                    if (pr[k] != 0) row[k] = F.add(row[k], F.mul(factor, pr[k]));
            }
        }
        ++rk;
    }
    return rk;
}

/// A bigraded linear map with its source and target bases.
struct GradedMap {
    std::vector<FormBasisIndex> source;
    std::vector<FormBasisIndex> target;
    Matrix matrix;  ///< target.size() x source.size()
};

namespace detail {

inline std::size_t locate(const std::vector<FormBasisIndex>& b, const FormBasisIndex& f) {
    auto it = std::lower_bound(b.begin(), b.end(), f);
    if (it == b.end() || !(*it == f)) throw std::logic_error("koszul: image outside the target basis: " + f.to_string());
    return static_cast<std::size_t>(it - b.begin());
}

inline Gf::Elt signed_unit(const Gf& F, bool negative) { return negative ? F.neg(1) : Gf::Elt{1}; }

}  // namespace detail

/**
 * Contraction with E = sum x_i d/dx_i - sum d_j y_j d/dy_j, from Omega^k to
 * Omega^{k-1} in the same bidegree: dx_i -> x_i and dy_j/y_j -> -d_j, with
 * sign (-1)^{s-1} for the generator in wedge position s.
 */
inline GradedMap theta_matrix(const Gf& F, const DegreeProfile& prof, int k, long i1, long i2) {
    GradedMap g{basis(k, i1, i2, prof), basis(k - 1, i1, i2, prof), {}};
    g.matrix = Matrix::zero(g.target.size(), g.source.size());
    const int n = prof.n, r = prof.r();
    for (std::size_t s = 0; s < g.source.size(); ++s) {
        const auto& f = g.source[s];
        int pos = 0;
        for (int i = 0; i <= n; ++i) {
            if (!(f.I >> i & 1U)) continue;
            FormBasisIndex t = f;
            t.I &= ~(1U << i);
            t.u[i] += 1;
            auto& cell = g.matrix.rows[detail::locate(g.target, t)][s];
            cell = F.add(cell, detail::signed_unit(F, pos % 2 == 1));
            ++pos;
        }
        for (int j = 0; j < r; ++j) {
            if (!(f.J >> j & 1U)) continue;
            FormBasisIndex t = f;
            t.J &= ~(1U << j);
            const Gf::Elt c = F.neg(F.from_int(prof.degrees[j]));
            auto& cell = g.matrix.rows[detail::locate(g.target, t)][s];
            cell = F.add(cell, pos % 2 == 1 ? F.neg(c) : c);
            ++pos;
        }
    }
    return g;
}

struct ThetaExactnessReport {
    bool exact = true;
    bool alternating_sums_vanish = true;
    bool theta_squared_zero = true;
    std::string witness;  ///< first failing stratum, empty on success
};

/**
 * Checks exactness of Omega^top -> ... -> Omega^0 under theta in every
 * bidegree (deg1, deg2) with 0 <= deg2 <= deg2_max: dim ker = dim im at each
 * spot, i.e. D_k - R_k = R_{k+1} with R_k the rank of theta out of Omega^k.
 */
inline ThetaExactnessReport verify_theta_exactness(const Gf& F, long deg1, const DegreeProfile& prof, long deg2_max) {
    if (deg1 == 0) throw std::invalid_argument("verify_theta_exactness: deg1 = 0 is excluded");
    ThetaExactnessReport rep;
    const int top = prof.n + 1 + prof.r();
    for (long i2 = 0; i2 <= deg2_max; ++i2) {
        std::vector<std::size_t> D(top + 2, 0), R(top + 2, 0);
        std::vector<GradedMap> maps(top + 1);
        for (int k = 0; k <= top; ++k) {
            maps[k] = theta_matrix(F, prof, k, deg1, i2);
            D[k] = maps[k].source.size();
            R[k] = k == 0 ? 0 : rank(F, maps[k].matrix);
        }
        long alt = 0;
        for (int k = 0; k <= top; ++k) {
            alt += (k % 2 ? -1L : 1L) * static_cast<long>(D[k]);
            if (D[k] - R[k] != R[k + 1] && rep.exact) {
                rep.exact = false;
                rep.witness = "theta not exact at Omega^" + std::to_string(k) + " in bidegree (" + std::to_string(deg1) +
                              ", " + std::to_string(i2) + "): kernel " + std::to_string(D[k] - R[k]) + ", image " +
                              std::to_string(R[k + 1]);
            }
            if (k >= 2) {
                auto sq = multiply(F, maps[k - 1].matrix, maps[k].matrix);
                for (const auto& row : sq.rows)
                    if (std::any_of(row.begin(), row.end(), [](Gf::Elt x) { return x != 0; })) rep.theta_squared_zero = false;
            }
        }
        if (alt != 0) rep.alternating_sums_vanish = false;
    }
    return rep;
}

/// Per-stratum cohomology of dF in a fixed deg1.
struct CohomologyEntry {
    long deg2;
    int k;
    std::size_t dimension;
    long h;
};

struct AcyclicityReport {
    bool pass = true;                  ///< H^k = 0 for every k < n + r in the checked strata
    bool top_dimensions_match = true;  ///< dim H^{n+r} = dim H^{n+r+1} in each stratum
    std::string witness;
    std::vector<CohomologyEntry> table;
};

/**
 * The complex (Omega^*, dF wedge) with F = sum_j y_j f_j. dF raises deg2 by
 * one and keeps deg1, so each deg1 splits into a chain along deg2.
 */
class KoszulComplex {
public:
    KoszulComplex(std::shared_ptr<const Gf> F, DegreeProfile prof, std::vector<HomogPoly> forms)
        : F_(std::move(F)), prof_(std::move(prof)), forms_(std::move(forms)) {
        if (static_cast<int>(forms_.size()) != prof_.r())
            throw std::invalid_argument("KoszulComplex: one form per profile degree required");
        if (prof_.n + 1 > 31 || prof_.r() > 31) throw std::invalid_argument("KoszulComplex: too many variables");
        for (std::size_t j = 0; j < forms_.size(); ++j) {
            const auto& f = forms_[j];
            if (f.n() != prof_.n || f.degree() != prof_.degrees[j])
                throw std::invalid_argument("KoszulComplex: form " + std::to_string(j + 1) +
                                            " does not match the degree profile");
            f.check_field(*F_);
            std::vector<HomogPoly> parts;
            for (int l = 0; l <= prof_.n; ++l) parts.push_back(f.derivative(l, *F_));
            partials_.push_back(std::move(parts));
        }
    }

    const DegreeProfile& profile() const { return prof_; }
    const Gf& field() const { return *F_; }
    int top_degree() const { return prof_.n + 1 + prof_.r(); }

    /// dF wedge from Omega^k_(i1, i2) to Omega^{k+1}_(i1, i2+1).
    GradedMap dF_matrix(int k, long i1, long i2) const {
        const Gf& F = *F_;
        GradedMap g{basis(k, i1, i2, prof_), basis(k + 1, i1, i2 + 1, prof_), {}};
        g.matrix = Matrix::zero(g.target.size(), g.source.size());
        const int n = prof_.n, r = prof_.r();
        auto put = [&](std::size_t s, const FormBasisIndex& base, const Monomial& m, bool negative) {
            FormBasisIndex t = base;
            for (int i = 0; i <= n; ++i) t.u[i] += m.exponents[i];
            auto& cell = g.matrix.rows[detail::locate(g.target, t)][s];
            cell = F.add(cell, negative ? F.neg(m.coeff) : m.coeff);
        };
        for (std::size_t s = 0; s < g.source.size(); ++s) {
            const auto& f = g.source[s];
            const int ki = std::popcount(f.I);
            for (int j = 0; j < r; ++j) {
                FormBasisIndex shifted = f;
                shifted.v[j] += 1;
                // y_j (d f_j / d x_l) dx_l
                for (int l = 0; l <= n; ++l) {
                    if (f.I >> l & 1U) continue;
                    FormBasisIndex t = shifted;
                    t.I |= 1U << l;
                    const bool neg = std::popcount(f.I & ((1U << l) - 1)) % 2 == 1;
                    for (const auto& m : partials_[j][l].terms()) put(s, t, m, neg);
                }
                // y_j f_j dy_j/y_j
                if (!(f.J >> j & 1U)) {
                    FormBasisIndex t = shifted;
                    t.J |= 1U << j;
                    const bool neg = (ki + std::popcount(f.J & ((1U << j) - 1))) % 2 == 1;
                    for (const auto& m : forms_[j].terms()) put(s, t, m, neg);
                }
            }
        }
        return g;
    }

    /// dim of Omega^top_(d, j) modulo dF of Omega^{top-1}_(d, j-1).
    long k_via_cokernel(long j, long d) const {
        const int top = top_degree();
        const auto dim = static_cast<long>(basis(top, d, j, prof_).size());
        if (dim == 0 || j <= 0) return dim;
        return dim - static_cast<long>(rank(*F_, dF_matrix(top - 1, d, j - 1).matrix));
    }

    /**
     * Cohomology of dF in deg1 = d for 0 <= deg2 <= deg2_max (negative selects n + 1).
     * H^k in stratum (d, i2) is dim - rank out - rank in.
     */
    AcyclicityReport verify_acyclicity(long d, long deg2_max = -1) const {
        if (deg2_max < 0) deg2_max = prof_.n + 1;
        const int top = top_degree();
        const int crit = prof_.n + prof_.r();
        AcyclicityReport rep;
        // ranks[i2][k]: rank of dF out of Omega^k_(d, i2)
        std::vector<std::vector<long>> ranks(deg2_max + 1, std::vector<long>(top + 1, 0));
        for (long i2 = 0; i2 <= deg2_max; ++i2)
            for (int k = 0; k < top; ++k) ranks[i2][k] = static_cast<long>(rank(*F_, dF_matrix(k, d, i2).matrix));
        for (long i2 = 0; i2 <= deg2_max; ++i2) {
            std::vector<long> h(top + 1, 0);
            for (int k = 0; k <= top; ++k) {
                const auto dim = basis(k, d, i2, prof_).size();
                const long in = (k >= 1 && i2 >= 1) ? ranks[i2 - 1][k - 1] : 0;
                h[k] = static_cast<long>(dim) - ranks[i2][k] - in;
                rep.table.push_back({i2, k, dim, h[k]});
                if (k < crit && h[k] != 0 && rep.pass) {
                    rep.pass = false;
                    rep.witness = "H^" + std::to_string(k) + " has dimension " + std::to_string(h[k]) +
                                  " in bidegree (" + std::to_string(d) + ", " + std::to_string(i2) + ")";
                }
            }
            if (h[crit] != h[top] && rep.top_dimensions_match) {
                rep.top_dimensions_match = false;
                if (rep.witness.empty())
                    rep.witness = "dim H^" + std::to_string(crit) + " = " + std::to_string(h[crit]) + " but dim H^" +
                                  std::to_string(top) + " = " + std::to_string(h[top]) + " in bidegree (" +
                                  std::to_string(d) + ", " + std::to_string(i2) + ")";
            }
        }
        return rep;
    }

private:
    std::shared_ptr<const Gf> F_;
    DegreeProfile prof_;
    std::vector<HomogPoly> forms_;
    std::vector<std::vector<HomogPoly>> partials_;
};

}  // namespace charsum

#endif  // CHARSUM_KOSZUL_HPP
