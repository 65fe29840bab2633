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

#ifndef CHARSUM_FFIELD_SUMS_HPP
#define CHARSUM_FFIELD_SUMS_HPP

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "../exactalg.hpp"
#include "homog.hpp"

namespace charsum {

/// (Q^{n+1} - 1)/(Q - 1); throws on 64-bit overflow.
inline std::uint64_t projective_point_count(int n, std::uint64_t Q) {
    std::uint64_t total = 0, pw = 1;
    for (int i = 0; i <= n; ++i) {
        total += pw;
        if (i < n && pw > UINT64_MAX / Q) throw std::overflow_error("projective_point_count: overflow");
        pw *= Q;
    }
    return total;
}

/**
 * Calls fn(span of codes) once per point of P^n(F), normalized so the
 * leftmost nonzero coordinate is 1, in lexicographic order of the codes.
 */
template <class Fn>
void for_each_projective_point(const Gf& F, int n, Fn&& fn) {
    const auto Q = static_cast<Gf::Elt>(F.order());
    std::vector<Gf::Elt> x(n + 1);
    for (int lead = 0; lead <= n; ++lead) {
        std::fill(x.begin(), x.end(), 0);
        x[lead] = 1;
        while (true) {
            fn(std::span<const Gf::Elt>(x));
            int j = n;
            while (j > lead && ++x[j] == Q) x[j--] = 0;
            if (j == lead) break;
        }
    }
}

enum class Traversal { Chunked, Lexicographic };

struct SumOptions {
    Traversal traversal = Traversal::Chunked;
    unsigned threads = 0;  ///< 0 selects hardware concurrency
};

namespace detail {

/**
 * Per-point summand of prod chi_i(Norm f_i(x)) as an exponent of zeta_{q-1}.
 * Numerator 0 means the trivial character with chi(0) = 0.
 */
class SumKernel {
public:
    SumKernel(const ExtField& ext, std::span<const HomogPoly> forms, std::span<const long> numerators,
              std::span<const HomogPoly> vanishing)
        : ext_(&ext), qm1_(ext.base().order() - 1) {
        if (forms.size() != numerators.size())
            throw std::invalid_argument("character sum: one character numerator per form required");
        for (std::size_t i = 0; i < forms.size(); ++i) {
            const long c = numerators[i];
            if (c < 0 || static_cast<std::uint64_t>(c) >= qm1_)
                throw std::invalid_argument("character sum: numerator " + std::to_string(c) + " outside [0, q-2]");
            forms_.emplace_back(forms[i], ext);
            weight_.push_back(static_cast<std::uint64_t>(mod_floor(-c, static_cast<std::int64_t>(qm1_))));
        }
        for (const auto& v : vanishing) vanishing_.emplace_back(v, ext);
    }

    std::uint64_t modulus() const { return qm1_; }

    void accumulate(std::span<const Gf::Log> x, std::vector<std::int64_t>& hist) const {
        for (const auto& v : vanishing_)
            if (v.eval_log(x) != Gf::kZeroLog) return;
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < forms_.size(); ++i) {
            const Gf::Log l = forms_[i].eval_log(x);
            if (l == Gf::kZeroLog) return;
            k += weight_[i] * ext_->norm_base_log(l);
        }
        ++hist[k % qm1_];
    }

private:
    const ExtField* ext_;
    std::uint64_t qm1_;
    std::vector<CompiledForm> forms_;
    std::vector<std::uint64_t> weight_;
    std::vector<CompiledForm> vanishing_;
};

/// Visits every assignment of x[from..] with values {0} u F^x as logs.
template <class Fn>
void odometer_logs(std::uint64_t Q, std::vector<Gf::Log>& x, std::size_t from, Fn&& fn) {
    for (std::size_t j = from; j < x.size(); ++j) x[j] = Gf::kZeroLog;
    const auto last = static_cast<Gf::Log>(Q - 2);
    while (true) {
        fn(std::span<const Gf::Log>(x));
        std::size_t j = x.size();
        while (j > from) {
            --j;
            if (x[j] == Gf::kZeroLog) {
                x[j] = 0;
                break;
            }
            if (x[j] < last) {
                ++x[j];
                break;
            }
            x[j] = Gf::kZeroLog;
            if (j == from) return;
        }
        if (j < from || x.size() == from) return;
    }
}

/// Chunk = (fixed prefix length, value index of the first free coordinate).
struct Chunk {
    int lead;
    std::uint64_t value;
};

inline Gf::Log log_of_index(std::uint64_t v) { return v == 0 ? Gf::kZeroLog : static_cast<Gf::Log>(v - 1); }

inline std::vector<std::int64_t> run_chunks(const SumKernel& kernel, int n, std::uint64_t Q, bool affine,
                                            unsigned threads) {
    std::vector<Chunk> chunks;
    if (affine) {
        for (std::uint64_t v = 0; v < Q; ++v) chunks.push_back({-1, v});
    } else {
        for (int lead = 0; lead < n; ++lead)
            for (std::uint64_t v = 0; v < Q; ++v) chunks.push_back({lead, v});
        chunks.push_back({n, 0});
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks.size()));

    std::atomic<std::size_t> next{0};
    std::vector<std::vector<std::int64_t>> partial(threads, std::vector<std::int64_t>(kernel.modulus(), 0));
    auto worker = [&](unsigned id) {
        std::vector<Gf::Log> x(n + 1);
        auto& hist = partial[id];
        auto visit = [&](std::span<const Gf::Log> pt) { kernel.accumulate(pt, hist); };
        for (std::size_t c; (c = next.fetch_add(1)) < chunks.size();) {
            const auto& ch = chunks[c];
            std::size_t first_free;
            if (ch.lead < 0) {
                x[0] = log_of_index(ch.value);
                first_free = 1;
            } else {
                for (int j = 0; j < ch.lead; ++j) x[j] = Gf::kZeroLog;
                x[ch.lead] = 0;  // the coordinate 1
                if (ch.lead == n) {
                    visit(x);
                    continue;
                }
                x[ch.lead + 1] = log_of_index(ch.value);
                first_free = static_cast<std::size_t>(ch.lead) + 2;
            }
            if (first_free > static_cast<std::size_t>(n))
                visit(x);
            else
                odometer_logs(Q, x, first_free, visit);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    }
    std::vector<std::int64_t> hist(kernel.modulus(), 0);
    for (const auto& h : partial)
        for (std::size_t k = 0; k < h.size(); ++k) hist[k] += h[k];
    return hist;
}

inline int common_dimension(std::span<const HomogPoly> forms, std::span<const HomogPoly> vanishing) {
    if (forms.empty() && vanishing.empty()) throw std::invalid_argument("character sum: no forms");
    const int n = forms.empty() ? vanishing.front().n() : forms.front().n();
    for (const auto& f : forms)
        if (f.n() != n) throw std::invalid_argument("character sum: forms live in different projective spaces");
    for (const auto& f : vanishing)
        if (f.n() != n) throw std::invalid_argument("character sum: forms live in different projective spaces");
    return n;
}

}  // namespace detail

/**
 * Histogram h with sum_k h[k] zeta_{q-1}^k equal to the sum over P^n(F_{q^m}) of
 * prod chi_i(Norm f_i(x)), chi_i = omega^{-c_i}, under zeta_{q-1} <-> omega(g).
 * Points where some form in `vanishing` is nonzero are skipped.
 */
inline std::vector<std::int64_t> character_sum_histogram(const ExtField& ext, std::span<const HomogPoly> forms,
                                                         std::span<const long> numerators,
                                                         std::span<const HomogPoly> vanishing = {},
                                                         const SumOptions& opts = {}) {
    const int n = detail::common_dimension(forms, vanishing);
    const auto qm1 = static_cast<std::int64_t>(ext.base().order() - 1);
    std::int64_t weight = 0;
    for (std::size_t i = 0; i < forms.size() && i < numerators.size(); ++i)
        weight = mod_floor(weight + numerators[i] * static_cast<std::int64_t>(forms[i].degree()), qm1);
    if (weight != 0)
        throw std::invalid_argument(
            "character sum: sum of c_i d_i is not divisible by q-1, so the summand depends on coordinates");
    detail::SumKernel kernel(ext, forms, numerators, vanishing);
    const auto& F = ext.field();
    if (opts.traversal == Traversal::Chunked) return detail::run_chunks(kernel, n, F.order(), false, opts.threads);
    std::vector<std::int64_t> hist(kernel.modulus(), 0);
    std::vector<Gf::Log> xl(n + 1);
    for_each_projective_point(F, n, [&](std::span<const Gf::Elt> x) {
        for (int j = 0; j <= n; ++j) xl[j] = F.log_or_zero(x[j]);
        kernel.accumulate(xl, hist);
    });
    return hist;
}

/// The character sum as an element of Z[zeta_{q-1}].
inline CycloElem character_sum_exact(const ExtField& ext, std::span<const HomogPoly> forms,
                                     std::span<const long> numerators, std::span<const HomogPoly> vanishing = {},
                                     const SumOptions& opts = {}) {
    return cyclo_from_histogram(ext.base().order() - 1,
                                character_sum_histogram(ext, forms, numerators, vanishing, opts));
}

/// The same summand over all of A^{n+1}(F_{q^m}).
inline CycloElem affine_character_sum_exact(const ExtField& ext, std::span<const HomogPoly> forms,
                                            std::span<const long> numerators, const SumOptions& opts = {}) {
    const int n = detail::common_dimension(forms, {});
    detail::SumKernel kernel(ext, forms, numerators, {});
    auto hist = detail::run_chunks(kernel, n, ext.field().order(), true, opts.threads);
    return cyclo_from_histogram(kernel.modulus(), hist);
}

struct ReductionCheck {
    bool holds = false;
    CycloElem lhs;  ///< sum with the trivial character
    CycloElem rhs;  ///< sum without that form minus the sum over its zero locus
};

/**
 * With chi_j trivial (the first zero numerator), checks
 *   S(f, c) = S(f without f_j) - S(f without f_j, restricted to f_j = 0).
 */
inline ReductionCheck trivial_character_reduction_check(const ExtField& ext, std::span<const HomogPoly> forms,
                                                        std::span<const long> numerators,
                                                        const SumOptions& opts = {}) {
    auto it = std::find(numerators.begin(), numerators.end(), 0L);
    if (it == numerators.end())
        throw std::invalid_argument("trivial_character_reduction_check: no trivial character");
    const auto j = static_cast<std::size_t>(it - numerators.begin());
    std::vector<HomogPoly> rest;
    std::vector<long> rest_c;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (i == j) continue;
        rest.push_back(forms[i]);
        rest_c.push_back(numerators[i]);
    }
    ReductionCheck r;
    r.lhs = character_sum_exact(ext, forms, numerators, {}, opts);
    std::vector<HomogPoly> vanish{forms[j]};
    r.rhs = character_sum_exact(ext, rest, rest_c, {}, opts) - character_sum_exact(ext, rest, rest_c, vanish, opts);
    r.holds = r.lhs == r.rhs;
    return r;
}

}  // namespace charsum

#endif
