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

// Test-only oracles and generators shared by the unit and acceptance suites.

#ifndef CHARSUM_TESTS_TEST_SUPPORT_HPP
#define CHARSUM_TESTS_TEST_SUPPORT_HPP

#pragma once

#include <random>
#include <vector>

#include "charsum/ffield.hpp"
#include "charsum/hodge.hpp"

namespace charsum::testing {

/// Every admissible numerator vector for (q, profile), lexicographic.
inline std::vector<std::vector<long>> admissible_numerators(long q, const DegreeProfile& profile) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(profile.r(), 1);
    auto rec = [&](auto&& self, int pos, long acc) -> void {
        if (pos == profile.r()) {
            if (acc % (q - 1) == 0) out.push_back(cur);
            return;
        }
        for (long c = 1; c <= q - 2; ++c) {
            cur[pos] = c;
            self(self, pos + 1, (acc + c * profile.degrees[pos]) % (q - 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// |chi(P^n minus D)| for D a union of transversal smooth hypersurfaces,
/// by inclusion-exclusion over the complete intersections X_I with
/// chi(X_I) = [h^n] (1+h)^{n+1} prod_{i in I} d_i h / (1 + d_i h).
inline long euler_characteristic_complement(const DegreeProfile& profile) {
    const int n = profile.n;
    const int r = profile.r();
    long chi = 0;
    for (unsigned mask = 0; mask < (1U << r); ++mask) {
        // truncated power series in h up to h^n
        std::vector<BigInt> series(n + 1, 0);
        for (int k = 0; k <= n; ++k) series[k] = binomial(n + 1, k);
        int size = 0;
        for (int i = 0; i < r; ++i) {
            if (!(mask & (1U << i))) continue;
            ++size;
            const long d = profile.degrees[i];
            // multiply by d h / (1 + d h) = sum_{k>=1} (-1)^{k-1} d^k h^k
            std::vector<BigInt> next(n + 1, 0);
            for (int a = 0; a <= n; ++a)
                for (int k = 1; a + k <= n; ++k) {
                    BigInt term = series[a] * pow(BigInt(d), k);
                    next[a + k] += (k % 2 == 1) ? term : BigInt(-term);
                }
            series = std::move(next);
        }
        long chi_i = series[n].get_si();
        chi += (size % 2 == 0) ? chi_i : -chi_i;
    }
    return chi < 0 ? -chi : chi;
}

/// Elementary count for n <= 2: points on P^1; genus formula and pairwise intersections on P^2.
inline long euler_characteristic_elementary(const DegreeProfile& profile) {
    long chi = 0;
    if (profile.n == 1) {
        chi = 2 - profile.degree_sum();
    } else if (profile.n == 2) {
        long curves = 0, crossings = 0;
        for (int i = 0; i < profile.r(); ++i) {
            const long d = profile.degrees[i];
            curves += 2 - (d - 1) * (d - 2);
            for (int j = i + 1; j < profile.r(); ++j) crossings += d * profile.degrees[j];
        }
        chi = 3 - (curves - crossings);
    } else {
        throw std::invalid_argument("elementary Euler characteristic only for n <= 2");
    }
    return chi < 0 ? -chi : chi;
}

/// The three displayed closed forms for n = 2.
inline std::vector<BigRational> closed_form_n2(long d_e, const DegreeProfile& profile) {
    BigRational sum_d = profile.degree_sum(), half_sum = 0, pairs = 0;
    for (int i = 0; i < profile.r(); ++i) {
        const long d = profile.degrees[i];
        half_sum += rational(d * (d - 3), 2);
        for (int j = i + 1; j < profile.r(); ++j) pairs += d * profile.degrees[j];
    }
    const BigRational de = d_e;
    BigRational k0 = (de - 1) * (de - 2) / 2;
    BigRational k1 = 1 - de * de + de * sum_d + half_sum;
    BigRational k2 = (de + 1) * (de + 2) / 2 - de * sum_d + half_sum + pairs;
    return {k0, k1, k2};
}

inline DegreeProfile random_profile(std::mt19937& rng, int n_max, int r_max, int d_max, int n_min = 1) {
    std::uniform_int_distribution<int> nd(n_min, n_max), rd(1, r_max), dd(1, d_max);
    int n = nd(rng);
    int r = rd(rng);
    std::vector<int> d(r);
    for (auto& x : d) x = dd(rng);
    return DegreeProfile::make(n, d);
}


/// Form from (exponents, coefficient code) pairs.
inline HomogPoly form(int n, int d, std::vector<std::pair<std::vector<int>, std::uint32_t>> terms) {
    std::vector<Monomial> ms;
    for (auto& [u, c] : terms) ms.push_back(Monomial{u, c});
    return HomogPoly::make(n, d, std::move(ms));
}

/// Uniformly random coefficients on every monomial of degree d in n+1 variables.
inline HomogPoly random_form(std::mt19937& rng, const Gf& F, int n, int d) {
    std::vector<Monomial> ms;
    std::vector<int> u(n + 1, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            u[n] = left;
            ms.push_back(Monomial{u, static_cast<Gf::Elt>(rng() % F.order())});
            return;
        }
        for (int e = left; e >= 0; --e) {
            u[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    rec(rec, 0, d);
    return HomogPoly::make(n, d, std::move(ms));
}

/// Random forms of the profile's degrees that pass the transversality check through m_max.
inline std::vector<HomogPoly> random_transversal_forms(std::mt19937& rng, const Gf& F, const DegreeProfile& profile,
                                                       int m_max = 2) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<HomogPoly> fs;
        for (int d : profile.degrees) fs.push_back(random_form(rng, F, profile.n, d));
        if (smoothness_check_partial(F, fs, m_max).pass) return fs;
    }
    throw std::runtime_error("no transversal forms found");
}

}  // namespace charsum::testing

#endif  // CHARSUM_TESTS_TEST_SUPPORT_HPP
