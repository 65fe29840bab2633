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

#ifndef CHARSUM_EXACTALG_SERIES_HPP
#define CHARSUM_EXACTALG_SERIES_HPP

#pragma once

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "cyclo.hpp"
#include "rational.hpp"

namespace charsum {

namespace detail {

inline BigRational div_by_int(const BigRational& x, unsigned long m) { return x / BigRational(m); }
inline CycloRat div_by_int(const CycloRat& x, unsigned long m) { return x / BigRational(m); }

inline BigRational times_int(const BigRational& x, unsigned long m) { return x * BigRational(m); }
inline CycloRat times_int(const CycloRat& x, unsigned long m) { return x * BigRational(m); }

}  // namespace detail

/**
 * Power series in t truncated at a fixed order: coefficients of t^0 .. t^{order-1}.
 * T is BigRational or CycloRat. Arithmetic never reads past the truncation.
 */
template <class T>
class TruncSeries {
public:
    /// All-zero series; `zero` fixes the coefficient ring (e.g. the cyclotomic modulus).
    TruncSeries(std::size_t order, T zero) : zero_(std::move(zero)), coeffs_(order, zero_) {
        if (order == 0) throw std::invalid_argument("TruncSeries: order must be positive");
    }

    TruncSeries(std::vector<T> coeffs, T zero) : zero_(std::move(zero)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: order must be positive");
    }

    std::size_t order() const { return coeffs_.size(); }
    const T& operator[](std::size_t i) const { return coeffs_.at(i); }
    T& operator[](std::size_t i) { return coeffs_.at(i); }
    const T& zero() const { return zero_; }
    const std::vector<T>& coefficients() const { return coeffs_; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        TruncSeries r(n, a.zero_);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; i + j < n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    T zero_;
    std::vector<T> coeffs_;
};

/// exp(s) via m E_m = sum_{k=1}^{m} k s_k E_{m-k}. Requires s_0 = 0.
template <class T>
TruncSeries<T> series_exp(const TruncSeries<T>& s) {
    if (!(s[0] == s.zero())) throw std::invalid_argument("series_exp: constant term must be zero");
    TruncSeries<T> e(s.order(), s.zero());
    if constexpr (std::is_same_v<T, BigRational>)
        e[0] = 1;
    else
        e[0] = T::one(s.zero().modulus());
    for (std::size_t m = 1; m < s.order(); ++m) {
        T acc = s.zero();
        for (std::size_t k = 1; k <= m; ++k) acc += detail::times_int(s[k], k) * e[m - k];
        e[m] = detail::div_by_int(acc, m);
    }
    return e;
}

/// log(s) via m L_m = m s_m - sum_{k=1}^{m-1} k L_k s_{m-k}. Requires s_0 = 1.
template <class T>
TruncSeries<T> series_log(const TruncSeries<T>& s) {
    bool unit_constant;
    if constexpr (std::is_same_v<T, BigRational>)
        unit_constant = s[0] == 1;
    else
        unit_constant = s[0] == T::one(s.zero().modulus());
    if (!unit_constant) throw std::invalid_argument("series_log: constant term must be one");
    TruncSeries<T> l(s.order(), s.zero());
    for (std::size_t m = 1; m < s.order(); ++m) {
        T acc = detail::times_int(s[m], m);
        for (std::size_t k = 1; k < m; ++k) acc -= detail::times_int(l[k], k) * s[m - k];
        l[m] = detail::div_by_int(acc, m);
    }
    return l;
}

}  // namespace charsum

#endif  // CHARSUM_EXACTALG_SERIES_HPP
