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

#ifndef CHARSUM_EXACTALG_RATIONAL_HPP
#define CHARSUM_EXACTALG_RATIONAL_HPP

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace charsum {

using BigInt = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using BigRational = mpq_class;

inline BigRational rational(const BigInt& num, const BigInt& den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational rational(long num, long den) { return rational(BigInt(num), BigInt(den)); }

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// "a/b", or "a" when the denominator is one.
inline std::string to_string(const BigRational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline BigInt factorial(unsigned long k) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Largest v with p^v | x; x must be nonzero.
inline unsigned long valuation(const BigInt& x, const BigInt& p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    return mpz_remove(BigInt().get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

/// Representative of x mod m in [0, m).
inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

inline BigInt mod_floor(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Parses "a", "-a" or "a/b".
inline BigRational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rational(BigInt(s));
        return rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

}  // namespace charsum

#endif  // CHARSUM_EXACTALG_RATIONAL_HPP
