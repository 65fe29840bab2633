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

#ifndef CHARSUM_FFIELD_CHARSUM_VALUE_HPP
#define CHARSUM_FFIELD_CHARSUM_VALUE_HPP

#pragma once

#include <span>
#include <vector>

#include "../hodge.hpp"
#include "../padic/zq.hpp"
#include "sums.hpp"

namespace charsum {

/// S_m in Z[zeta_{q-1}] together with its image in Z_q / p^N.
struct CharSumValue {
    CycloElem exact;
    ZqElem padic;
};

/**
 * S_m over F_{q^m} in both representations. The p-adic value is summed from
 * the raw histogram, independently of the reduction modulo Phi_{q-1}.
 */
inline CharSumValue char_sum(const ExtField& ext, std::span<const HomogPoly> forms, std::span<const long> numerators,
                             unsigned N, const SumOptions& opts = {}) {
    const auto hist = character_sum_histogram(ext, forms, numerators, {}, opts);
    const auto& F = ext.base();
    auto ctx = zq_context(F);
    const ZqElem w = teichmuller(F, F.generator(), N);
    ZqElem acc = ZqElem::zero(ctx, N), pw = ZqElem::one(ctx, N);
    for (auto h : hist) {
        if (h != 0) acc += ZqElem::from_integer(ctx, BigInt(static_cast<long>(h)), N) * pw;
        pw *= w;
    }
    return {cyclo_from_histogram(F.order() - 1, hist), std::move(acc)};
}

inline CharSumValue char_sum(const ExtField& ext, std::span<const HomogPoly> forms, const ExponentVector& e,
                             unsigned N, const SumOptions& opts = {}) {
    if (e.q() != static_cast<long>(ext.base().order()))
        throw std::invalid_argument("char_sum: exponent vector belongs to a different field");
    return char_sum(ext, forms, e.numerators(), N, opts);
}

}  // namespace charsum

#endif
