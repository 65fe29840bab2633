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

#ifndef CHARSUM_FFIELD_TOWER_HPP
#define CHARSUM_FFIELD_TOWER_HPP

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gf.hpp"

namespace charsum {

/**
 * F_{q^m} over a base F_q, both defined over F_p by their own moduli. The
 * base is embedded through a root beta of the base modulus; the embedding is
 * verified to be a ring homomorphism on construction.
 */
class ExtField {
public:
    using Elt = Gf::Elt;

    ExtField(std::shared_ptr<const Gf> base, int m) : base_(std::move(base)), m_(m) {
        if (m < 1) throw std::invalid_argument("extend: degree must be positive");
        ext_ = m == 1 ? base_ : build_field(base_->p(), base_->degree() * m);
        const std::uint64_t q = base_->order(), Q = ext_->order();
        cofactor_ = (Q - 1) / (q - 1);

        Elt beta = 0;
        if (m == 1) {
            beta = base_->degree() == 1 ? 0 : base_->p();  // the class of x itself
        } else {
            // roots of the base modulus all lie in the subfield {0} u <g^cofactor>
            bool found = false;
            for (std::uint64_t j = 0; j <= q - 1 && !found; ++j) {
                Elt cand = j == q - 1 ? 0 : ext_->exp(j * cofactor_);
                if (eval_base_modulus(cand) == 0) {
                    beta = cand;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("extend: base modulus has no root in the extension");
        }
        embed_.resize(q);
        for (Elt c = 0; c < q; ++c) {
            auto d = base_->digits(c);
            Elt acc = 0, pw = 1;
            for (auto digit : d) {
                acc = ext_->add(acc, ext_->mul(ext_->from_int(digit), pw));
                pw = ext_->mul(pw, beta);
            }
            embed_[c] = acc;
            if (!to_base_.emplace(acc, c).second) throw std::logic_error("extend: embedding is not injective");
        }
        verify_embedding();

        // N(G) = h generates the image of F_q^x; record its base discrete log s
        const Elt h = ext_->exp(cofactor_);
        auto it = to_base_.find(h);
        if (it == to_base_.end()) throw std::logic_error("extend: norm of the generator left the base field");
        norm_log_scale_ = base_->log(it->second);
        if (std::gcd(norm_log_scale_, q - 1) != 1)
            throw std::logic_error("extend: norm map is not surjective on the generator");
    }

    const Gf& base() const { return *base_; }
    const Gf& field() const { return *ext_; }
    std::shared_ptr<const Gf> base_ptr() const { return base_; }
    int m() const { return m_; }

    Elt embed(Elt base_elt) const { return embed_.at(base_elt); }

    /// x^{(Q-1)/(q-1)} pulled back to the base; throws if it is not in the embedded base field.
    Elt norm_to_base(Elt x) const {
        Elt y = ext_->pow(x, cofactor_);
        auto it = to_base_.find(y);
        if (it == to_base_.end()) throw std::domain_error("norm_to_base: result outside the base field");
        return it->second;
    }

    /// Base discrete log of Norm(x) for x = G^l: s * l mod (q - 1).
    std::uint64_t norm_base_log(Gf::Log l) const {
        return static_cast<std::uint64_t>(l) % (base_->order() - 1) * norm_log_scale_ % (base_->order() - 1);
    }

private:
    Elt eval_base_modulus(Elt x) const {
        auto mod = base_->modulus();
        Elt acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;) acc = ext_->add(ext_->mul(acc, x), ext_->from_int(mod[i]));
        return acc;
    }

    void verify_embedding() const {
        const std::uint64_t q = base_->order();
        const Elt g = base_->generator();
        for (Elt c = 0; c < q; ++c) {
            if (embed_[base_->mul(c, g)] != ext_->mul(embed_[c], embed_[g]) ||
                embed_[base_->add(c, 1)] != ext_->add(embed_[c], 1))
                throw std::logic_error("extend: embedding is not a ring homomorphism");
        }
    }

    std::shared_ptr<const Gf> base_;
    std::shared_ptr<const Gf> ext_;
    int m_;
    std::uint64_t cofactor_ = 1;
    std::uint64_t norm_log_scale_ = 1;
    std::vector<Elt> embed_;
    std::unordered_map<Elt, Elt> to_base_;
};

using ExtFieldDesc = ExtField;

/// Towers are built once per (base, m) and shared.
inline std::shared_ptr<const ExtField> extend(const std::shared_ptr<const Gf>& base, int m) {
    static std::mutex mu;
    static std::map<std::pair<const Gf*, int>, std::shared_ptr<const ExtField>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({base.get(), m}); it != cache.end()) return it->second;
    }
    auto e = std::make_shared<const ExtField>(base, m);
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(base.get(), m), std::move(e)).first->second;
}

}  // namespace charsum

#endif
