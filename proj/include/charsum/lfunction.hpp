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

#ifndef CHARSUM_LFUNCTION_HPP
#define CHARSUM_LFUNCTION_HPP

#pragma once

#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactalg.hpp"
#include "ffield.hpp"
#include "hodge.hpp"
#include "padic.hpp"
#include "polygon.hpp"

namespace charsum {

/**
 * P(t) = L(t)^{(-1)^{n+1}} = 1 + c_1 t + ... + c_N t^N with coefficients in
 * Z[zeta_{q-1}]. The power sums of its reciprocal roots are p_m = (-1)^n S_m.
 */
class LPolynomial {
public:
    /// Newton's identities k c_k = -sum_{i=1}^k p_i c_{k-i} over Q(zeta), then an integrality check.
    static LPolynomial from_power_sums(std::span<const CycloElem> S, int n, int N,
                                       std::shared_ptr<const Gf> field = nullptr) {
        if (N < 0) throw std::invalid_argument("from_power_sums: negative degree");
        if (S.size() < static_cast<std::size_t>(N))
            throw std::invalid_argument("from_power_sums: need " + std::to_string(N) + " power sums, got " +
                                        std::to_string(S.size()));
        if (N == 0) throw std::invalid_argument("from_power_sums: degree 0 carries no power sums");
        const auto Nz = S.front().modulus();
        LPolynomial P;
        P.n_ = n;
        P.field_ = std::move(field);
        for (int m = 0; m < N; ++m) P.p_.push_back(n % 2 ? -S[m] : S[m]);
        std::vector<CycloRat> c{CycloRat::one(Nz)};
        for (int k = 1; k <= N; ++k) {
            CycloRat acc = CycloRat::zero(Nz);
            for (int i = 1; i <= k; ++i) acc += to_rational(P.p_[i - 1]) * c[k - i];
            c.push_back(-acc / BigRational(k));
        }
        for (const auto& x : c) {
            try {
                P.c_.push_back(to_integral(x));
            } catch (const std::domain_error&) {
                throw std::domain_error("from_power_sums: non-integral coefficient " + x.to_string() +
                                        "; the power sums do not come from a degree-" + std::to_string(N) +
                                        " polynomial with integral coefficients");
            }
        }
        return P;
    }

    static LPolynomial from_coefficients(std::vector<CycloElem> c, int n, std::shared_ptr<const Gf> field = nullptr) {
        if (c.empty() || !(c.front() == CycloElem::one(c.front().modulus())))
            throw std::invalid_argument("LPolynomial: constant coefficient must be 1");
        LPolynomial P;
        P.n_ = n;
        P.field_ = std::move(field);
        P.c_ = std::move(c);
        for (int m = 1; m <= P.degree(); ++m) P.p_.push_back(P.next_power_sum());
        return P;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int n() const { return n_; }
    /// The exponent (-1)^{n+1} with P = L^{exponent}.
    int sign_exponent() const { return n_ % 2 ? 1 : -1; }
    std::span<const CycloElem> coefficients() const { return c_; }
    unsigned long modulus() const { return c_.front().modulus(); }
    const std::shared_ptr<const Gf>& field() const { return field_; }

    /// S_m predicted by the reciprocal roots, m = 1, 2, ...
    std::vector<CycloElem> predicted_sums(std::size_t count) const {
        LPolynomial tmp = *this;
        while (tmp.p_.size() < count) tmp.p_.push_back(tmp.next_power_sum());
        std::vector<CycloElem> out;
        for (std::size_t m = 0; m < count; ++m) out.push_back(n_ % 2 ? -tmp.p_[m] : tmp.p_[m]);
        return out;
    }

    /// Coefficients under zeta_{q-1} -> omega(g) (or its inverse) in Z_q / p^N.
    std::vector<ZqElem> padic(unsigned N, EmbeddingConvention conv = EmbeddingConvention::Teichmuller) const {
        if (!field_) throw std::logic_error("LPolynomial: no residue field attached");
        std::vector<ZqElem> out;
        for (const auto& x : c_) out.push_back(cyclo_to_zq(x, *field_, N, conv));
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i <= degree(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "[" + c_[i].to_string() + "]";
            if (i) s += "*t^" + std::to_string(i);
        }
        return s;
    }

private:
    // p_{m} for m = p_.size() + 1 from the recursion m c_m + sum_{i=1}^{m-1} c_i p_{m-i} + p_m = 0
    CycloElem next_power_sum() const {
        const int m = static_cast<int>(p_.size()) + 1;
        CycloElem acc = CycloElem::zero(modulus());
        if (m <= degree()) acc -= c_[m] * BigInt(m);
        for (int i = 1; i < m && i <= degree(); ++i) acc -= c_[i] * p_[m - i - 1];
        return acc;
    }

    int n_ = 0;
    std::vector<CycloElem> c_;
    std::vector<CycloElem> p_;
    std::shared_ptr<const Gf> field_;
};

struct DegreeValidation {
    bool ok = true;
    bool vacuous = false;  ///< no extra sums were supplied
    std::size_t checked = 0;
    std::optional<int> first_mismatch;  ///< index m of the first S_m that disagrees
    bool leading_vanishes = false;      ///< c_N = 0, so the true degree is below N
};

/**
 * Compares S_{N+1}, S_{N+2}, ... with the values forced by P's reciprocal
 * roots. A vanishing c_N also fails: the sums then fit a polynomial of lower
 * degree than the one claimed.
 */
inline DegreeValidation validate_degree(const LPolynomial& P, std::span<const CycloElem> extra) {
    DegreeValidation v;
    v.vacuous = extra.empty();
    if (P.degree() > 0 && P.coefficients().back().is_zero()) {
        v.ok = false;
        v.leading_vanishes = true;
    }
    const auto predicted = P.predicted_sums(P.degree() + extra.size());
    for (std::size_t j = 0; j < extra.size(); ++j) {
        ++v.checked;
        if (!(predicted[P.degree() + j] == extra[j])) {
            v.ok = false;
            v.leading_vanishes = false;
            v.first_mismatch = P.degree() + 1 + static_cast<int>(j);
            return v;
        }
    }
    return v;
}

/// ord_q of every coefficient (nullopt for exact zeros) and the p-adic precision that made them reliable.
struct PadicValuations {
    std::vector<std::optional<BigRational>> values;
    unsigned precision = 0;
};

/**
 * Valuations along the chosen embedding. Starts at a n N + 2 digits (or the
 * given precision) and doubles at most three times while some nonzero
 * coefficient still reads as zero.
 */
inline PadicValuations padic_valuations(const LPolynomial& P,
                                        EmbeddingConvention conv = EmbeddingConvention::Teichmuller,
                                        unsigned precision = 0) {
    if (!P.field()) throw std::logic_error("padic_valuations: no residue field attached");
    const int a = P.field()->degree();
    unsigned N = precision ? precision : static_cast<unsigned>(a * std::max(P.n(), 1) * P.degree() + 2);
    for (int attempt = 0; attempt <= 3; ++attempt, N *= 2) {
        PadicValuations out;
        out.precision = N;
        bool reliable = true;
        const auto coeffs = P.coefficients();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) {
                out.values.push_back(std::nullopt);
                continue;
            }
            auto v = ord(cyclo_to_zq(coeffs[k], *P.field(), N, conv));
            if (!v.reliable) {
                reliable = false;
                break;
            }
            out.values.push_back(v.value);
        }
        if (reliable) return out;
    }
    throw std::runtime_error("padic_polygon: valuation still unreliable at p-adic precision " + std::to_string(N / 2));
}

/// Lower convex hull of (j, ord_q c_j); exact zero coefficients contribute no point.
inline NewtonPolygon padic_polygon(const LPolynomial& P, EmbeddingConvention conv = EmbeddingConvention::Teichmuller,
                                   unsigned precision = 0) {
    auto v = padic_valuations(P, conv, precision);
    std::vector<std::pair<long, std::optional<BigRational>>> pts;
    for (std::size_t k = 0; k < v.values.size(); ++k) pts.emplace_back(static_cast<long>(k), v.values[k]);
    return NewtonPolygon::from_valuation_points(std::move(pts));
}

struct EmbeddingModuli {
    unsigned long k;  ///< zeta_{q-1} -> exp(2 pi i k / (q-1))
    std::vector<Complex> roots;
    std::vector<long double> moduli;
};

namespace detail {

/**
 * Aberth iteration for the roots of the monic z^N + a_1 z^{N-1} + ... + a_N.
 * Starting points lie on a circle of radius |a_N|^{1/N} with a seeded phase.
 */
inline std::vector<Complex> aberth_roots(const std::vector<Complex>& a, std::uint64_t seed) {
    const int N = static_cast<int>(a.size()) - 1;
    if (N <= 0) return {};
    auto eval = [&](Complex z) {
        Complex v = 1, dv = 0;
        for (int k = 1; k <= N; ++k) {
            dv = dv * z + v;
            v = v * z + a[k];
        }
        return std::make_pair(v, dv);
    };
    if (N == 1) return {-a[1]};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<long double> phase(0, 2 * std::acos(-1.0L));
    long double radius = std::pow(std::abs(a[N]), 1.0L / N);
    if (!(radius > 0)) radius = 1;
    const long double offset = phase(rng);
    std::vector<Complex> z(N);
    for (int i = 0; i < N; ++i) z[i] = std::polar(radius, offset + 2 * std::acos(-1.0L) * i / N + 0.4L / N);
    const long double eps = std::numeric_limits<long double>::epsilon();
    for (int it = 0; it < 2000; ++it) {
        long double worst = 0;
        for (int i = 0; i < N; ++i) {
            auto [v, dv] = eval(z[i]);
            if (v == Complex(0)) continue;
            const Complex ratio = v / dv;
            Complex s = 0;
            for (int j = 0; j < N; ++j)
                if (j != i) s += Complex(1) / (z[i] - z[j]);
            const Complex step = ratio / (Complex(1) - ratio * s);
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[i])));
        }
        if (worst < 64 * eps) {
            // backward-error check against the coefficient scale
            for (const auto& r : z) {
                long double scale = 0, pw = 1;
                for (int k = N; k >= 0; --k) {
                    scale += std::abs(a[k]) * pw;
                    pw *= std::abs(r);
                }
                if (std::abs(eval(r).first) > 1e-12L * scale)
                    throw std::runtime_error("archimedean_moduli: root residual too large");
            }
            return z;
        }
    }
    throw std::runtime_error("archimedean_moduli: root finder did not converge");
}

}  // namespace detail

/// Reciprocal roots of P and their absolute values under every embedding of Q(zeta_{q-1}) into C.
inline std::vector<EmbeddingModuli> archimedean_moduli(const LPolynomial& P, std::uint64_t seed) {
    std::vector<std::vector<Embedding>> values;
    for (const auto& c : P.coefficients()) values.push_back(complex_embeddings(c));
    std::vector<EmbeddingModuli> out;
    for (std::size_t e = 0; e < values.front().size(); ++e) {
        // reciprocal roots of P are the roots of t^N P(1/t), which is monic
        std::vector<Complex> a;
        for (const auto& v : values) a.push_back(v[e].value);
        EmbeddingModuli m{values.front()[e].k, detail::aberth_roots(a, seed + e), {}};
        for (const auto& r : m.roots) m.moduli.push_back(std::abs(r));
        out.push_back(std::move(m));
    }
    return out;
}

struct MonomialSpec {
    std::vector<int> exponents;
    std::vector<std::uint32_t> digits;  ///< coefficient as base-p digits over the field's basis
};

struct FormSpec {
    int degree = 0;
    std::vector<MonomialSpec> monomials;
};

struct VerifyOptions {
    unsigned precision = 0;  ///< p-adic digits; 0 picks a default from the degree
    std::uint64_t budget = 200'000'000;
    int m_max = 0;  ///< 0 means N + 2
    std::uint64_t seed = 1;
    int smoothness_m = 2;
    unsigned threads = 0;
    EmbeddingConvention convention = EmbeddingConvention::Teichmuller;
    std::size_t sample = 0;  ///< sweeps only: seeded subset size, 0 for all
};

/// A full problem instance over F_q, q = p^a, on P^n.
struct InstanceSpec {
    std::uint32_t p = 0;
    int a = 1;
    int n = 1;
    std::vector<FormSpec> forms;
    std::vector<long> char_numerators;
    bool allow_trivial = false;  ///< permits zero numerators for the trivial-character reduction
    VerifyOptions options;

    long q() const {
        long q = 1;
        for (int i = 0; i < a; ++i) q *= p;
        return q;
    }

    DegreeProfile profile() const {
        std::vector<int> d;
        for (const auto& f : forms) d.push_back(f.degree);
        return DegreeProfile::make(n, d);
    }

    static InstanceSpec from_forms(std::uint32_t p, int a, const std::vector<HomogPoly>& fs, std::vector<long> c) {
        if (fs.empty()) throw std::invalid_argument("InstanceSpec: no forms");
        auto F = build_field(p, a);
        InstanceSpec s;
        s.p = p;
        s.a = a;
        s.n = fs.front().n();
        for (const auto& f : fs) {
            FormSpec fsp{f.degree(), {}};
            for (const auto& m : f.terms()) fsp.monomials.push_back({m.exponents, F->digits(m.coeff)});
            s.forms.push_back(std::move(fsp));
        }
        s.char_numerators = std::move(c);
        return s;
    }

    /// Throws std::invalid_argument naming the first violated condition.
    void validate() const {
        validate_forms();
        validate_characters();
    }

    /// Field, dimension and form checks, without the characters.
    void validate_forms() const {
        if (!is_prime(p)) throw std::invalid_argument("InstanceSpec: p = " + std::to_string(p) + " is not prime");
        if (a < 1) throw std::invalid_argument("InstanceSpec: a must be positive");
        if (n < 1) throw std::invalid_argument("InstanceSpec: n must be positive");
        if (forms.empty()) throw std::invalid_argument("InstanceSpec: no forms");
        for (std::size_t i = 0; i < forms.size(); ++i) {
            const auto& f = forms[i];
            if (f.degree < 1) throw std::invalid_argument("InstanceSpec: form degrees must be positive");
            for (const auto& m : f.monomials) {
                if (m.exponents.size() != static_cast<std::size_t>(n + 1))
                    throw std::invalid_argument("InstanceSpec: form " + std::to_string(i + 1) +
                                                " has a monomial with the wrong number of exponents");
                long s = 0;
                for (int e : m.exponents) s += e;
                if (s != f.degree)
                    throw std::invalid_argument("InstanceSpec: form " + std::to_string(i + 1) + " is not homogeneous of degree " +
                                                std::to_string(f.degree));
                if (m.digits.size() > static_cast<std::size_t>(a))
                    throw std::invalid_argument("InstanceSpec: coefficient has more than a digits");
                for (auto d : m.digits)
                    if (d >= p) throw std::invalid_argument("InstanceSpec: coefficient digit " + std::to_string(d) + " >= p");
            }
        }
    }

    void validate_characters() const {
        if (forms.size() != char_numerators.size())
            throw std::invalid_argument("InstanceSpec: one character numerator per form required");
        const long qm1 = q() - 1;
        long weighted = 0;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            const long c = char_numerators[i];
            if (c < 0 || c >= qm1)
                throw std::invalid_argument("InstanceSpec: numerator " + std::to_string(c) + " outside [0, q-2]");
            if (c == 0 && !allow_trivial)
                throw std::invalid_argument("InstanceSpec: character " + std::to_string(i + 1) +
                                            " is trivial; enable the trivial-character reduction to allow it");
            weighted = (weighted + c * f_degree(i)) % qm1;
        }
        if (weighted != 0)
            throw std::invalid_argument(
                "InstanceSpec: homogeneity condition violated: sum c_i d_i is not divisible by q-1");
    }

    std::vector<HomogPoly> build_forms(const Gf& F) const {
        std::vector<HomogPoly> out;
        for (const auto& f : forms) {
            std::vector<Monomial> ms;
            for (const auto& m : f.monomials) {
                std::vector<std::uint32_t> d = m.digits;
                d.resize(a, 0);
                ms.push_back(Monomial{m.exponents, F.from_digits(d)});
            }
            out.push_back(HomogPoly::make(n, f.degree, std::move(ms)));
        }
        return out;
    }

    std::string key() const {
        std::string s = "q=" + std::to_string(q()) + " n=" + std::to_string(n) + " d=(";
        for (std::size_t i = 0; i < forms.size(); ++i) s += (i ? "," : "") + std::to_string(forms[i].degree);
        s += ") c=(";
        for (std::size_t i = 0; i < char_numerators.size(); ++i)
            s += (i ? "," : "") + std::to_string(char_numerators[i]);
        return s + ")";
    }

private:
    long f_degree(std::size_t i) const { return forms[i].degree; }
};

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        default: return "SKIPPED";
    }
}

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
    std::string witness;  ///< set for every FAIL
};

struct VerificationReport {
    std::string instance;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    std::optional<HodgeVector> hodge;
    std::optional<NewtonPolygon> expected;
    std::optional<NewtonPolygon> measured;
    std::optional<LPolynomial> lpoly;
    long l_degree = -1;
    int sums_computed = 0;
    std::uint64_t points_enumerated = 0;
    std::uint64_t budget = 0;
    unsigned padic_precision = 0;
    std::string smoothness_level;
    bool dominance_equal = false;
    std::vector<EmbeddingModuli> moduli;
    std::vector<std::string> notes;
    double elapsed_ms = 0;

    bool all_pass() const {
        return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
    }

    const CheckRecord* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "instance " << instance << "\n";
        for (const auto& c : checks) {
            os << "  " << to_string(c.status) << "  " << c.name;
            if (!c.detail.empty()) os << ": " << c.detail;
            if (!c.witness.empty()) os << " [witness: " << c.witness << "]";
            os << "\n";
        }
        if (expected) os << "  expected polygon " << expected->to_string() << "\n";
        if (measured) os << "  measured polygon " << measured->to_string() << "\n";
        for (const auto& n : notes) os << "  note: " << n << "\n";
        os << "  sums m=1.." << sums_computed << ", " << points_enumerated << " points of budget " << budget << ", "
           << elapsed_ms << " ms\n";
        return os.str();
    }
};

namespace detail {

inline std::optional<std::uint64_t> points_for(int n, std::uint64_t q, int m) {
    std::uint64_t Q = 1;
    for (int i = 0; i < m; ++i) {
        if (Q > UINT64_MAX / q) return std::nullopt;
        Q *= q;
    }
    try {
        return projective_point_count(n, Q);
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

inline std::string moduli_witness(const EmbeddingModuli& e, std::size_t i, long double target) {
    std::ostringstream os;
    os.precision(15);
    os << "embedding k=" << e.k << " root " << i << " has modulus " << e.moduli[i] << ", expected " << target;
    return os.str();
}

}  // namespace detail

/**
 * End-to-end run: admissibility, smoothness, Hodge data and expected polygon,
 * S_1..S_{N+2} within the budget, the L-polynomial, degree validation, the
 * p-adic polygon and its dominance over the expected one, archimedean moduli
 * and the Frobenius-orbit cross-check. Stage errors land in the report.
 */
inline VerificationReport verify_instance(const InstanceSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& opt = spec.options;
    VerificationReport rep;
    rep.instance = spec.key();
    rep.seed = opt.seed;
    rep.budget = opt.budget;
    auto add = [&](std::string name, CheckStatus st, std::string detail, std::string witness = {}) {
        rep.checks.push_back({std::move(name), st, std::move(detail), std::move(witness)});
    };
    auto finish = [&]() -> VerificationReport {
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    };

    std::shared_ptr<const Gf> F;
    std::vector<HomogPoly> forms;
    DegreeProfile prof;
    std::optional<ExponentVector> e;
    try {
        spec.validate();
        F = build_field(spec.p, spec.a);
        forms = spec.build_forms(*F);
        prof = spec.profile();
        const bool trivial =
            std::find(spec.char_numerators.begin(), spec.char_numerators.end(), 0L) != spec.char_numerators.end();
        if (!trivial) e = ExponentVector::make(spec.q(), spec.char_numerators, prof);
        add("admissibility", CheckStatus::Pass, trivial ? "trivial-character reduction mode" : "");
    } catch (const std::exception& ex) {
        add("admissibility", CheckStatus::Fail, "instance rejected", ex.what());
        return finish();
    }

    try {
        auto sm = smoothness_check_partial(*F, forms, opt.smoothness_m);
        rep.smoothness_level = sm.level();
        if (sm.pass)
            add("smoothness", CheckStatus::Pass, sm.level());
        else
            add("smoothness", CheckStatus::Fail, "forms are not transversal", sm.witness);
    } catch (const std::exception& ex) {
        add("smoothness", CheckStatus::Fail, "check aborted", ex.what());
    }

    SumOptions sopt;
    sopt.threads = opt.threads;

    if (!e) {
        // trivial character present: only the reduction identity is meaningful
        try {
            auto r = trivial_character_reduction_check(*extend(F, 1), forms, spec.char_numerators, sopt);
            rep.points_enumerated += 3 * *detail::points_for(spec.n, F->order(), 1);
            if (r.holds)
                add("reduction", CheckStatus::Pass, "S = " + r.lhs.to_string());
            else
                add("reduction", CheckStatus::Fail, "identity fails", r.lhs.to_string() + " vs " + r.rhs.to_string());
        } catch (const std::exception& ex) {
            add("reduction", CheckStatus::Fail, "check aborted", ex.what());
        }
        for (const char* name : {"hodge", "dominance", "archimedean", "galois_orbit"})
            add(name, CheckStatus::Skipped, "not defined with a trivial character");
        return finish();
    }

    HodgePolynomial hp(prof);
    long N = 0;
    try {
        rep.hodge = hodge_numbers(*e, hp);
        N = rep.hodge->total();
        rep.expected = expected_polygon(*e, hp, spec.p, spec.a);
        add("hodge", CheckStatus::Pass,
            "k = " + rep.hodge->to_string() + ", H_e(1) = " + std::to_string(N) + ", d_e = " + std::to_string(d_of(*e, prof)));
    } catch (const std::exception& ex) {
        add("hodge", CheckStatus::Fail, "closed form failed", ex.what());
        return finish();
    }

    // power sums within the budget
    const int m_target = opt.m_max > 0 ? opt.m_max : static_cast<int>(N) + 2;
    std::vector<CycloElem> S;
    const auto ts = std::chrono::steady_clock::now();
    try {
        for (int m = 1; m <= m_target; ++m) {
            auto cost = detail::points_for(spec.n, F->order(), m);
            if (!cost || rep.points_enumerated + *cost > opt.budget || m * spec.a > 27) break;
            S.push_back(character_sum_exact(*extend(F, m), forms, spec.char_numerators, {}, sopt));
            rep.points_enumerated += *cost;
        }
    } catch (const std::exception& ex) {
        add("power_sums", CheckStatus::Fail, "enumeration failed", ex.what());
        return finish();
    }
    rep.sums_computed = static_cast<int>(S.size());
    {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - ts).count();
        std::string detail = "S_1..S_" + std::to_string(S.size()) + " (" + std::to_string(rep.points_enumerated) +
                             " points, " + std::to_string(static_cast<long>(ms)) + " ms)";
        if (static_cast<int>(S.size()) < m_target) detail += "; budget stops before S_" + std::to_string(S.size() + 1);
        add("power_sums", CheckStatus::Pass, detail);
    }

    if (static_cast<long>(S.size()) < N) {
        for (const char* name : {"degree", "validate_degree", "padic_polygon", "dominance", "archimedean", "galois_orbit"})
            add(name, CheckStatus::Skipped, "only " + std::to_string(S.size()) + " of " + std::to_string(N) +
                                                " required power sums fit in the budget");
        return finish();
    }

    if (N == 0) {
        rep.l_degree = 0;
        add("degree", CheckStatus::Pass, "H_e(1) = 0, so P = 1");
        bool zero = std::all_of(S.begin(), S.end(), [](const CycloElem& x) { return x.is_zero(); });
        if (S.empty())
            add("validate_degree", CheckStatus::Skipped, "no power sums computed");
        else if (zero)
            add("validate_degree", CheckStatus::Pass, "every computed S_m vanishes");
        else
            add("validate_degree", CheckStatus::Fail, "P = 1 predicts S_m = 0", "nonzero power sum");
        for (const char* name : {"padic_polygon", "dominance", "archimedean", "galois_orbit"})
            add(name, CheckStatus::Skipped, "degree 0");
        return finish();
    }

    std::optional<LPolynomial> P;
    try {
        P = LPolynomial::from_power_sums(std::span(S).first(N), spec.n, static_cast<int>(N), F);
        rep.lpoly = P;
        if (P->coefficients()[N].is_zero()) {
            add("degree", CheckStatus::Fail, "leading coefficient vanishes", "c_" + std::to_string(N) + " = 0");
        } else {
            rep.l_degree = N;
            add("degree", CheckStatus::Pass, "integral polynomial of degree " + std::to_string(N) + " = H_e(1)");
        }
    } catch (const std::exception& ex) {
        add("degree", CheckStatus::Fail, "Newton identities did not produce an integral polynomial", ex.what());
    }
    if (!P) {
        for (const char* name : {"validate_degree", "padic_polygon", "dominance", "archimedean", "galois_orbit"})
            add(name, CheckStatus::Skipped, "no L-polynomial");
        return finish();
    }

    {
        auto extra = std::span(S).subspan(N);
        if (extra.empty()) {
            add("validate_degree", CheckStatus::Skipped, "no power sums beyond S_" + std::to_string(N) + " within the budget");
        } else {
            auto v = validate_degree(*P, extra);
            if (v.ok)
                add("validate_degree", CheckStatus::Pass, std::to_string(v.checked) + " extra power sums agree");
            else if (v.leading_vanishes)
                add("validate_degree", CheckStatus::Fail, "the power sums fit a polynomial of lower degree; hypotheses violated?",
                    "c_" + std::to_string(N) + " = 0");
            else
                add("validate_degree", CheckStatus::Fail, "power sums beyond the degree disagree; hypotheses violated?",
                    "S_" + std::to_string(*v.first_mismatch) + " differs from the value forced by P");
        }
    }

    try {
        auto vals = padic_valuations(*P, opt.convention, opt.precision);
        rep.padic_precision = vals.precision;
        std::vector<std::pair<long, std::optional<BigRational>>> pts;
        for (std::size_t k = 0; k < vals.values.size(); ++k) pts.emplace_back(static_cast<long>(k), vals.values[k]);
        rep.measured = NewtonPolygon::from_valuation_points(std::move(pts));
        add("padic_polygon", CheckStatus::Pass,
            rep.measured->to_string() + " at precision p^" + std::to_string(vals.precision) +
                (opt.convention == EmbeddingConvention::Inverse ? " (inverse embedding)" : ""));
        if (vals.values.back()) {
            const BigRational top = *vals.values.back();
            rep.notes.push_back("ord_q c_N = " + to_string(top) + (top <= spec.n * N ? " <= " : " > ") + "n N = " +
                                std::to_string(spec.n * N) + (top == spec.n * N ? " (equality)" : ""));
        }
    } catch (const std::exception& ex) {
        add("padic_polygon", CheckStatus::Fail, "valuations unreliable", ex.what());
    }

    if (rep.measured && rep.measured->length() != rep.expected->length()) {
        add("dominance", CheckStatus::Fail, "measured and expected polygons have different lengths",
            "measured length " + to_string(rep.measured->length()) + ", expected " + to_string(rep.expected->length()));
    } else if (rep.measured) {
        auto d = dominates(*rep.measured, *rep.expected);
        rep.dominance_equal = d.equal;
        if (d.holds)
            add("dominance", CheckStatus::Pass, d.equal ? "measured polygon equals the bound" : "measured polygon lies above the bound");
        else
            add("dominance", CheckStatus::Fail, "measured polygon dips below the bound",
                "x = " + to_string(*d.witness) + ": measured " + to_string(rep.measured->value_at(*d.witness)) +
                    " < expected " + to_string(rep.expected->value_at(*d.witness)));
    } else {
        add("dominance", CheckStatus::Skipped, "no measured polygon");
    }

    try {
        rep.moduli = archimedean_moduli(*P, opt.seed);
        const long double target = std::pow(std::sqrt(static_cast<long double>(spec.q())), spec.n);
        std::string witness;
        long double worst = 0;
        for (const auto& em : rep.moduli)
            for (std::size_t i = 0; i < em.moduli.size(); ++i) {
                const long double dev = std::fabs(em.moduli[i] - target);
                worst = std::max(worst, dev);
                if (dev > 1e-9L && witness.empty()) witness = detail::moduli_witness(em, i, target);
            }
        std::ostringstream os;
        os.precision(3);
        os << "all moduli sqrt(q)^" << spec.n << ", max deviation " << static_cast<double>(worst);
        if (witness.empty())
            add("archimedean", CheckStatus::Pass, os.str());
        else
            add("archimedean", CheckStatus::Fail, "reciprocal roots are not pure of weight n", witness);
    } catch (const std::exception& ex) {
        add("archimedean", CheckStatus::Fail, "root finding failed", ex.what());
    }

    // Frobenius orbit: e' = p e gives the Galois-conjugate sums, hence the same valuations
    const ExponentVector ep = frobenius_step(*e, spec.p);
    if (ep == *e) {
        add("galois_orbit", CheckStatus::Skipped, "e' = e, nothing to compare");
    } else if (!rep.measured) {
        add("galois_orbit", CheckStatus::Skipped, "no measured polygon");
    } else {
        std::uint64_t cost = 0;
        for (int m = 1; m <= N; ++m) cost += *detail::points_for(spec.n, F->order(), m);
        if (rep.points_enumerated + cost > opt.budget) {
            add("galois_orbit", CheckStatus::Skipped, "conjugate instance exceeds the budget");
        } else {
            try {
                std::vector<long> cp(ep.numerators().begin(), ep.numerators().end());
                std::vector<CycloElem> Sp;
                for (int m = 1; m <= N; ++m) Sp.push_back(character_sum_exact(*extend(F, m), forms, cp, {}, sopt));
                rep.points_enumerated += cost;
                auto Pp = LPolynomial::from_power_sums(Sp, spec.n, static_cast<int>(N), F);
                auto poly = padic_polygon(Pp, opt.convention, opt.precision);
                if (poly == *rep.measured)
                    add("galois_orbit", CheckStatus::Pass, "e' = " + ep.to_string() + " gives " + poly.to_string());
                else
                    add("galois_orbit", CheckStatus::Fail, "conjugate instance has a different polygon",
                        "e' = " + ep.to_string() + ": " + poly.to_string() + " vs " + rep.measured->to_string());
            } catch (const std::exception& ex) {
                add("galois_orbit", CheckStatus::Fail, "conjugate run failed", ex.what());
            }
        }
    }
    return finish();
}

}  // namespace charsum

#endif  // CHARSUM_LFUNCTION_HPP
