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

// Acceptance driver: one PASS/FAIL line per criterion, indented detail lines beneath.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "charsum/cli.hpp"
#include "charsum/koszul.hpp"
#include "charsum/lfunction.hpp"
#include "test_support.hpp"

using namespace charsum;
using charsum::testing::admissible_numerators;
using charsum::testing::form;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    std::vector<std::string> lines;
    bool ok = true;

    void check(bool pass, const std::string& what) {
        ok = ok && pass;
        lines.push_back(std::string(pass ? "PASS" : "FAIL") + "  " + what);
    }
    void note(const std::string& what) { lines.push_back("note  " + what); }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

const CheckRecord* find_check(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool check_is(const VerificationReport& r, const std::string& name, CheckStatus s) {
    const auto* c = find_check(r, name);
    return c && c->status == s;
}

std::string polygon_text(const std::optional<NewtonPolygon>& p) { return p ? p->to_string() : "(none)"; }

bool moduli_near(const VerificationReport& r, double target, double tol, std::string& worst) {
    if (r.moduli.empty()) {
        worst = "no embeddings";
        return false;
    }
    double dev = 0;
    for (const auto& e : r.moduli)
        for (auto m : e.moduli) dev = std::max(dev, std::abs(static_cast<double>(m) - target));
    std::ostringstream os;
    os << "max deviation " << dev;
    worst = os.str();
    return dev <= tol;
}

/// Random admissible numerators for (q, profile), or empty when the set is empty.
std::vector<long> random_admissible(std::mt19937& rng, long q, const DegreeProfile& prof) {
    std::uniform_int_distribution<long> cd(1, q - 2);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<long> c(prof.r());
        long acc = 0;
        for (int i = 0; i + 1 < prof.r(); ++i) {
            c[i] = cd(rng);
            acc += c[i] * prof.degrees[i];
        }
        std::vector<long> last;
        for (long x = 1; x <= q - 2; ++x)
            if ((acc + x * prof.degrees.back()) % (q - 1) == 0) last.push_back(x);
        if (last.empty()) continue;
        c.back() = last[std::uniform_int_distribution<std::size_t>(0, last.size() - 1)(rng)];
        return c;
    }
    return {};
}

InstanceSpec three_lines(std::uint32_t p, int a, std::vector<long> c) {
    return InstanceSpec::from_forms(p, a, {form(1, 1, {{{1, 0}, 1}}), form(1, 1, {{{0, 1}, 1}}),
                                           form(1, 1, {{{1, 0}, 1}, {{0, 1}, 1}})},
                                    std::move(c));
}

// x1 and x1^2 - x0 x2 meet transversally; x0 is tangent to the conic at (0:0:1).
HomogPoly plane_line() { return form(2, 1, {{{0, 1, 0}, 1}}); }
HomogPoly tangent_line() { return form(2, 1, {{{1, 0, 0}, 1}}); }
HomogPoly plane_conic() { return form(2, 2, {{{0, 2, 0}, 1}, {{1, 0, 1}, 6}}); }

const std::vector<long> kPrimePowersTo31{3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31};

Criterion closed_forms() {
    Criterion c;
    const auto t0 = Clock::now();
    std::mt19937 rng(101);
    int done = 0, mismatches = 0;
    while (done < 50) {
        const auto prof = charsum::testing::random_profile(rng, 2, 3, 5, 2);
        const long q = kPrimePowersTo31[std::uniform_int_distribution<std::size_t>(0, kPrimePowersTo31.size() - 1)(rng)];
        const auto num = random_admissible(rng, q, prof);
        if (num.empty()) continue;
        const auto e = ExponentVector::make(q, num, prof);
        const auto h = poly_H(e.values(), prof);
        const auto closed = charsum::testing::closed_form_n2(d_of(e, prof), prof);
        for (int j = 0; j <= 2; ++j) mismatches += h.coeff(j) != closed[j];
        ++done;
    }
    c.check(mismatches == 0, "50 random n=2 instances (r<=3, d_i<=5, q<=31): " + std::to_string(mismatches) +
                                 " coefficient mismatches against the closed forms");
    const auto prof = DegreeProfile::make(2, {3, 3});
    const auto k = hodge_numbers(ExponentVector::make(7, {1, 5}, prof), prof);
    c.check(k.k == std::vector<long>{1, 10, 1}, "d=(3,3), e_2 = 1 - e_1 gives k = " + k.to_string() + " (want (1,10,1))");
    const double s = seconds_since(t0);
    c.check(s < 5, "runtime " + fmt_seconds(s) + " < 5 s");
    return c;
}

Criterion functional_equation() {
    Criterion c;
    const auto t0 = Clock::now();
    std::mt19937 rng(202);
    int done = 0, fe_bad = 0, div_bad = 0, b_checked = 0;
    while (done < 200) {
        const auto prof = charsum::testing::random_profile(rng, 6, 3, 4);
        const long q = kPrimePowersTo31[std::uniform_int_distribution<std::size_t>(0, kPrimePowersTo31.size() - 1)(rng)];
        const auto num = random_admissible(rng, q, prof);
        if (num.empty()) continue;
        const auto e = ExponentVector::make(q, num, prof);
        HodgePolynomial hp(prof);
        fe_bad += hp(e.bar().values()) != hp(e.values()).reversed(prof.n);
        for (const auto& b : detail::b_vectors(prof.r(), prof.n)) {
            auto [quot, rem] = divmod(poly_A(b, prof), RatPoly::one_minus_t_pow(detail::total(b) + 1));
            div_bad += !rem.is_zero();
            ++b_checked;
        }
        ++done;
    }
    c.check(fe_bad == 0, "H_bar(t) = t^n H(1/t) on 200 random inputs (n<=6): " + std::to_string(fe_bad) + " failures");
    c.check(div_bad == 0, "(1-t)^(B+1) | A_b(t) for " + std::to_string(b_checked) + " b vectors: " +
                              std::to_string(div_bad) + " failures");
    const double s = seconds_since(t0);
    c.check(s < 10, "runtime " + fmt_seconds(s) + " < 10 s");
    return c;
}

Criterion degree_sum() {
    Criterion c;
    std::mt19937 rng(303);
    int profiles = 0, varying = 0, chi_bad = 0, small = 0;
    while (profiles < 20) {
        const auto prof = charsum::testing::random_profile(rng, 4, 3, 4);
        const long q = prof.degree_sum() % 2 == 0 ? 7 : 13;
        const auto all = admissible_numerators(q, prof);
        if (all.empty()) continue;
        HodgePolynomial hp(prof);
        std::set<long> totals;
        for (const auto& num : all) totals.insert(hodge_numbers(ExponentVector::make(q, num, prof), hp).total());
        varying += totals.size() != 1;
        if (prof.n <= 2) {
            ++small;
            chi_bad += *totals.begin() != charsum::testing::euler_characteristic_elementary(prof);
        }
        chi_bad += *totals.begin() != charsum::testing::euler_characteristic_complement(prof);
        ++profiles;
    }
    c.check(varying == 0, "H_e(1) constant over all admissible e on 20 random profiles: " + std::to_string(varying) +
                              " profiles vary");
    c.check(chi_bad == 0, "H_e(1) equals the inclusion-exclusion Euler characteristic (" + std::to_string(small) +
                              " profiles with n<=2 also against the elementary count): " + std::to_string(chi_bad) +
                              " mismatches");
    const auto p33 = DegreeProfile::make(2, {3, 3});
    const long h33 = hodge_numbers(ExponentVector::make(7, {1, 5}, p33), p33).total();
    c.check(h33 == 12 && charsum::testing::euler_characteristic_elementary(p33) == 12,
            "two transversal cubics in P^2: H_e(1) = " + std::to_string(h33) + " (want 12)");
    return c;
}

Criterion stickelberger() {
    Criterion c;
    const auto t0 = Clock::now();
    for (auto [p, a] : std::vector<std::pair<std::uint32_t, int>>{{5, 1}, {7, 1}, {3, 2}}) {
        auto F = build_field(p, a);
        const long q = static_cast<long>(F->order());
        int bad = 0;
        for (long ci = 1; ci <= q - 2; ++ci) {
            // (1/a) sum_i frac(p^i c / (q-1)), written out here rather than via the library
            BigRational expect = 0;
            long pi = 1;
            for (int i = 0; i < a; ++i, pi *= p) expect += rational((pi * ci) % (q - 1), q - 1);
            expect /= a;
            const auto v = ord(gauss_sum(ci, *F));
            bad += !(v.reliable && v.value == expect);
        }
        c.check(bad == 0, "(p,a)=(" + std::to_string(p) + "," + std::to_string(a) + "): " + std::to_string(q - 2) +
                              " characters, " + std::to_string(bad) + " mismatches");
    }
    const double s = seconds_since(t0);
    c.check(s < 5, "runtime " + fmt_seconds(s) + " < 5 s");
    return c;
}

Criterion end_to_end_n1() {
    Criterion c;
    const auto t0 = Clock::now();
    const auto rep = verify_instance(three_lines(7, 1, {1, 2, 3}));
    const double s = seconds_since(t0);
    c.check(rep.l_degree == 1, "q=7, three lines, c=(1,2,3): L-degree " + std::to_string(rep.l_degree));
    const auto want = NewtonPolygon::from_vertices({{0, 0}, {1, 1}});
    c.check(rep.measured && *rep.measured == want,
            "measured polygon " + polygon_text(rep.measured) + " equals (0,0) (1,1)");
    c.check(check_is(rep, "dominance", CheckStatus::Pass) && rep.dominance_equal,
            "dominance over expected " + polygon_text(rep.expected) + " holds with equality");
    std::string worst;
    const bool pure = moduli_near(rep, std::sqrt(7.0), 1e-9, worst);
    c.check(pure, "root moduli sqrt(7) within 1e-9 (" + worst + ")");
    c.check(s < 1, "runtime " + fmt_seconds(s) + " < 1 s");

    auto inv = three_lines(7, 1, {1, 2, 3});
    inv.options.convention = EmbeddingConvention::Inverse;
    const auto irep = verify_instance(inv);
    c.check(check_is(irep, "dominance", CheckStatus::Fail),
            "opposite embedding FAILS dominance (measured " + polygon_text(irep.measured) + ")");

    // conjugate characters, where the embedding choice is visible to dominance
    const auto conj = verify_instance(three_lines(7, 1, {5, 4, 3}));
    auto cinv = three_lines(7, 1, {5, 4, 3});
    cinv.options.convention = EmbeddingConvention::Inverse;
    const auto cirep = verify_instance(cinv);
    c.note("supplementary sentinel c=(5,4,3): Teichmuller " + std::string(conj.all_pass() ? "all checks pass" : "has failures") +
           ", measured " + polygon_text(conj.measured) + "; opposite embedding dominance " +
           (find_check(cirep, "dominance") ? to_string(find_check(cirep, "dominance")->status) : "missing") +
           ", measured " + polygon_text(cirep.measured));
    return c;
}

Criterion end_to_end_n2() {
    Criterion c;
    auto t0 = Clock::now();
    const auto rep = verify_instance(InstanceSpec::from_forms(7, 1, {plane_line(), plane_conic()}, {4, 4}));
    double s = seconds_since(t0);
    const auto prof = DegreeProfile::make(2, {1, 2});
    const long de = d_of(ExponentVector::make(7, {4, 4}, prof), prof);
    c.check(de == 2, "line + conic, c=(4,4): d_e = " + std::to_string(de));
    c.check(rep.l_degree == 1, "L-degree " + std::to_string(rep.l_degree));
    c.check(check_is(rep, "dominance", CheckStatus::Pass), "dominance, measured " + polygon_text(rep.measured) +
                                                               " over expected " + polygon_text(rep.expected));
    std::string worst;
    const bool pure = moduli_near(rep, 7.0, 1e-9, worst);
    c.check(pure, "root modulus 7 within 1e-9 (" + worst + ")");
    c.check(s < 1, "runtime " + fmt_seconds(s) + " < 1 s");

    // x2 and the Fermat cubic x0^3 + x1^3 + x2^3, smooth and transversal in characteristic 7
    t0 = Clock::now();
    const auto cubic = form(2, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
    const auto crep = verify_instance(InstanceSpec::from_forms(7, 1, {form(2, 1, {{{0, 0, 1}, 1}}), cubic}, {3, 3}));
    s = seconds_since(t0);
    c.check(check_is(crep, "smoothness", CheckStatus::Pass), "line + cubic transversal");
    c.check(crep.l_degree == 4 && crep.sums_computed >= 4,
            "degree " + std::to_string(crep.l_degree) + ", S_1..S_" + std::to_string(crep.sums_computed) + " computed (" +
                std::to_string(crep.points_enumerated) + " points)");
    c.check(check_is(crep, "dominance", CheckStatus::Pass), "dominance, measured " + polygon_text(crep.measured) +
                                                                " over expected " + polygon_text(crep.expected));
    c.check(s < 60, "runtime " + fmt_seconds(s) + " < 60 s");
    return c;
}

Criterion koszul_oracle() {
    Criterion c;
    const auto t0 = Clock::now();
    auto F = build_field(7, 1);
    std::mt19937 rng(707);
    std::vector<DegreeProfile> profiles;
    for (int d1 = 1; d1 <= 3; ++d1)
        for (int d2 = d1; d2 <= 3; ++d2) {
            profiles.push_back(DegreeProfile::make(1, {d1, d2}));
            for (int d3 = d2; d3 <= 3; ++d3) profiles.push_back(DegreeProfile::make(1, {d1, d2, d3}));
        }
    profiles.push_back(DegreeProfile::make(2, {1, 2}));
    int instances = 0, k_bad = 0, theta_bad = 0, acyc_bad = 0;
    for (const auto& prof : profiles) {
        const auto spec = InstanceSpec::from_forms(7, 1, charsum::testing::random_transversal_forms(rng, *F, prof), {});
        const auto r = cli::cmd_koszul(spec).report;
        for (const auto& row : r["instances"]) {
            ++instances;
            k_bad += row["match"] != "PASS";
            theta_bad += row["theta_exactness"] != "PASS";
            acyc_bad += row["acyclicity"] != "PASS";
        }
    }
    c.check(k_bad == 0, "k_via_cokernel = reversed hodge_numbers on " + std::to_string(instances) + " admissible e over " +
                            std::to_string(profiles.size()) + " profiles: " + std::to_string(k_bad) + " mismatches");
    c.check(theta_bad == 0, "theta-sequence exactness: " + std::to_string(theta_bad) + " failures");
    c.check(acyc_bad == 0, "acyclicity: " + std::to_string(acyc_bad) + " failures");
    const auto t = cli::cmd_koszul(InstanceSpec::from_forms(7, 1, {tangent_line(), plane_conic()}, {4, 4})).report;
    c.check(t["instances"][0]["acyclicity"] == "FAIL",
            "tangent line + conic FAILS acyclicity [" + t["instances"][0]["acyclicity_witness"].get<std::string>() + "]");
    const double s = seconds_since(t0);
    c.check(s < 30, "runtime " + fmt_seconds(s) + " < 30 s");
    return c;
}

Criterion galois_orbit() {
    Criterion c;
    const auto prof = DegreeProfile::make(1, {1, 1, 1});
    int orbits = 0, bad = 0;
    for (const auto& num : admissible_numerators(9, prof)) {
        const auto e = ExponentVector::make(9, num, prof);
        const auto ep = frobenius_step(e, 3);
        if (ep == e) continue;
        const auto a = verify_instance(three_lines(3, 2, num));
        std::vector<long> np(ep.numerators().begin(), ep.numerators().end());
        const auto b = verify_instance(three_lines(3, 2, np));
        ++orbits;
        const bool same = a.measured && b.measured && *a.measured == *b.measured;
        bad += !same || !check_is(a, "galois_orbit", CheckStatus::Pass);
    }
    c.check(orbits > 0 && bad == 0, "q=9, three lines: " + std::to_string(orbits) +
                                        " e with nontrivial orbit, measured polygons of e and e' differ in " +
                                        std::to_string(bad));
    return c;
}

Criterion identities() {
    Criterion c;
    auto F = build_field(7, 1);
    const std::vector<HomogPoly> lines{form(1, 1, {{{1, 0}, 1}}), form(1, 1, {{{0, 1}, 1}}),
                                       form(1, 1, {{{1, 0}, 1}, {{0, 1}, 1}})};
    const auto prof = DegreeProfile::make(1, {1, 1, 1});
    for (int m = 1; m <= 2; ++m) {
        auto ext = extend(F, m);
        const BigInt factor(static_cast<long>(ext->field().order() - 1));
        int n_aff = 0, bad_aff = 0;
        for (const auto& num : admissible_numerators(7, prof)) {
            ++n_aff;
            bad_aff += affine_character_sum_exact(*ext, lines, num) != character_sum_exact(*ext, lines, num) * factor;
        }
        c.check(bad_aff == 0, "m=" + std::to_string(m) + ": affine = (q^m-1) projective on " + std::to_string(n_aff) +
                                  " character vectors");
        int n_red = 0, bad_red = 0;
        for (std::vector<long> num : {std::vector<long>{0, 2, 4}, {0, 1, 5}, {0, 3, 3}, {2, 0, 4}, {0, 0, 0}}) {
            ++n_red;
            bad_red += !trivial_character_reduction_check(*ext, lines, num).holds;
        }
        c.check(bad_red == 0, "m=" + std::to_string(m) + ": trivial-character reduction on " + std::to_string(n_red) +
                                  " character vectors");
    }
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
        {"n=2 closed forms", closed_forms},
        {"functional equation and divisibility", functional_equation},
        {"degree-sum invariance", degree_sum},
        {"Stickelberger valuations", stickelberger},
        {"end-to-end n=1 (three lines, q=7)", end_to_end_n1},
        {"end-to-end n=2 (line + conic, line + cubic, q=7)", end_to_end_n2},
        {"Koszul oracle", koszul_oracle},
        {"Galois-orbit invariance (q=9)", galois_orbit},
        {"affine factor and trivial-character reduction", identities},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto t0 = Clock::now();
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.check(false, std::string("exception: ") + e.what());
        }
        failed += !c.ok;
        std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ("
                  << fmt_seconds(seconds_since(t0)) << ")\n";
        for (const auto& l : c.lines) std::cout << "        " << l << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
