// Acceptance suite: one pass/fail line per criterion, exact equality
// throughout, wall-clock budget enforced per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "cmreg/io.hpp"
#include "cmreg/report.hpp"
#include "cmreg/selftest.hpp"
#include "cmreg/sweep.hpp"

using namespace cmreg;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, double budget_seconds,
               const std::function<bool(std::string&)>& fn) {
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = fn(note);
    } catch (const std::exception& ex) {
        note = std::string("exception: ") + ex.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= budget_seconds) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << " (" << static_cast<long long>(elapsed * 1000) << " ms, budget "
              << static_cast<long long>(budget_seconds * 1000) << " ms)\n";
    if (!ok) ++failures;
}

InputSpec make_spec(FamilySpec fam) {
    InputSpec spec;
    spec.family = std::move(fam);
    return spec;
}

FamilySpec ci(int n, std::vector<int> degrees) {
    FamilySpec f;
    f.kind = FamilySpec::Kind::CompleteIntersection;
    f.n = n;
    f.degrees = std::move(degrees);
    return f;
}

bool all_verdicts_pass(const Report& rep) {
    for (const auto& v : rep.verdicts) {
        if (v.status == Verdict::Status::Fail) return false;
    }
    return !rep.verdicts.empty();
}

bool expect(bool cond, const char* what, std::string& note) {
    if (!cond && note.empty()) note = what;
    return cond;
}

} // namespace

int main() {
    criterion(1, "quadric hypersurface fixture (complete intersection, n=3, degree 2)", 1.0,
              [](std::string& note) {
        const Report rep = analyze(make_spec(ci(3, {2})));
        bool ok = expect(rep.coeffs && rep.coeffs->e == std::vector<Int>{2, 1}, "e != (2,1)", note);
        ok = expect(rep.gotzmann && rep.gotzmann->b == std::vector<Int>{2, 2}, "B != (2,2)", note) && ok;
        const GotzmannData g = c_sequence(rep.gotzmann->b, 2);
        ok = expect(g.expanded_c() == std::vector<int>{1, 1}, "c-sequence != (1,1)", note) && ok;
        ok = expect(rep.bounds->gotzmann.at(1) == 1, "count bound at level 1 != 1", note) && ok;
        ok = expect(rep.bounds->upper.at(1) == 7, "coefficient bound != 7", note) && ok;
        ok = expect(rep.oracle && rep.oracle->reg == 1, "oracle reg != 1 (= 1*2 - 1)", note) && ok;
        ok = expect(all_verdicts_pass(rep), "some verdict failed", note) && ok;
        return ok;
    });

    criterion(2, "cyclic polytope fixture (n=4, d=2)", 1.0, [](std::string& note) {
        FamilySpec f;
        f.kind = FamilySpec::Kind::CyclicPolytope;
        f.n = 4;
        f.d = 2;
        const Report rep = analyze(make_spec(f));
        bool ok = expect(rep.coeffs->e == std::vector<Int>{6, 8}, "e != (6,8)", note);
        ok = expect(rep.gotzmann->s == 13, "s != 13", note) && ok;
        ok = expect(rep.bounds->upper.at(1) == 79, "coefficient bound != 79", note) && ok;
        ok = expect(rep.oracle && rep.oracle->reg == 2 && Int(rep.oracle->reg) <= rep.bounds->upper.at(1),
                    "oracle reg != 2 or not below the bound", note) && ok;
        ok = expect(rep.bounds->multiplicity && rep.bounds->multiplicity->is_equality,
                    "multiplicity equality not detected", note) && ok;
        const ReducedSeries rs = reduce(HilbertSeries{rep.hilbert.numerator, rep.hilbert.n});
        ok = expect(rs == extremal_cm_series(1, 2, 2, 2) && rs.q == ZPoly{1, 2, 3},
                    "reduced series != (1+2z+3z^2)/(1-z)^2", note) && ok;
        ok = expect(rep.bounds->lower_roots == 2, "root lower bound != 2", note) && ok;
        ok = expect(all_verdicts_pass(rep), "some verdict failed", note) && ok;
        return ok;
    });

    criterion(3, "powers fixture (n=3, c=2, a=1)", 1.0, [](std::string& note) {
        FamilySpec f;
        f.kind = FamilySpec::Kind::Powers;
        f.n = 3;
        f.c = 2;
        f.a = 1;
        const Report rep = analyze(make_spec(f));
        bool ok = expect(rep.bounds->lower_binomial == 1, "binomial lower bound != 1", note);
        ok = expect(rep.oracle && rep.oracle->reg == 1 &&
                    rep.oracle->method == OracleResult::Method::EliahouKervaire,
                    "oracle reg != 1 via the stable-ideal route", note) && ok;
        ok = expect(rep.bounds->multiplicity && rep.bounds->multiplicity->is_equality,
                    "multiplicity equality not detected", note) && ok;
        ok = expect(all_verdicts_pass(rep), "some verdict failed", note) && ok;
        return ok;
    });

    criterion(4, "lexification of the (2,2) complete intersection in 4 variables", 5.0,
              [](std::string& note) {
        const FamilySpec src = ci(4, {2, 2});
        const int M = 7;
        const MonomialIdeal lex = lexify(src, M);
        const HilbertSeries series = series_of(src);
        bool ok = true;
        for (int t = 0; t <= M + 1; ++t) {
            ok = ok && count_standard_monomials(lex, t) == series_coefficient(series, t);
        }
        ok = expect(ok, "Hilbert functions differ", note);
        std::vector<Monomial> deg2, deg3;
        for (const auto& g : lex.gens) {
            if (g.degree() == 2) deg2.push_back(g);
            if (g.degree() == 3) deg3.push_back(g);
        }
        ok = expect(deg2 == std::vector<Monomial>{Monomial{{2, 0, 0, 0}}, Monomial{{1, 1, 0, 0}}},
                    "degree-2 generators differ", note) && ok;
        ok = expect(deg3 == std::vector<Monomial>{Monomial{{1, 0, 2, 0}}},
                    "degree-3 generators differ", note) && ok;
        ok = expect(is_strongly_stable(lex), "output not strongly stable", note) && ok;
        const CoefficientVector e = hilbert_coefficients(reduce(series));
        const GotzmannData g = c_sequence(b_sequence(e), 2);
        const OracleResult ora = stable_regularity(lex);
        ok = expect(gotzmann_reg_bound(g, 1) == 5, "count bound at level 1 != 5", note) && ok;
        ok = expect(reg_upper_bound(e, 1) == 23, "coefficient bound != 23", note) && ok;
        ok = expect(Int(ora.reg1) <= 5 && Int(5) <= 23, "bound chain violated", note) && ok;
        return ok;
    });

    criterion(5, "series engine property suite (100 seeded random ideals)", 30.0,
              [](std::string& note) {
        SplitMix64 rng(20240531);
        for (int i = 0; i < 100; ++i) {
            const int n = 2 + static_cast<int>(rng.below(3));
            long long discarded = 0;
            const MonomialIdeal I = random_monomial_ideal(rng, n, 5, 6, false, &discarded);
            const ZPoly num = numerator(I);
            for (int t = 0; t <= 8; ++t) {
                if (series_coefficient(num, n, t) != count_standard_monomials(I, t)) {
                    note = "series coefficient disagrees with the brute-force count";
                    return false;
                }
            }
            if (numerator(I, PivotRule::FirstVariable) != num) {
                note = "pivot strategies disagree";
                return false;
            }
        }
        return true;
    });

    criterion(6, "binomial decomposition property suite (fixtures + sweep)", 30.0,
              [](std::string& note) {
        // fixtures
        for (const auto& spec : {ci(3, {2}), ci(4, {2, 2}), ci(2, {3}), ci(4, {3, 2})}) {
            const ReducedSeries rs = reduce(series_of(spec));
            const CoefficientVector e = hilbert_coefficients(rs);
            const GotzmannData g = c_sequence(b_sequence(e), rs.d);
            if (!verify_decomposition(g, hilbert_polynomial(rs))) {
                note = "fixture round trip failed";
                return false;
            }
        }
        SweepConfig cfg;
        cfg.seed = 1234;
        cfg.count = 250;
        const SweepResult res = sweep(cfg);
        bool ok = expect(res.checks.at("gotzmann.round_trip").failures == 0 &&
                         res.checks.at("gotzmann.round_trip").checked == 250,
                         "round-trip failures in the sweep", note);
        ok = expect(res.checks.at("gotzmann.count_bound").failures == 0,
                    "count-bound (key lemma) failures in the sweep", note) && ok;
        return ok;
    });

    criterion(7, "theorem-backed inequality suite (>= 500 instances)", 120.0,
              [](std::string& note) {
        SweepConfig cfg;
        cfg.seed = 2024;
        cfg.count = 500;
        const SweepResult res = sweep(cfg);
        bool ok = expect(res.instances == 500, "instance count != 500", note);
        ok = expect(res.checks.at("bounds.coeff_inequality").failures == 0,
                    "strict coefficient inequality failed somewhere", note) && ok;
        ok = expect(res.checks.at("bounds.ordering").failures == 0,
                    "bound ordering failed somewhere", note) && ok;
        return ok;
    });

    criterion(8, "sharpness statistic and open-question evidence are reported", 60.0,
              [](std::string& note) {
        SweepConfig cfg;
        cfg.seed = 99;
        cfg.count = 150;
        cfg.stable_only = true;
        const SweepResult res = sweep(cfg);
        bool ok = expect(res.sharpness.has_value(), "sharpness ratio missing", note);
        if (ok) {
            const auto doc = sweep_to_json(res);
            ok = expect(doc.contains("sharpness") && doc["sharpness"].is_string(),
                        "sharpness not serialized", note) && ok;
            ok = expect(doc["question"]["checked"] == res.question_checked &&
                        res.question_checked == res.instances,
                        "question evidence counts missing", note) && ok;
            std::cout << "  sharpness max (reg1+2)/(upper+2) = " << doc["sharpness"].get<std::string>()
                      << "; question evidence: reg " << res.question_reg_holds << "/"
                      << res.question_checked << ", coefficients " << res.question_coeffs_hold
                      << "/" << res.question_checked << " (reported, no threshold)\n";
        }
        return ok;
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
