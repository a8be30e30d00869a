#include "cmreg/selftest.hpp"

#include <functional>
#include <string>

#include "cmreg/io.hpp"
#include "cmreg/report.hpp"
#include "cmreg/sweep.hpp"

namespace cmreg {

namespace {

InputSpec quadric_spec() {
    InputSpec spec;
    spec.family.kind = FamilySpec::Kind::CompleteIntersection;
    spec.family.n = 3;
    spec.family.degrees = {2};
    return spec;
}

InputSpec cyclic_spec() {
    InputSpec spec;
    spec.family.kind = FamilySpec::Kind::CyclicPolytope;
    spec.family.n = 4;
    spec.family.d = 2;
    return spec;
}

InputSpec powers_spec() {
    InputSpec spec;
    spec.family.kind = FamilySpec::Kind::Powers;
    spec.family.n = 3;
    spec.family.c = 2;
    spec.family.a = 1;
    return spec;
}

bool all_verdicts_pass(const Report& rep) {
    for (const auto& v : rep.verdicts) {
        if (v.status == Verdict::Status::Fail) return false;
    }
    return true;
}

} // namespace

int run_selftest(std::ostream& out) {
    int failures = 0;
    auto check = [&](const std::string& name, const std::function<bool()>& fn) {
        bool ok = false;
        std::string note;
        try {
            ok = fn();
        } catch (const std::exception& ex) {
            note = std::string(" (") + ex.what() + ")";
        }
        out << (ok ? "PASS" : "FAIL") << " " << name << note << "\n";
        if (!ok) ++failures;
    };

    check("quadric hypersurface fixture", [] {
        const Report rep = analyze(quadric_spec());
        return rep.coeffs && rep.coeffs->e == std::vector<Int>{2, 1} &&
               rep.gotzmann && rep.gotzmann->b == std::vector<Int>{2, 2} &&
               rep.bounds->gotzmann.at(1) == 1 && rep.bounds->upper.at(1) == 7 &&
               rep.oracle && rep.oracle->reg == 1 && all_verdicts_pass(rep);
    });

    check("cyclic polytope fixture", [] {
        const Report rep = analyze(cyclic_spec());
        return rep.coeffs && rep.coeffs->e == std::vector<Int>{6, 8} &&
               rep.gotzmann && rep.gotzmann->s == 13 &&
               rep.bounds->upper.at(1) == 79 &&
               rep.bounds->multiplicity && rep.bounds->multiplicity->is_equality &&
               rep.bounds->extremal_series_match.value_or(false) &&
               rep.bounds->lower_roots == 2 &&
               rep.oracle && rep.oracle->reg == 2 && all_verdicts_pass(rep);
    });

    check("powers fixture", [] {
        const Report rep = analyze(powers_spec());
        return rep.coeffs && rep.coeffs->e == std::vector<Int>{3} &&
               rep.bounds->lower_binomial == 1 &&
               rep.bounds->multiplicity && rep.bounds->multiplicity->is_equality &&
               rep.oracle && rep.oracle->reg == 1 && all_verdicts_pass(rep);
    });

    check("lexification of a (2,2) complete intersection", [] {
        FamilySpec ci;
        ci.kind = FamilySpec::Kind::CompleteIntersection;
        ci.n = 4;
        ci.degrees = {2, 2};
        const MonomialIdeal lex = lexify(ci);
        const HilbertSeries src = series_of(ci);
        for (int t = 0; t <= 8; ++t) {
            if (count_standard_monomials(lex, t) != series_coefficient(src, t)) return false;
        }
        return is_strongly_stable(lex);
    });

    check("report serialization is deterministic", [] {
        const Report rep = analyze(cyclic_spec());
        return canonical_dump(report_to_json(rep)) == canonical_dump(report_to_json(analyze(cyclic_spec())));
    });

    check("random sweep, theorem-backed checks", [] {
        SweepConfig cfg;
        cfg.seed = 7;
        cfg.count = 100;
        const SweepResult res = sweep(cfg);
        return !res.any_failure();
    });

    check("random sweep, strongly stable oracle checks", [] {
        SweepConfig cfg;
        cfg.seed = 11;
        cfg.count = 50;
        cfg.stable_only = true;
        const SweepResult res = sweep(cfg);
        return !res.any_failure() && res.strongly_stable == res.instances && res.sharpness.has_value();
    });

    return failures;
}

} // namespace cmreg
