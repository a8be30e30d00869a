#include "cmreg/report.hpp"

#include <algorithm>

#include "cmreg/errors.hpp"

namespace cmreg {

namespace {

const char* const kTheoremClaims[] = {
    "gotzmann.round_trip",
    "gotzmann.count_bound",
    "bounds.ordering",
    "bounds.coeff_inequality",
};

bool is_theorem_claim(const std::string& claim) {
    for (const char* c : kTheoremClaims) {
        if (claim == c) return true;
    }
    return false;
}

/// Key-lemma check for one coefficient vector: B_j <= (xi_j + 1)^(2^j) - 1.
bool count_bound_holds(const CoefficientVector& e, const std::vector<Int>& b) {
    for (size_t j = 0; j < b.size(); ++j) {
        if (b[j] > pow_pow2(max_abs_coeff(e, static_cast<int>(j)) + 1, static_cast<unsigned>(j)) - 1) {
            return false;
        }
    }
    return true;
}

} // namespace

int Report::exit_code() const {
    int code = 0;
    for (const auto& v : verdicts) {
        if (v.status != Verdict::Status::Fail) continue;
        if (is_theorem_claim(v.claim)) return 3;
        code = 1;
    }
    return code;
}

Report analyze(const InputSpec& spec) {
    Report rep;
    rep.input = spec;

    const FamilyInstance inst = realize(spec.family, spec.options.max_lex_degree);
    const int n = spec.family.n;
    const ReducedSeries rs = reduce(inst.series);
    const int d = rs.d;

    rep.hilbert.numerator = inst.series.numerator;
    rep.hilbert.n = n;
    rep.hilbert.q = rs.q;
    rep.hilbert.d = d;
    rep.hilbert.c = n - d;
    rep.oracle = inst.oracle;

    if (d == 0) {
        rep.dimension_zero = true;
        rep.hilbert.postulation = rs.q.degree(); // h vanishes beyond this
        for (long long t = 0; t <= std::max<long long>(rep.hilbert.postulation + 2, 0); ++t) {
            rep.hilbert.h.push_back(series_coefficient(rs, t));
        }
        rep.hilbert.polynomial = "0";
        return rep;
    }

    const RatPoly poly = hilbert_polynomial(rs);
    rep.hilbert.postulation = postulation_number(rs);
    rep.hilbert.polynomial = poly.str();
    for (long long t = 0; t <= std::max<long long>(rep.hilbert.postulation + 2, 0); ++t) {
        rep.hilbert.h.push_back(series_coefficient(rs, t));
    }

    CoefficientVector e = hilbert_coefficients(rs);
    CoefficientVector eS = cumulative_coefficients(rs);
    e.ell = eS.ell = spec.options.ell;
    rep.coeffs = e;
    rep.cumulative = eS;

    // Resolve the depth flag.
    switch (spec.options.depth) {
        case Options::Depth::True: rep.depth_positive = true; break;
        case Options::Depth::False: rep.depth_positive = false; break;
        case Options::Depth::Auto: rep.depth_positive = inst.depth_positive; break;
    }

    auto push = [&rep](std::string claim, bool ok) {
        rep.verdicts.push_back({std::move(claim), ok ? Verdict::Status::Pass : Verdict::Status::Fail});
    };
    auto push_no_oracle = [&rep](std::string claim) {
        rep.verdicts.push_back({std::move(claim), Verdict::Status::NoOracle});
    };

    // Binomial decomposition and its round trip.
    GotzmannPart gp;
    gp.b = b_sequence(e);
    const GotzmannData g = c_sequence(gp.b, d);
    gp.c_runs = g.c_runs;
    gp.s = g.s;
    gp.verified = verify_decomposition(g, poly);
    rep.gotzmann = gp;
    push("gotzmann.round_trip", gp.verified);

    // Key lemma on both coefficient vectors (the cumulative one is the
    // coefficient vector of the polynomial-extension quotient).
    const CoefficientVector up{eS.e, d + 1, eS.ell};
    bool key = count_bound_holds(e, gp.b);
    key = key && count_bound_holds(up, b_sequence(up));
    push("gotzmann.count_bound", key);

    BoundsPart bp;
    for (int i = 0; i <= d; ++i) bp.xi.push_back(max_abs_coeff(eS, i));

    std::vector<int> levels = spec.options.levels;
    if (levels.empty()) {
        for (int p = 1; p <= d; ++p) levels.push_back(p);
    }
    for (int p : levels) {
        if (p < 1 || p > d) throw invalid_spec("analyze: level outside 1..d");
        bp.upper[p] = reg_upper_bound(e, p);
        bp.gotzmann[p] = gotzmann_reg_bound(g, p);
    }
    bool ordering = true;
    for (int p = 1; p <= d; ++p) {
        if (reg_upper_bound(e, p) < gotzmann_reg_bound(g, p)) ordering = false;
    }
    push("bounds.ordering", ordering);

    const GradedRegBounds graded = graded_reg_bounds(eS, rep.depth_positive.value_or(false));
    bp.graded_general = graded.general;
    bp.graded_depth_positive = graded.depth_positive;

    bool coeff_ok = true;
    for (int i = 1; i <= d; ++i) {
        bp.coeff_inequalities.push_back(coefficient_inequality(eS, i));
        coeff_ok = coeff_ok && bp.coeff_inequalities.back().holds;
    }
    push("bounds.coeff_inequality", coeff_ok);

    const int c = n - d;
    if (c >= 1) {
        bp.lower_roots = reg_lower_bound(e, spec.options.ell, c);
        bp.lower_binomial = multiplicity_reg_lower(e.e[0], spec.options.ell, c);
    }

    if (inst.oracle) {
        const OracleResult& ora = *inst.oracle;
        push("oracle.reg1_vs_gotzmann", Int(ora.reg1) <= gotzmann_reg_bound(g, 1));
        push("oracle.reg1_vs_upper", Int(ora.reg1) <= reg_upper_bound(e, 1));
        push("oracle.reg_vs_graded", Int(ora.reg) <= graded.general);
        if (graded.depth_positive) {
            push("oracle.reg_vs_graded_depth", Int(ora.reg) <= *graded.depth_positive);
        }
        bp.multiplicity = multiplicity_upper_check(e.e[0], spec.options.ell, c, ora.reg);
        push("oracle.multiplicity_upper", bp.multiplicity->holds);
        if (bp.multiplicity->is_equality) {
            bp.extremal_series_match = rs == extremal_cm_series(spec.options.ell, c, d, ora.reg);
            push("oracle.extremal_series", *bp.extremal_series_match);
        }
        if (c >= 1) {
            push("oracle.lower_roots", *bp.lower_roots <= ora.reg);
            push("oracle.lower_binomial", *bp.lower_binomial <= ora.reg);
        }
        bp.coeff_growth = coefficient_growth_check(
            e, std::max(Int(1), spec.options.ell * binomial(Int(ora.reg) + c, c)), ora.reg);
        push("oracle.coeff_growth", *bp.coeff_growth);

        const int t = inst.depth ? *inst.depth : (rep.depth_positive.value_or(false) ? 1 : 0);
        bp.question = question_evidence(eS, std::min(t, d), ora.reg);
    } else {
        for (const char* claim : {"oracle.reg1_vs_gotzmann", "oracle.reg1_vs_upper",
                                  "oracle.reg_vs_graded", "oracle.multiplicity_upper",
                                  "oracle.lower_roots", "oracle.lower_binomial",
                                  "oracle.coeff_growth"}) {
            push_no_oracle(claim);
        }
    }

    rep.bounds = std::move(bp);
    return rep;
}

} // namespace cmreg
