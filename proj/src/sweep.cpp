#include "cmreg/sweep.hpp"

#include <algorithm>

#include "cmreg/bounds.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/families.hpp"
#include "cmreg/gotzmann.hpp"

namespace cmreg {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound < 2) return 0;
    const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

namespace {

std::vector<Monomial> monomial_pool(int n, int max_degree) {
    std::vector<Monomial> pool;
    for (int t = 1; t <= max_degree; ++t) {
        for (auto& m : monomials_of_degree(n, t)) pool.push_back(std::move(m));
    }
    return pool;
}

} // namespace

MonomialIdeal random_monomial_ideal(SplitMix64& rng, int n, int max_degree, int max_gens,
                                    bool borelize, long long* discarded) {
    const auto pool = monomial_pool(n, max_degree);
    for (;;) {
        const auto count = 1 + rng.below(static_cast<std::uint64_t>(max_gens));
        std::vector<Monomial> gens;
        gens.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
            gens.push_back(pool[rng.below(pool.size())]);
        }
        MonomialIdeal ideal = minimalize(n, std::move(gens));
        if (borelize) ideal = borel_closure(ideal);
        if (dimension(ideal) >= 1) return ideal;
        if (discarded) ++*discarded;
    }
}

bool SweepResult::theorem_failure() const {
    for (const char* key : {"gotzmann.round_trip", "gotzmann.count_bound",
                            "bounds.ordering", "bounds.coeff_inequality"}) {
        auto it = checks.find(key);
        if (it != checks.end() && it->second.failures > 0) return true;
    }
    return false;
}

bool SweepResult::any_failure() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const auto& kv) { return kv.second.failures > 0; });
}

int SweepResult::exit_code() const {
    if (theorem_failure()) return 3;
    return any_failure() ? 1 : 0;
}

SweepResult sweep(const SweepConfig& config) {
    if (config.count < 0 || config.n_min < 1 || config.n_max < config.n_min ||
        config.max_degree < 1 || config.max_gens < 1) {
        throw invalid_spec("sweep: bad configuration");
    }
    SweepResult res;
    res.config = config;
    SplitMix64 rng(config.seed);

    for (long long idx = 0; idx < config.count; ++idx) {
        const int n = config.n_min + static_cast<int>(rng.below(
            static_cast<std::uint64_t>(config.n_max - config.n_min + 1)));
        const MonomialIdeal ideal = random_monomial_ideal(
            rng, n, config.max_degree, config.max_gens, config.stable_only,
            &res.discarded_dim_zero);
        ++res.instances;

        std::vector<std::string> failed;
        auto record = [&](const std::string& claim, bool ok) {
            auto& stat = res.checks[claim];
            ++stat.checked;
            if (!ok) {
                ++stat.failures;
                failed.push_back(claim);
            }
        };

        const ReducedSeries rs = reduce(hilbert_series(ideal));
        const int d = rs.d;
        const int c = n - d;
        const RatPoly poly = hilbert_polynomial(rs);
        const CoefficientVector e = hilbert_coefficients(rs);
        const CoefficientVector eS = cumulative_coefficients(rs);
        const CoefficientVector up{eS.e, d + 1, eS.ell};

        // Admissibility round trip on both coefficient vectors.
        std::vector<Int> b;
        std::vector<Int> b_up;
        bool round_trip = true;
        try {
            b = b_sequence(e);
            round_trip = verify_decomposition(c_sequence(b, d), poly);
            b_up = b_sequence(up);
            round_trip = round_trip &&
                verify_decomposition(c_sequence(b_up, d + 1),
                                     hilbert_polynomial(ReducedSeries{rs.q, d + 1}));
        } catch (const not_admissible&) {
            round_trip = false;
        }
        record("gotzmann.round_trip", round_trip);
        if (!round_trip) {
            res.failures.push_back(SweepFailure{idx, n, {}, failed});
            for (const auto& g : ideal.gens) res.failures.back().generators.push_back(g.exps);
            continue;
        }

        bool key = true;
        for (size_t j = 0; j < b.size(); ++j) {
            key = key && b[j] <= pow_pow2(max_abs_coeff(e, static_cast<int>(j)) + 1,
                                          static_cast<unsigned>(j)) - 1;
        }
        for (size_t j = 0; j < b_up.size(); ++j) {
            key = key && b_up[j] <= pow_pow2(max_abs_coeff(up, static_cast<int>(j)) + 1,
                                             static_cast<unsigned>(j)) - 1;
        }
        record("gotzmann.count_bound", key);

        const GotzmannData g = c_sequence(b, d);
        bool ordering = true;
        for (int p = 1; p <= d; ++p) {
            ordering = ordering && reg_upper_bound(e, p) >= gotzmann_reg_bound(g, p);
        }
        record("bounds.ordering", ordering);

        bool inequality = true;
        for (int i = 1; i <= d; ++i) {
            inequality = inequality && coefficient_inequality(eS, i).holds;
        }
        record("bounds.coeff_inequality", inequality);

        const bool saturated = is_saturated(ideal);
        if (saturated) ++res.saturated;

        if (is_strongly_stable(ideal)) {
            ++res.strongly_stable;
            const OracleResult ora = stable_regularity(ideal);
            const Int upper1 = reg_upper_bound(e, 1);
            record("oracle.reg1_vs_gotzmann", Int(ora.reg1) <= gotzmann_reg_bound(g, 1));
            record("oracle.reg1_vs_upper", Int(ora.reg1) <= upper1);
            const GradedRegBounds graded = graded_reg_bounds(eS, saturated);
            record("oracle.reg_vs_graded", Int(ora.reg) <= graded.general);
            if (graded.depth_positive) {
                record("oracle.reg_vs_graded_depth", Int(ora.reg) <= *graded.depth_positive);
            }
            const MultiplicityCheck mc = multiplicity_upper_check(e.e[0], e.ell, c, ora.reg);
            record("oracle.multiplicity_upper", mc.holds);
            if (mc.is_equality) {
                record("oracle.extremal_series", rs == extremal_cm_series(e.ell, c, d, ora.reg));
            }
            if (c >= 1) {
                record("oracle.lower_roots", reg_lower_bound(e, e.ell, c) <= ora.reg);
                record("oracle.lower_binomial", multiplicity_reg_lower(e.e[0], e.ell, c) <= ora.reg);
            }
            record("oracle.coeff_growth",
                   coefficient_growth_check(e, e.ell * binomial(Int(ora.reg) + c, c), ora.reg));

            const QuestionEvidence ev = question_evidence(eS, stable_depth(ideal), ora.reg);
            ++res.question_checked;
            if (ev.reg_holds) ++res.question_reg_holds;
            if (ev.coeffs_hold) ++res.question_coeffs_hold;

            const Rat ratio(Int(ora.reg1) + 2, upper1 + 2);
            if (!res.sharpness || ratio > *res.sharpness) res.sharpness = ratio;
        }

        if (!failed.empty()) {
            res.failures.push_back(SweepFailure{idx, n, {}, failed});
            for (const auto& gen : ideal.gens) res.failures.back().generators.push_back(gen.exps);
        }
    }
    return res;
}

} // namespace cmreg
