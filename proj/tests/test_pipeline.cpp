#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmreg/errors.hpp"
#include "cmreg/io.hpp"
#include "cmreg/report.hpp"
#include "cmreg/selftest.hpp"
#include "cmreg/sweep.hpp"

#include <sstream>

using namespace cmreg;
using nlohmann::json;

namespace {

InputSpec spec_from_text(const std::string& text) { return parse_input_text(text); }

const char* kQuadric = R"({
  "version": "1",
  "ring": {"vars": 3},
  "ideal": {"kind": "completeIntersection", "degrees": [2]}
})";

const char* kCyclic = R"({
  "version": "1",
  "ring": {"vars": 4},
  "ideal": {"kind": "cyclicPolytope", "d": 2}
})";

const char* kPowers = R"({
  "version": "1",
  "ring": {"vars": 3},
  "ideal": {"kind": "powers", "c": 2, "a": 1}
})";

bool verdict_is(const Report& rep, const std::string& claim, Verdict::Status status) {
    for (const auto& v : rep.verdicts) {
        if (v.claim == claim) return v.status == status;
    }
    return false;
}

bool all_pass(const Report& rep) {
    for (const auto& v : rep.verdicts) {
        if (v.status == Verdict::Status::Fail) return false;
    }
    return true;
}

} // namespace

TEST_CASE("analyze the quadric hypersurface fixture") {
    const Report rep = analyze(spec_from_text(kQuadric));
    REQUIRE(rep.coeffs);
    CHECK(rep.coeffs->e == std::vector<Int>{2, 1});
    CHECK(rep.cumulative->e == std::vector<Int>{2, 1, 0});
    CHECK(rep.gotzmann->b == std::vector<Int>{2, 2});
    CHECK(rep.gotzmann->verified);
    CHECK(rep.bounds->gotzmann.at(1) == 1);
    CHECK(rep.bounds->upper.at(1) == 7);
    CHECK(rep.bounds->graded_general == 79);
    CHECK(rep.bounds->graded_depth_positive == Int(7));
    CHECK(rep.oracle->reg == 1);
    CHECK(rep.oracle->reg1 == 1);
    CHECK(rep.bounds->multiplicity->is_equality);
    CHECK(rep.bounds->extremal_series_match == true);
    CHECK(rep.bounds->lower_roots == 1);
    CHECK(rep.bounds->lower_binomial == 1);
    CHECK(all_pass(rep));
    CHECK(rep.exit_code() == 0);
}

TEST_CASE("analyze the cyclic polytope fixture") {
    const Report rep = analyze(spec_from_text(kCyclic));
    CHECK(rep.coeffs->e == std::vector<Int>{6, 8});
    CHECK(rep.gotzmann->b == std::vector<Int>{6, 13});
    CHECK(rep.gotzmann->s == 13);
    CHECK(rep.bounds->upper.at(1) == 79);
    CHECK(rep.bounds->gotzmann.at(1) == 12);
    CHECK(rep.oracle->reg == 2);
    CHECK(rep.bounds->multiplicity->is_equality);
    CHECK(rep.bounds->extremal_series_match == true);
    CHECK(rep.hilbert.q == ZPoly{1, 2, 3});
    CHECK(rep.bounds->lower_roots == 2);
    CHECK(all_pass(rep));
}

TEST_CASE("analyze the powers fixture") {
    const Report rep = analyze(spec_from_text(kPowers));
    CHECK(rep.coeffs->e == std::vector<Int>{3});
    CHECK(rep.bounds->lower_binomial == 1);
    CHECK(rep.oracle->reg == 1);
    CHECK(rep.oracle->method == OracleResult::Method::EliahouKervaire);
    CHECK(rep.bounds->multiplicity->is_equality);
    CHECK(rep.bounds->extremal_series_match == true);
    CHECK(all_pass(rep));
}

TEST_CASE("explicit ideals, dimension zero, and verdict gating") {
    const Report artinian = analyze(spec_from_text(R"({
      "ring": {"vars": 2},
      "ideal": {"kind": "explicit", "generators": [[1,0],[0,1]]}
    })"));
    CHECK(artinian.dimension_zero);
    CHECK(artinian.verdicts.empty());
    CHECK(artinian.exit_code() == 0);

    const Report stable = analyze(spec_from_text(R"({
      "ring": {"vars": 2},
      "ideal": {"kind": "explicit", "generators": [[2,0],[1,1]]}
    })"));
    CHECK(stable.oracle);
    CHECK(stable.oracle->reg == 1);
    CHECK(stable.oracle->reg1 == 0);
    CHECK(all_pass(stable));

    const Report opaque = analyze(spec_from_text(R"({
      "ring": {"vars": 4},
      "ideal": {"kind": "explicit", "generators": [[1,1,1,0],[1,1,0,1],[1,0,1,1],[0,1,1,1]]}
    })"));
    CHECK_FALSE(opaque.oracle.has_value());
    CHECK(verdict_is(opaque, "oracle.multiplicity_upper", Verdict::Status::NoOracle));
    CHECK(opaque.exit_code() == 0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(spec_from_text("not json"), invalid_spec);
    CHECK_THROWS_AS(spec_from_text(R"({"ring": {"vars": 3}})"), invalid_spec);
    CHECK_THROWS_AS(spec_from_text(R"({"ring": {"vars": 0}, "ideal": {"kind": "powers", "c": 1, "a": 1}})"), invalid_spec);
    CHECK_THROWS_AS(spec_from_text(R"({"ring": {"vars": 2}, "ideal": {"kind": "nope"}})"), invalid_spec);
    CHECK_THROWS_AS(spec_from_text(R"({"ring": {"vars": 2}, "ideal": {"kind": "explicit", "generators": [[1]]}})"), invalid_spec);
    CHECK_THROWS_AS(spec_from_text(R"({"ring": {"vars": 2}, "ideal": {"kind": "explicit", "generators": [[0,0]]}})"), invalid_spec);
    CHECK_THROWS_AS(spec_from_text(R"({"version": "2", "ring": {"vars": 2}, "ideal": {"kind": "explicit", "generators": []}})"), invalid_spec);
    // levels outside 1..d surface as invalid_spec from analyze
    InputSpec spec = spec_from_text(kQuadric);
    spec.options.levels = {5};
    CHECK_THROWS_AS(analyze(spec), invalid_spec);
}

TEST_CASE("reports serialize canonically and deterministically") {
    const Report rep = analyze(spec_from_text(kCyclic));
    const std::string once = canonical_dump(report_to_json(rep));
    const std::string twice = canonical_dump(report_to_json(analyze(spec_from_text(kCyclic))));
    CHECK(once == twice);

    const json doc = report_to_json(rep);
    CHECK(doc["bounds"]["upper"]["1"] == "79");
    CHECK(doc["bounds"]["gotzmann"]["1"] == "12");
    CHECK(doc["coefficients"]["e"] == json::array({"6", "8"}));
    CHECK(doc["gotzmann"]["s"] == "13");
    CHECK(doc["gotzmann"]["c"].size() == 13);
    CHECK(doc["oracle"]["reg"] == "2");
    CHECK(doc["hilbert"]["polynomial"] == "-2 + 6*t");
    // integers appear as decimal strings
    CHECK(doc["bounds"]["gradedGeneral"].is_string());

    // parse -> echo -> parse is stable
    const InputSpec round = parse_input(input_to_json(rep.input));
    CHECK(canonical_dump(input_to_json(round)) == canonical_dump(input_to_json(rep.input)));
}

TEST_CASE("random ideal generation is deterministic with a golden first draw") {
    SplitMix64 a(42), b(42);
    long long discarded_a = 0, discarded_b = 0;
    const MonomialIdeal ia = random_monomial_ideal(a, 3, 3, 3, false, &discarded_a);
    const MonomialIdeal ib = random_monomial_ideal(b, 3, 3, 3, false, &discarded_b);
    CHECK(ia == ib);
    CHECK(discarded_a == discarded_b);
    CHECK(dimension(ia) >= 1);

    // golden: pinned on first implementation; guards the documented generator
    std::vector<std::vector<int>> exps;
    for (const auto& g : ia.gens) exps.push_back(g.exps);
    CHECK(exps == std::vector<std::vector<int>>{{1, 1, 0}, {0, 3, 0}});
}

TEST_CASE("sweep runs clean and reports the sharpness statistic") {
    SweepConfig cfg;
    cfg.seed = 7;
    cfg.count = 120;
    const SweepResult res = sweep(cfg);
    CHECK(res.instances == 120);
    CHECK_FALSE(res.any_failure());
    CHECK(res.exit_code() == 0);
    CHECK(res.checks.at("gotzmann.round_trip").checked == 120);
    CHECK(res.checks.at("gotzmann.round_trip").failures == 0);
    CHECK(res.checks.at("bounds.coeff_inequality").failures == 0);
    CHECK(res.checks.at("bounds.ordering").failures == 0);
    CHECK(res.checks.at("gotzmann.count_bound").failures == 0);

    // identical seed, identical aggregates
    const SweepResult again = sweep(cfg);
    CHECK(canonical_dump(sweep_to_json(res)) == canonical_dump(sweep_to_json(again)));
}

TEST_CASE("empty sweep batch") {
    SweepConfig cfg;
    cfg.seed = 1;
    cfg.count = 0;
    const SweepResult res = sweep(cfg);
    CHECK(res.instances == 0);
    CHECK(res.checks.empty());
    CHECK_FALSE(res.sharpness);
    CHECK(res.exit_code() == 0);
}

TEST_CASE("stable-only sweep oracles every instance") {
    SweepConfig cfg;
    cfg.seed = 3;
    cfg.count = 40;
    cfg.stable_only = true;
    const SweepResult res = sweep(cfg);
    CHECK(res.instances == 40);
    CHECK(res.strongly_stable == 40);
    CHECK(res.question_checked == 40);
    CHECK_FALSE(res.any_failure());
    REQUIRE(res.sharpness);
    CHECK(*res.sharpness > 0);
    CHECK(*res.sharpness <= 1);
}

TEST_CASE("selftest passes") {
    std::ostringstream sink;
    CHECK(run_selftest(sink) == 0);
}
