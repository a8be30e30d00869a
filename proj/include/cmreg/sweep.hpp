#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmreg/monomials.hpp"

namespace cmreg {

/// Fixed generator algorithm identifier, echoed into every sweep report.
inline constexpr const char* kGeneratorId = "splitmix64/v1";

/// splitmix64: state += 0x9E3779B97F4A7C15; z = state;
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
/// Bounded draws use modulo rejection, so batches are reproducible from the
/// seed alone on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound); // uniform in [0, bound)

private:
    std::uint64_t state_;
};

struct SweepConfig {
    std::uint64_t seed = 0;
    long long count = 100;
    int n_min = 2;
    int n_max = 4;
    int max_degree = 5;
    int max_gens = 6;
    bool stable_only = false;
};

/// One random monomial ideal of positive dimension. Generators are drawn
/// uniformly from the pool of monomials of degree 1..max_degree (ordered by
/// degree, then descending lex); dimension-0 draws are discarded and counted.
/// With borelize, the generator set is closed under exchange moves first.
MonomialIdeal random_monomial_ideal(SplitMix64& rng, int n, int max_degree, int max_gens,
                                    bool borelize = false, long long* discarded = nullptr);

struct CheckStat {
    long long checked = 0;
    long long failures = 0;
};

struct SweepFailure {
    long long index = 0;
    int n = 0;
    std::vector<std::vector<int>> generators;
    std::vector<std::string> claims;
};

struct SweepResult {
    SweepConfig config;
    long long instances = 0;
    long long discarded_dim_zero = 0;
    long long strongly_stable = 0;
    long long saturated = 0;
    std::map<std::string, CheckStat> checks;
    std::optional<Rat> sharpness;      // max (reg1+2)/(upper bound at level 1 + 2)
    long long question_checked = 0;
    long long question_reg_holds = 0;
    long long question_coeffs_hold = 0;
    std::vector<SweepFailure> failures;

    bool theorem_failure() const;      // admissibility/key-lemma/ordering/inequality
    bool any_failure() const;
    int exit_code() const;
};

SweepResult sweep(const SweepConfig& config);

} // namespace cmreg
