#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmreg/bounds.hpp"
#include "cmreg/families.hpp"
#include "cmreg/gotzmann.hpp"

namespace cmreg {

struct Options {
    Int ell = 1;
    enum class Depth { True, False, Auto } depth = Depth::Auto;
    int max_lex_degree = -1;           // <0: automatic
    std::vector<int> levels;           // empty: 1..d
};

struct InputSpec {
    std::string version = "1";
    FamilySpec family;
    Options options;
};

struct Verdict {
    enum class Status { Pass, Fail, NoOracle };
    std::string claim;
    Status status = Status::NoOracle;
};

struct HilbertPart {
    ZPoly numerator;
    int n = 0;
    ZPoly q;
    int d = 0;
    int c = 0;
    long long postulation = 0;      // meaningful when d >= 1
    std::vector<Int> h;             // values 0..max(0, postulation+2)
    std::string polynomial;         // printable Hilbert polynomial
};

struct GotzmannPart {
    std::vector<Int> b;
    std::vector<std::pair<int, Int>> c_runs;
    Int s;
    bool verified = false;
};

struct BoundsPart {
    std::vector<Int> xi;                         // xi_0..xi_d (cumulative)
    std::map<int, Int> upper;                    // level -> coefficient bound
    std::map<int, Int> gotzmann;                 // level -> count bound
    Int graded_general;
    std::optional<Int> graded_depth_positive;
    std::vector<CoeffInequality> coeff_inequalities;
    std::optional<long long> lower_roots;        // absent when c = 0
    std::optional<long long> lower_binomial;
    std::optional<MultiplicityCheck> multiplicity;     // needs an oracle
    std::optional<bool> extremal_series_match;         // only on equality
    std::optional<bool> coeff_growth;                  // needs an oracle
    std::optional<QuestionEvidence> question;          // evidence, no verdict
};

struct Report {
    InputSpec input;
    bool dimension_zero = false;
    HilbertPart hilbert;
    std::optional<CoefficientVector> coeffs;      // e_0..e_{d-1}
    std::optional<CoefficientVector> cumulative;  // e_0..e_d
    std::optional<GotzmannPart> gotzmann;
    std::optional<BoundsPart> bounds;
    std::optional<OracleResult> oracle;
    std::optional<bool> depth_positive;           // resolved flag
    std::vector<Verdict> verdicts;

    /// 0 all pass / no oracle; 1 an oracle comparison failed;
    /// 3 a theorem-backed claim failed (implementation bug).
    int exit_code() const;
};

/// The full pipeline: series, reduction, coefficients, decomposition,
/// every bound, oracle comparison, verdicts.
Report analyze(const InputSpec& spec);

} // namespace cmreg
