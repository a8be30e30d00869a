#pragma once

#include <utility>
#include <vector>

#include "cmreg/polyseries.hpp"

namespace cmreg {

/// The unique binomial decomposition data of an admissible Hilbert polynomial:
/// p(t) = sum_{i=1}^{s} C(c_i + t - i + 1, c_i) with c_1 >= ... >= c_s >= 0,
/// together with the counts B_j = #{i : c_i >= (d-1) - j}.
///
/// The c-sequence is stored run-length encoded (value, multiplicity): s can be
/// astronomically large while only d distinct values ever occur.
struct GotzmannData {
    int d = 0;
    std::vector<Int> b;                        // B_0..B_{d-1}
    std::vector<std::pair<int, Int>> c_runs;   // (value, count), values strictly decreasing
    Int s;                                     // = B_{d-1}

    /// Materialized c-list for desk-scale display and tests.
    std::vector<int> expanded_c(const Int& cap = Int(100000)) const;
};

/// B_0..B_{d-1} from the Hilbert coefficients via the alternating recursion
/// B_j = (-1)^j e_j + C(B_{j-1}+1, 2) - C(B_{j-2}+1, 3) + ...
/// Throws not_admissible unless e_0 >= 1 and the counts come out
/// positive and nondecreasing.
std::vector<Int> b_sequence(const CoefficientVector& e);

/// Recover the c-sequence multiset from the counts: B_0 copies of d-1 and
/// B_j - B_{j-1} copies of (d-1)-j.
GotzmannData c_sequence(const std::vector<Int>& b, int d);

/// Inverse of the recursion: Hilbert coefficients back from the counts.
std::vector<Int> coefficients_from_counts(const std::vector<Int>& b);

/// True iff the decomposition re-expands to exactly the given polynomial.
bool verify_decomposition(const GotzmannData& g, const RatPoly& p);

/// The re-expanded polynomial itself (block sums, O(d) terms).
RatPoly decomposition_polynomial(const GotzmannData& g);

/// Regularity bound at level p from the counts: B_{d-p} - 1.
Int gotzmann_reg_bound(const GotzmannData& g, int p);

} // namespace cmreg
