#pragma once

#include <optional>

#include "cmreg/polyseries.hpp"

namespace cmreg {

/// xi_p = max(e_0, |e_1|, ..., |e_p|); nondecreasing in p.
Int max_abs_coeff(const CoefficientVector& e, int p);

/// Upper bound on the regularity at and above level p of a graded quotient:
/// (xi_{d-p} + 1)^(2^(d-p)) - 2, from the ordinary coefficients.
Int reg_upper_bound(const CoefficientVector& e, int p);

struct GradedRegBounds {
    Int general;                      // (xi_d + 1)^(2^d) - 2
    std::optional<Int> depth_positive; // (xi_{d-1} + 1)^(2^(d-1)) - 2
};

/// Bounds on reg of an associated graded ring from the cumulative
/// coefficients e_0..e_d; the sharper bound applies when depth >= 1.
GradedRegBounds graded_reg_bounds(const CoefficientVector& cumulative, bool depth_positive);

struct CoeffInequality {
    int index = 0;
    Int lhs;   // (-1)^(i-1) e_i
    Rat rhs;   // (7/12)(xi_{i-1} + 1)^(2^i) - e_0
    bool holds = false;
};

/// Strict upper bound on the signed Hilbert coefficients, 1 <= i <= d.
CoeffInequality coefficient_inequality(const CoefficientVector& cumulative, int i);

struct MultiplicityCheck {
    bool holds = false;
    bool is_equality = false;
};

/// e_0 <= ell * C(reg + c, c).
MultiplicityCheck multiplicity_upper_check(const Int& e0, const Int& ell, int c, long long reg);

/// The equality-case series: Q'_i = ell * C(c+i-1, i) for 0 <= i <= a,
/// over (1-z)^d. Characterizes when the multiplicity bound is attained.
ReducedSeries extremal_cm_series(const Int& ell, int c, int d, long long a);

/// Lower bound on reg from the coefficients: max of the exact integer
/// ceilings of (c! e_0/ell)^(1/c) - (c+1)/2 and (|e_i|/ell)^(1/(c+i)) - 1.
/// Root extractions are replaced by monotone integer threshold searches.
long long reg_lower_bound(const CoefficientVector& e, const Int& ell, int c);

/// Sharper integer lower bound from the multiplicity alone:
/// min{a >= 0 : ell * C(a+c, c) >= e_0}.
long long multiplicity_reg_lower(const Int& e0, const Int& ell, int c);

/// |e_i| <= B * (a+1)^i for all 1 <= i <= d-1.
bool coefficient_growth_check(const CoefficientVector& e, const Int& B, long long a);

struct QuestionEvidence {
    int t = 0;          // depth used for the xi index
    bool reg_holds = false;    // reg < (xi_{d-t} + 1)^(2^d)
    bool coeffs_hold = false;  // |e_i| < (xi_{d-t} + 1)^(2^i), d-t+1 <= i <= d
};

/// Empirical evidence for the open inequalities; recorded, never asserted.
QuestionEvidence question_evidence(const CoefficientVector& cumulative, int t, long long reg);

} // namespace cmreg
