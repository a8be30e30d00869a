#include "cmreg/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "cmreg/combinat.hpp"
#include "cmreg/errors.hpp"

namespace cmreg {

using boost::multiprecision::abs;

Int max_abs_coeff(const CoefficientVector& e, int p) {
    if (p < 0 || p >= static_cast<int>(e.e.size())) {
        throw index_out_of_range("max_abs_coeff: index outside stored coefficients");
    }
    Int m = e.e[0];
    for (int i = 1; i <= p; ++i) m = std::max(m, Int(abs(e.e[i])));
    return m;
}

Int reg_upper_bound(const CoefficientVector& e, int p) {
    const int d = e.dim;
    if (d < 1) throw dimension_zero("reg_upper_bound: dimension is zero");
    if (p < 1 || p > d) throw level_out_of_range("reg_upper_bound: level outside 1..d");
    const Int xi = max_abs_coeff(e, d - p);
    return pow_pow2(xi + 1, static_cast<unsigned>(d - p)) - 2;
}

GradedRegBounds graded_reg_bounds(const CoefficientVector& cumulative, bool depth_positive) {
    const int d = cumulative.dim;
    if (d < 1) throw dimension_zero("graded_reg_bounds: dimension is zero");
    if (static_cast<int>(cumulative.e.size()) != d + 1) {
        throw error("graded_reg_bounds: expected cumulative coefficients e_0..e_d");
    }
    GradedRegBounds out;
    out.general = pow_pow2(max_abs_coeff(cumulative, d) + 1, static_cast<unsigned>(d)) - 2;
    if (depth_positive) {
        out.depth_positive = pow_pow2(max_abs_coeff(cumulative, d - 1) + 1, static_cast<unsigned>(d - 1)) - 2;
    }
    return out;
}

CoeffInequality coefficient_inequality(const CoefficientVector& cumulative, int i) {
    const int d = cumulative.dim;
    if (i < 1 || i > d) throw index_out_of_range("coefficient_inequality: index outside 1..d");
    CoeffInequality rec;
    rec.index = i;
    rec.lhs = (i % 2 == 1) ? cumulative.e[i] : -cumulative.e[i];
    const Int xi = max_abs_coeff(cumulative, i - 1);
    rec.rhs = Rat(7, 12) * Rat(pow_pow2(xi + 1, static_cast<unsigned>(i))) - Rat(cumulative.e[0]);
    rec.holds = Rat(rec.lhs) < rec.rhs;
    return rec;
}

MultiplicityCheck multiplicity_upper_check(const Int& e0, const Int& ell, int c, long long reg) {
    const Int cap = ell * binomial(Int(reg) + c, c);
    return MultiplicityCheck{e0 <= cap, e0 == cap};
}

ReducedSeries extremal_cm_series(const Int& ell, int c, int d, long long a) {
    if (a < 0 || d < 1 || c < 0) throw error("extremal_cm_series: bad parameters");
    std::vector<Int> q;
    q.reserve(static_cast<size_t>(a) + 1);
    for (long long i = 0; i <= a; ++i) {
        q.push_back(ell * binomial(Int(c) + i - 1, i));
    }
    return ReducedSeries{ZPoly(std::move(q)), d};
}

long long reg_lower_bound(const CoefficientVector& e, const Int& ell, int c) {
    if (c < 1) throw error("reg_lower_bound: requires codimension c >= 1");
    Int cfact = 1;
    for (int i = 2; i <= c; ++i) cfact *= i;
    const Int target0 = int_pow(Int(2), static_cast<unsigned>(c)) * cfact * e.e[0];
    // smallest a with 2a+c+1 >= 0 and ell*(2a+c+1)^c >= 2^c c! e_0
    long long best = least_satisfying(-(c + 1) / 2, [&](long long x) {
        const Int base = 2 * Int(x) + c + 1;
        return base >= 0 && ell * int_pow(base, static_cast<unsigned>(c)) >= target0;
    });
    for (size_t i = 1; i < e.e.size() && static_cast<int>(i) <= e.dim - 1; ++i) {
        if (e.e[i] == 0) continue;
        const Int target = abs(e.e[i]);
        const long long li = least_satisfying(-1, [&](long long x) {
            return ell * int_pow(Int(x) + 1, static_cast<unsigned>(c + i)) >= target;
        });
        best = std::max(best, li);
    }
    return best;
}

long long multiplicity_reg_lower(const Int& e0, const Int& ell, int c) {
    if (c < 1 || e0 < 1 || ell < 1) throw error("multiplicity_reg_lower: bad parameters");
    return least_satisfying(0, [&](long long a) {
        return ell * binomial(Int(a) + c, c) >= e0;
    });
}

bool coefficient_growth_check(const CoefficientVector& e, const Int& B, long long a) {
    if (a < 0 || B < 1) throw error("coefficient_growth_check: bad parameters");
    for (size_t i = 1; i < e.e.size() && static_cast<int>(i) <= e.dim - 1; ++i) {
        if (abs(e.e[i]) > B * int_pow(Int(a) + 1, static_cast<unsigned>(i))) return false;
    }
    return true;
}

QuestionEvidence question_evidence(const CoefficientVector& cumulative, int t, long long reg) {
    const int d = cumulative.dim;
    if (t < 0 || t > d) throw index_out_of_range("question_evidence: depth outside 0..d");
    QuestionEvidence ev;
    ev.t = t;
    const Int xi = max_abs_coeff(cumulative, d - t);
    ev.reg_holds = Int(reg) < pow_pow2(xi + 1, static_cast<unsigned>(d));
    ev.coeffs_hold = true;
    for (int i = d - t + 1; i <= d; ++i) {
        if (abs(cumulative.e[i]) >= pow_pow2(xi + 1, static_cast<unsigned>(i))) {
            ev.coeffs_hold = false;
            break;
        }
    }
    return ev;
}

} // namespace cmreg
