#pragma once

#include <vector>

#include "cmreg/combinat.hpp"
#include "cmreg/polyseries.hpp"

namespace cmreg {

/// A monomial ideal given by its minimal generators, sorted descending lex.
/// The unit flag marks the whole ring; it arises only from colon/saturation
/// results, never from inputs.
struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> gens;
    bool unit = false;

    bool is_zero_ideal() const { return !unit && gens.empty(); }
    bool operator==(const MonomialIdeal&) const = default;
};

/// Divisibility-minimal, lex-sorted ideal from an arbitrary generator list.
/// Throws unit_ideal if a degree-0 monomial is present.
MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

enum class PivotRule {
    MostFrequentMedian, // variable in most generators, median positive exponent
    FirstVariable,      // first variable shared by two generators, exponent 1
};

/// Numerator N(z) of the Hilbert series N(z)/(1-z)^n of R/I, by pivot
/// recursion on 0 -> R/(I:p)(-deg p) -> R/I -> R/(I+(p)) -> 0.
ZPoly numerator(const MonomialIdeal& ideal, PivotRule rule = PivotRule::MostFrequentMedian);

HilbertSeries hilbert_series(const MonomialIdeal& ideal);

/// Number of degree-t monomials outside the ideal, by exhaustive enumeration.
/// Independent of the pivot recursion; intended for n <= 5, t <= 12.
Int count_standard_monomials(const MonomialIdeal& ideal, int t);

/// Krull dimension of R/I.
int dimension(const MonomialIdeal& ideal);

/// I : p for a single monomial p (may be the unit ideal).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& p);

/// I : x_j^infinity — generators with their x_j exponent erased.
MonomialIdeal colon_var_power(const MonomialIdeal& ideal, int var);

/// Saturation with respect to the irrelevant ideal.
MonomialIdeal saturation(const MonomialIdeal& ideal);

bool is_saturated(const MonomialIdeal& ideal);

/// Intersection, generated by pairwise lcms. Accepts unit-flagged arguments.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

} // namespace cmreg
