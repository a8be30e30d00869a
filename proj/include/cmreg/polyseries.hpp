#pragma once

#include <string>
#include <vector>

#include "cmreg/ints.hpp"

namespace cmreg {

/// Integer-coefficient polynomial in z. Trailing zeros are stripped;
/// the zero polynomial has an empty coefficient vector and degree -1.
struct ZPoly {
    std::vector<Int> c;

    ZPoly() = default;
    ZPoly(std::initializer_list<Int> init) : c(init) { normalize(); }
    explicit ZPoly(std::vector<Int> init) : c(std::move(init)) { normalize(); }

    void normalize();
    bool is_zero() const { return c.empty(); }
    long long degree() const { return static_cast<long long>(c.size()) - 1; }
    Int coeff(size_t i) const { return i < c.size() ? c[i] : Int(0); }
    Int eval_at_one() const;

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly shifted(int k) const; // multiply by z^k
    bool operator==(const ZPoly&) const = default;

    std::string str() const; // e.g. "1 - 2*z^2 + z^3"
};

/// Rational-coefficient polynomial in t (Hilbert polynomials live here).
struct RatPoly {
    std::vector<Rat> c;

    RatPoly() = default;
    RatPoly(std::initializer_list<Rat> init) : c(init) { normalize(); }
    explicit RatPoly(std::vector<Rat> init) : c(std::move(init)) { normalize(); }

    void normalize();
    bool is_zero() const { return c.empty(); }
    long long degree() const { return static_cast<long long>(c.size()) - 1; }
    Rat coeff(size_t i) const { return i < c.size() ? c[i] : Rat(0); }
    Rat eval(const Int& t) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    bool operator==(const RatPoly&) const = default;

    std::string str() const;
};

/// C(t + shift, lower) expanded in the monomial basis of t.
RatPoly binomial_poly(const Int& shift, int lower);

/// N(z) / (1-z)^n.
struct HilbertSeries {
    ZPoly numerator;
    int denom_exp = 0;
};

/// Q'(z) / (1-z)^d with Q'(1) != 0.
struct ReducedSeries {
    ZPoly q;
    int d = 0;
    bool operator==(const ReducedSeries&) const = default;
};

/// Hilbert coefficients e_0..e_k of a quotient of dimension dim, together
/// with the base-ring length scalar. Ordinary vectors have k = dim-1,
/// cumulative ones k = dim.
struct CoefficientVector {
    std::vector<Int> e;
    int dim = 0;
    Int ell = 1;
};

/// Coefficient of z^t in the expansion of num(z)/(1-z)^denom_exp.
Int series_coefficient(const ZPoly& num, int denom_exp, long long t);
Int series_coefficient(const HilbertSeries& hs, long long t);
Int series_coefficient(const ReducedSeries& rs, long long t);

/// Cancel every factor (1-z) out of the numerator. Throws zero_series on N = 0.
ReducedSeries reduce(const HilbertSeries& hs);

/// The polynomial agreeing with the Hilbert function for large t; degree d-1.
/// Throws dimension_zero when d = 0.
RatPoly hilbert_polynomial(const ReducedSeries& rs);

/// e_0..e_{d-1} via Taylor coefficients of Q' at z = 1, cross-checked by
/// re-expanding sum (-1)^i e_i C(t+d-1-i, d-1-i) against the Hilbert polynomial.
CoefficientVector hilbert_coefficients(const ReducedSeries& rs);

/// e_0..e_d of the (d+1)-dimensional series Q'(z)/(1-z)^{d+1}: the
/// coefficients of the cumulative Hilbert function sum_{i<=t} h(i).
CoefficientVector cumulative_coefficients(const ReducedSeries& rs);

/// Largest t with h(t) != p(t); equals deg(Q') - d.
long long postulation_number(const ReducedSeries& rs);

} // namespace cmreg
