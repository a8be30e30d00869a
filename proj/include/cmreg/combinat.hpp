#pragma once

#include <string>
#include <vector>

#include "cmreg/ints.hpp"

namespace cmreg {

/// Exponent vector of a monomial in x_1..x_n (x_1 first). Lex order is
/// x_1 > x_2 > ... > x_n, compared left to right on exponents.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int vars() const { return static_cast<int>(exps.size()); }
    int degree() const;
    std::string str() const; // "x1^2*x3", "1" for the unit

    bool operator==(const Monomial&) const = default;
};

bool lex_greater(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b); // a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial quotient_by_gcd(const Monomial& a, const Monomial& b); // a / gcd(a,b)
Monomial times_var(const Monomial& a, int var); // a * x_{var+1}

/// Binomial coefficient in the polynomial (falling-factorial) convention:
/// C(a,b) = a(a-1)...(a-b+1)/b!. Defined for every integer a; C(a,0) = 1,
/// C(a,b) = 0 for 0 <= a < b, and e.g. C(-1,2) = 1.
Int binomial(const Int& a, long long b);

/// Number of degree-m monomials in n variables, C(n+m-1, m).
Int monomial_count(int n, int m);

/// Macaulay's m-th representation of a positive integer:
/// h = C(a_m,m) + C(a_{m-1},m-1) + ... + C(a_j,j) with a_m > ... > a_j >= j >= 1.
struct MacaulayRep {
    int degree = 0;           // m
    std::vector<Int> uppers;  // a_m, a_{m-1}, ...; lower index is degree - position
    Int reconstruct() const;
};

MacaulayRep macaulay_rep(const Int& h, int m);

/// Macaulay growth bound h^<m>: the largest value the Hilbert function of a
/// standard graded algebra may take in degree m+1 given value h in degree m.
Int macaulay_bound(const Int& h, int m);

/// First k monomials of degree m in n variables, descending lex.
std::vector<Monomial> lex_segment(int n, int m, const Int& k);

/// All degree-m monomials in n variables, descending lex.
std::vector<Monomial> monomials_of_degree(int n, int m);

/// Degree-(m+1) monomials obtained by multiplying a degree-m lex segment by
/// each variable; the result is again a lex segment (checked).
std::vector<Monomial> shadow(const std::vector<Monomial>& segment);

/// Compact form of an initial lex segment: no materialized list, so sizes may
/// exceed anything a vector could hold.
struct LexSegment {
    int n = 0;
    int degree = 0;
    Int size;
    Monomial last; // meaningful when size > 0

    bool operator==(const LexSegment&) const = default;
};

/// 0-based position of a monomial among the degree-equal monomials in
/// descending lex order.
Int lex_rank(const Monomial& m);

/// Inverse of lex_rank.
Monomial lex_monomial_at(int n, int m, const Int& rank);

LexSegment compact_segment(int n, int m, const Int& k);
std::vector<Monomial> materialize(const LexSegment& seg);

/// Shadow in compact form. The size comes from the sharpness of Macaulay
/// growth on lex segments, not from multiplying anything out.
LexSegment shadow(const LexSegment& seg);

} // namespace cmreg
