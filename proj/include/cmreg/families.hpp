#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cmreg/monomials.hpp"

namespace cmreg {

struct OracleResult {
    enum class Method { ClosedForm, EliahouKervaire, None };
    long long reg = 0;
    long long reg1 = 0;
    Method method = Method::None;
};

/// A constructible ideal family instance.
struct FamilySpec {
    enum class Kind { CompleteIntersection, Powers, CyclicPolytope, LexOf, Explicit };
    Kind kind = Kind::Explicit;
    int n = 0;
    std::vector<int> degrees;            // CompleteIntersection
    int c = 0;                           // Powers
    long long a = 0;                     // Powers
    int d = 0;                           // CyclicPolytope
    std::shared_ptr<FamilySpec> inner;   // LexOf
    MonomialIdeal ideal;                 // Explicit
};

struct CiData {
    HilbertSeries series;
    OracleResult oracle;
};

/// Series and exact regularity of R modulo a regular sequence of the given
/// degrees: numerator prod (1 - z^{delta_i}), reg = sum (delta_i - 1).
CiData ci_series(int n, const std::vector<int>& degrees);

/// (x_1,...,x_c)^{a+1} inside n variables.
MonomialIdeal powers_ideal(int n, int c, long long a);

/// All squarefree monomials of degree d+1 in n variables; equals the
/// intersection of the ideals generated by each (n-d)-subset of the variables.
MonomialIdeal cyclic_polytope_ideal(int n, int d);

/// Closed under swapping any variable of a generator for an earlier one.
bool is_strongly_stable(const MonomialIdeal& ideal);

/// Exact regularity of a strongly stable quotient: max generator degree - 1;
/// reg1 likewise on the saturation (x_n exponents erased). The saturation
/// route is cross-checked against the general saturation. reg1 = -1 flags an
/// Artinian quotient (no positive-level cohomology).
OracleResult stable_regularity(const MonomialIdeal& ideal);

/// depth of R/I for strongly stable I: n minus the largest variable index
/// occurring in a minimal generator.
int stable_depth(const MonomialIdeal& ideal);

/// Borel (exchange) closure: smallest strongly stable ideal containing I.
MonomialIdeal borel_closure(const MonomialIdeal& ideal);

/// Hilbert series of the family instance (does not build lexifications).
HilbertSeries series_of(const FamilySpec& spec);

/// Result of the degree-by-degree lex construction.
struct LexifyResult {
    MonomialIdeal ideal;
    std::vector<std::vector<Monomial>> gens_by_degree; // index = degree
    int last_generator_degree = 0;
};

/// Monomial ideal with a prescribed quotient Hilbert function h(0..M+1),
/// spanned in each degree by an initial lex segment. Throws
/// not_an_o_sequence when h violates Macaulay growth.
LexifyResult lexify_hilbert(int n, const std::vector<Int>& h, int M);

/// The lex-segment ideal with the same Hilbert function as the source.
/// max_degree < 0 picks max(postulation+2, s+1); throws truncation_unsound
/// if a minimal generator still appears at the final degree.
MonomialIdeal lexify(const FamilySpec& source, int max_degree = -1);

/// A realized family: everything the analysis pipeline consumes.
struct FamilyInstance {
    HilbertSeries series;
    std::optional<MonomialIdeal> ideal;
    std::optional<OracleResult> oracle;
    std::optional<int> depth;           // exact depth when known
    std::optional<bool> depth_positive; // resolvable even when depth is not
};

FamilyInstance realize(const FamilySpec& spec, int max_lex_degree = -1);

} // namespace cmreg
