#include "cmreg/monomials.hpp"

#include <algorithm>

#include "cmreg/errors.hpp"

namespace cmreg {

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
    for (const auto& g : gens) {
        if (g.vars() != n) throw error("minimalize: generator has wrong variable count");
        if (g.degree() == 0) throw unit_ideal("minimalize: degree-0 generator");
    }
    std::sort(gens.begin(), gens.end(), lex_greater);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens) {
            if (!(h == g) && divides(h, g)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(g);
    }
    return MonomialIdeal{n, std::move(minimal), false};
}

namespace {

MonomialIdeal minimalize_or_unit(int n, std::vector<Monomial> gens) {
    for (const auto& g : gens) {
        if (g.degree() == 0) return MonomialIdeal{n, {}, true};
    }
    return minimalize(n, std::move(gens));
}

// Occurrence count per variable among the generators.
std::vector<int> var_counts(const MonomialIdeal& ideal) {
    std::vector<int> counts(ideal.n, 0);
    for (const auto& g : ideal.gens) {
        for (int j = 0; j < ideal.n; ++j) {
            if (g.exps[j] > 0) ++counts[j];
        }
    }
    return counts;
}

Monomial pure_power(int n, int var, int e) {
    Monomial p{std::vector<int>(n, 0)};
    p.exps[var] = e;
    return p;
}

Monomial choose_pivot(const MonomialIdeal& ideal, PivotRule rule, const std::vector<int>& counts) {
    if (rule == PivotRule::FirstVariable) {
        for (int j = 0; j < ideal.n; ++j) {
            if (counts[j] >= 2) return pure_power(ideal.n, j, 1);
        }
    }
    int var = 0;
    for (int j = 1; j < ideal.n; ++j) {
        if (counts[j] > counts[var]) var = j;
    }
    std::vector<int> exps;
    for (const auto& g : ideal.gens) {
        if (g.exps[var] > 0) exps.push_back(g.exps[var]);
    }
    std::sort(exps.begin(), exps.end());
    // Lower median: guarantees the pivot properly divides a generator and
    // is itself outside the ideal, so both branches shrink.
    const int e = exps[(exps.size() - 1) / 2];
    return pure_power(ideal.n, var, e);
}

ZPoly numerator_rec(const MonomialIdeal& ideal, PivotRule rule) {
    if (ideal.unit) return {}; // zero module
    const auto counts = var_counts(ideal);
    const bool coprime = std::all_of(counts.begin(), counts.end(), [](int c) { return c <= 1; });
    if (coprime) {
        ZPoly prod{Int(1)};
        for (const auto& g : ideal.gens) {
            ZPoly factor;
            factor.c.assign(static_cast<size_t>(g.degree()) + 1, Int(0));
            factor.c.front() = 1;
            factor.c.back() = -1;
            prod = prod * factor;
        }
        return prod;
    }
    const Monomial p = choose_pivot(ideal, rule, counts);
    auto plus_gens = ideal.gens;
    plus_gens.push_back(p);
    const MonomialIdeal plus = minimalize(ideal.n, std::move(plus_gens));
    const MonomialIdeal quo = colon(ideal, p);
    return numerator_rec(plus, rule) + numerator_rec(quo, rule).shifted(p.degree());
}

} // namespace

ZPoly numerator(const MonomialIdeal& ideal, PivotRule rule) {
    if (ideal.unit) return {};
    return numerator_rec(ideal, rule);
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal) {
    return HilbertSeries{numerator(ideal), ideal.n};
}

Int count_standard_monomials(const MonomialIdeal& ideal, int t) {
    if (t < 0) return 0;
    if (ideal.unit) return 0;
    Int count = 0;
    for (const auto& m : monomials_of_degree(ideal.n, t)) {
        bool inside = false;
        for (const auto& g : ideal.gens) {
            if (divides(g, m)) { inside = true; break; }
        }
        if (!inside) ++count;
    }
    return count;
}

int dimension(const MonomialIdeal& ideal) {
    if (ideal.unit) throw error("dimension: unit ideal has no quotient dimension");
    return reduce(hilbert_series(ideal)).d;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& p) {
    if (ideal.unit) return ideal;
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens.size());
    for (const auto& g : ideal.gens) gens.push_back(quotient_by_gcd(g, p));
    return minimalize_or_unit(ideal.n, std::move(gens));
}

MonomialIdeal colon_var_power(const MonomialIdeal& ideal, int var) {
    if (ideal.unit) return ideal;
    std::vector<Monomial> gens = ideal.gens;
    for (auto& g : gens) g.exps.at(var) = 0;
    return minimalize_or_unit(ideal.n, std::move(gens));
}

MonomialIdeal saturation(const MonomialIdeal& ideal) {
    if (ideal.unit) return ideal;
    MonomialIdeal sat{ideal.n, {}, true};
    for (int j = 0; j < ideal.n; ++j) {
        sat = intersect(sat, colon_var_power(ideal, j));
    }
    return sat;
}

bool is_saturated(const MonomialIdeal& ideal) {
    return saturation(ideal) == ideal;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n != b.n) throw error("intersect: variable counts differ");
    if (a.unit) return b;
    if (b.unit) return a;
    std::vector<Monomial> gens;
    gens.reserve(a.gens.size() * b.gens.size());
    for (const auto& u : a.gens) {
        for (const auto& v : b.gens) gens.push_back(lcm(u, v));
    }
    return minimalize(a.n, std::move(gens));
}

} // namespace cmreg
