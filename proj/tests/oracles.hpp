#pragma once

// Independent brute-force oracles used only by the test suites. These must
// not share code paths with the library routines they check.

#include <algorithm>
#include <functional>
#include <vector>

#include "cmreg/combinat.hpp"
#include "cmreg/gotzmann.hpp"
#include "cmreg/polyseries.hpp"

namespace cmreg::testing {

/// Pascal-triangle binomial for 0 <= b <= a (set-counting case only).
inline Int pascal_binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    std::vector<std::vector<Int>> row(a + 1);
    for (int i = 0; i <= a; ++i) {
        row[i].assign(i + 1, Int(1));
        for (int j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
    }
    return row[a][b];
}

/// Degree-m monomials by recursive distribution, sorted descending lex with
/// std::sort. Independent of the successor-based enumeration in the library.
inline void collect_monomials(int n, int m, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(m);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= m; ++e) {
        cur.push_back(e);
        collect_monomials(n, m - e, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Monomial> monomials_by_enumeration(int n, int m) {
    std::vector<Monomial> out;
    std::vector<int> cur;
    collect_monomials(n, m, cur, out);
    std::sort(out.begin(), out.end(), lex_greater);
    return out;
}

/// Coefficients 0..top of N(z)/(1-z)^n by repeated prefix sums.
inline std::vector<Int> expansion_oracle(const ZPoly& num, int denom_exp, int top) {
    std::vector<Int> coeffs(static_cast<size_t>(top) + 1, Int(0));
    for (size_t j = 0; j < num.c.size() && j <= static_cast<size_t>(top); ++j) {
        coeffs[j] = num.c[j];
    }
    for (int pass = 0; pass < denom_exp; ++pass) {
        for (int t = 1; t <= top; ++t) coeffs[t] += coeffs[t - 1];
    }
    return coeffs;
}

/// The decomposition polynomial of an explicit c-list, term by term.
inline RatPoly c_list_polynomial(const std::vector<int>& c) {
    RatPoly p;
    for (size_t i = 0; i < c.size(); ++i) {
        // term j = i+1 contributes C(c_j + t - j + 1, c_j): shift c_j - j + 1
        p = p + binomial_poly(Int(c[i]) - static_cast<long long>(i), c[i]);
    }
    return p;
}

/// Greedy route: peel C(c_i + t - i + 1, c_i) terms off p with c_i the degree
/// of the remainder. Returns the c-list; empty result with nonzero remainder
/// means the greedy route failed.
inline std::vector<int> greedy_decomposition(RatPoly p, int max_terms) {
    std::vector<int> c;
    int i = 1;
    while (!p.is_zero() && i <= max_terms) {
        const int ci = static_cast<int>(p.degree());
        if (ci < 0) break;
        if (!c.empty() && ci > c.back()) return {}; // not nonincreasing
        c.push_back(ci);
        p = p - binomial_poly(Int(ci) + 1 - i, ci);
        ++i;
    }
    if (!p.is_zero()) return {};
    return c;
}

/// Count the nonincreasing c-lists of length <= max_len whose decomposition
/// polynomial equals p. Exhaustive search for the uniqueness property; the
/// partial sum is threaded through the recursion so each node costs one
/// polynomial addition.
inline int count_decompositions(const RatPoly& p, int max_value, int max_len) {
    int found = 0;
    std::vector<int> c;
    std::function<void(const RatPoly&)> rec = [&](const RatPoly& sum) {
        if (sum == p) ++found;
        if (static_cast<int>(c.size()) == max_len) return;
        const int top = c.empty() ? max_value : c.back();
        for (int v = 0; v <= top; ++v) {
            c.push_back(v);
            const RatPoly next =
                sum + binomial_poly(Int(v) + 1 - static_cast<long long>(c.size()), v);
            rec(next);
            c.pop_back();
        }
    };
    rec(RatPoly{});
    return found;
}

} // namespace cmreg::testing
