#include "cmreg/gotzmann.hpp"

#include "cmreg/combinat.hpp"
#include "cmreg/errors.hpp"

namespace cmreg {

std::vector<int> GotzmannData::expanded_c(const Int& cap) const {
    if (s > cap) throw error("expanded_c: c-sequence too long to materialize");
    std::vector<int> out;
    out.reserve(s.convert_to<size_t>());
    for (const auto& [value, count] : c_runs) {
        for (Int i = 0; i < count; ++i) out.push_back(value);
    }
    return out;
}

std::vector<Int> b_sequence(const CoefficientVector& e) {
    const int d = e.dim;
    if (d < 1) throw dimension_zero("b_sequence: dimension is zero");
    if (static_cast<int>(e.e.size()) < d) throw error("b_sequence: coefficient vector shorter than dimension");
    if (e.e[0] < 1) throw not_admissible("b_sequence: e_0 < 1");
    std::vector<Int> b;
    b.reserve(d);
    b.push_back(e.e[0]);
    for (int j = 1; j < d; ++j) {
        Int bj = (j % 2 == 0) ? e.e[j] : -e.e[j];
        for (int l = 1; l <= j; ++l) {
            const Int term = binomial(b[j - l] + 1, l + 1);
            bj += (l % 2 == 1) ? term : -term;
        }
        if (bj < 1 || bj < b.back()) {
            throw not_admissible("b_sequence: counts not positive and nondecreasing");
        }
        b.push_back(bj);
    }
    return b;
}

GotzmannData c_sequence(const std::vector<Int>& b, int d) {
    if (d < 1 || b.empty()) throw not_admissible("c_sequence: empty counts");
    if (static_cast<int>(b.size()) != d) throw error("c_sequence: counts length must equal dimension");
    if (b[0] < 1) throw not_admissible("c_sequence: B_0 < 1");
    for (size_t j = 1; j < b.size(); ++j) {
        if (b[j] < b[j - 1]) throw not_admissible("c_sequence: counts decrease");
    }
    GotzmannData g;
    g.d = d;
    g.b = b;
    g.s = b.back();
    g.c_runs.emplace_back(d - 1, b[0]);
    for (int j = 1; j < d; ++j) {
        const Int mult = b[j] - b[j - 1];
        if (mult > 0) g.c_runs.emplace_back((d - 1) - j, mult);
    }
    return g;
}

std::vector<Int> coefficients_from_counts(const std::vector<Int>& b) {
    std::vector<Int> e;
    e.reserve(b.size());
    for (size_t j = 0; j < b.size(); ++j) {
        Int acc = b[j];
        for (size_t l = 1; l <= j; ++l) {
            const Int term = binomial(b[j - l] + 1, static_cast<long long>(l) + 1);
            acc -= (l % 2 == 1) ? term : -term;
        }
        e.push_back((j % 2 == 0) ? acc : -acc);
    }
    return e;
}

RatPoly decomposition_polynomial(const GotzmannData& g) {
    // Terms with equal c-value telescope: for i = a..b,
    //   sum C(c + t - i + 1, c) = C(t - a + c + 2, c+1) - C(t - b + c + 1, c+1).
    RatPoly p;
    Int start = 1; // index of the first term in the current run
    for (const auto& [value, count] : g.c_runs) {
        const Int a = start;
        const Int bidx = start + count - 1;
        RatPoly head = binomial_poly(Int(value) + 2 - a, value + 1);
        RatPoly tail = binomial_poly(Int(value) + 1 - bidx, value + 1);
        p = p + head - tail;
        start += count;
    }
    return p;
}

bool verify_decomposition(const GotzmannData& g, const RatPoly& p) {
    return decomposition_polynomial(g) == p;
}

Int gotzmann_reg_bound(const GotzmannData& g, int p) {
    if (p < 1 || p > g.d) throw level_out_of_range("gotzmann_reg_bound: level outside 1..d");
    return g.b[static_cast<size_t>(g.d - p)] - 1;
}

} // namespace cmreg
