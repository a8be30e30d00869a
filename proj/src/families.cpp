#include "cmreg/families.hpp"

#include <algorithm>
#include <set>

#include "cmreg/errors.hpp"
#include "cmreg/gotzmann.hpp"

namespace cmreg {

CiData ci_series(int n, const std::vector<int>& degrees) {
    if (n < 1) throw invalid_spec("ci_series: need at least one variable");
    if (static_cast<int>(degrees.size()) > n) {
        throw too_many_forms("ci_series: more forms than variables");
    }
    ZPoly num{Int(1)};
    long long reg = 0;
    for (int delta : degrees) {
        if (delta < 1) throw invalid_spec("ci_series: degrees must be >= 1");
        ZPoly factor;
        factor.c.assign(static_cast<size_t>(delta) + 1, Int(0));
        factor.c.front() = 1;
        factor.c.back() = -1;
        num = num * factor;
        reg += delta - 1;
    }
    CiData out;
    out.series = HilbertSeries{std::move(num), n};
    out.oracle = OracleResult{reg, reg, OracleResult::Method::ClosedForm};
    return out;
}

MonomialIdeal powers_ideal(int n, int c, long long a) {
    if (c < 1 || c > n || a < 0) throw invalid_spec("powers_ideal: need 1 <= c <= n and a >= 0");
    std::vector<Monomial> gens;
    for (const auto& m : monomials_of_degree(c, static_cast<int>(a) + 1)) {
        Monomial padded{std::vector<int>(n, 0)};
        std::copy(m.exps.begin(), m.exps.end(), padded.exps.begin());
        gens.push_back(std::move(padded));
    }
    return minimalize(n, std::move(gens));
}

MonomialIdeal cyclic_polytope_ideal(int n, int d) {
    if (d < 1 || n - d < 1) throw invalid_spec("cyclic_polytope_ideal: need d >= 1 and c = n-d >= 1");
    std::vector<Monomial> gens;
    std::vector<int> pick(d + 1);
    // all (d+1)-subsets of the variables
    for (int i = 0; i <= d; ++i) pick[i] = i;
    while (true) {
        Monomial m{std::vector<int>(n, 0)};
        for (int i : pick) m.exps[i] = 1;
        gens.push_back(std::move(m));
        int i = d;
        while (i >= 0 && pick[i] == n - 1 - (d - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j <= d; ++j) pick[j] = pick[j - 1] + 1;
    }
    return minimalize(n, std::move(gens));
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
    if (ideal.unit) return true;
    for (const auto& g : ideal.gens) {
        for (int j = 1; j < ideal.n; ++j) {
            if (g.exps[j] == 0) continue;
            for (int i = 0; i < j; ++i) {
                Monomial swapped = g;
                swapped.exps[j] -= 1;
                swapped.exps[i] += 1;
                bool inside = false;
                for (const auto& h : ideal.gens) {
                    if (divides(h, swapped)) { inside = true; break; }
                }
                if (!inside) return false;
            }
        }
    }
    return true;
}

namespace {

int max_generator_degree(const MonomialIdeal& ideal) {
    int m = 0;
    for (const auto& g : ideal.gens) m = std::max(m, g.degree());
    return m;
}

} // namespace

OracleResult stable_regularity(const MonomialIdeal& ideal) {
    if (!is_strongly_stable(ideal)) {
        throw not_strongly_stable("stable_regularity: ideal is not strongly stable");
    }
    OracleResult out;
    out.method = OracleResult::Method::EliahouKervaire;
    if (ideal.is_zero_ideal()) return out; // reg = reg1 = 0
    out.reg = max_generator_degree(ideal) - 1;
    // For strongly stable ideals the saturation is I : x_n^infinity.
    const MonomialIdeal sat = colon_var_power(ideal, ideal.n - 1);
    if (!(sat == saturation(ideal))) {
        throw internal_inconsistency("stable_regularity: saturation routes disagree");
    }
    out.reg1 = sat.unit ? -1 : (sat.is_zero_ideal() ? 0 : max_generator_degree(sat) - 1);
    return out;
}

int stable_depth(const MonomialIdeal& ideal) {
    if (!is_strongly_stable(ideal)) {
        throw not_strongly_stable("stable_depth: ideal is not strongly stable");
    }
    if (ideal.is_zero_ideal()) return ideal.n;
    int maxvar = 0;
    for (const auto& g : ideal.gens) {
        for (int j = ideal.n - 1; j >= 0; --j) {
            if (g.exps[j] > 0) { maxvar = std::max(maxvar, j + 1); break; }
        }
    }
    return ideal.n - maxvar;
}

MonomialIdeal borel_closure(const MonomialIdeal& ideal) {
    std::set<std::vector<int>> seen;
    std::vector<Monomial> queue = ideal.gens;
    for (const auto& g : queue) seen.insert(g.exps);
    for (size_t k = 0; k < queue.size(); ++k) {
        const Monomial g = queue[k];
        for (int j = 1; j < ideal.n; ++j) {
            if (g.exps[j] == 0) continue;
            for (int i = 0; i < j; ++i) {
                Monomial swapped = g;
                swapped.exps[j] -= 1;
                swapped.exps[i] += 1;
                if (seen.insert(swapped.exps).second) queue.push_back(std::move(swapped));
            }
        }
    }
    return minimalize(ideal.n, std::move(queue));
}

HilbertSeries series_of(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::CompleteIntersection:
            return ci_series(spec.n, spec.degrees).series;
        case FamilySpec::Kind::Powers:
            return hilbert_series(powers_ideal(spec.n, spec.c, spec.a));
        case FamilySpec::Kind::CyclicPolytope:
            return hilbert_series(cyclic_polytope_ideal(spec.n, spec.d));
        case FamilySpec::Kind::LexOf:
            return series_of(*spec.inner); // same Hilbert function by construction
        case FamilySpec::Kind::Explicit:
            return hilbert_series(spec.ideal);
    }
    throw error("series_of: unknown family kind");
}

LexifyResult lexify_hilbert(int n, const std::vector<Int>& h, int M) {
    if (n < 1 || M < 1) throw invalid_spec("lexify_hilbert: need n >= 1 and M >= 1");
    if (static_cast<int>(h.size()) < M + 2) {
        throw invalid_spec("lexify_hilbert: need h(0..M+1)");
    }
    if (h[0] != 1) throw not_an_o_sequence("lexify_hilbert: h(0) must be 1");
    for (const auto& v : h) {
        if (v < 0) throw not_an_o_sequence("lexify_hilbert: negative Hilbert value");
    }
    // Macaulay growth for the quotient values.
    for (int m = 1; m <= M; ++m) {
        if (h[m] == 0) {
            if (h[m + 1] != 0) throw not_an_o_sequence("lexify_hilbert: function restarts after vanishing");
        } else if (h[m + 1] > macaulay_bound(h[m], m)) {
            throw not_an_o_sequence("lexify_hilbert: growth exceeds the Macaulay bound");
        }
    }
    LexifyResult out;
    out.gens_by_degree.assign(static_cast<size_t>(M) + 1, {});
    std::vector<Monomial> prev_segment;
    std::vector<Monomial> all_gens;
    for (int m = 1; m <= M; ++m) {
        const Int k = monomial_count(n, m) - h[m];
        if (k < 0) throw not_an_o_sequence("lexify_hilbert: h exceeds the ambient dimension");
        auto segment = lex_segment(n, m, k);
        const auto grown = shadow(prev_segment);
        if (grown.size() > segment.size()) {
            throw internal_inconsistency("lexify_hilbert: shadow outgrew the lex segment");
        }
        if (!std::equal(grown.begin(), grown.end(), segment.begin())) {
            throw internal_inconsistency("lexify_hilbert: shadow is not a prefix of the segment");
        }
        for (size_t i = grown.size(); i < segment.size(); ++i) {
            out.gens_by_degree[m].push_back(segment[i]);
            all_gens.push_back(segment[i]);
            out.last_generator_degree = m;
        }
        prev_segment = std::move(segment);
    }
    out.ideal = minimalize(n, std::move(all_gens));
    if (!is_strongly_stable(out.ideal)) {
        throw internal_inconsistency("lexify_hilbert: output not strongly stable");
    }
    return out;
}

MonomialIdeal lexify(const FamilySpec& source, int max_degree) {
    const HilbertSeries hs = series_of(source);
    const ReducedSeries rs = reduce(hs);
    int M = max_degree;
    if (M < 0) {
        if (rs.d == 0) {
            M = static_cast<int>(rs.q.degree()) + 2;
        } else {
            const auto e = hilbert_coefficients(rs);
            const Int s = b_sequence(e).back();
            if (s > 1000) throw invalid_spec("lexify: default truncation degree too large; pass one explicitly");
            const long long post = postulation_number(rs);
            M = static_cast<int>(std::max<long long>(post + 2, s.convert_to<long long>() + 1));
        }
        M = std::max(M, 1);
    }
    std::vector<Int> h;
    h.reserve(static_cast<size_t>(M) + 2);
    for (int t = 0; t <= M + 1; ++t) h.push_back(series_coefficient(hs, t));
    LexifyResult built = lexify_hilbert(source.n, h, M);
    if (built.last_generator_degree == M) {
        throw truncation_unsound("lexify: a minimal generator appears at the final degree; raise the degree cap");
    }
    if (rs.d >= 1) {
        if (Rat(h[M]) != hilbert_polynomial(rs).eval(Int(M))) {
            throw truncation_unsound("lexify: Hilbert function has not reached its polynomial at the final degree");
        }
    } else if (h[M] != 0) {
        throw truncation_unsound("lexify: Hilbert function has not vanished at the final degree");
    }
    return built.ideal;
}

FamilyInstance realize(const FamilySpec& spec, int max_lex_degree) {
    FamilyInstance inst;
    switch (spec.kind) {
        case FamilySpec::Kind::CompleteIntersection: {
            CiData ci = ci_series(spec.n, spec.degrees);
            inst.series = std::move(ci.series);
            inst.oracle = ci.oracle;
            inst.depth = reduce(inst.series).d; // Cohen-Macaulay
            break;
        }
        case FamilySpec::Kind::Powers: {
            inst.ideal = powers_ideal(spec.n, spec.c, spec.a);
            inst.series = hilbert_series(*inst.ideal);
            inst.oracle = stable_regularity(*inst.ideal);
            inst.depth = stable_depth(*inst.ideal);
            break;
        }
        case FamilySpec::Kind::CyclicPolytope: {
            inst.ideal = cyclic_polytope_ideal(spec.n, spec.d);
            inst.series = hilbert_series(*inst.ideal);
            inst.oracle = OracleResult{spec.d, spec.d, OracleResult::Method::ClosedForm};
            inst.depth = spec.d; // Cohen-Macaulay
            break;
        }
        case FamilySpec::Kind::LexOf: {
            if (!spec.inner) throw invalid_spec("realize: lexOf has no inner family");
            inst.ideal = lexify(*spec.inner, max_lex_degree);
            inst.series = hilbert_series(*inst.ideal);
            inst.oracle = stable_regularity(*inst.ideal);
            inst.depth = stable_depth(*inst.ideal);
            break;
        }
        case FamilySpec::Kind::Explicit: {
            inst.ideal = spec.ideal;
            inst.series = hilbert_series(*inst.ideal);
            if (is_strongly_stable(*inst.ideal)) {
                inst.oracle = stable_regularity(*inst.ideal);
                inst.depth = stable_depth(*inst.ideal);
            } else {
                inst.depth_positive = is_saturated(*inst.ideal);
            }
            break;
        }
    }
    if (inst.depth) inst.depth_positive = *inst.depth >= 1;
    return inst;
}

} // namespace cmreg
