#include "cmreg/combinat.hpp"

#include <algorithm>
#include <numeric>

#include "cmreg/errors.hpp"

namespace cmreg {

int Monomial::degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

std::string Monomial::str() const {
    std::string out;
    for (int i = 0; i < vars(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (exps[i] > 1) {
            out += '^';
            out += std::to_string(exps[i]);
        }
    }
    return out.empty() ? "1" : out;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exps.size() && i < b.exps.size(); ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    }
    return a.exps.size() > b.exps.size();
}

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exps.size(); ++i) {
        if (a.exps[i] > b.exps[i]) return false;
    }
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

Monomial quotient_by_gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i] - b.exps[i], 0);
    return r;
}

Monomial times_var(const Monomial& a, int var) {
    Monomial r = a;
    r.exps.at(var) += 1;
    return r;
}

Int binomial(const Int& a, long long b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    if (a >= 0 && a < b) return 0;
    Int r = 1;
    // C(a,i) = C(a,i-1)*(a-i+1)/i stays integral at every step.
    for (long long i = 1; i <= b; ++i) {
        r *= a - (i - 1);
        r /= i;
    }
    return r;
}

Int monomial_count(int n, int m) {
    return binomial(Int(n) + m - 1, m);
}

Int MacaulayRep::reconstruct() const {
    Int h = 0;
    for (size_t i = 0; i < uppers.size(); ++i) {
        h += binomial(uppers[i], degree - static_cast<long long>(i));
    }
    return h;
}

MacaulayRep macaulay_rep(const Int& h, int m) {
    if (h < 1 || m < 1) throw error("macaulay_rep: requires h >= 1 and m >= 1");
    MacaulayRep rep;
    rep.degree = m;
    Int rem = h;
    Int prev_upper = 0; // strict-decrease guard
    for (int j = m; j >= 1 && rem > 0; --j) {
        // largest a with C(a,j) <= rem; a >= j since C(j,j)=1 <= rem
        long long a = least_satisfying(j, [&](long long x) { return binomial(Int(x) + 1, j) > rem; });
        Int upper = a;
        if (!rep.uppers.empty() && upper >= prev_upper) {
            throw internal_inconsistency("macaulay_rep: greedy terms not strictly decreasing");
        }
        rep.uppers.push_back(upper);
        prev_upper = upper;
        rem -= binomial(upper, j);
    }
    if (rem != 0) throw internal_inconsistency("macaulay_rep: greedy expansion did not terminate");
    return rep;
}

Int macaulay_bound(const Int& h, int m) {
    MacaulayRep rep = macaulay_rep(h, m);
    Int b = 0;
    for (size_t i = 0; i < rep.uppers.size(); ++i) {
        long long lower = rep.degree - static_cast<long long>(i);
        b += binomial(rep.uppers[i] + 1, lower + 1);
    }
    return b;
}

namespace {

// Descending-lex successor among degree-m exponent vectors; false at the end.
bool next_lex(std::vector<int>& e) {
    const int n = static_cast<int>(e.size());
    int i = -1;
    for (int j = n - 2; j >= 0; --j) {
        if (e[j] > 0) { i = j; break; }
    }
    if (i < 0) return false;
    int tail = 0;
    for (int j = i + 1; j < n; ++j) {
        tail += e[j];
        e[j] = 0;
    }
    e[i] -= 1;
    e[i + 1] = tail + 1;
    return true;
}

} // namespace

std::vector<Monomial> lex_segment(int n, int m, const Int& k) {
    if (n < 1 || m < 0 || k < 0) throw error("lex_segment: bad parameters");
    const Int total = monomial_count(n, m);
    if (k > total) throw segment_too_large("lex_segment: k exceeds the degree-" + std::to_string(m) + " monomial count");
    if (k > 2'000'000) throw error("lex_segment: segment too large to materialize");
    const auto count = k.convert_to<size_t>();
    std::vector<Monomial> seg;
    seg.reserve(count);
    std::vector<int> e(n, 0);
    e[0] = m;
    for (size_t i = 0; i < count; ++i) {
        seg.emplace_back(e);
        if (i + 1 < count && !next_lex(e)) {
            throw internal_inconsistency("lex_segment: enumeration ended early");
        }
    }
    return seg;
}

std::vector<Monomial> monomials_of_degree(int n, int m) {
    return lex_segment(n, m, monomial_count(n, m));
}

Int lex_rank(const Monomial& m) {
    // Monomials of degree t in k variables preceding e: those with a larger
    // exponent at the first position, recursively.
    Int rank = 0;
    int rem = m.degree();
    const int n = m.vars();
    for (int i = 0; i + 1 < n && rem > 0; ++i) {
        for (int v = rem; v > m.exps[i]; --v) {
            rank += monomial_count(n - i - 1, rem - v);
        }
        rem -= m.exps[i];
    }
    return rank;
}

Monomial lex_monomial_at(int n, int m, const Int& rank) {
    if (rank < 0 || rank >= monomial_count(n, m)) {
        throw error("lex_monomial_at: rank out of range");
    }
    Monomial out{std::vector<int>(n, 0)};
    Int rem_rank = rank;
    int rem = m;
    for (int i = 0; i + 1 < n; ++i) {
        int v = rem;
        for (; v > 0; --v) {
            const Int block = monomial_count(n - i - 1, rem - v);
            if (rem_rank < block) break;
            rem_rank -= block;
        }
        out.exps[i] = v;
        rem -= v;
    }
    out.exps[n - 1] = rem;
    return out;
}

LexSegment compact_segment(int n, int m, const Int& k) {
    if (n < 1 || m < 0 || k < 0) throw error("compact_segment: bad parameters");
    if (k > monomial_count(n, m)) {
        throw segment_too_large("compact_segment: k exceeds the degree-" + std::to_string(m) + " monomial count");
    }
    LexSegment seg{n, m, k, Monomial{}};
    if (k > 0) seg.last = lex_monomial_at(n, m, k - 1);
    return seg;
}

std::vector<Monomial> materialize(const LexSegment& seg) {
    return lex_segment(seg.n, seg.degree, seg.size);
}

LexSegment shadow(const LexSegment& seg) {
    const Int quotient = monomial_count(seg.n, seg.degree) - seg.size;
    Int grown;
    if (seg.size == 0) {
        grown = 0;
    } else if (quotient == 0) {
        grown = monomial_count(seg.n, seg.degree + 1);
    } else {
        // Lex segments attain the Macaulay bound exactly.
        grown = monomial_count(seg.n, seg.degree + 1) - macaulay_bound(quotient, seg.degree);
    }
    return compact_segment(seg.n, seg.degree + 1, grown);
}

std::vector<Monomial> shadow(const std::vector<Monomial>& segment) {
    if (segment.empty()) return {};
    const int n = segment.front().vars();
    const int m = segment.front().degree();
    for (const auto& u : segment) {
        if (u.vars() != n || u.degree() != m) {
            throw error("shadow: input must be a single-degree segment");
        }
    }
    std::vector<Monomial> out;
    out.reserve(segment.size() * n);
    for (const auto& u : segment) {
        for (int j = 0; j < n; ++j) out.push_back(times_var(u, j));
    }
    std::sort(out.begin(), out.end(), lex_greater);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // The shadow of a lex segment is a lex segment; anything else is a bug.
    const auto expect = lex_segment(n, m + 1, Int(out.size()));
    if (out != expect) throw not_a_lex_segment("shadow: output is not an initial lex segment");
    return out;
}

} // namespace cmreg
