#include "cmreg/polyseries.hpp"

#include <algorithm>

#include "cmreg/combinat.hpp"
#include "cmreg/errors.hpp"

namespace cmreg {

namespace {

template <typename T>
std::string magnitude_str(const T& a) {
    T m = a;
    if (m < 0) m = -m;
    return m.str();
}

template <typename P>
std::string poly_str(const P& p, const char* var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < p.c.size(); ++i) {
        const auto& a = p.c[i];
        if (a == 0) continue;
        std::string mag = magnitude_str(a);
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace

void ZPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Int ZPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& a : c) s += a;
    return s;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    }
    return ZPoly(std::move(r));
}

ZPoly ZPoly::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Int> r(c.size() + k, Int(0));
    std::copy(c.begin(), c.end(), r.begin() + k);
    return ZPoly(std::move(r));
}

std::string ZPoly::str() const { return poly_str(*this, "z"); }

void RatPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat RatPoly::eval(const Int& t) const {
    Rat s = 0;
    for (size_t i = c.size(); i-- > 0;) s = s * Rat(t) + c[i];
    return s;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i) {
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    }
    return RatPoly(std::move(r));
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const Rat& a = c[i];
        std::string mag = magnitude_str(a);
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatPoly binomial_poly(const Int& shift, int lower) {
    if (lower < 0) return {};
    RatPoly p{Rat(1)};
    for (int i = 0; i < lower; ++i) {
        // multiply by (t + shift - i)
        RatPoly lin{Rat(shift - i), Rat(1)};
        p = p * lin;
    }
    Int fact = 1;
    for (int i = 2; i <= lower; ++i) fact *= i;
    for (auto& a : p.c) a /= Rat(fact);
    return p;
}

Int series_coefficient(const ZPoly& num, int denom_exp, long long t) {
    if (t < 0) return 0;
    if (denom_exp == 0) return num.coeff(static_cast<size_t>(t));
    Int s = 0;
    const long long top = std::min<long long>(t, num.degree());
    for (long long j = 0; j <= top; ++j) {
        const Int& a = num.coeff(static_cast<size_t>(j));
        if (a == 0) continue;
        s += a * binomial(Int(t - j) + denom_exp - 1, denom_exp - 1);
    }
    return s;
}

Int series_coefficient(const HilbertSeries& hs, long long t) {
    return series_coefficient(hs.numerator, hs.denom_exp, t);
}

Int series_coefficient(const ReducedSeries& rs, long long t) {
    return series_coefficient(rs.q, rs.d, t);
}

ReducedSeries reduce(const HilbertSeries& hs) {
    if (hs.numerator.is_zero()) throw zero_series("reduce: numerator is identically zero");
    ZPoly q = hs.numerator;
    int divisions = 0;
    while (q.eval_at_one() == 0) {
        // q / (1-z): quotient coefficients are the partial sums.
        std::vector<Int> quot(q.c.size() - 1, Int(0));
        Int run = 0;
        for (size_t i = 0; i + 1 < q.c.size(); ++i) {
            run += q.c[i];
            quot[i] = run;
        }
        q = ZPoly(std::move(quot));
        ++divisions;
    }
    if (divisions > hs.denom_exp) {
        throw error("reduce: numerator divisible by (1-z) more often than the denominator exponent");
    }
    return ReducedSeries{q, hs.denom_exp - divisions};
}

RatPoly hilbert_polynomial(const ReducedSeries& rs) {
    if (rs.d == 0) throw dimension_zero("hilbert_polynomial: dimension is zero");
    RatPoly p;
    for (size_t j = 0; j < rs.q.c.size(); ++j) {
        if (rs.q.c[j] == 0) continue;
        RatPoly term = binomial_poly(Int(rs.d) - 1 - static_cast<long long>(j), rs.d - 1);
        for (auto& a : term.c) a *= Rat(rs.q.c[j]);
        p = p + term;
    }
    return p;
}

CoefficientVector hilbert_coefficients(const ReducedSeries& rs) {
    if (rs.d == 0) throw dimension_zero("hilbert_coefficients: dimension is zero");
    CoefficientVector cv;
    cv.dim = rs.d;
    cv.e.reserve(rs.d);
    for (int i = 0; i < rs.d; ++i) {
        // i-th Taylor coefficient of Q' at z = 1: sum_j C(j,i) q_j
        Int ei = 0;
        for (size_t j = 0; j < rs.q.c.size(); ++j) {
            ei += binomial(Int(j), i) * rs.q.c[j];
        }
        cv.e.push_back(ei);
    }
    // Independent route: the binomial-basis expansion must reproduce the
    // Hilbert polynomial coefficient for coefficient.
    RatPoly expanded;
    for (int i = 0; i < rs.d; ++i) {
        RatPoly term = binomial_poly(Int(rs.d) - 1 - i, rs.d - 1 - i);
        const Int sign = (i % 2 == 0) ? Int(1) : Int(-1);
        for (auto& a : term.c) a *= Rat(sign * cv.e[i]);
        expanded = expanded + term;
    }
    if (!(expanded == hilbert_polynomial(rs))) {
        throw internal_inconsistency("hilbert_coefficients: binomial-basis re-expansion mismatch");
    }
    return cv;
}

CoefficientVector cumulative_coefficients(const ReducedSeries& rs) {
    if (rs.d == 0) throw dimension_zero("cumulative_coefficients: dimension is zero");
    CoefficientVector cv;
    cv.dim = rs.d;
    cv.e.reserve(rs.d + 1);
    for (int i = 0; i <= rs.d; ++i) {
        Int ei = 0;
        for (size_t j = 0; j < rs.q.c.size(); ++j) {
            ei += binomial(Int(j), i) * rs.q.c[j];
        }
        cv.e.push_back(ei);
    }
    // Same cross-check against the one-dimension-up series.
    const ReducedSeries up{rs.q, rs.d + 1};
    RatPoly expanded;
    for (int i = 0; i <= rs.d; ++i) {
        RatPoly term = binomial_poly(Int(rs.d) - i, rs.d - i);
        const Int sign = (i % 2 == 0) ? Int(1) : Int(-1);
        for (auto& a : term.c) a *= Rat(sign * cv.e[i]);
        expanded = expanded + term;
    }
    if (!(expanded == hilbert_polynomial(up))) {
        throw internal_inconsistency("cumulative_coefficients: binomial-basis re-expansion mismatch");
    }
    return cv;
}

long long postulation_number(const ReducedSeries& rs) {
    if (rs.d == 0) throw dimension_zero("postulation_number: dimension is zero");
    const long long post = rs.q.degree() - rs.d;
    const RatPoly p = hilbert_polynomial(rs);
    for (long long t = post + 1; t <= post + rs.d + 1; ++t) {
        if (t < 0) continue;
        if (Rat(series_coefficient(rs, t)) != p.eval(Int(t))) {
            throw internal_inconsistency("postulation_number: function and polynomial disagree past the postulation degree");
        }
    }
    return post;
}

} // namespace cmreg
