#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cmreg {

// All core arithmetic is exact. No floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// base^(2^log2exp) by repeated squaring of the whole value.
inline Int pow_pow2(Int base, unsigned log2exp) {
    for (unsigned i = 0; i < log2exp; ++i) base *= base;
    return base;
}

inline Int int_pow(Int base, unsigned long long e) {
    Int r = 1;
    while (e) {
        if (e & 1ULL) r *= base;
        base *= base;
        e >>= 1ULL;
    }
    return r;
}

/// Smallest a >= lo with pred(a) true. pred must be monotone in a
/// (once true, stays true). Exponential probe, then bisection.
template <typename Pred>
long long least_satisfying(long long lo, Pred pred) {
    long long hi = lo;
    long long step = 1;
    while (!pred(hi)) {
        hi += step;
        step *= 2;
    }
    long long a = lo, b = hi;
    while (a < b) {
        long long mid = a + (b - a) / 2;
        if (pred(mid)) b = mid; else a = mid + 1;
    }
    return a;
}

} // namespace cmreg
