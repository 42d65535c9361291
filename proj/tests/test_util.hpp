#pragma once

#include "circa/dyadic.hpp"

namespace circa::testutil {

inline Rational width_of(const Interval& iv) { return iv.width().to_rational(); }

// Containment of q up to slack on both sides; use when q is itself an
// approximation (a frozen decimal) of the enclosed value.
inline bool contains_near(const Interval& iv, const Rational& q, const Rational& slack) {
    return iv.lo().to_rational() - slack <= q && q <= iv.hi().to_rational() + slack;
}

// --- independent series oracles (test-only; exact rational arithmetic) ----

// sin t by direct Taylor summation, |error| <= 2^-bits; no argument
// reduction, so keep |t| <= 4.
inline Rational oracle_sin(const Rational& t, long bits) {
    const Rational target = Rational::pow2(-bits - 2);
    Rational sum(0), term = t;
    const Rational t2 = t * t;
    long d = 1;
    while (term.abs() > target) {
        sum += term;
        term = term * t2 / Rational(-(d + 1) * (d + 2));
        d += 2;
    }
    return sum;
}

// ln 2 = sum_{k>=1} 1/(k 2^k), tail after K terms <= 2^-K * 2/(K+1).
inline Rational oracle_ln2(long bits) {
    Rational sum(0);
    for (long k = 1; k <= bits + 4; ++k) sum += Rational(1, k) * Rational::pow2(-k);
    return sum;
}

// ln(1 + x) for |x| <= 1/2 via the alternating series, |error| <= 2^-bits.
inline Rational oracle_ln1p(const Rational& x, long bits) {
    const Rational target = Rational::pow2(-bits - 2);
    Rational sum(0), pow = x;
    long k = 1;
    while (pow.abs() / Rational(k) > target) {
        sum += pow / Rational(k % 2 == 1 ? k : -k);
        pow *= x;
        ++k;
    }
    return sum;
}

inline Rational oracle_ln3(long bits) {
    return oracle_ln2(bits + 2) + oracle_ln1p(Rational(1, 2), bits + 2);
}

}  // namespace circa::testutil
