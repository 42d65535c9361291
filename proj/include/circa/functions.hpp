#pragma once

#include "circa/dyadic.hpp"

namespace circa {

/// Certified enclosures of the constants and elementary functions the
/// library needs. Every function returns an interval of width <= 2^-prec
/// containing the exact value; endpoints are exact dyadics.

Interval pi_interval(long prec);

// ln q for rational q > 0 (domain error otherwise). Argument reduction to
// m = q/2^e in [1,2), then 2*atanh((m-1)/(m+1)) with a certified series
// remainder; the 2^e part uses a cached enclosure of ln 2.
Interval ln_interval(const Rational& q, long prec);

// sin t / cos t at rational t. Arguments are reduced modulo 2*pi with the
// certified pi enclosure; the Taylor remainder after truncation is bounded
// by the first omitted term's magnitude.
Interval sin_interval(const Rational& t, long prec);
Interval cos_interval(const Rational& t, long prec);
std::pair<Interval, Interval> sin_cos_interval(const Rational& t, long prec);

}  // namespace circa
