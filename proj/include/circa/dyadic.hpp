#pragma once

#include <optional>
#include <string>

#include "circa/rational.hpp"

namespace circa {

/// Exact dyadic rational man * 2^exp. Canonical: man is odd or zero (exp = 0).
class Dyadic {
public:
    Dyadic() : man_(0), exp_(0) {}
    Dyadic(long v) : man_(v), exp_(0) { normalize(); }
    Dyadic(mpz_class man, long exp) : man_(std::move(man)), exp_(exp) { normalize(); }

    static Dyadic pow2(long e) { return Dyadic(mpz_class(1), e); }
    // Nearest grid point at or below/above q on the 2^-prec grid.
    static Dyadic floor_of(const Rational& q, long prec);
    static Dyadic ceil_of(const Rational& q, long prec);

    const mpz_class& mantissa() const { return man_; }
    long exponent() const { return exp_; }
    bool is_zero() const { return man_ == 0; }
    int sign() const { return sgn(man_); }

    Rational to_rational() const;
    double to_double() const { return to_rational().to_double(); }
    std::string to_decimal() const;  // exact, e.g. "0.375"
    // Parses an exact decimal; nullopt if the value is not dyadic.
    static std::optional<Dyadic> parse_decimal(const std::string& s);

    Dyadic abs() const { return sign() >= 0 ? *this : -*this; }
    // Round toward -inf / +inf onto the 2^-prec grid.
    Dyadic floor_to(long prec) const;
    Dyadic ceil_to(long prec) const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.man_, a.exp_); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }
    static int cmp(const Dyadic& a, const Dyadic& b);

private:
    void normalize();
    mpz_class man_;
    long exp_;
};

Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

/// Closed interval [lo, hi] with exact dyadic endpoints. Every operation
/// returns an interval containing the exact image set; division and
/// round_out round outward only.
class Interval {
public:
    Interval() : lo_(), hi_() {}
    Interval(Dyadic lo, Dyadic hi);
    static Interval point(const Dyadic& d) { return Interval(d, d); }
    static Interval zero() { return Interval(); }
    // Outward dyadic hull of [lo, hi] on the 2^-prec grid.
    static Interval of_rationals(const Rational& lo, const Rational& hi, long prec);
    static Interval of_rational(const Rational& q, long prec) { return of_rationals(q, q, prec); }

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    Dyadic width() const { return hi_ - lo_; }
    Dyadic mid() const;           // exact midpoint (dyadic, so representable)
    Dyadic rad() const;           // exact half-width
    Dyadic mag() const;           // max |x| over the interval
    Dyadic mig() const;           // min |x| over the interval

    bool contains(const Rational& q) const;
    bool contains(const Interval& other) const;
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_negative() const { return hi_.sign() < 0; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }
    // Requires 0 not in b; endpoints outward-rounded on the 2^-prec grid.
    static Interval div(const Interval& a, const Interval& b, long prec = 64);

    Interval scaled(const Rational& q, long prec) const;  // q * [lo,hi], outward at prec
    Interval round_out(long prec) const;
    Interval hull(const Interval& other) const;
    std::optional<Interval> intersect(const Interval& other) const;
    Interval abs_hull() const;    // enclosure of {|x| : x in interval}

private:
    Dyadic lo_, hi_;
};

}  // namespace circa
