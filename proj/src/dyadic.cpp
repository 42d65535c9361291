#include "circa/dyadic.hpp"

#include <algorithm>

namespace circa {

void Dyadic::normalize() {
    if (man_ == 0) { exp_ = 0; return; }
    unsigned long tz = mpz_scan1(man_.get_mpz_t(), 0);
    if (tz > 0) {
        man_ >>= tz;
        exp_ += static_cast<long>(tz);
    }
}

Rational Dyadic::to_rational() const {
    if (exp_ >= 0) {
        mpz_class m = man_ << exp_;
        return Rational(m);
    }
    mpz_class den(1);
    den <<= static_cast<unsigned long>(-exp_);
    return Rational(man_, den);
}

Dyadic Dyadic::floor_of(const Rational& q, long prec) {
    // largest m*2^-prec <= q: m = floor(q * 2^prec)
    mpz_class num = q.numerator(), den = q.denominator();
    if (prec >= 0) num <<= static_cast<unsigned long>(prec);
    else den <<= static_cast<unsigned long>(-prec);
    mpz_class m;
    mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Dyadic(m, -prec);
}

Dyadic Dyadic::ceil_of(const Rational& q, long prec) {
    mpz_class num = q.numerator(), den = q.denominator();
    if (prec >= 0) num <<= static_cast<unsigned long>(prec);
    else den <<= static_cast<unsigned long>(-prec);
    mpz_class m;
    mpz_cdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Dyadic(m, -prec);
}

Dyadic Dyadic::floor_to(long prec) const {
    if (exp_ + prec >= 0) return *this;  // already on a finer grid
    unsigned long shift = static_cast<unsigned long>(-(exp_ + prec));
    mpz_class m;
    mpz_fdiv_q_2exp(m.get_mpz_t(), man_.get_mpz_t(), shift);
    return Dyadic(m, -prec);
}

Dyadic Dyadic::ceil_to(long prec) const {
    if (exp_ + prec >= 0) return *this;
    unsigned long shift = static_cast<unsigned long>(-(exp_ + prec));
    mpz_class m;
    mpz_cdiv_q_2exp(m.get_mpz_t(), man_.get_mpz_t(), shift);
    return Dyadic(m, -prec);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.man_ == 0) return b;
    if (b.man_ == 0) return a;
    long e = std::min(a.exp_, b.exp_);
    mpz_class ma = a.man_ << static_cast<unsigned long>(a.exp_ - e);
    mpz_class mb = b.man_ << static_cast<unsigned long>(b.exp_ - e);
    return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.man_ * b.man_, a.exp_ + b.exp_);
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    long e = std::min(a.exp_, b.exp_);
    mpz_class ma = a.man_ << static_cast<unsigned long>(a.exp_ - e);
    mpz_class mb = b.man_ << static_cast<unsigned long>(b.exp_ - e);
    return ::cmp(ma, mb);
}

std::string Dyadic::to_decimal() const {
    if (exp_ >= 0) {
        mpz_class v = man_ << static_cast<unsigned long>(exp_);
        return v.get_str();
    }
    unsigned long k = static_cast<unsigned long>(-exp_);
    mpz_class five;
    mpz_ui_pow_ui(five.get_mpz_t(), 5, k);
    mpz_class scaled = man_ * five;  // value = scaled / 10^k
    bool neg = scaled < 0;
    std::string digits = mpz_class(::abs(scaled)).get_str();
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    size_t last = digits.find_last_not_of('0');
    if (digits[last] == '.') ++last;
    digits.erase(last + 1);
    return (neg ? "-" : "") + digits;
}

std::optional<Dyadic> Dyadic::parse_decimal(const std::string& s) {
    Rational q = Rational::from_string(s);
    mpz_class den = q.denominator();
    // dyadic iff reduced denominator is a power of two
    if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
    unsigned long e = mpz_scan1(den.get_mpz_t(), 0);
    return Dyadic(q.numerator(), -static_cast<long>(e));
}

Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }

Interval::Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::of_rationals(const Rational& lo, const Rational& hi, long prec) {
    if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    return Interval(Dyadic::floor_of(lo, prec), Dyadic::ceil_of(hi, prec));
}

Dyadic Interval::mid() const {
    Dyadic s = lo_ + hi_;
    return Dyadic(s.mantissa(), s.exponent() - 1);
}

Dyadic Interval::rad() const {
    Dyadic w = width();
    return Dyadic(w.mantissa(), w.exponent() - 1);
}

Dyadic Interval::mag() const { return max(lo_.abs(), hi_.abs()); }

Dyadic Interval::mig() const {
    if (contains_zero()) return Dyadic(0);
    return min(lo_.abs(), hi_.abs());
}

bool Interval::contains(const Rational& q) const {
    return lo_.to_rational() <= q && q <= hi_.to_rational();
}

bool Interval::contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Interval operator*(const Interval& a, const Interval& b) {
    const Dyadic p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
    const Dyadic p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

Interval Interval::div(const Interval& a, const Interval& b, long prec) {
    if (b.contains_zero())
        throw std::domain_error("Interval: division by interval containing zero");
    const Rational bl = b.lo_.to_rational(), bh = b.hi_.to_rational();
    const Rational al = a.lo_.to_rational(), ah = a.hi_.to_rational();
    const Rational q1 = al / bl, q2 = al / bh, q3 = ah / bl, q4 = ah / bh;
    const Rational lo = min(min(q1, q2), min(q3, q4));
    const Rational hi = max(max(q1, q2), max(q3, q4));
    return of_rationals(lo, hi, prec);
}

Interval Interval::scaled(const Rational& q, long prec) const {
    if (q.is_zero()) return Interval();
    Rational l = lo_.to_rational() * q, h = hi_.to_rational() * q;
    if (q.sign() < 0) std::swap(l, h);
    return of_rationals(l, h, prec);
}

Interval Interval::round_out(long prec) const {
    return Interval(lo_.floor_to(prec), hi_.ceil_to(prec));
}

Interval Interval::hull(const Interval& other) const {
    return Interval(min(lo_, other.lo_), max(hi_, other.hi_));
}

std::optional<Interval> Interval::intersect(const Interval& other) const {
    Dyadic l = max(lo_, other.lo_), h = min(hi_, other.hi_);
    if (l > h) return std::nullopt;
    return Interval(l, h);
}

Interval Interval::abs_hull() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    return Interval(Dyadic(0), mag());
}

}  // namespace circa
