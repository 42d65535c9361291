#include "circa/functions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace circa {

namespace {

// Rational-endpoint interval used internally before the final dyadic rounding.
struct QInterval {
    Rational lo, hi;
};

long bucket(long prec) { return ((prec + 31) / 32) * 32; }

// atan(1/m) for integer m >= 2 via the alternating series
// sum_j (-1)^j / ((2j+1) m^(2j+1)); the truncation error is bounded by the
// first omitted term.
QInterval atan_inv(unsigned long m, long prec) {
    const Rational m2 = Rational(static_cast<long>(m)) * Rational(static_cast<long>(m));
    Rational pow(1, static_cast<long>(m));  // 1/m^(2j+1)
    Rational sum(0);
    const Rational target = Rational::pow2(-(prec + 2));
    long j = 0;
    while (true) {
        Rational term = pow / Rational(2 * j + 1);
        if (term <= target) {
            // value lies between sum and sum +/- term depending on parity
            if (j % 2 == 0) return {sum, sum + term};
            return {sum - term, sum};
        }
        sum += (j % 2 == 0) ? term : -term;
        pow = pow / m2;
        ++j;
    }
}

std::mutex cache_mu;
std::map<long, Interval> pi_cache;
std::map<long, Interval> ln2_cache;
std::map<std::pair<unsigned long, long>, Interval> ln_int_cache;

Interval pi_compute(long prec) {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    QInterval a5 = atan_inv(5, prec + 7);
    QInterval a239 = atan_inv(239, prec + 5);
    Rational lo = Rational(16) * a5.lo - Rational(4) * a239.hi;
    Rational hi = Rational(16) * a5.hi - Rational(4) * a239.lo;
    return Interval::of_rationals(lo, hi, prec + 2);
}

// 2*atanh(z) = 2 sum_j z^(2j+1)/(2j+1) for 0 <= z <= 1/3, remainder after
// the last kept term bounded by 2 z^(2J+1)/(2J+1) * 1/(1-z^2) <= kept*(9/8).
QInterval two_atanh(const Rational& z, long prec) {
    if (z.is_zero()) return {Rational(0), Rational(0)};
    const Rational z2 = z * z;
    Rational pow = z;
    Rational sum(0);
    const Rational target = Rational::pow2(-(prec + 3));
    long j = 0;
    while (true) {
        Rational term = pow / Rational(2 * j + 1);
        if (term <= target) {
            Rational rem = Rational(2) * term * Rational(9, 8);
            Rational s2 = Rational(2) * sum;
            return {s2, s2 + rem};
        }
        sum += term;
        pow *= z2;
        ++j;
    }
}

Interval ln2_compute(long prec) {
    QInterval v = two_atanh(Rational(1, 3), prec + 2);
    return Interval::of_rationals(v.lo, v.hi, prec + 2);
}

Interval cached(std::map<long, Interval>& cache, Interval (*compute)(long), long prec) {
    const long b = bucket(prec);
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = cache.find(b);
        if (it != cache.end()) return it->second.round_out(prec + 2);
    }
    Interval v = compute(b);
    std::lock_guard<std::mutex> lk(cache_mu);
    cache.emplace(b, v);
    return v.round_out(prec + 2);
}

struct SinCos {
    QInterval sin, cos;
};

// One Taylor series of sin (first_degree 1) or cos (first_degree 0) at an
// exact rational c; the Lagrange remainder is the magnitude of the first
// omitted term.
QInterval taylor_series(const Rational& c, const Rational& c2, long first_degree,
                        const Rational& target) {
    Rational sum(0);
    Rational term = (first_degree == 0) ? Rational(1) : c;
    long d = first_degree;
    while (true) {
        Rational next = term * c2 / Rational(-(d + 1) * (d + 2));
        Rational bound = next.abs();
        if (bound <= target) {
            sum += term;
            return {sum - bound, sum + bound};
        }
        sum += term;
        term = next;
        d += 2;
    }
}

// Taylor expansion at exact rational c, |c| <= 4.
SinCos sin_cos_taylor(const Rational& c, long prec) {
    const Rational c2 = c * c;
    const Rational target = Rational::pow2(-(prec + 2));
    return {taylor_series(c, c2, 1, target), taylor_series(c, c2, 0, target)};
}

}  // namespace

Interval pi_interval(long prec) { return cached(pi_cache, pi_compute, prec); }

namespace {
Interval ln2_interval(long prec) { return cached(ln2_cache, ln2_compute, prec); }
}

namespace {
Interval ln_compute(const Rational& q, long prec) {
    // reduce to m = q / 2^e in [1, 2)
    long e = q.mag_bits() - 1;
    while (Rational::pow2(e) > q) --e;
    while (Rational::pow2(e + 1) <= q) ++e;
    const Rational m = q / Rational::pow2(e);

    const long w = prec + 4;
    QInterval lnm = two_atanh((m - Rational(1)) / (m + Rational(1)), w);
    Rational lo = lnm.lo, hi = lnm.hi;
    if (e != 0) {
        long ebits = 1;
        for (long a = (e < 0 ? -e : e); a > 1; a >>= 1) ++ebits;
        Interval l2 = ln2_interval(w + ebits + 1);
        Rational re(e);
        if (e > 0) {
            lo += re * l2.lo().to_rational();
            hi += re * l2.hi().to_rational();
        } else {
            lo += re * l2.hi().to_rational();
            hi += re * l2.lo().to_rational();
        }
    }
    return Interval::of_rationals(lo, hi, prec + 2);
}
}  // namespace

Interval ln_interval(const Rational& q, long prec) {
    if (q.sign() <= 0) throw std::domain_error("ln requires a positive argument");
    if (q == Rational(1)) return Interval();
    const bool small_int = q.denominator() == 1 && q.numerator().fits_ulong_p();
    if (!small_int) return ln_compute(q, prec);

    // integer arguments recur constantly (gauge sums); cache per precision bucket
    const unsigned long k = q.numerator().get_ui();
    const long b = bucket(prec);
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = ln_int_cache.find({k, b});
        if (it != ln_int_cache.end()) return it->second.round_out(prec + 2);
    }
    Interval v = ln_compute(q, b);
    std::lock_guard<std::mutex> lk(cache_mu);
    ln_int_cache.emplace(std::make_pair(k, b), v);
    return v.round_out(prec + 2);
}

std::pair<Interval, Interval> sin_cos_interval(const Rational& t, long prec) {
    if (t.is_zero())
        return {Interval(), Interval::point(Dyadic(1))};
    const long w = prec + 6;

    Rational c = t;
    Rational r(0);
    if (t.abs() > Rational(4)) {
        // k = nearest integer to t / (2 pi), computed from a coarse midpoint
        Interval tp = pi_interval(64);
        Rational two_pi_mid = tp.lo().to_rational() + tp.hi().to_rational();
        mpz_class k_num;
        {
            Rational ratio = t / two_pi_mid + Rational(1, 2);
            mpz_fdiv_q(k_num.get_mpz_t(), ratio.numerator().get_mpz_t(),
                       ratio.denominator().get_mpz_t());
        }
        Rational k(k_num);
        if (!k.is_zero()) {
            long kb = k.mag_bits();
            Interval p2 = pi_interval(w + kb + 4);
            Rational tpl = Rational(2) * p2.lo().to_rational();
            Rational tph = Rational(2) * p2.hi().to_rational();
            Rational jlo, jhi;
            if (k.sign() > 0) { jlo = t - k * tph; jhi = t - k * tpl; }
            else { jlo = t - k * tpl; jhi = t - k * tph; }
            c = (jlo + jhi) / Rational(2);
            r = (jhi - jlo) / Rational(2);
        }
    }

    SinCos sc = sin_cos_taylor(c, w);
    // widen by the reduction radius: |sin x - sin c| <= |x - c|, same for cos
    Interval s = Interval::of_rationals(sc.sin.lo - r, sc.sin.hi + r, prec + 2);
    Interval co = Interval::of_rationals(sc.cos.lo - r, sc.cos.hi + r, prec + 2);
    return {s, co};
}

Interval sin_interval(const Rational& t, long prec) { return sin_cos_interval(t, prec).first; }
Interval cos_interval(const Rational& t, long prec) { return sin_cos_interval(t, prec).second; }

}  // namespace circa
