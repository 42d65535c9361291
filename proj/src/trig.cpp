#include "circa/trig.hpp"

#include <stdexcept>

namespace circa {

namespace {

const CReal& zero_coeff() {
    static const CReal z = CReal::constant(Rational(0), "zero");
    return z;
}

bool exactly_zero(const CReal& c) {
    return c.exact_value() && c.exact_value()->is_zero();
}

long ceil_log2(unsigned long v) {
    long b = 0;
    unsigned long x = 1;
    while (x < v) { x <<= 1; ++b; }
    return b;
}

Rational pow_rational(const Rational& r, unsigned k) {
    Rational out(1);
    Rational base = r;
    for (unsigned e = k; e > 0; e >>= 1) {
        if (e & 1) out *= base;
        base *= base;
    }
    return out;
}

}  // namespace

TrigPoly::TrigPoly() : degree_(0), cos_(1, zero_coeff()), sin_(1, zero_coeff()) {}

TrigPoly::TrigPoly(unsigned degree)
    : degree_(degree), cos_(degree + 1, zero_coeff()), sin_(degree + 1, zero_coeff()) {}

TrigPoly TrigPoly::constant_term(const Rational& a0) {
    TrigPoly p;
    p.cos_[0] = CReal::constant(a0);
    return p;
}

TrigPoly TrigPoly::sine(unsigned k, const Rational& amp) {
    if (k == 0) throw std::invalid_argument("TrigPoly::sine: k must be >= 1");
    TrigPoly p(k);
    p.sin_[k] = CReal::constant(amp);
    return p;
}

TrigPoly TrigPoly::cosine(unsigned k, const Rational& amp) {
    if (k == 0) throw std::invalid_argument("TrigPoly::cosine: k must be >= 1");
    TrigPoly p(k);
    p.cos_[k] = CReal::constant(amp);
    return p;
}

const CReal& TrigPoly::cos_coeff(unsigned k) const {
    return k <= degree_ ? cos_[k] : zero_coeff();
}

const CReal& TrigPoly::sin_coeff(unsigned k) const {
    if (k == 0) throw std::invalid_argument("TrigPoly: no sine coefficient at k = 0");
    return k <= degree_ ? sin_[k] : zero_coeff();
}

void TrigPoly::set_cos(unsigned k, CReal c) {
    if (k > degree_) throw std::invalid_argument("TrigPoly::set_cos: k beyond degree");
    cos_[k] = std::move(c);
}

void TrigPoly::set_sin(unsigned k, CReal c) {
    if (k == 0 || k > degree_) throw std::invalid_argument("TrigPoly::set_sin: bad index");
    sin_[k] = std::move(c);
}

bool TrigPoly::is_zero() const {
    for (unsigned k = 0; k <= degree_; ++k)
        if (!exactly_zero(cos_[k]) || (k >= 1 && !exactly_zero(sin_[k]))) return false;
    return true;
}

bool TrigPoly::all_exact() const {
    for (unsigned k = 0; k <= degree_; ++k) {
        if (!cos_[k].exact_value()) return false;
        if (k >= 1 && !sin_[k].exact_value()) return false;
    }
    return true;
}

bool TrigPoly::exact_equal(const TrigPoly& other) const {
    if (!all_exact() || !other.all_exact())
        throw std::invalid_argument("TrigPoly::exact_equal needs exact coefficients");
    unsigned top = std::max(degree_, other.degree_);
    for (unsigned k = 0; k <= top; ++k) {
        if (*cos_coeff(k).exact_value() != *other.cos_coeff(k).exact_value()) return false;
        if (k >= 1 && *sin_coeff(k).exact_value() != *other.sin_coeff(k).exact_value())
            return false;
    }
    return true;
}

TrigPoly TrigPoly::derivative() const {
    TrigPoly out(degree_);
    for (unsigned k = 1; k <= degree_; ++k) {
        const Rational kk(static_cast<long>(k));
        out.cos_[k] = sin_[k].scaled(kk);
        out.sin_[k] = cos_[k].scaled(-kk);
    }
    return out;
}

TrigPoly TrigPoly::poisson(const Rational& r) const {
    if (r.sign() < 0 || r >= Rational(1))
        throw std::domain_error("poisson: r must lie in [0, 1)");
    TrigPoly out(degree_);
    out.cos_[0] = cos_[0];
    for (unsigned k = 1; k <= degree_; ++k) {
        const Rational rk = pow_rational(r, k);
        out.cos_[k] = cos_[k].scaled(rk);
        out.sin_[k] = sin_[k].scaled(rk);
    }
    return out;
}

TrigPoly TrigPoly::scaled(const Rational& q) const {
    TrigPoly out(degree_);
    for (unsigned k = 0; k <= degree_; ++k) {
        out.cos_[k] = cos_[k].scaled(q);
        if (k >= 1) out.sin_[k] = sin_[k].scaled(q);
    }
    return out;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly out(std::max(a.degree_, b.degree_));
    for (unsigned k = 0; k <= out.degree_; ++k) {
        const CReal& ca = a.cos_coeff(k);
        const CReal& cb = b.cos_coeff(k);
        out.cos_[k] = exactly_zero(ca) ? cb : (exactly_zero(cb) ? ca : ca + cb);
        if (k >= 1) {
            const CReal& sa = a.sin_coeff(k);
            const CReal& sb = b.sin_coeff(k);
            out.sin_[k] = exactly_zero(sa) ? sb : (exactly_zero(sb) ? sa : sa + sb);
        }
    }
    return out;
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
    return a + b.scaled(Rational(-1));
}

Interval TrigPoly::eval(const Rational& t, long prec) const {
    const Rational limit = Rational::pow2(-prec);
    for (long w = prec + 2 * ceil_log2(degree_ + 2) + 8;; w += 8) {
        const unsigned cw = static_cast<unsigned>(w);
        auto [s1, c1] = sin_cos_interval(t, w);
        Interval acc = cos_[0].enclosure(cw).scaled(Rational(1, 2), w + 4);
        Interval sk = s1, ck = c1;
        for (unsigned k = 1; k <= degree_; ++k) {
            if (k > 1) {
                Interval sn = (sk * c1 + ck * s1).round_out(w + 4);
                Interval cn = (ck * c1 - sk * s1).round_out(w + 4);
                sk = sn;
                ck = cn;
            }
            if (!exactly_zero(cos_[k]))
                acc = (acc + cos_[k].enclosure(cw) * ck).round_out(w + 4);
            if (!exactly_zero(sin_[k]))
                acc = (acc + sin_[k].enclosure(cw) * sk).round_out(w + 4);
        }
        acc = acc.round_out(prec + 2);
        if (acc.width().to_rational() <= limit) return acc;
    }
}

Interval TrigPoly::eval_over(const Interval& t_range, long prec) const {
    const Rational c = t_range.mid().to_rational();
    const Rational r = t_range.rad().to_rational();
    Interval at_mid = eval(c, prec);
    const Rational slack = coeff_weight_upper(1) * r;
    return Interval::of_rationals(at_mid.lo().to_rational() - slack,
                                  at_mid.hi().to_rational() + slack, prec + 2);
}

Interval TrigPoly::wiener_norm(long prec) const {
    const Rational limit = Rational::pow2(-prec);
    for (long w = prec + ceil_log2(2 * degree_ + 2) + 4;; w += 8) {
        const unsigned cw = static_cast<unsigned>(w);
        Interval acc = cos_[0].enclosure(cw).abs_hull().scaled(Rational(1, 2), w + 4);
        for (unsigned k = 1; k <= degree_; ++k) {
            if (!exactly_zero(cos_[k]))
                acc = (acc + cos_[k].enclosure(cw).abs_hull()).round_out(w + 4);
            if (!exactly_zero(sin_[k]))
                acc = (acc + sin_[k].enclosure(cw).abs_hull()).round_out(w + 4);
        }
        acc = acc.round_out(prec + 2);
        if (acc.width().to_rational() <= limit) return acc;
    }
}

Rational TrigPoly::coeff_weight_upper(int order, long prec) const {
    const unsigned cw = static_cast<unsigned>(prec);
    Rational sum(0);
    if (order == 0)
        sum += cos_[0].enclosure(cw).abs_hull().hi().to_rational() / Rational(2);
    for (unsigned k = 1; k <= degree_; ++k) {
        Rational weight(1);
        for (int i = 0; i < order; ++i) weight *= Rational(static_cast<long>(k));
        if (!exactly_zero(cos_[k]))
            sum += weight * cos_[k].enclosure(cw).abs_hull().hi().to_rational();
        if (!exactly_zero(sin_[k]))
            sum += weight * sin_[k].enclosure(cw).abs_hull().hi().to_rational();
    }
    return sum;
}

namespace {
struct Segment {
    Rational lo, hi;
};
}  // namespace

Interval TrigPoly::sup_norm(long prec) const {
    if (is_zero()) return Interval();

    const TrigPoly dp = derivative();
    // |p''| <= L2 everywhere, so on a segment with midpoint c and radius r:
    // max |p| <= |p(c)| + |p'(c)| r + L2 r^2 / 2
    const Rational l2 = dp.coeff_weight_upper(1);
    const Rational target = Rational::pow2(-(prec + 1));
    const long wp = prec + 6;

    const Rational period = Rational(2) * pi_interval(24).hi().to_rational();
    const std::size_t n0 = std::max<std::size_t>(64, 4 * (degree_ + 1));

    std::vector<Segment> frontier;
    frontier.reserve(n0);
    for (std::size_t i = 0; i < n0; ++i)
        frontier.push_back({period * Rational(static_cast<long>(i), static_cast<long>(n0)),
                            period * Rational(static_cast<long>(i + 1), static_cast<long>(n0))});

    Rational lower(0);
    for (int depth = 0; depth < 400; ++depth) {
        std::vector<std::pair<Segment, Rational>> scored;
        scored.reserve(frontier.size());
        Rational upper(0);
        for (const Segment& seg : frontier) {
            const Rational c = (seg.lo + seg.hi) / Rational(2);
            const Rational r = (seg.hi - seg.lo) / Rational(2);
            const Interval pc = eval(c, wp).abs_hull();
            const Interval dc = dp.eval(c, wp).abs_hull();
            lower = max(lower, pc.lo().to_rational());
            const Rational ub =
                pc.hi().to_rational() + dc.hi().to_rational() * r + l2 * r * r / Rational(2);
            upper = max(upper, ub);
            scored.emplace_back(seg, ub);
        }
        // all remaining slack can sit below the certified lower bound, in
        // which case the maximum is pinned exactly
        if (upper < lower) upper = lower;
        if (upper - lower <= target)
            return Interval::of_rationals(lower, upper, prec + 2);

        std::vector<Segment> next;
        for (const auto& [seg, ub] : scored) {
            if (ub <= lower) continue;  // cannot contain the maximum
            const Rational c = (seg.lo + seg.hi) / Rational(2);
            next.push_back({seg.lo, c});
            next.push_back({c, seg.hi});
        }
        frontier = std::move(next);
    }
    throw std::runtime_error("sup_norm: refinement failed to converge");
}

CReal EffectiveFunction::value_at(const Rational& t) const {
    auto approximant_fn = approximant;
    auto modulus_fn = modulus;
    return CReal::from_intervals(
        [approximant_fn, modulus_fn, t](long p) {
            const unsigned n = static_cast<unsigned>(p) + 2;
            const TrigPoly pm = approximant_fn(modulus_fn(n));
            Interval v = pm.eval(t, p + 2);
            const Rational tail = Rational::pow2(-static_cast<long>(n));
            return Interval::of_rationals(v.lo().to_rational() - tail,
                                          v.hi().to_rational() + tail, p + 2);
        },
        "effective-eval");
}

}  // namespace circa
