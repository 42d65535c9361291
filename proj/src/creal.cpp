#include "circa/creal.hpp"

#include <stdexcept>

namespace circa {

CReal CReal::constant(const Rational& q, std::string provenance) {
    auto st = std::make_shared<State>();
    st->fn = [q](unsigned) { return q; };
    st->exact = q;
    st->provenance = std::move(provenance);
    return CReal(st);
}

CReal CReal::from_oracle(Oracle f, std::string provenance) {
    auto st = std::make_shared<State>();
    st->fn = std::move(f);
    st->provenance = std::move(provenance);
    return CReal(st);
}

CReal CReal::from_intervals(std::function<Interval(long)> f, std::string provenance) {
    auto st = std::make_shared<State>();
    st->fn = [f = std::move(f)](unsigned n) {
        long p = static_cast<long>(n) + 2;
        Interval iv = f(p);
        const Rational limit = Rational::pow2(-static_cast<long>(n));
        while (iv.width().to_rational() > limit) {
            p += 8;  // the interval source under-delivered; refine
            iv = f(p);
        }
        return iv.mid().to_rational();
    };
    st->provenance = std::move(provenance);
    return CReal(st);
}

Rational CReal::approx(unsigned n) const {
    std::lock_guard<std::mutex> lk(st_->mu);
    auto it = st_->memo.find(n);
    if (it != st_->memo.end()) return it->second;
    Rational v = st_->fn(n);
    st_->memo.emplace(n, v);
    return v;
}

Interval CReal::enclosure(unsigned n) const {
    if (st_->exact) {
        return Interval::of_rational(*st_->exact, static_cast<long>(n) + 8);
    }
    Rational a = approx(n);
    Rational err = Rational::pow2(-static_cast<long>(n));
    return Interval::of_rationals(a - err, a + err, static_cast<long>(n) + 8);
}

const std::optional<Rational>& CReal::exact_value() const { return st_->exact; }
const std::string& CReal::provenance() const { return st_->provenance; }

CReal operator+(const CReal& a, const CReal& b) {
    if (a.exact_value() && b.exact_value())
        return CReal::constant(*a.exact_value() + *b.exact_value(), "sum");
    CReal out = CReal::from_oracle(
        [a, b](unsigned n) { return a.approx(n + 1) + b.approx(n + 1); }, "sum");
    return out;
}

CReal operator-(const CReal& a) {
    if (a.exact_value()) return CReal::constant(-*a.exact_value(), "neg");
    return CReal::from_oracle([a](unsigned n) { return -a.approx(n); }, "neg");
}

CReal operator-(const CReal& a, const CReal& b) {
    if (a.exact_value() && b.exact_value())
        return CReal::constant(*a.exact_value() - *b.exact_value(), "diff");
    return CReal::from_oracle(
        [a, b](unsigned n) { return a.approx(n + 1) - b.approx(n + 1); }, "diff");
}

namespace {
// bits(q): smallest nonnegative s with q <= 2^s, for q > 0
long bits_of(const Rational& q) {
    long s = q.mag_bits();
    return s < 0 ? 0 : s;
}
}  // namespace

CReal operator*(const CReal& a, const CReal& b) {
    if (a.exact_value() && b.exact_value())
        return CReal::constant(*a.exact_value() * *b.exact_value(), "product");
    if (a.exact_value()) return b.scaled(*a.exact_value());
    if (b.exact_value()) return a.scaled(*b.exact_value());
    return CReal::from_oracle(
        [a, b](unsigned n) {
            // |ab - pq| <= |a||b - q| + |q||a - p|
            //           <= Ba 2^-kb + (Bb + 1) 2^-ka  with Ba >= |a|, Bb >= |b|
            const Rational Ba = a.approx(0).abs() + Rational(1);
            const Rational Bb = b.approx(0).abs() + Rational(1);
            const unsigned kb = n + 1 + static_cast<unsigned>(bits_of(Ba));
            const unsigned ka = n + 1 + static_cast<unsigned>(bits_of(Bb + Rational(1)));
            return a.approx(ka) * b.approx(kb);
        },
        "product");
}

CReal CReal::abs() const {
    if (st_->exact) return constant(st_->exact->abs(), "abs");
    CReal self = *this;
    return from_oracle([self](unsigned n) { return self.approx(n).abs(); }, "abs");
}

CReal CReal::scaled(const Rational& q) const {
    if (q.is_zero()) return constant(Rational(0), "scaled");
    if (st_->exact) return constant(*st_->exact * q, "scaled");
    CReal self = *this;
    const unsigned shift = static_cast<unsigned>(bits_of(q.abs()));
    return from_oracle([self, q, shift](unsigned n) { return self.approx(n + shift) * q; },
                       "scaled");
}

MonotoneWitness::MonotoneWitness(std::function<Rational(std::uint64_t)> terms, Direction dir,
                                 std::string provenance)
    : st_(std::make_shared<State>()), dir_(dir), provenance_(std::move(provenance)) {
    st_->fn = std::move(terms);
}

Rational MonotoneWitness::term(std::uint64_t m) const {
    std::lock_guard<std::mutex> lk(st_->mu);
    auto it = st_->memo.find(m);
    if (it != st_->memo.end()) return it->second;
    Rational v = st_->fn(m);
    st_->memo.emplace(m, v);
    return v;
}

MonotoneWitness MonotoneWitness::with_provenance(std::string p) const {
    MonotoneWitness out = *this;
    out.provenance_ = std::move(p);
    return out;
}

CReal diff_quotient(const std::function<CReal(const Rational&)>& value_at,
                    const Rational& t, unsigned n) {
    if (n == 0) throw std::invalid_argument("diff_quotient: n must be >= 1");
    const Rational h(1, static_cast<long>(n));
    CReal d = value_at(t + h) - value_at(t);
    return d.scaled(Rational(static_cast<long>(n)));
}

}  // namespace circa
