#include "circa/radial.hpp"

#include <cmath>
#include <stdexcept>

namespace circa {

namespace {

using Poly = std::vector<Rational>;

Poly poly_derivative(const Poly& p) {
    Poly out;
    for (std::size_t i = 1; i < p.size(); ++i)
        out.push_back(p[i] * Rational(static_cast<long>(i)));
    if (out.empty()) out.push_back(Rational(0));
    return out;
}

Rational poly_eval(const Poly& p, const Rational& s) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * s + p[i];
    return acc;
}

Interval poly_eval(const Poly& p, const Interval& s, long prec) {
    Interval acc;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = (acc * s).round_out(prec + 8);
        acc = acc + Interval::of_rational(p[i], prec + 8);
    }
    return acc;
}

double poly_eval(const Poly& p, double s) {
    double acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * s + p[i].to_double();
    return acc;
}

// P(alpha*s + beta)
Poly poly_compose_affine(const Poly& p, const Rational& alpha, const Rational& beta) {
    Poly acc{Rational(0)};
    for (std::size_t i = p.size(); i-- > 0;) {
        // acc = acc*(alpha x + beta) + p[i]
        Poly next(acc.size() + 1, Rational(0));
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j] * alpha;
            next[j] += acc[j] * beta;
        }
        next[0] += p[i];
        while (next.size() > 1 && next.back().is_zero()) next.pop_back();
        acc = std::move(next);
    }
    return acc;
}

const Poly& smoothstep_quintic() {
    // 10 x^3 - 15 x^4 + 6 x^5: C^2 joins at 0 and 1
    static const Poly s{Rational(0), Rational(0), Rational(0),
                        Rational(10), Rational(-15), Rational(6)};
    return s;
}

}  // namespace

RadialProfile::RadialProfile(std::vector<Piece> pieces, Rational scale, unsigned pi_power)
    : pieces_(std::move(pieces)), scale_(std::move(scale)), pi_power_(pi_power) {
    validate();
}

void RadialProfile::validate() const {
    if (pieces_.empty()) throw std::invalid_argument("profile: no pieces");
    if (pieces_.front().lo != Rational(1) || pieces_.back().hi != Rational(3))
        throw std::invalid_argument("profile: pieces must cover [1, 3] in pi units");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& pc = pieces_[i];
        if (pc.lo >= pc.hi) throw std::invalid_argument("profile: empty piece");
        if (pc.coeffs.empty()) throw std::invalid_argument("profile: empty coefficients");
        if (i + 1 < pieces_.size()) {
            const Piece& nx = pieces_[i + 1];
            if (pc.hi != nx.lo) throw std::invalid_argument("profile: pieces not contiguous");
            if (poly_eval(pc.coeffs, pc.hi) != poly_eval(nx.coeffs, pc.hi))
                throw std::invalid_argument("profile: value jump at knot");
            if (poly_eval(poly_derivative(pc.coeffs), pc.hi) !=
                poly_eval(poly_derivative(nx.coeffs), pc.hi))
                throw std::invalid_argument("profile: derivative jump at knot");
        }
    }
    // C^1 junction with the zero extension outside [pi, 3pi]
    const Piece& first = pieces_.front();
    const Piece& last = pieces_.back();
    if (!poly_eval(first.coeffs, Rational(1)).is_zero() ||
        !poly_eval(poly_derivative(first.coeffs), Rational(1)).is_zero() ||
        !poly_eval(last.coeffs, Rational(3)).is_zero() ||
        !poly_eval(poly_derivative(last.coeffs), Rational(3)).is_zero())
        throw std::invalid_argument("profile: support boundary is not a C^1 zero");
}

RadialProfile RadialProfile::window(const Rational& plateau_lo, const Rational& plateau_hi) {
    if (!(Rational(1) < plateau_lo && plateau_lo < plateau_hi && plateau_hi < Rational(3)))
        throw std::invalid_argument("window: need 1 < a < b < 3 (units of pi)");
    const Poly& s5 = smoothstep_quintic();
    // rising edge: S((s-1)/(a-1)); falling edge: S((3-s)/(3-b))
    const Rational ra = Rational(1) / (plateau_lo - Rational(1));
    const Rational rb = Rational(1) / (Rational(3) - plateau_hi);
    Poly rise = poly_compose_affine(s5, ra, -ra);
    Poly fall = poly_compose_affine(s5, -rb, Rational(3) * rb);
    std::vector<Piece> pieces;
    pieces.push_back({Rational(1), plateau_lo, std::move(rise)});
    pieces.push_back({plateau_lo, plateau_hi, Poly{Rational(1)}});
    pieces.push_back({plateau_hi, Rational(3), std::move(fall)});
    return RadialProfile(std::move(pieces), Rational(1), 0);
}

RadialProfile RadialProfile::bump() {
    // (s-1)^2 (3-s)^2 = 9 - 24 s + 22 s^2 - 8 s^3 + s^4
    Poly q{Rational(9), Rational(-24), Rational(22), Rational(-8), Rational(1)};
    std::vector<Piece> pieces{{Rational(1), Rational(3), std::move(q)}};
    return RadialProfile(std::move(pieces), Rational(1), 4);
}

Interval RadialProfile::profile_part(const Interval& s, bool with_wave, long prec) const {
    const Rational slo = s.lo().to_rational();
    const Rational shi = s.hi().to_rational();
    Interval acc;
    bool have = false;
    auto include = [&](const Interval& v) {
        acc = have ? acc.hull(v) : v;
        have = true;
    };
    if (slo < Rational(1) || shi > Rational(3)) include(Interval());  // zero outside
    for (const Piece& pc : pieces_) {
        if (shi < pc.lo || slo > pc.hi) continue;
        const Rational clo = max(slo, pc.lo), chi = min(shi, pc.hi);
        Interval sc = Interval::of_rationals(clo, chi, prec + 8);
        Interval v = poly_eval(pc.coeffs, sc, prec);
        if (with_wave) {
            Interval dv = poly_eval(poly_derivative(pc.coeffs), sc, prec);
            v = v + (sc * dv).round_out(prec + 8);
        }
        include(v);
    }
    return acc;
}

namespace {
Interval pi_power_interval(unsigned e, long prec) {
    Interval acc = Interval::point(Dyadic(1));
    if (e == 0) return acc;
    Interval p = pi_interval(prec + 4 * static_cast<long>(e));
    for (unsigned i = 0; i < e; ++i) acc = (acc * p).round_out(prec + 8);
    return acc;
}
}  // namespace

Interval RadialProfile::value(const Rational& t, long prec) const {
    if (t.sign() < 0) throw std::domain_error("profile value: t must be >= 0");
    const Rational limit = Rational::pow2(-prec);
    for (long w = prec + 8 + 4 * static_cast<long>(pi_power_);; w += 16) {
        Interval pi = pi_interval(w);
        Interval s = Interval::div(Interval::of_rational(t, w), pi, w);
        Interval v = profile_part(s, false, w);
        v = (v * pi_power_interval(pi_power_, w)).scaled(scale_, prec + 2);
        if (v.width().to_rational() <= limit) return v;
    }
}

Interval RadialProfile::wave_at_origin(const Rational& t, long prec) const {
    if (t.sign() <= 0) throw std::domain_error("wave_at_origin: t must be > 0");
    const Rational limit = Rational::pow2(-prec);
    for (long w = prec + 8 + 4 * static_cast<long>(pi_power_);; w += 16) {
        Interval pi = pi_interval(w);
        Interval s = Interval::div(Interval::of_rational(t, w), pi, w);
        Interval v = profile_part(s, true, w);
        v = (v * pi_power_interval(pi_power_, w)).scaled(scale_, prec + 2);
        if (v.width().to_rational() <= limit) return v;
    }
}

Interval RadialProfile::wave_at_origin_pi_multiple(const Rational& s, long prec) const {
    if (s.sign() <= 0) throw std::domain_error("wave_at_origin: t must be > 0");
    Rational f(0);
    if (Rational(1) <= s && s <= Rational(3)) {
        for (const Piece& pc : pieces_) {
            if (s < pc.lo || s > pc.hi) continue;
            // C^1 matching makes the choice of piece at a knot immaterial
            f = poly_eval(pc.coeffs, s) + s * poly_eval(poly_derivative(pc.coeffs), s);
            break;
        }
    }
    const Rational c = scale_ * f;
    if (c.is_zero()) return Interval();
    Interval pw = pi_power_interval(pi_power_, prec + 2 + std::max(0l, c.mag_bits()));
    return pw.scaled(c, prec + 2);
}

double RadialProfile::value_d(double t) const {
    static const double kPi = 3.14159265358979323846;
    const double s = t / kPi;
    if (s < 1.0 || s > 3.0) return 0.0;
    for (const Piece& pc : pieces_) {
        if (s >= pc.lo.to_double() && s <= pc.hi.to_double()) {
            double v = poly_eval(pc.coeffs, s);
            return v * scale_.to_double() * std::pow(kPi, static_cast<double>(pi_power_));
        }
    }
    return 0.0;
}

namespace {
double spherical_mean_times_t(const RadialProfile& q, double t, const std::array<double, 3>& x,
                              int n_theta, int n_phi) {
    static const double kPi = 3.14159265358979323846;
    // t * (1/4pi) \int q(|x + t w|) dw over the unit sphere. Latitude bands
    // are equal-area (uniform in cos theta), so the weights are uniform and
    // sum to one exactly; a constant integrand is integrated exactly.
    double sum = 0.0;
    const double dphi = 2.0 * kPi / n_phi;
    for (int i = 0; i < n_theta; ++i) {
        const double mu = -1.0 + (i + 0.5) * 2.0 / n_theta;  // cos theta
        const double st = std::sqrt(std::max(0.0, 1.0 - mu * mu));
        double ring = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = j * dphi;
            const double wx = st * std::cos(phi), wy = st * std::sin(phi), wz = mu;
            const double yx = x[0] + t * wx, yy = x[1] + t * wy, yz = x[2] + t * wz;
            ring += q.value_d(std::sqrt(yx * yx + yy * yy + yz * yz));
        }
        sum += ring;
    }
    const double mean = sum / (static_cast<double>(n_theta) * n_phi);
    return t * mean;
}
}  // namespace

double kirchhoff_quadrature(const RadialProfile& q, double t, const std::array<double, 3>& x,
                            double h, int n_theta, int n_phi) {
    if (t <= 0 || h <= 0 || t - h <= 0)
        throw std::invalid_argument("kirchhoff_quadrature: need t > h > 0");
    const double gp = spherical_mean_times_t(q, t + h, x, n_theta, n_phi);
    const double gm = spherical_mean_times_t(q, t - h, x, n_theta, n_phi);
    return (gp - gm) / (2.0 * h);
}

double kirchhoff_quadrature_refined(const RadialProfile& q, double t,
                                    const std::array<double, 3>& x, double h, int n_theta,
                                    int n_phi) {
    const double coarse = kirchhoff_quadrature(q, t, x, h, n_theta, n_phi);
    const double fine = kirchhoff_quadrature(q, t, x, h / 2, n_theta, n_phi);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace circa
