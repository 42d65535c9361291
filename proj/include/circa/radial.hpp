#pragma once

#include <array>
#include <vector>

#include "circa/functions.hpp"

namespace circa {

/// C^1 radial profile q supported on [pi, 3pi], the initial datum
/// f(x) = q(|x|) of the radially symmetric wave problem. Stored as a
/// piecewise polynomial in the scaled coordinate s = t/pi with exact
/// rational knots and coefficients on [1, 3], a rational scale factor and a
/// power of pi:  q(t) = scale * pi^pi_power * Q(t/pi), zero outside.
/// Keeping the pieces rational makes the closed-form wave value
/// q(t) + t q'(t) = scale * pi^pi_power * (Q(s) + s Q'(s)) evaluable with a
/// single pi enclosure.
class RadialProfile {
public:
    struct Piece {
        Rational lo, hi;                 // knots in s = t/pi units, within [1, 3]
        std::vector<Rational> coeffs;    // polynomial in s, ascending powers
    };

    RadialProfile(std::vector<Piece> pieces, Rational scale, unsigned pi_power);

    // C^2 window: quintic-smoothstep rise on [1, plateau_lo], identically 1
    // on the plateau, mirrored fall to 0 at 3. Arguments are in units of pi;
    // requires 1 < plateau_lo < plateau_hi < 3.
    static RadialProfile window(const Rational& plateau_lo, const Rational& plateau_hi);
    // (t - pi)^2 (3pi - t)^2, i.e. pi^4 (s-1)^2 (3-s)^2.
    static RadialProfile bump();

    const std::vector<Piece>& pieces() const { return pieces_; }
    const Rational& scale() const { return scale_; }
    unsigned pi_power() const { return pi_power_; }

    // Certified enclosure of q(t) at rational t >= 0, width <= 2^-prec.
    Interval value(const Rational& t, long prec) const;
    // Certified enclosure of the wave solution at the origin,
    // u(t, 0) = q(t) + t q'(t); requires t > 0 (domain error otherwise).
    Interval wave_at_origin(const Rational& t, long prec) const;
    // Same, at t = s*pi for rational s > 0: Q(s) + s Q'(s) is exact and only
    // the pi power is enclosed, so probe points like t = 2pi are exact.
    Interval wave_at_origin_pi_multiple(const Rational& s, long prec) const;

    double value_d(double t) const;  // double evaluation (for the quadrature oracle)

private:
    void validate() const;  // contiguity, C^1 across knots, zero C^1 boundary
    // enclosure of Q(s) (+ s Q'(s) when with_wave) over the s-interval
    Interval profile_part(const Interval& s, bool with_wave, long prec) const;

    std::vector<Piece> pieces_;
    Rational scale_;
    unsigned pi_power_;
};

/// Uncertified numerical oracle for the spherical-mean solution
///   u(t, x) = d/dt [ (1/(4 pi t)) \oint_{|y-x|=t} f(y) dF(y) ],
/// by latitude-longitude quadrature of the radial integrand and a central
/// difference in time. Testing aid only.
double kirchhoff_quadrature(const RadialProfile& q, double t, const std::array<double, 3>& x,
                            double h, int n_theta = 96, int n_phi = 192);

/// Same oracle with one Richardson extrapolation step (h and h/2).
double kirchhoff_quadrature_refined(const RadialProfile& q, double t,
                                    const std::array<double, 3>& x, double h,
                                    int n_theta = 96, int n_phi = 192);

}  // namespace circa
