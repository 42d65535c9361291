#include <doctest.h>

#include <cmath>

#include "circa/radial.hpp"
#include "test_util.hpp"

using namespace circa;
using namespace circa::testutil;

TEST_CASE("window profile hits 1 on the plateau and 0 outside") {
    RadialProfile w = RadialProfile::window(Rational(3, 2), Rational(5, 2));

    // t = 6.28 lies inside the plateau (s = t/pi in (3/2, 5/2)); exactly 1
    Interval mid = w.value(Rational::from_string("6.28"), 30);
    CHECK(mid.contains(Rational(1)));
    CHECK(width_of(mid) <= Rational::pow2(-30));

    // t = pi/2: outside the support, exactly 0
    Interval outside = w.value(Rational::from_string("1.57"), 30);
    CHECK(outside.lo() == Dyadic(0));
    CHECK(outside.hi() == Dyadic(0));

    // derivative vanishes on the plateau: u(t,0) = q = 1 there
    Interval wave = w.wave_at_origin(Rational::from_string("6.28"), 30);
    CHECK(wave.contains(Rational(1)));
    CHECK(width_of(wave) <= Rational::pow2(-30));

    // exact plateau midpoint t = 2*pi via the pi-multiple form
    Interval at2pi = w.wave_at_origin_pi_multiple(Rational(2), 30);
    CHECK(at2pi.lo() == Dyadic(1));
    CHECK(at2pi.hi() == Dyadic(1));

    CHECK_THROWS_AS(RadialProfile::window(Rational(1), Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(RadialProfile::window(Rational(2), Rational(2)), std::invalid_argument);
}

TEST_CASE("bump profile: wave value at t = 2pi is pi^4") {
    RadialProfile q = RadialProfile::bump();

    // symbolic differentiation oracle on Q(s) = 9 - 24s + 22s^2 - 8s^3 + s^4:
    // Q'(s) = -24 + 44s - 24s^2 + 4s^3, Q'(2) = -24 + 88 - 96 + 32 = 0, Q(2) = 1
    Interval u = q.wave_at_origin_pi_multiple(Rational(2), 40);
    Interval pi4 = [&] {
        Interval p = pi_interval(50);
        Interval p2 = p * p;
        return p2 * p2;
    }();
    CHECK(u.intersect(pi4).has_value());
    CHECK(width_of(u) <= Rational::pow2(-40));

    // rational t close to 2*pi: u stays near pi^4 (it is continuous)
    Interval near = q.wave_at_origin(Rational::from_string("6.283185307179586"), 25);
    CHECK(contains_near(near, Rational::from_string("97.40909103400243"),
                        Rational(1, 100000)));
}

TEST_CASE("support law: zero outside [pi, 3pi]") {
    RadialProfile w = RadialProfile::window(Rational(3, 2), Rational(5, 2));
    for (const char* t : {"1", "10"}) {
        Interval v = w.wave_at_origin(Rational::from_string(t), 25);
        CHECK(v.lo() == Dyadic(0));
        CHECK(v.hi() == Dyadic(0));
    }
    CHECK_THROWS_AS(w.wave_at_origin(Rational(0), 10), std::domain_error);
    CHECK_THROWS_AS(w.wave_at_origin(Rational(-2), 10), std::domain_error);
}

TEST_CASE("profile validation rejects broken C^1 junctions") {
    using Piece = RadialProfile::Piece;
    // value jump at the interior knot
    CHECK_THROWS_AS(RadialProfile({Piece{Rational(1), Rational(2), {Rational(0)}},
                                   Piece{Rational(2), Rational(3), {Rational(1)}}},
                                  Rational(1), 0),
                    std::invalid_argument);
    // nonzero boundary value
    CHECK_THROWS_AS(RadialProfile({Piece{Rational(1), Rational(3), {Rational(1)}}},
                                  Rational(1), 0),
                    std::invalid_argument);
    // zero profile is fine
    RadialProfile zero({Piece{Rational(1), Rational(3), {Rational(0)}}}, Rational(1), 0);
    CHECK(zero.value(Rational(7), 20).hi() == Dyadic(0));
}

TEST_CASE("one-sided derivative enclosures agree across knots") {
    RadialProfile w = RadialProfile::window(Rational(3, 2), Rational(5, 2));
    // probe the knot at s = 3/2 from both sides with shrinking rational steps
    Interval left = w.value(Rational::from_string("4.712"), 25);   // just below 3pi/2
    Interval right = w.value(Rational::from_string("4.713"), 25);  // just above
    CHECK(left.hi().to_rational() <= Rational(1) + Rational::pow2(-24));
    CHECK(right.hi().to_rational() <= Rational(1) + Rational::pow2(-24));
    // continuity: both near w(3pi/2) = 1
    CHECK(left.lo().to_rational() > Rational(9, 10));
    CHECK(right.lo().to_rational() > Rational(9, 10));
}

TEST_CASE("quadrature oracle agrees with the closed form at the origin") {
    const std::array<double, 3> origin{0.0, 0.0, 0.0};
    RadialProfile profiles[] = {RadialProfile::window(Rational(3, 2), Rational(5, 2)),
                                RadialProfile::bump()};
    const double ts[] = {3 * 3.141592653589793 / 2, 2 * 3.141592653589793,
                         5 * 3.141592653589793 / 2};
    for (const RadialProfile& q : profiles) {
        for (double td : ts) {
            double oracle = kirchhoff_quadrature_refined(q, td, origin, 1.0 / 128);
            Rational tr{mpq_class(td)};
            Interval closed = q.wave_at_origin(tr, 30);
            double mid = closed.mid().to_double();
            CHECK(std::fabs(oracle - mid) < 1e-6);
        }
    }
}

TEST_CASE("quadrature oracle trivial cases") {
    RadialProfile zero({RadialProfile::Piece{Rational(1), Rational(3), {Rational(0)}}},
                       Rational(1), 0);
    CHECK(kirchhoff_quadrature(zero, 6.0, {0, 0, 0}, 1.0 / 64) == 0.0);

    // sphere of radius 2 about the origin misses the support entirely
    RadialProfile w = RadialProfile::window(Rational(3, 2), Rational(5, 2));
    CHECK(kirchhoff_quadrature(w, 2.0, {0, 0, 0}, 1.0 / 64) == 0.0);

    // off-center: |x| = 4pi, radius 2 keeps every point beyond 3pi
    CHECK(kirchhoff_quadrature(w, 2.0, {4 * 3.141592653589793, 0, 0}, 1.0 / 64) == 0.0);

    CHECK_THROWS_AS(kirchhoff_quadrature(w, 0.5, {0, 0, 0}, 1.0), std::invalid_argument);
}
