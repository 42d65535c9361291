#include <doctest.h>

#include <cmath>
#include <random>

#include "circa/trig.hpp"
#include "test_util.hpp"

using namespace circa;
using namespace circa::testutil;

namespace {
TrigPoly random_rational_poly(std::mt19937& gen, unsigned max_degree) {
    unsigned deg = 1 + gen() % max_degree;
    TrigPoly p(deg);
    auto coeff = [&gen]() {
        long num = static_cast<long>(gen() % 33) - 16;
        long den = 1 + static_cast<long>(gen() % 8);
        return Rational(num, den);
    };
    p.set_cos(0, CReal::constant(coeff()));
    for (unsigned k = 1; k <= deg; ++k) {
        p.set_cos(k, CReal::constant(coeff()));
        p.set_sin(k, CReal::constant(coeff()));
    }
    return p;
}

double golden_section_max_abs(const std::function<double(double)>& f) {
    // dense scan + golden-section refinement, |error| well under 1e-8
    const double pi2 = 6.283185307179586;
    double best_t = 0, best = -1;
    for (int i = 0; i < 20000; ++i) {
        double t = pi2 * i / 20000;
        double v = std::fabs(f(t));
        if (v > best) { best = v; best_t = t; }
    }
    double a = best_t - pi2 / 20000, b = best_t + pi2 / 20000;
    const double gr = 0.6180339887498949;
    for (int it = 0; it < 200; ++it) {
        double c = b - gr * (b - a), d = a + gr * (b - a);
        if (std::fabs(f(c)) > std::fabs(f(d))) b = d; else a = c;
    }
    return std::fabs(f((a + b) / 2));
}
}  // namespace

TEST_CASE("evaluation at zero and pinned points") {
    TrigPoly cos_t = TrigPoly::cosine(1, Rational(1));
    CHECK(cos_t.eval(Rational(0), 30).contains(Rational(1)));

    // at t = 0 the value is a_0/2 + sum a_k
    TrigPoly p(2);
    p.set_cos(0, CReal::constant(Rational(3)));
    p.set_cos(1, CReal::constant(Rational(2)));
    p.set_sin(1, CReal::constant(Rational(5)));
    p.set_cos(2, CReal::constant(Rational(-1, 2)));
    Interval at0 = p.eval(Rational(0), 30);
    CHECK(at0.contains(Rational(3, 2) + Rational(2) - Rational(1, 2)));
    CHECK(width_of(at0) <= Rational::pow2(-30));

    // sin(2t) over an enclosure of pi/4 contains 1
    TrigPoly sin2 = TrigPoly::sine(2, Rational(1));
    Interval quarter_pi = pi_interval(40).scaled(Rational(1, 4), 40);
    Interval v = sin2.eval_over(quarter_pi, 30);
    CHECK(v.contains(Rational(1)));
    CHECK(width_of(v) <= Rational(1, 1000));
}

TEST_CASE("termwise derivative") {
    TrigPoly p = TrigPoly::sine(3, Rational(1, 2));  // (1/2) sin 3t
    TrigPoly dp = p.derivative();
    CHECK(*dp.cos_coeff(3).exact_value() == Rational(3, 2));
    CHECK(dp.sin_coeff(3).exact_value()->is_zero());

    TrigPoly c = TrigPoly::constant_term(Rational(7));
    CHECK(c.derivative().is_zero());

    TrigPoly q = TrigPoly::cosine(2, Rational(1));
    TrigPoly dq = q.derivative();
    CHECK(*dq.sin_coeff(2).exact_value() == Rational(-2));
}

TEST_CASE("wiener norm") {
    CHECK(TrigPoly::sine(1, Rational(1)).wiener_norm(30).contains(Rational(1)));
    CHECK(TrigPoly::cosine(2, Rational(3)).wiener_norm(30).contains(Rational(3)));
    TrigPoly mixed = TrigPoly::constant_term(Rational(-4)) + TrigPoly::sine(5, Rational(-2));
    CHECK(mixed.wiener_norm(30).contains(Rational(4)));  // |-4|/2 + |-2|
}

TEST_CASE("certified sup norm: pinned cases") {
    for (unsigned k : {1u, 2u, 5u}) {
        Interval s = TrigPoly::sine(k, Rational(1)).sup_norm(16);
        CHECK(s.contains(Rational(1)));
        CHECK(width_of(s) <= Rational::pow2(-16));
    }
    Interval c = TrigPoly::constant_term(Rational(-3)).sup_norm(20);
    CHECK(c.contains(Rational(3, 2)));  // |a_0|/2

    CHECK(TrigPoly().sup_norm(20).hi() == Dyadic(0));

    // max |sin t + sin 2t| against a dense-grid golden-section oracle
    TrigPoly p = TrigPoly::sine(1, Rational(1)) + TrigPoly::sine(2, Rational(1));
    double oracle = golden_section_max_abs(
        [](double t) { return std::sin(t) + std::sin(2 * t); });
    CHECK(std::fabs(oracle - 1.7601725930460869) < 1e-8);
    Interval s = p.sup_norm(20);
    CHECK(contains_near(s, Rational(mpq_class(oracle)), Rational(1, 100000000)));
}

TEST_CASE("sup norm is below the wiener norm") {
    std::mt19937 gen(777);
    for (int i = 0; i < 10; ++i) {
        TrigPoly p = random_rational_poly(gen, 6);
        Interval s = p.sup_norm(12);
        Interval w = p.wiener_norm(12);
        CHECK(s.lo().to_rational() <= w.hi().to_rational() + Rational::pow2(-11));
    }
}

TEST_CASE("poisson smoothing on coefficients") {
    TrigPoly p(3);
    p.set_cos(0, CReal::constant(Rational(5)));
    p.set_sin(1, CReal::constant(Rational(1)));
    p.set_cos(3, CReal::constant(Rational(2)));

    TrigPoly mean = p.poisson(Rational(0));
    CHECK(*mean.cos_coeff(0).exact_value() == Rational(5));
    CHECK(mean.sin_coeff(1).exact_value()->is_zero());
    CHECK(mean.cos_coeff(3).exact_value()->is_zero());

    TrigPoly half = p.poisson(Rational(1, 2));
    CHECK(*half.sin_coeff(1).exact_value() == Rational(1, 2));
    CHECK(*half.cos_coeff(3).exact_value() == Rational(2, 8));

    CHECK_THROWS_AS(p.poisson(Rational(1)), std::domain_error);
    CHECK_THROWS_AS(p.poisson(Rational(-1, 2)), std::domain_error);
}

TEST_CASE("poisson laws: semigroup, commutation, maximum modulus") {
    std::mt19937 gen(31337);
    for (int i = 0; i < 10; ++i) {
        TrigPoly p = random_rational_poly(gen, 5);
        Rational r(1 + static_cast<long>(gen() % 9), 10);
        Rational rho(1 + static_cast<long>(gen() % 9), 10);

        CHECK(p.poisson(r).poisson(rho).exact_equal(p.poisson(rho * r)));
        CHECK(p.poisson(r).derivative().exact_equal(p.derivative().poisson(r)));

        Interval sp = p.sup_norm(12);
        Interval spr = p.poisson(r).sup_norm(12);
        CHECK(spr.lo().to_rational() <= sp.hi().to_rational() + Rational::pow2(-11));
    }
}

TEST_CASE("effective functions: pairwise contract and evaluation") {
    // f = sin t approximated by f_m = (1 - 2^-m) sin t, modulus e(N) = N
    EffectiveFunction f{
        [](unsigned m) {
            return TrigPoly::sine(1, Rational(1) - Rational::pow2(-static_cast<long>(m)));
        },
        [](unsigned n) { return n; }};

    for (unsigned n : {2u, 5u}) {
        unsigned m1 = f.modulus(n), m2 = f.modulus(n) + 3;
        TrigPoly diff = f.approximant(m1) - f.approximant(m2);
        Interval sup = diff.sup_norm(16);
        CHECK(sup.hi().to_rational() <=
              Rational(2) * Rational::pow2(-static_cast<long>(n)) + Rational::pow2(-14));
    }

    CReal v = f.value_at(Rational(1));
    Rational sin1 = oracle_sin(Rational(1), 50);
    CHECK((v.approx(20) - sin1).abs() <= Rational::pow2(-19));
}
