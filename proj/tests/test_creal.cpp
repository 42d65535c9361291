#include <doctest.h>

#include "circa/creal.hpp"
#include "circa/enumerator.hpp"
#include "circa/trig.hpp"
#include "test_util.hpp"

using namespace circa;
using namespace circa::testutil;

namespace {
// a deliberately non-exact oracle for a rational value (tests the generic
// arithmetic paths rather than the exact fast path)
CReal fuzzy(const Rational& q) {
    return CReal::from_oracle(
        [q](unsigned n) { return q + Rational::pow2(-(static_cast<long>(n) + 2)); }, "fuzzy");
}
}  // namespace

TEST_CASE("constants and sums satisfy the 2^-n contract") {
    CReal a = CReal::constant(Rational(1, 3));
    CReal b = CReal::constant(Rational(1, 6));
    CReal s = a + b;
    CHECK(s.exact_value().has_value());
    CHECK(*s.exact_value() == Rational(1, 2));
    CHECK((s.approx(10) - Rational(1, 2)).abs() <= Rational::pow2(-10));

    CReal fs = fuzzy(Rational(1, 3)) + fuzzy(Rational(1, 6));
    CHECK(!fs.exact_value().has_value());
    CHECK((fs.approx(10) - Rational(1, 2)).abs() <= Rational::pow2(-10));
    CHECK((fs.approx(25) - Rational(1, 2)).abs() <= Rational::pow2(-25));
}

TEST_CASE("zero annihilates products") {
    CReal z = CReal::constant(Rational(0));
    CReal big = fuzzy(Rational(1000));
    CReal p = z * big;
    CHECK(p.exact_value().has_value());
    CHECK(p.exact_value()->is_zero());

    CReal fz = fuzzy(Rational(0)) * big;
    for (unsigned n : {0u, 5u, 12u})
        CHECK(fz.approx(n).abs() <= Rational::pow2(-static_cast<long>(n)));
}

TEST_CASE("specker of a finite set plus a constant") {
    auto e = std::make_shared<Enumerator>(Enumerator::finite({1, 2}));
    ZwReal zw = zw_real(e);
    REQUIRE(zw.oracle.has_value());
    CReal one = *zw.oracle + CReal::constant(Rational(1, 4));
    CHECK((one.approx(10) - Rational(1)).abs() <= Rational::pow2(-10));
}

TEST_CASE("oracle consistency |approx(n) - approx(m)| <= 2^-n + 2^-m") {
    std::vector<CReal> reals;
    reals.push_back(fuzzy(Rational(7, 9)));
    reals.push_back(fuzzy(Rational(-22, 7)) * fuzzy(Rational(3, 5)));
    reals.push_back(fuzzy(Rational(1, 3)) - CReal::constant(Rational(11, 13)));
    reals.push_back(CReal::from_intervals(
        [](long p) { return sin_interval(Rational(1), p); }, "sin1"));
    for (const CReal& x : reals) {
        for (unsigned n = 0; n <= 40; n += 5) {
            for (unsigned m = 2; m <= 40; m += 7) {
                Rational gap = (x.approx(n) - x.approx(m)).abs();
                CHECK(gap <= Rational::pow2(-static_cast<long>(n)) +
                                 Rational::pow2(-static_cast<long>(m)));
            }
        }
    }
}

TEST_CASE("arithmetic coherence against component oracles") {
    CReal a = fuzzy(Rational(5, 7));
    CReal b = fuzzy(Rational(-9, 4));
    CReal s = a + b;
    for (unsigned n : {1u, 6u, 14u, 23u}) {
        Rational gap = (s.approx(n) - (a.approx(n + 2) + b.approx(n + 2))).abs();
        CHECK(gap <= Rational::pow2(-static_cast<long>(n)) +
                         Rational::pow2(-static_cast<long>(n) - 1));
    }
}

TEST_CASE("memoized queries return identical rationals") {
    CReal x = fuzzy(Rational(13, 7)) * fuzzy(Rational(2, 3));
    Rational first = x.approx(18);
    CHECK(x.approx(18) == first);
    CHECK(x.enclosure(18).contains(first));
}

TEST_CASE("monotone witness memoizes and reports direction") {
    int calls = 0;
    MonotoneWitness w(
        [&calls](std::uint64_t m) {
            ++calls;
            return Rational(1) - Rational::pow2(-static_cast<long>(m));
        },
        MonotoneWitness::Direction::nondecreasing, "test");
    CHECK(w.term(3) == Rational(7, 8));
    CHECK(w.term(3) == Rational(7, 8));
    CHECK(calls == 1);
    CHECK(w.direction() == MonotoneWitness::Direction::nondecreasing);
    for (std::uint64_t m = 0; m < 12; ++m) CHECK(w.term(m) <= w.term(m + 1));
}

TEST_CASE("difference quotients of sin t approach 1") {
    TrigPoly sin_t = TrigPoly::sine(1, Rational(1));
    auto value_at = [&sin_t](const Rational& t) {
        return CReal::from_intervals([&sin_t, t](long p) { return sin_t.eval(t, p); }, "eval");
    };
    for (unsigned n : {1u, 2u, 5u, 10u, 20u}) {
        CReal rn = diff_quotient(value_at, Rational(0), n);
        // n sin(1/n) = 1 - 1/(6 n^2) + err, |err| <= 1/(120 n^4)
        Rational expected = Rational(1) - Rational(1, 6 * static_cast<long>(n) * n);
        Rational err_bound = Rational(1, 120) / Rational(static_cast<long>(n) * n) /
                             Rational(static_cast<long>(n) * n);
        Rational got = rn.approx(24);
        CHECK((got - expected).abs() <= err_bound + Rational::pow2(-22));
    }
}

TEST_CASE("difference quotient of a constant is zero") {
    auto const_val = [](const Rational&) { return CReal::constant(Rational(42)); };
    CReal r5 = diff_quotient(const_val, Rational(3, 2), 5);
    CHECK(r5.approx(30).abs() <= Rational::pow2(-30));
}

TEST_CASE("difference quotient error law for low-degree trig polynomials") {
    // |r_n(t) - p'(t)| <= M^2 B / (2n) via the Taylor remainder
    TrigPoly p = TrigPoly::sine(2, Rational(1)) + TrigPoly::cosine(3, Rational(1, 2));
    TrigPoly dp = p.derivative();
    const Rational M2B = Rational(9) * Rational(3, 2);  // M = 3, B = |1| + |1/2|
    auto value_at = [&p](const Rational& t) {
        return CReal::from_intervals([&p, t](long pr) { return p.eval(t, pr); }, "eval");
    };
    for (const Rational& t : {Rational(0), Rational(1, 3), Rational(-2, 5)}) {
        for (unsigned n : {4u, 16u, 64u}) {
            CReal rn = diff_quotient(value_at, t, n);
            Interval dpt = dp.eval(t, 24);
            Rational gap = (rn.approx(24) - dpt.mid().to_rational()).abs();
            CHECK(gap <= M2B / Rational(2 * static_cast<long>(n)) + Rational::pow2(-20));
        }
    }
}
