#include <doctest.h>

#include "circa/json_io.hpp"
#include "circa/lab.hpp"
#include "test_util.hpp"

using namespace circa;
using namespace circa::testutil;

TEST_CASE("interval JSON round-trips exactly") {
    Interval iv(Dyadic(mpz_class(-3), -3), Dyadic(mpz_class(7), -2));
    json j = interval_to_json(iv, 24);
    CHECK(j["lo"] == "-0.375");
    CHECK(j["hi"] == "1.75");
    CHECK(j["bits"] == 24);
    Interval back = interval_from_json(j);
    CHECK(back.lo() == iv.lo());
    CHECK(back.hi() == iv.hi());

    CHECK_THROWS_AS(interval_from_json(json{{"lo", "0.2"}, {"hi", "0.5"}, {"bits", 4}}),
                    std::invalid_argument);
}

TEST_CASE("creal eval JSON carries an exact decimal and a 2^-n bound") {
    CReal x = CReal::constant(Rational(1, 3));
    json j = creal_eval_to_json(x, 10);
    CHECK(j["error_bound"] == "2^-10");
    Rational approx = Rational::from_string(j["approx"].get<std::string>());
    CHECK((approx - Rational(1, 3)).abs() <= Rational::pow2(-10));
}

TEST_CASE("trig poly JSON round-trips rational coefficients") {
    TrigPoly p(3);
    p.set_cos(0, CReal::constant(Rational(5, 4)));
    p.set_sin(2, CReal::constant(Rational(-7, 8)));
    p.set_cos(3, CReal::constant(Rational(3)));
    json j = trigpoly_to_json(p, 40);
    TrigPoly back = trigpoly_from_json(j);
    CHECK(back.exact_equal(p));

    json bad = j;
    bad["cos"] = json::array();
    CHECK_THROWS_AS(trigpoly_from_json(bad), std::invalid_argument);
}

TEST_CASE("profile JSON round-trips and validates") {
    RadialProfile w = RadialProfile::window(Rational(3, 2), Rational(5, 2));
    json j = profile_to_json(w);
    RadialProfile back = profile_from_json(j);
    CHECK(back.pieces().size() == w.pieces().size());
    CHECK(back.scale() == w.scale());
    Interval v = back.value(Rational::from_string("6.28"), 20);
    CHECK(v.contains(Rational(1)));

    // tampering with a coefficient breaks the C^1 validation on import
    json broken = j;
    broken["pieces"][1][0] = "2";
    CHECK_THROWS_AS(profile_from_json(broken), std::invalid_argument);
}

TEST_CASE("enumerator programs parse from JSON") {
    auto fin = enumerator_from_json(json::parse(R"({"type":"finite","body":[3,5]})"));
    CHECK(fin->step(10) == std::vector<std::uint64_t>{3, 5});

    auto prog = enumerator_from_json(
        json::parse(R"({"type":"progression","body":{"first":1,"step":2}})"));
    CHECK(prog->step(3) == std::vector<std::uint64_t>{1, 3, 5});

    auto vm = enumerator_from_json(json::parse(
        R"({"type":"vm","body":{"registers":1,"code":["INC 0","EMIT 0","HALT"]}})"));
    CHECK(vm->step(5) == std::vector<std::uint64_t>{1});

    CHECK_THROWS_AS(enumerator_from_json(json::parse(R"({"type":"magic","body":0})")),
                    std::invalid_argument);
}

TEST_CASE("search logs serialize deterministically") {
    CReal x = CReal::constant(Rational(0));
    SearchResult r = dyadic_bound_search(
        [&x](const Rational& lambda) { return upper_bound_detector(x, lambda); }, 8);
    json j = search_log_to_json(r);
    CHECK(j["rounds"] == 8);
    REQUIRE(!j["events"].empty());
    CHECK(j["events"][0]["event"] == "spawn");
    CHECK(j["events"][0]["value"] == "0.5");
}
