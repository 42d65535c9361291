#include <doctest.h>

#include "circa/enumerator.hpp"
#include "test_util.hpp"

using namespace circa;
using namespace circa::testutil;

namespace {
// Emits 1, 4, 9, ... by summing successive odd numbers. Registers:
// 0 = round counter k, 1 = odd scratch, 2 = running square, 3 = copy-back.
// Round k costs 18k + 3 steps, so k^2 is emitted at step 9k^2 + 12k - 1.
const std::vector<std::string> kSquaresProgram = {
    "start: INC 0",
    "copy: JZ 0 restore",
    "DEC 0",
    "INC 1",
    "INC 1",
    "INC 3",
    "JMP copy",
    "restore: JZ 3 odd",
    "DEC 3",
    "INC 0",
    "JMP restore",
    "odd: DEC 1",
    "add: JZ 1 out",
    "DEC 1",
    "INC 2",
    "JMP add",
    "out: EMIT 2",
    "JMP start",
};
}  // namespace

TEST_CASE("finite enumerators emit in order and then exhaust") {
    Enumerator e = Enumerator::finite({3, 5});
    auto got = e.step(10);
    CHECK(got == std::vector<std::uint64_t>{3, 5});
    CHECK(e.exhausted());
    CHECK(e.step(1000).empty());
    CHECK(e.steps_taken() == 1010);

    CHECK_THROWS_AS(Enumerator::finite({2, 0, 3}), std::invalid_argument);
}

TEST_CASE("duplicates are filtered at emission") {
    Enumerator e = Enumerator::finite({2, 2, 3, 2});
    CHECK(e.step(10) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("progressions yield one value per step") {
    Enumerator e = Enumerator::progression(1, 2);  // 2n + 1
    CHECK(e.step(3) == std::vector<std::uint64_t>{1, 3, 5});
    CHECK(!e.exhausted());
    CHECK_THROWS_AS(Enumerator::progression(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Enumerator::progression(1, 0), std::invalid_argument);
}

TEST_CASE("register machine emits squares on a hand-traced budget") {
    RegisterProgram prog = RegisterProgram::parse(4, kSquaresProgram);
    Enumerator e = Enumerator::machine(prog);
    // emission steps: 9k^2 + 12k - 1 => 20, 59, 116
    CHECK(e.step(19).empty());
    CHECK(e.step(1) == std::vector<std::uint64_t>{1});
    CHECK(e.step(96) == std::vector<std::uint64_t>{4, 9});
    const auto& log = e.emissions();
    REQUIRE(log.size() == 3);
    CHECK(log[0] == std::pair<std::uint64_t, std::uint64_t>{20, 1});
    CHECK(log[1] == std::pair<std::uint64_t, std::uint64_t>{59, 4});
    CHECK(log[2] == std::pair<std::uint64_t, std::uint64_t>{116, 9});
}

TEST_CASE("register machine validation rejects malformed programs") {
    CHECK_THROWS_AS(RegisterProgram::parse(2, {"INC 5"}), std::invalid_argument);
    CHECK_THROWS_AS(RegisterProgram::parse(2, {"JMP nowhere"}), std::invalid_argument);
    CHECK_THROWS_AS(RegisterProgram::parse(2, {"FLY 0"}), std::invalid_argument);
    CHECK_THROWS_AS(RegisterProgram::parse(2, {"loop: INC 0", "loop: INC 1"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Enumerator::machine(RegisterProgram{}), std::invalid_argument);
}

TEST_CASE("machine halts are absorbing and zero emissions are dropped") {
    RegisterProgram prog = RegisterProgram::parse(1, {"EMIT 0", "INC 0", "EMIT 0", "HALT"});
    Enumerator e = Enumerator::machine(prog);
    CHECK(e.step(10) == std::vector<std::uint64_t>{1});  // first EMIT is 0: dropped
    CHECK(e.exhausted());
    CHECK(e.step(5).empty());
}

TEST_CASE("determinism: identical programs and budgets give identical logs") {
    RegisterProgram prog = RegisterProgram::parse(4, kSquaresProgram);
    Enumerator e1 = Enumerator::machine(prog);
    Enumerator e2 = Enumerator::machine(prog);
    e1.step(500);
    e2.step(500);
    CHECK(e1.emissions() == e2.emissions());
    CHECK(e1.steps_taken() == e2.steps_taken());
}

TEST_CASE("zw witness for A = {1}") {
    auto e = std::make_shared<Enumerator>(Enumerator::finite({1}));
    ZwReal zw = zw_real(e);
    CHECK(zw.witness.term(1) == Rational(1, 2));
    CHECK(zw.witness.term(5) == Rational(1, 2));
    REQUIRE(zw.oracle.has_value());
    CHECK(*zw.oracle->exact_value() == Rational(1, 2));
}

TEST_CASE("zw witness for all naturals sums the geometric series") {
    auto e = std::make_shared<Enumerator>(Enumerator::progression(1, 1));
    ZwReal zw = zw_real(e);
    for (std::uint64_t m : {1ull, 4ull, 10ull})
        CHECK(zw.witness.term(m) == Rational(1) - Rational::pow2(-static_cast<long>(m)));
    REQUIRE(zw.oracle.has_value());
    for (unsigned n : {3u, 10u, 20u})
        CHECK((zw.oracle->approx(n) - Rational(1)).abs() <= Rational::pow2(-static_cast<long>(n)));
}

TEST_CASE("zw limit for A = {2,4} is 0.3125") {
    auto e = std::make_shared<Enumerator>(Enumerator::finite({2, 4}));
    ZwReal zw = zw_real(e);
    CHECK(zw.witness.term(2) == Rational(5, 16));
    CHECK(zw.witness.term(9) == Rational(5, 16));
    CHECK(*zw.oracle->exact_value() == Rational::from_string("0.3125"));
}

TEST_CASE("machine-backed sets expose a witness but no oracle") {
    RegisterProgram prog = RegisterProgram::parse(4, kSquaresProgram);
    auto e = std::make_shared<Enumerator>(Enumerator::machine(prog));
    ZwReal zw = zw_real(e);
    CHECK(!zw.oracle.has_value());
    CHECK(zw.witness.term(20) == Rational(1, 2));        // value 1 emitted at step 20
    CHECK(zw.witness.term(58) == Rational(1, 2));
    CHECK(zw.witness.term(59) == Rational(1, 2) + Rational::pow2(-4));
}

TEST_CASE("witness terms are nondecreasing and bounded by 1") {
    auto e = std::make_shared<Enumerator>(Enumerator::progression(2, 3));
    MonotoneWitness w = specker_sequence(e);
    CHECK(w.provenance() == "specker");
    Rational prev(0);
    for (std::uint64_t m = 0; m <= 40; ++m) {
        Rational cur = w.term(m);
        CHECK(cur >= prev);
        CHECK(cur <= Rational(1));
        prev = cur;
    }
}

TEST_CASE("injectivity holds for machine emissions too") {
    // emits 2, 2, 3 then halts; the duplicate is dropped
    RegisterProgram prog = RegisterProgram::parse(1, {
        "INC 0", "INC 0", "EMIT 0", "EMIT 0", "INC 0", "EMIT 0", "HALT"});
    Enumerator e = Enumerator::machine(prog);
    CHECK(e.step(20) == std::vector<std::uint64_t>{2, 3});
    auto vals = e.values();
    CHECK(vals == std::vector<std::uint64_t>{2, 3});
}
