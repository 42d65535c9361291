#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "circa/creal.hpp"

namespace circa {

/// A resumable one-output-state machine advanced one bounded unit of work at
/// a time. Once halted, further steps are no-ops. Step counts are
/// deterministic for identical inputs. Non-halting is never observable; the
/// most a caller learns is "still running after N steps".
class SteppedMachine {
public:
    // step_fn(n) performs the machine's n-th step (1-based) and reports
    // whether it halted on that step.
    explicit SteppedMachine(std::function<bool(std::uint64_t)> step_fn)
        : step_fn_(std::move(step_fn)) {}

    // Advances one step (no-op when halted); returns true iff halted.
    bool step();
    bool halted() const { return halted_at_.has_value(); }
    std::uint64_t steps_taken() const { return steps_; }
    std::optional<std::uint64_t> halted_at() const { return halted_at_; }

private:
    std::function<bool(std::uint64_t)> step_fn_;
    std::uint64_t steps_ = 0;
    std::optional<std::uint64_t> halted_at_;
};

/// Halts iff x > 0: the n-th step queries approx(n) and halts once
/// approx(n) - 2^-n > 0. Sound (halting certifies x > 0) and complete
/// (halts for every x > 0).
SteppedMachine semidecide_positive(const CReal& x);

/// Halts iff x < c, by positivity of c - x.
SteppedMachine semidecide_below(const CReal& x, const Rational& c);

/// Halts iff lambda > x; the detector of upper bounds for a computable x.
SteppedMachine upper_bound_detector(const CReal& x, const Rational& lambda);

struct RaceResult {
    enum class Outcome { a_halted, b_halted, both_running };
    Outcome outcome;
    std::uint64_t steps = 0;  // halting step of the winner, or budget
};

/// Strict round-robin (one step of a, one of b, repeat) up to `budget`
/// rounds. First halter wins; a tie within a round goes to a.
RaceResult race(SteppedMachine& a, SteppedMachine& b, std::uint64_t budget);

struct SearchEvent {
    enum class Kind { spawn, halt, emit };
    std::uint64_t round;
    Kind kind;
    Rational value;
};

struct SearchResult {
    std::vector<Rational> bounds;    // strictly decreasing certified upper bounds
    std::vector<SearchEvent> log;
    std::uint64_t rounds_used = 0;
    bool budget_exhausted = false;
};

/// Breadth-first dovetailing over the dyadic rationals: each phase spawns,
/// level by level, detectors for the new odd-numerator dyadics k 2^-i below
/// the current cap and steps all live machines once per round. When
/// machines halt in a round, the smallest halted input becomes the next
/// emitted bound and the phase restarts below it. With a detector that
/// halts exactly on {lambda : lambda > x}, the emitted sequence decreases
/// strictly toward x.
SearchResult dyadic_bound_search(const std::function<SteppedMachine(const Rational&)>& detector,
                                 std::uint64_t max_rounds);

}  // namespace circa
