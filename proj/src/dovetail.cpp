#include "circa/dovetail.hpp"

#include <stdexcept>

namespace circa {

bool SteppedMachine::step() {
    if (halted_at_) return true;
    ++steps_;
    if (step_fn_(steps_)) halted_at_ = steps_;
    return halted();
}

SteppedMachine semidecide_positive(const CReal& x) {
    return SteppedMachine([x](std::uint64_t n) {
        const Rational a = x.approx(static_cast<unsigned>(n));
        if (a.sign() <= 0) return false;  // cannot exceed 2^-n
        return a - Rational::pow2(-static_cast<long>(n)) > Rational(0);
    });
}

SteppedMachine semidecide_below(const CReal& x, const Rational& c) {
    return semidecide_positive(CReal::constant(c) - x);
}

SteppedMachine upper_bound_detector(const CReal& x, const Rational& lambda) {
    return semidecide_below(x, lambda);
}

RaceResult race(SteppedMachine& a, SteppedMachine& b, std::uint64_t budget) {
    if (budget == 0) throw std::invalid_argument("race: budget must be >= 1");
    for (std::uint64_t round = 1; round <= budget; ++round) {
        if (a.step()) return {RaceResult::Outcome::a_halted, *a.halted_at()};
        if (b.step()) return {RaceResult::Outcome::b_halted, *b.halted_at()};
    }
    return {RaceResult::Outcome::both_running, budget};
}

namespace {
struct LiveMachine {
    Rational input;
    SteppedMachine machine;
};
}  // namespace

SearchResult dyadic_bound_search(const std::function<SteppedMachine(const Rational&)>& detector,
                                 std::uint64_t max_rounds) {
    SearchResult out;
    Rational cap(1);  // all searched bounds lie in (0, cap)
    std::vector<LiveMachine> live;
    long level = 0;  // dyadic level within the current phase

    for (std::uint64_t round = 1; round <= max_rounds; ++round) {
        out.rounds_used = round;
        ++level;

        // spawn detectors for the new odd-numerator dyadics k 2^-level < cap
        // (cap <= 1, so lambda < cap already keeps k < 2^level)
        const Rational step = Rational::pow2(-level);
        const Rational two_step = step + step;
        for (Rational lambda = step; lambda < cap; lambda += two_step) {
            out.log.push_back({round, SearchEvent::Kind::spawn, lambda});
            live.push_back({lambda, detector(lambda)});
        }

        // one step for every live machine, in spawn order
        std::optional<Rational> best;
        for (LiveMachine& lm : live) {
            if (lm.machine.step()) {
                out.log.push_back({round, SearchEvent::Kind::halt, lm.input});
                if (!best || lm.input < *best) best = lm.input;
            }
        }

        if (best) {
            out.log.push_back({round, SearchEvent::Kind::emit, *best});
            out.bounds.push_back(*best);
            cap = *best;      // restart the procedure strictly below the bound
            live.clear();
            level = 0;
        }
    }
    out.budget_exhausted = true;
    return out;
}

}  // namespace circa
