#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "circa/creal.hpp"

namespace circa {

/// Six-opcode register machine over unbounded natural registers. The
/// instruction set is the smallest carrier with unambiguous per-step
/// budget accounting:
///   INC r        r += 1
///   DEC r        r -= 1 if r > 0, else no-op
///   JZ r label   jump to label if r == 0
///   JMP label    unconditional jump
///   EMIT r       emit current value of r
///   HALT         stop; further steps are no-ops
/// Text form: one instruction per line, optionally prefixed "name:".
/// Jump targets may be label names or absolute instruction indices.
struct RegisterProgram {
    enum class Op { inc, dec, jz, jmp, emit, halt };
    struct Instr {
        Op op;
        unsigned reg = 0;
        unsigned target = 0;
    };
    unsigned register_count = 0;
    std::vector<Instr> code;

    // Throws std::invalid_argument on unknown mnemonics, unresolved labels,
    // or register indices >= register_count.
    static RegisterProgram parse(unsigned register_count, const std::vector<std::string>& lines);
};

/// A program enumerating a set A of naturals >= 1, stepped under an explicit
/// budget. Emissions are injective (duplicates are dropped) and 0 is rejected
/// at emission. Stateful, single-owner; distinct instances are independent.
class Enumerator {
public:
    enum class Kind { finite, progression, machine };

    static Enumerator finite(std::vector<std::uint64_t> values);
    // a + d*n for n = 0, 1, 2, ...; requires a >= 1, d >= 1.
    static Enumerator progression(std::uint64_t first, std::uint64_t step);
    static Enumerator machine(RegisterProgram prog);

    // Runs exactly `budget` steps (one yield attempt or one VM instruction
    // each) and returns the values newly emitted, in order. Deterministic.
    std::vector<std::uint64_t> step(std::uint64_t budget);

    Kind kind() const { return kind_; }
    std::uint64_t steps_taken() const { return steps_; }
    // True once no further emission can ever happen (finite list consumed,
    // machine halted). Progressions never exhaust.
    bool exhausted() const;

    // Emission log as (step_index, value), step_index 1-based.
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& emissions() const {
        return log_;
    }
    std::vector<std::uint64_t> values() const;

    // Sum of 2^-v over values emitted within the first m steps. Requires
    // m <= steps_taken().
    Rational partial_sum_at_step(std::uint64_t m) const;
    // Ensures at least `count` emissions, stepping at most `max_steps` in
    // total; returns false if the enumerator exhausted (or stalled within
    // the step limit) first.
    bool ensure_emitted(std::uint64_t count, std::uint64_t max_steps);

private:
    Enumerator() = default;
    void emit(std::uint64_t value);
    bool step_once();

    Kind kind_ = Kind::finite;
    std::uint64_t steps_ = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> log_;
    std::vector<bool> seen_small_;
    std::vector<std::uint64_t> seen_large_;

    // finite
    std::vector<std::uint64_t> list_;
    std::size_t list_pos_ = 0;
    // progression
    std::uint64_t first_ = 0, stride_ = 0, index_ = 0;
    // machine
    RegisterProgram prog_;
    std::vector<mpz_class> regs_;
    std::size_t pc_ = 0;
    bool halted_ = false;
};

/// Zheng-Weihrauch view of x[A] = sum_{n in A} 2^-n for the set enumerated
/// by e. The witness is the nondecreasing partial-sum sequence indexed by
/// enumerator steps (total and computable for every program). A genuine
/// 2^-n oracle is attached only when the program shape proves x[A]
/// computable: finite lists and strictly increasing progressions. For
/// machine-backed enumerators only the witness is available.
struct ZwReal {
    MonotoneWitness witness;
    std::optional<CReal> oracle;
};

ZwReal zw_real(std::shared_ptr<Enumerator> e);
MonotoneWitness specker_sequence(std::shared_ptr<Enumerator> e);

}  // namespace circa
