#include "circa/enumerator.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace circa {

namespace {
constexpr std::uint64_t kMaxEmittedValue = (1ull << 32);
constexpr std::size_t kSmallSeenLimit = 1 << 16;

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}
}  // namespace

RegisterProgram RegisterProgram::parse(unsigned register_count,
                                       const std::vector<std::string>& lines) {
    RegisterProgram prog;
    prog.register_count = register_count;

    struct Pending {
        std::string label;  // empty when target below is already numeric
        unsigned target = 0;
    };
    std::map<std::string, unsigned> labels;
    std::vector<std::pair<std::size_t, std::string>> fixups;  // instr index -> label

    for (const std::string& raw : lines) {
        std::string line = trim(raw);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon != std::string::npos) {
            std::string label = trim(line.substr(0, colon));
            if (label.empty() || label.find(' ') != std::string::npos)
                throw std::invalid_argument("register program: bad label in '" + raw + "'");
            if (!labels.emplace(label, static_cast<unsigned>(prog.code.size())).second)
                throw std::invalid_argument("register program: duplicate label '" + label + "'");
            line = trim(line.substr(colon + 1));
            if (line.empty()) continue;  // label on its own line
        }
        std::istringstream ss(line);
        std::string mnem, arg1, arg2;
        ss >> mnem >> arg1 >> arg2;
        std::transform(mnem.begin(), mnem.end(), mnem.begin(),
                       [](unsigned char c) { return std::toupper(c); });

        auto parse_reg = [&](const std::string& a) -> unsigned {
            if (a.empty()) throw std::invalid_argument("register program: missing register in '" + raw + "'");
            unsigned long r = std::stoul(a);
            if (r >= register_count)
                throw std::invalid_argument("register program: register " + a + " out of range");
            return static_cast<unsigned>(r);
        };

        Instr in;
        if (mnem == "INC") { in.op = Op::inc; in.reg = parse_reg(arg1); }
        else if (mnem == "DEC") { in.op = Op::dec; in.reg = parse_reg(arg1); }
        else if (mnem == "EMIT") { in.op = Op::emit; in.reg = parse_reg(arg1); }
        else if (mnem == "HALT") { in.op = Op::halt; }
        else if (mnem == "JMP" || mnem == "JZ") {
            std::string target = (mnem == "JZ") ? arg2 : arg1;
            if (mnem == "JZ") in.reg = parse_reg(arg1);
            in.op = (mnem == "JZ") ? Op::jz : Op::jmp;
            if (target.empty())
                throw std::invalid_argument("register program: missing jump target in '" + raw + "'");
            if (std::isdigit(static_cast<unsigned char>(target[0]))) {
                in.target = static_cast<unsigned>(std::stoul(target));
            } else {
                fixups.emplace_back(prog.code.size(), target);
            }
        } else {
            throw std::invalid_argument("register program: unknown mnemonic '" + mnem + "'");
        }
        prog.code.push_back(in);
    }

    for (auto& [idx, label] : fixups) {
        auto it = labels.find(label);
        if (it == labels.end())
            throw std::invalid_argument("register program: unresolved label '" + label + "'");
        prog.code[idx].target = it->second;
    }
    for (const Instr& in : prog.code) {
        if ((in.op == Op::jz || in.op == Op::jmp) && in.target > prog.code.size())
            throw std::invalid_argument("register program: jump target out of range");
    }
    return prog;
}

Enumerator Enumerator::finite(std::vector<std::uint64_t> values) {
    for (std::uint64_t v : values) {
        if (v == 0) throw std::invalid_argument("enumerator: values must be >= 1");
        if (v >= kMaxEmittedValue) throw std::invalid_argument("enumerator: value too large");
    }
    Enumerator e;
    e.kind_ = Kind::finite;
    e.list_ = std::move(values);
    return e;
}

Enumerator Enumerator::progression(std::uint64_t first, std::uint64_t step) {
    if (first == 0 || step == 0)
        throw std::invalid_argument("enumerator: progression needs first >= 1 and step >= 1");
    Enumerator e;
    e.kind_ = Kind::progression;
    e.first_ = first;
    e.stride_ = step;
    return e;
}

Enumerator Enumerator::machine(RegisterProgram prog) {
    if (prog.code.empty()) throw std::invalid_argument("enumerator: empty program");
    Enumerator e;
    e.kind_ = Kind::machine;
    e.regs_.assign(prog.register_count, mpz_class(0));
    e.prog_ = std::move(prog);
    return e;
}

bool Enumerator::exhausted() const {
    switch (kind_) {
        case Kind::finite: return list_pos_ >= list_.size();
        case Kind::progression: return false;
        case Kind::machine: return halted_;
    }
    return false;
}

void Enumerator::emit(std::uint64_t value) {
    if (value == 0) return;  // rejected so that x[A] stays within [0, 1]
    if (value >= kMaxEmittedValue)
        throw std::runtime_error("enumerator: emitted value exceeds supported range");
    if (value < kSmallSeenLimit) {
        if (seen_small_.size() <= value) seen_small_.resize(value + 1, false);
        if (seen_small_[value]) return;
        seen_small_[value] = true;
    } else {
        if (std::find(seen_large_.begin(), seen_large_.end(), value) != seen_large_.end())
            return;
        seen_large_.push_back(value);
    }
    log_.emplace_back(steps_, value);
}

bool Enumerator::step_once() {
    ++steps_;
    switch (kind_) {
        case Kind::finite:
            if (list_pos_ < list_.size()) {
                emit(list_[list_pos_++]);
                return true;
            }
            return false;
        case Kind::progression:
            emit(first_ + stride_ * index_);
            ++index_;
            return true;
        case Kind::machine: {
            if (halted_ || pc_ >= prog_.code.size()) {
                halted_ = true;
                return false;
            }
            const RegisterProgram::Instr& in = prog_.code[pc_];
            switch (in.op) {
                case RegisterProgram::Op::inc: regs_[in.reg] += 1; ++pc_; break;
                case RegisterProgram::Op::dec:
                    if (regs_[in.reg] > 0) regs_[in.reg] -= 1;
                    ++pc_;
                    break;
                case RegisterProgram::Op::jz:
                    pc_ = (regs_[in.reg] == 0) ? in.target : pc_ + 1;
                    break;
                case RegisterProgram::Op::jmp: pc_ = in.target; break;
                case RegisterProgram::Op::emit: {
                    const mpz_class& v = regs_[in.reg];
                    if (!v.fits_ulong_p())
                        throw std::runtime_error("enumerator: emitted value exceeds supported range");
                    emit(v.get_ui());
                    ++pc_;
                    break;
                }
                case RegisterProgram::Op::halt: halted_ = true; break;
            }
            return true;
        }
    }
    return false;
}

std::vector<std::uint64_t> Enumerator::step(std::uint64_t budget) {
    if (budget == 0) throw std::invalid_argument("enumerator: budget must be >= 1");
    const std::size_t before = log_.size();
    for (std::uint64_t i = 0; i < budget; ++i) step_once();
    std::vector<std::uint64_t> out;
    out.reserve(log_.size() - before);
    for (std::size_t i = before; i < log_.size(); ++i) out.push_back(log_[i].second);
    return out;
}

std::vector<std::uint64_t> Enumerator::values() const {
    std::vector<std::uint64_t> out;
    out.reserve(log_.size());
    for (const auto& [step, v] : log_) out.push_back(v);
    return out;
}

Rational Enumerator::partial_sum_at_step(std::uint64_t m) const {
    if (m > steps_)
        throw std::invalid_argument("enumerator: partial sum beyond stepped history");
    Rational sum(0);
    for (const auto& [step, v] : log_) {
        if (step > m) break;
        sum += Rational::pow2(-static_cast<long>(v));
    }
    return sum;
}

bool Enumerator::ensure_emitted(std::uint64_t count, std::uint64_t max_steps) {
    const std::uint64_t start = steps_;
    while (log_.size() < count) {
        if (exhausted()) return false;
        if (steps_ - start >= max_steps) return false;
        step_once();
    }
    return true;
}

ZwReal zw_real(std::shared_ptr<Enumerator> e) {
    if (!e) throw std::invalid_argument("zw_real: null enumerator");
    MonotoneWitness witness(
        [e](std::uint64_t m) {
            if (e->steps_taken() < m) e->step(m - e->steps_taken());
            return e->partial_sum_at_step(m);
        },
        MonotoneWitness::Direction::nondecreasing, "zw-partial-sums");

    std::optional<CReal> oracle;
    if (e->kind() == Enumerator::Kind::finite) {
        // the exact value is a finite sum, known up front
        auto fresh = *e;  // value copy; do not disturb the caller's stepping state
        Rational x(0);
        while (!fresh.exhausted()) fresh.step(1);
        for (std::uint64_t v : fresh.values()) x += Rational::pow2(-static_cast<long>(v));
        oracle = CReal::constant(x, "zw-finite");
    } else if (e->kind() == Enumerator::Kind::progression) {
        // emissions strictly increase, so the tail after last value v is
        // < 2^-v; approx(n) = partial + tail/2 with error <= 2^-(n+1)
        oracle = CReal::from_oracle(
            [e](unsigned n) {
                while (true) {
                    const auto& log = e->emissions();
                    if (!log.empty() && log.back().second >= static_cast<std::uint64_t>(n) + 1)
                        break;
                    e->step(1);
                }
                Rational sum(0);
                for (const auto& [step, v] : e->emissions()) {
                    (void)step;
                    sum += Rational::pow2(-static_cast<long>(v));
                }
                long v_last = static_cast<long>(e->emissions().back().second);
                return sum + Rational::pow2(-(v_last + 1));
            },
            "zw-progression");
    }
    return ZwReal{std::move(witness), std::move(oracle)};
}

MonotoneWitness specker_sequence(std::shared_ptr<Enumerator> e) {
    return zw_real(std::move(e)).witness.with_provenance("specker");
}

}  // namespace circa
