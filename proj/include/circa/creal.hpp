#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "circa/dyadic.hpp"

namespace circa {

/// A computable real: a total oracle n -> Rational with |approx(n) - x| <= 2^-n.
/// Oracles are memoized per index and safe to query from several threads;
/// identical indices always return identical rationals.
///
/// Reals built from rational constants keep their exact value alongside the
/// oracle, and arithmetic propagates exactness. That gives trigonometric
/// polynomials with rational coefficients an exact fast path while irrational
/// coefficients remain first-class.
class CReal {
public:
    using Oracle = std::function<Rational(unsigned)>;

    CReal() : CReal(constant(Rational(0))) {}

    static CReal constant(const Rational& q, std::string provenance = "constant");
    static CReal from_oracle(Oracle f, std::string provenance);
    // f(p) must return an interval containing x of width <= 2^-p.
    static CReal from_intervals(std::function<Interval(long)> f, std::string provenance);

    Rational approx(unsigned n) const;
    // Contains x; width <= 2^-(n-1) plus one rounding ulp at n+8 bits.
    Interval enclosure(unsigned n) const;
    const std::optional<Rational>& exact_value() const;
    const std::string& provenance() const;

    friend CReal operator+(const CReal& a, const CReal& b);
    friend CReal operator-(const CReal& a, const CReal& b);
    friend CReal operator*(const CReal& a, const CReal& b);
    friend CReal operator-(const CReal& a);
    CReal abs() const;
    CReal scaled(const Rational& q) const;  // exact rational scaling

private:
    struct State {
        Oracle fn;
        std::optional<Rational> exact;
        std::string provenance;
        std::map<unsigned, Rational> memo;
        std::mutex mu;
    };
    explicit CReal(std::shared_ptr<State> st) : st_(std::move(st)) {}
    std::shared_ptr<State> st_;
};

/// A monotone rational sequence standing for its limit: the Sigma_1 (Pi_1)
/// representation of a real as a nondecreasing (nonincreasing) computable
/// sequence. No 2^-n error oracle is implied.
class MonotoneWitness {
public:
    enum class Direction { nondecreasing, nonincreasing };

    MonotoneWitness(std::function<Rational(std::uint64_t)> terms, Direction dir,
                    std::string provenance);

    Rational term(std::uint64_t m) const;  // memoized, thread-safe
    Direction direction() const { return dir_; }
    const std::string& provenance() const { return provenance_; }
    MonotoneWitness with_provenance(std::string p) const;

private:
    struct State {
        std::function<Rational(std::uint64_t)> fn;
        std::map<std::uint64_t, Rational> memo;
        std::mutex mu;
    };
    std::shared_ptr<State> st_;
    Direction dir_;
    std::string provenance_;
};

/// Difference quotient r_n = n * (u(t + 1/n) - u(t)) for a pointwise
/// evaluator u. The sequence converges to u'(t) for continuously
/// differentiable u, with no effective modulus claimed.
CReal diff_quotient(const std::function<CReal(const Rational&)>& value_at,
                    const Rational& t, unsigned n);

}  // namespace circa
