#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "circa/enumerator.hpp"
#include "circa/trig.hpp"

namespace circa {

/// Normalizing gauge G(n) = sum_{k=2..n+1} 1/(k ln k); slowly divergent,
/// so 1/G-type tails shrink only like 1/ln ln. Certified, width <= 2^-prec.
Interval gauge(unsigned n, long prec);
CReal gauge_creal(unsigned n);

/// C1 = sum_{k>=2} 1/(k^2 ln k). Tail after K bounded by 1/(ln K (K-1)).
Interval coeff_sum_constant(long prec);
/// K0 = 2*C1, the constant in the uniform tail bound
/// ||u - u_m||_inf <= K0 / G(m+1) for unit-mass exponent sums.
CReal tail_bound_constant();

/// Sine block p_n of degree n+1 with coefficients 1/(G(n) k^2 ln k),
/// k = 2..n+1. Normalized so the derivative at 0 is exactly 1, which is
/// also its sup: |p_n'(t)| <= p_n'(0) = 1. And |p_n(t)| <= C1/G(n).
TrigPoly sine_block(unsigned n);

struct BlockSum {
    TrigPoly poly;                        // sum_{n=1..terms} 2^-phi(n) p_n
    std::vector<std::uint64_t> exponents; // phi(1..terms)
    bool saturated = false;               // enumerator exhausted before m terms
};

/// Partial sum u_m = sum_{n=1..m} 2^-phi(n) p_n for the set enumerated by e;
/// steps the enumerator as needed (up to step_budget, throwing
/// BudgetExhausted if the program stalls first). A finite set with fewer
/// than m elements yields the saturated sum with the flag set.
BlockSum block_partial_sum(Enumerator& e, unsigned m,
                           std::uint64_t step_budget = 1'000'000);

/// The compiler from a Sigma_1 representation to a function with
/// ||u'||_inf = x[A]: identical construction to block_partial_sum, under the
/// name of its contract.
BlockSum compile_sigma1(Enumerator& e, unsigned m, std::uint64_t step_budget = 1'000'000);

/// Exposes the whole family u_m with its effective tail data.
class BlockFamily {
public:
    explicit BlockFamily(std::shared_ptr<Enumerator> e);
    const TrigPoly& partial(unsigned m, std::uint64_t step_budget = 1'000'000);
    bool saturated(unsigned m, std::uint64_t step_budget = 1'000'000);
    // K0 / G(m+1): uniform bound on ||u - u_m||_inf.
    Interval tail_bound(unsigned m, long prec) const;
    // Effective-function view; valid with the saturating modulus only when
    // the set is finite with at most `size` elements.
    EffectiveFunction as_effective_finite(unsigned size);

private:
    std::shared_ptr<Enumerator> e_;
    std::map<unsigned, BlockSum> sums_;
};

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Strictly increasing block indices n_1 < n_2 < ... with a declared upper
/// bound on sum_k 1/G(n_k); validation certifies the bound.
struct GaugeSchedule {
    std::vector<unsigned> indices;
    Rational gauge_sum_bound;
    void validate() const;  // throws std::invalid_argument on violation
};

/// P_K = sum_{k=1..K} d_k p_{n_k} with increments d_k = w(k) - w(k-1) taken
/// from a nondecreasing witness. Realizes ||P_K' - g||_inf <= x - w(K) for
/// the limit derivative g.
TrigPoly schedule_combination(const MonotoneWitness& w, const GaugeSchedule& s, unsigned K);

/// d_n = max_t |d/dt (P_{r_n} u)(t)| with r_n = 1 - 1/n (n >= 2): a
/// nondecreasing certified lower-bound sequence converging to ||u'||_inf.
Interval poisson_lower_bound(const TrigPoly& u, unsigned n, long prec);
/// Same for an effective function: the approximant residual g is absorbed
/// via ||(P_r g)'||_inf <= 2r/(1-r)^2 * ||g||_inf.
Interval poisson_lower_bound(const EffectiveFunction& u, unsigned n, long prec);
/// The residual factor 2r/(1-r)^2 at r = 1 - 1/n, i.e. 2n(n-1).
Rational poisson_residual_factor(unsigned n);

}  // namespace circa
