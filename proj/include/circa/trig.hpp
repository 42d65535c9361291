#pragma once

#include <functional>
#include <vector>

#include "circa/creal.hpp"
#include "circa/functions.hpp"

namespace circa {

/// Real trigonometric polynomial
///     p(t) = a_0/2 + sum_{k=1..M} [ a_k cos(kt) + b_k sin(kt) ]
/// with CReal coefficients (exact rationals stay exact). Immutable once
/// built except through set_* during construction; shareable across threads.
///
/// The leading cosine slot stores a_0, i.e. the constant term is a_0/2 —
/// wiener_norm counts it with weight 1/2 and poisson fixes it, matching the
/// usual Fourier normalization.
class TrigPoly {
public:
    TrigPoly();                       // zero polynomial, degree 0
    explicit TrigPoly(unsigned degree);

    static TrigPoly constant_term(const Rational& a0);       // value a0/2
    static TrigPoly sine(unsigned k, const Rational& amp);    // amp sin(kt), k >= 1
    static TrigPoly cosine(unsigned k, const Rational& amp);  // amp cos(kt), k >= 1

    unsigned degree() const { return degree_; }
    const CReal& cos_coeff(unsigned k) const;
    const CReal& sin_coeff(unsigned k) const;  // k >= 1
    void set_cos(unsigned k, CReal c);
    void set_sin(unsigned k, CReal c);

    bool is_zero() const;     // all coefficients exactly zero
    bool all_exact() const;   // every coefficient carries an exact rational
    // Exact coefficient-wise equality; requires all_exact on both sides.
    bool exact_equal(const TrigPoly& other) const;

    TrigPoly derivative() const;
    // Abel/Poisson smoothing: scales the k-th coefficients by r^k.
    // Requires 0 <= r < 1 (domain error otherwise).
    TrigPoly poisson(const Rational& r) const;
    TrigPoly scaled(const Rational& q) const;
    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);

    // Certified enclosure of p(t), width <= 2^-prec.
    Interval eval(const Rational& t, long prec) const;
    // Enclosure of { p(t) : t in t_range } (width governed by the range).
    Interval eval_over(const Interval& t_range, long prec) const;

    // Certified enclosure of sum |a_0|/2 + sum (|a_k| + |b_k|), width <= 2^-prec.
    Interval wiener_norm(long prec) const;

    // Certified enclosure of max_t |p(t)|, width <= 2^-prec. Midpoint
    // evaluations with a second-order Lipschitz bound inside a deterministic
    // branch-and-bound refinement over one period.
    Interval sup_norm(long prec) const;

    // Rational upper bound on sum k^order * (|a_k| + |b_k|) (+|a_0|/2 when
    // order = 0); order 1 bounds |p'|, order 2 bounds |p''|.
    Rational coeff_weight_upper(int order, long prec = 24) const;

private:
    unsigned degree_;
    std::vector<CReal> cos_, sin_;
};

/// A computable function on the circle: trigonometric approximants p_m and a
/// modulus e with ||f - p_m||_inf <= 2^-N whenever m >= e(N).
struct EffectiveFunction {
    std::function<TrigPoly(unsigned)> approximant;
    std::function<unsigned(unsigned)> modulus;

    // f(t) as a computable real (approximant at modulus(N), evaluated).
    CReal value_at(const Rational& t) const;
};

}  // namespace circa
