#include "circa/lab.hpp"

#include <mutex>

namespace circa {

namespace {

std::mutex gauge_mu;
std::map<std::pair<unsigned, long>, Interval> gauge_cache;

long bucket32(long prec) { return ((prec + 31) / 32) * 32; }

Interval gauge_compute(unsigned n, long prec) {
    // n+1 summands; give each ceil_log2(n+1)+2 extra bits
    long extra = 2;
    for (unsigned long x = 1; x < n + 1ul; x <<= 1) ++extra;
    const long w = prec + extra;
    Rational lo(0), hi(0);
    for (unsigned k = 2; k <= n + 1; ++k) {
        Interval lnk = ln_interval(Rational(static_cast<long>(k)), w);
        const Rational kq(static_cast<long>(k));
        lo += Rational(1) / (kq * lnk.hi().to_rational());
        hi += Rational(1) / (kq * lnk.lo().to_rational());
    }
    return Interval::of_rationals(lo, hi, prec + 2);
}

}  // namespace

Interval gauge(unsigned n, long prec) {
    if (n < 1) throw std::invalid_argument("gauge: n must be >= 1");
    const long b = bucket32(prec);
    {
        std::lock_guard<std::mutex> lk(gauge_mu);
        auto it = gauge_cache.find({n, b});
        if (it != gauge_cache.end()) return it->second.round_out(prec + 2);
    }
    Interval v = gauge_compute(n, b);
    std::lock_guard<std::mutex> lk(gauge_mu);
    gauge_cache.emplace(std::make_pair(n, b), v);
    return v.round_out(prec + 2);
}

CReal gauge_creal(unsigned n) {
    return CReal::from_intervals([n](long p) { return gauge(n, p); }, "gauge");
}

Interval coeff_sum_constant(long prec) {
    // head sum to K-1 plus tail in [0, 1/(ln K (K-1))]
    unsigned long K = 16;
    const Rational bound = Rational::pow2(prec + 2);
    // need ln K * (K-1) >= 2^(prec+2); ln K >= (bits-1)*ln2 >= (bits-1)*0.69
    while (true) {
        unsigned long bits = 0;
        for (unsigned long x = K; x > 1; x >>= 1) ++bits;
        const Rational ln_lo = Rational(static_cast<long>(bits - 1)) * Rational(69, 100);
        if (ln_lo * Rational(static_cast<long>(K - 1)) >= bound) break;
        K *= 2;
    }
    long extra = 3;
    for (unsigned long x = 1; x < K; x <<= 1) ++extra;
    const long w = prec + extra;
    Rational lo(0), hi(0);
    for (unsigned long k = 2; k < K; ++k) {
        Interval lnk = ln_interval(Rational(static_cast<long>(k)), w);
        const Rational k2(static_cast<long>(k * k));
        lo += Rational(1) / (k2 * lnk.hi().to_rational());
        hi += Rational(1) / (k2 * lnk.lo().to_rational());
    }
    Interval lnK = ln_interval(Rational(static_cast<long>(K)), 16);
    hi += Rational(1) / (lnK.lo().to_rational() * Rational(static_cast<long>(K - 1)));
    return Interval::of_rationals(lo, hi, prec + 2);
}

CReal tail_bound_constant() {
    return CReal::from_intervals(
        [](long p) {
            Interval c1 = coeff_sum_constant(p + 1);
            return Interval(c1.lo() + c1.lo(), c1.hi() + c1.hi());
        },
        "tail-constant");
}

namespace {
std::mutex block_mu;
std::map<unsigned, TrigPoly> block_cache;

TrigPoly sine_block_build(unsigned n);
}  // namespace

TrigPoly sine_block(unsigned n) {
    if (n < 1) throw std::invalid_argument("sine_block: n must be >= 1");
    std::lock_guard<std::mutex> lk(block_mu);
    auto it = block_cache.find(n);
    if (it == block_cache.end()) it = block_cache.emplace(n, sine_block_build(n)).first;
    return it->second;
}

namespace {
TrigPoly sine_block_build(unsigned n) {
    TrigPoly p(n + 1);
    for (unsigned k = 2; k <= n + 1; ++k) {
        p.set_sin(k, CReal::from_intervals(
                         [n, k](long prec) {
                             const Rational limit = Rational::pow2(-prec);
                             for (long w = prec + 6;; w += 8) {
                                 Interval g = gauge(n, w);
                                 Interval lnk = ln_interval(Rational(static_cast<long>(k)), w);
                                 const Rational k2(static_cast<long>(k) * static_cast<long>(k));
                                 const Rational lo =
                                     Rational(1) / (k2 * g.hi().to_rational() * lnk.hi().to_rational());
                                 const Rational hi =
                                     Rational(1) / (k2 * g.lo().to_rational() * lnk.lo().to_rational());
                                 Interval out = Interval::of_rationals(lo, hi, prec + 2);
                                 if (out.width().to_rational() <= limit) return out;
                             }
                         },
                         "block-coeff"));
    }
    return p;
}
}  // namespace

BlockSum block_partial_sum(Enumerator& e, unsigned m, std::uint64_t step_budget) {
    BlockSum out;
    if (!e.ensure_emitted(m, step_budget) && !e.exhausted())
        throw BudgetExhausted("block_partial_sum: step budget exhausted before " +
                              std::to_string(m) + " emissions");
    const auto& log = e.emissions();
    const unsigned terms = static_cast<unsigned>(std::min<std::size_t>(m, log.size()));
    out.saturated = terms < m;
    TrigPoly acc;
    for (unsigned n = 1; n <= terms; ++n) {
        const std::uint64_t phi = log[n - 1].second;
        out.exponents.push_back(phi);
        acc = acc + sine_block(n).scaled(Rational::pow2(-static_cast<long>(phi)));
    }
    out.poly = std::move(acc);
    return out;
}

BlockSum compile_sigma1(Enumerator& e, unsigned m, std::uint64_t step_budget) {
    return block_partial_sum(e, m, step_budget);
}

BlockFamily::BlockFamily(std::shared_ptr<Enumerator> e) : e_(std::move(e)) {
    if (!e_) throw std::invalid_argument("BlockFamily: null enumerator");
}

const TrigPoly& BlockFamily::partial(unsigned m, std::uint64_t step_budget) {
    auto it = sums_.find(m);
    if (it == sums_.end())
        it = sums_.emplace(m, block_partial_sum(*e_, m, step_budget)).first;
    return it->second.poly;
}

bool BlockFamily::saturated(unsigned m, std::uint64_t step_budget) {
    partial(m, step_budget);
    return sums_.at(m).saturated;
}

Interval BlockFamily::tail_bound(unsigned m, long prec) const {
    Interval k0 = tail_bound_constant().enclosure(static_cast<unsigned>(prec + 4));
    Interval g = gauge(m + 1, prec + 4);
    return Interval::div(k0, g, prec + 2);
}

EffectiveFunction BlockFamily::as_effective_finite(unsigned size) {
    // saturating family: u_m is exact for m >= size
    partial(size);
    auto self_e = e_;
    auto cache = std::make_shared<std::map<unsigned, TrigPoly>>();
    for (const auto& [m, bs] : sums_) cache->emplace(m, bs.poly);
    return EffectiveFunction{
        [self_e, cache](unsigned m) {
            auto it = cache->find(m);
            if (it == cache->end())
                it = cache->emplace(m, block_partial_sum(*self_e, m).poly).first;
            return it->second;
        },
        [size](unsigned) { return size; }};
}

void GaugeSchedule::validate() const {
    if (indices.empty()) throw std::invalid_argument("schedule: empty index list");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 1) throw std::invalid_argument("schedule: indices must be >= 1");
        if (i > 0 && indices[i] <= indices[i - 1])
            throw std::invalid_argument("schedule: indices must be strictly increasing");
    }
    Rational sum_hi(0);
    for (unsigned n : indices) {
        Interval g = gauge(n, 24);
        sum_hi += Rational(1) / g.lo().to_rational();
    }
    if (sum_hi > gauge_sum_bound)
        throw std::invalid_argument("schedule: certified sum of 1/G(n_k) exceeds declared bound");
}

TrigPoly schedule_combination(const MonotoneWitness& w, const GaugeSchedule& s, unsigned K) {
    s.validate();
    if (w.direction() != MonotoneWitness::Direction::nondecreasing)
        throw std::invalid_argument("schedule_combination: witness must be nondecreasing");
    if (K > s.indices.size())
        throw std::invalid_argument("schedule_combination: K exceeds schedule length");
    TrigPoly acc;
    Rational prev = w.term(0);
    for (unsigned k = 1; k <= K; ++k) {
        const Rational cur = w.term(k);
        const Rational inc = cur - prev;
        if (inc.sign() < 0)
            throw std::invalid_argument("schedule_combination: witness is not nondecreasing");
        prev = cur;
        if (inc.is_zero()) continue;
        acc = acc + sine_block(s.indices[k - 1]).scaled(inc);
    }
    return acc;
}

Rational poisson_residual_factor(unsigned n) {
    if (n < 2) throw std::invalid_argument("poisson_residual_factor: n must be >= 2");
    // 2r/(1-r)^2 at r = 1 - 1/n
    return Rational(2) * Rational(static_cast<long>(n)) * Rational(static_cast<long>(n - 1));
}

Interval poisson_lower_bound(const TrigPoly& u, unsigned n, long prec) {
    if (n < 2) throw std::invalid_argument("poisson_lower_bound: n must be >= 2");
    const Rational r = Rational(1) - Rational(1, static_cast<long>(n));
    return u.poisson(r).derivative().sup_norm(prec);
}

Interval poisson_lower_bound(const EffectiveFunction& u, unsigned n, long prec) {
    if (n < 2) throw std::invalid_argument("poisson_lower_bound: n must be >= 2");
    const Rational factor = poisson_residual_factor(n);
    long fbits = factor.mag_bits();
    const unsigned N = static_cast<unsigned>(prec + 3 + fbits);
    const TrigPoly um = u.approximant(u.modulus(N));
    Interval base = poisson_lower_bound(um, n, prec + 2);
    const Rational residual = factor * Rational::pow2(-static_cast<long>(N));
    return Interval::of_rationals(base.lo().to_rational() - residual,
                                  base.hi().to_rational() + residual, prec + 2);
}

}  // namespace circa
