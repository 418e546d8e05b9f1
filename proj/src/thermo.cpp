#include "tuttelab/thermo.hpp"

#include "tuttelab/config.hpp"
#include "tuttelab/rng.hpp"
#include "tuttelab/tutte.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace tuttelab {

void PhysParams::validate() const {
    if (ferromagnetic)
        for (double j : J)
            if (j < 0.0) throw UsageError("ferromagnetic flag set but an energy is negative");
}

std::vector<double> weights_from_energy(const PhysParams& params) {
    params.validate();
    std::vector<double> t;
    t.reserve(params.J.size());
    for (double j : params.J) t.push_back(std::expm1(params.beta * j));
    return t;
}

BigRat thermo_average(const Graph& g, long long q, const std::vector<BigRat>& t,
                      const RatPoly& f) {
    if (static_cast<int>(t.size()) != g.edge_count())
        throw UsageError("weight vector length does not match the edge count");
    const BigRat qr(q);
    BigRat den = tutte_delcon(g).evaluate<BigRat>(qr, t);
    if (den == 0) throw UsageError("partition function vanishes at this weight vector");
    BigRat num = second_polynomial(g, f).evaluate<BigRat>(qr, t);
    return num / den;
}

double simplex_volume(int n, double a) {
    if (n < 0) throw UsageError("negative dimension");
    if (!(a > 0.0)) throw UsageError("side length must be positive");
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    return std::pow(a, n) / fact * std::sqrt((n + 1) / std::pow(2.0, n));
}

namespace {

// Flattened sparse polynomial with double coefficients: fast per-sample
// evaluation without touching the exact types in the hot loop.
struct FlatPoly {
    struct Term {
        double c;
        std::vector<std::pair<int, uint32_t>> powers;  // (variable, exponent)
    };
    std::vector<Term> terms;

    template <class C>
    static FlatPoly from(const SparsePoly<C>& p, double q_value) {
        FlatPoly out;
        for (const auto& [e, c] : p.terms()) {
            Term t;
            t.c = static_cast<double>(c) * std::pow(q_value, e[p.arity()]);
            for (int v = 0; v < p.arity(); ++v)
                if (e[v]) t.powers.emplace_back(v, e[v]);
            out.terms.push_back(std::move(t));
        }
        return out;
    }

    double eval(const std::vector<double>& x) const {
        double acc = 0.0;
        for (const Term& t : terms) {
            double v = t.c;
            for (auto [var, exp] : t.powers) {
                double base = x[var];
                for (uint32_t i = 0; i < exp; ++i) v *= base;
            }
            acc += v;
        }
        return acc;
    }
};

double pairwise_sum(const std::vector<double>& v, size_t lo, size_t hi) {
    if (hi == lo) return 0.0;
    if (hi - lo == 1) return v[lo];
    size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Uniform point of the standard simplex via sorted spacings of m - 1 uniform
// draws; streams are indexed so the point depends only on (seed, sample).
void simplex_point(uint64_t seed, uint64_t sample, int m, std::vector<double>& cuts,
                   std::vector<double>& t) {
    cuts.clear();
    for (int j = 0; j + 1 < m; ++j)
        cuts.push_back(rng::draw_unit(seed, sample * static_cast<uint64_t>(m) + j));
    std::sort(cuts.begin(), cuts.end());
    t.clear();
    double prev = 0.0;
    for (double c : cuts) {
        t.push_back(c - prev);
        prev = c;
    }
    t.push_back(1.0 - prev);
}

}  // namespace

PeriodEstimate period_estimate(const Graph& g, long long q, const RatPoly& f,
                               uint64_t samples, uint64_t seed) {
    if (q < 1) throw UsageError("period estimation needs q >= 1");
    if (samples == 0) throw UsageError("need at least one sample");
    const int m = g.edge_count();
    if (m == 0) throw UsageError("graph has no edges to integrate over");

    const double qd = static_cast<double>(q);
    const FlatPoly zf = FlatPoly::from(tutte_delcon(g), qd);
    const FlatPoly pf = FlatPoly::from(second_polynomial(g, f), qd);

    // Fixed chunk geometry: per-chunk sums are combined in chunk order, so
    // the floating-point result does not depend on the worker count.
    constexpr uint64_t kChunk = 8192;
    const uint64_t n_chunks = (samples + kChunk - 1) / kChunk;
    std::vector<double> sum(n_chunks, 0.0), sumsq(n_chunks, 0.0);
    std::vector<double> mins(n_chunks, std::numeric_limits<double>::infinity());
    std::vector<double> maxs(n_chunks, -std::numeric_limits<double>::infinity());
    std::atomic<uint64_t> next{0};
    std::atomic<bool> bad_denominator{false};

    auto worker = [&]() {
        std::vector<double> cuts, t, vals, sqs;
        cuts.reserve(m);
        t.reserve(m);
        vals.reserve(kChunk);
        sqs.reserve(kChunk);
        for (;;) {
            uint64_t ci = next.fetch_add(1, std::memory_order_relaxed);
            if (ci >= n_chunks) return;
            const uint64_t lo = ci * kChunk;
            const uint64_t hi = std::min(samples, lo + kChunk);
            vals.clear();
            sqs.clear();
            double mn = std::numeric_limits<double>::infinity();
            double mx = -mn;
            for (uint64_t i = lo; i < hi; ++i) {
                simplex_point(seed, i, m, cuts, t);
                double den = zf.eval(t);
                if (!(den > 0.0)) {
                    bad_denominator.store(true);
                    return;
                }
                double r = pf.eval(t) / den;
                vals.push_back(r);
                sqs.push_back(r * r);
                mn = std::min(mn, r);
                mx = std::max(mx, r);
            }
            // pairwise also inside the chunk, so a power-of-two sample count
            // of identical values sums with no rounding at all
            sum[ci] = pairwise_sum(vals, 0, vals.size());
            sumsq[ci] = pairwise_sum(sqs, 0, sqs.size());
            mins[ci] = mn;
            maxs[ci] = mx;
        }
    };

    int nthreads = std::max(1, std::min<int>(config::threads(),
                                             static_cast<int>(std::min<uint64_t>(n_chunks, 64))));
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    if (bad_denominator.load())
        throw std::logic_error("partition function failed the positivity check at a sample");

    // Pairwise merge over the fixed chunk grid keeps the result independent
    // of how many workers ran.
    double total = pairwise_sum(sum, 0, n_chunks);
    double total_sq = pairwise_sum(sumsq, 0, n_chunks);
    double mn = std::numeric_limits<double>::infinity(), mx = -mn;
    for (uint64_t ci = 0; ci < n_chunks; ++ci) {
        mn = std::min(mn, mins[ci]);
        mx = std::max(mx, maxs[ci]);
    }

    const double vol = simplex_volume(m - 1, std::sqrt(2.0));
    const double n = static_cast<double>(samples);
    const double mean = total / n;

    PeriodEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.value = vol * mean;
    est.integrand_min = mn;
    est.integrand_max = mx;
    if (samples > 1) {
        double var = (total_sq - n * mean * mean) / (n - 1.0);
        // A constant integrand has zero sample variance; do not let the
        // sum-of-squares identity manufacture rounding noise.
        if (mn == mx) var = 0.0;
        est.std_error = vol * std::sqrt(std::max(0.0, var) / n);
    }
    return est;
}

PeriodEstimate normalized_period(const Graph& g, long long q, const RatPoly& f,
                                 uint64_t samples, uint64_t seed) {
    PeriodEstimate est = period_estimate(g, q, f, samples, seed);
    const double vol = simplex_volume(g.edge_count() - 1, std::sqrt(2.0));
    est.value /= vol;
    est.std_error /= vol;
    return est;
}

}  // namespace tuttelab
