#include "tuttelab/montecarlo.hpp"

#include "tuttelab/config.hpp"
#include "tuttelab/kernel.hpp"
#include "tuttelab/rng.hpp"
#include "tuttelab/tutte.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace tuttelab {

namespace {

bool zero_at(const std::vector<detail::KPoly>& polys, const FieldSpec& f,
             const std::vector<FieldElement>& x) {
    for (const detail::KPoly& poly : polys) {
        FieldElement acc = f.zero();
        for (const detail::KTerm& term : poly) {
            FieldElement v{term.c};
            for (size_t j = 0; j < term.e.size(); ++j) {
                if (term.e[j] == 0) continue;
                v = f.mul(v, f.pow(x[j], term.e[j]));
                if (v.idx == 0) break;
            }
            acc = f.add(acc, v);
        }
        if (acc.idx != 0) return false;
    }
    return true;
}

}  // namespace

void McConfig::validate() const {
    if (trials == 0) throw UsageError("trial count must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0,1)");
    if (chunk == 0) throw UsageError("chunk size must be positive");
}

McResult mc_count(const PolySystem& system, const FieldSpec& field,
                  const McConfig& cfg) {
    cfg.validate();
    system.validate();
    const int m = system.arity();
    const uint32_t q = field.size();

    std::vector<detail::KPoly> compiled;
    for (const MultiPoly& p : system.polys)
        compiled.push_back(detail::compile_system_member(p, field));

    const uint64_t n_chunks = (cfg.trials + cfg.chunk - 1) / cfg.chunk;
    std::vector<uint64_t> chunk_hits(n_chunks, 0);
    std::atomic<uint64_t> next_chunk{0};

    auto worker = [&]() {
        std::vector<FieldElement> x(m, FieldElement{0});
        for (;;) {
            uint64_t ci = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (ci >= n_chunks) return;
            const uint64_t lo = ci * cfg.chunk;
            const uint64_t hi = std::min(cfg.trials, lo + cfg.chunk);
            uint64_t hits = 0;
            for (uint64_t i = lo; i < hi; ++i) {
                for (int j = 0; j < m; ++j)
                    x[j] = FieldElement{
                        rng::draw_below(cfg.seed, i * static_cast<uint64_t>(m ? m : 1) + j, q)};
                if (zero_at(compiled, field, x)) ++hits;
            }
            chunk_hits[ci] = hits;
        }
    };

    int nthreads = std::max(1, std::min<int>(config::threads(),
                                             static_cast<int>(std::min<uint64_t>(n_chunks, 64))));
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    uint64_t hits = 0;
    for (uint64_t h : chunk_hits) hits += h;

    McResult res;
    res.hits = hits;
    res.trials = cfg.trials;
    res.seed = cfg.seed;
    res.b_hat = BigRat(hits, cfg.trials);
    double b = static_cast<double>(hits) / static_cast<double>(cfg.trials);
    res.estimate = b * std::pow(static_cast<double>(q), m);
    res.epsilon =
        std::sqrt(4.0 * b * std::log(2.0 / cfg.delta) / static_cast<double>(cfg.trials));
    return res;
}

McComparisonRow mc_vs_exact(const PolySystem& system, const FieldSpec& field,
                            const McConfig& cfg, std::optional<BigInt> exact_hint) {
    McResult mc = mc_count(system, field, cfg);
    BigInt exact = exact_hint ? *exact_hint : brute_count(system, field).count;

    McComparisonRow row;
    row.p = field.p();
    row.r = field.r();
    row.exact = exact;
    row.estimate = mc.estimate;
    row.bound = mc.epsilon;
    row.trials = mc.trials;
    row.seed = mc.seed;
    if (exact == 0) {
        row.absolute = true;
        row.error = mc.estimate;
    } else {
        row.error = (mc.estimate - exact.convert_to<double>()) / exact.convert_to<double>();
    }
    return row;
}

McFibrationReport fibration_mc_probe(const Graph& g, const FieldSpec& field,
                                     const McConfig& cfg) {
    cfg.validate();
    if (field.p() < 3)
        throw UsageError("no spin value outside {0,1} exists over characteristic 2");

    McFibrationReport rep;
    rep.p = field.p();
    rep.r = field.r();

    MultiPoly z = tutte_delcon(g);
    for (uint32_t q = 2; q < field.p(); ++q) {
        McConfig per = cfg;
        per.seed = cfg.seed + q;
        rep.per_q.push_back(mc_count(PolySystem(z.with_q_set(BigInt(q))), field, per));
    }

    if (rep.per_q.size() < 2) {
        rep.detail = "single spin value available; no constancy verdict";
        return rep;
    }

    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < rep.per_q.size(); ++i) {
        if (rep.per_q[i].b_hat < rep.per_q[lo].b_hat) lo = i;
        if (rep.per_q[i].b_hat > rep.per_q[hi].b_hat) hi = i;
    }
    double spread = static_cast<double>((rep.per_q[hi].b_hat - rep.per_q[lo].b_hat)
                                            .convert_to<double>());
    double allowance = rep.per_q[hi].epsilon + rep.per_q[lo].epsilon;
    rep.non_constant = spread > allowance;
    rep.detail = *rep.non_constant
                     ? "spread of estimates exceeds the combined error bounds"
                     : "estimates are constant within the error bounds";
    return rep;
}

}  // namespace tuttelab
