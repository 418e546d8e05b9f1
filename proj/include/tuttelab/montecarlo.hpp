#pragma once

#include "tuttelab/counting.hpp"
#include "tuttelab/field.hpp"
#include "tuttelab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tuttelab {

struct McConfig {
    uint64_t trials = 10'000;
    double delta = 0.05;  // 1 - delta is the target confidence
    uint64_t seed = 0;
    uint64_t chunk = 1 << 14;  // samples per work unit

    void validate() const;
};

struct McResult {
    BigRat b_hat;      // hits / trials, exact
    uint64_t hits = 0;
    double estimate = 0.0;  // b_hat scaled by 𝔮^m
    double epsilon = 0.0;   // sqrt(4 b_hat ln(2/delta) / trials)
    uint64_t trials = 0;
    uint64_t seed = 0;
};

// Uniform sampling of field^m with a counter-based generator: the value drawn
// for coordinate j of sample i depends only on (seed, i, j, retry), so chunk
// geometry and thread count never change the outcome.
McResult mc_count(const PolySystem& system, const FieldSpec& field, const McConfig& cfg);

struct McComparisonRow {
    uint32_t p = 0;
    uint32_t r = 1;
    BigInt exact = 0;
    double estimate = 0.0;
    // (estimate - exact) / exact; when exact == 0 this switches to the plain
    // difference and `absolute` is set.
    double error = 0.0;
    bool absolute = false;
    double bound = 0.0;  // the epsilon of the underlying run
    uint64_t trials = 0;
    uint64_t seed = 0;
};

// Runs mc_count and compares with the exact count (supplied, or brute-forced
// when absent).
McComparisonRow mc_vs_exact(const PolySystem& system, const FieldSpec& field,
                            const McConfig& cfg,
                            std::optional<BigInt> exact_hint = std::nullopt);

struct McFibrationReport {
    uint32_t p = 0;
    uint32_t r = 1;
    std::vector<McResult> per_q;  // index 0 corresponds to q = 2
    // Set when at least two estimates exist: true when max - min of the b_hat
    // estimates exceeds the sum of the two epsilon bounds involved.
    std::optional<bool> non_constant;
    std::string detail;
};

// Estimates the hypersurface fraction for every q in 2..p-1. Each q runs with
// seed = cfg.seed + q so the estimates are independent streams.
McFibrationReport fibration_mc_probe(const Graph& g, const FieldSpec& field,
                                     const McConfig& cfg);

}  // namespace tuttelab
