#pragma once

#include "tuttelab/field.hpp"
#include "tuttelab/graph.hpp"
#include "tuttelab/numbers.hpp"

#include <string>
#include <vector>

namespace tuttelab {

struct FitPoint {
    BigInt q;  // field size the count was taken over
    BigInt n;  // observed point count
};

struct CountabilityVerdict {
    enum class Status { PolynomialCandidate, NonPolynomial, Inconclusive };
    Status status = Status::Inconclusive;
    // Ascending coefficients a_0..a_d, populated for PolynomialCandidate.
    std::vector<BigInt> coeffs;
    // For NonPolynomial: either the inconsistent subset of supplied points or
    // the offending non-integer coefficient. For Inconclusive: the reason.
    std::string witness;
    // Field sizes the caller removed before fitting (divisors of the spin
    // count q collapse to full space and would poison any fit).
    std::vector<BigInt> excluded;
    int points_used = 0;

    bool candidate() const { return status == Status::PolynomialCandidate; }
};

// Exact Vandermonde fit over the rationals. Duplicated field sizes with
// conflicting counts are a usage error; duplicates that agree collapse to one
// point. Fewer than max_degree + 1 distinct points is Inconclusive. The
// returned candidate, when any, reproduces every supplied point exactly.
CountabilityVerdict fit_count_polynomial(std::vector<FitPoint> points, int max_degree,
                                         std::vector<BigInt> excluded = {});

struct FibrationReport {
    uint32_t p = 0;
    uint32_t r = 1;
    BigInt field_size = 0;
    std::vector<BigInt> counts;  // counts[q] for q = 0..p-1
    bool q0_ok = false;          // count at q=0 equals 𝔮^m
    bool q1_ok = false;          // count at q=1 equals 𝔮^m - (𝔮-1)^m
    enum class Verdict {
        NotRefuted,   // all q in 2..p-1 agree (equality of counts cannot *prove* the condition)
        Fails,        // at least two spin values disagree
        Inconclusive  // fewer than two spin values outside {0,1} exist
    } verdict = Verdict::Inconclusive;
    std::string detail;
};

// Exact counts of the q-specialized hypersurface for every residue q, plus
// the two closed-form anchors at q = 0 and q = 1.
FibrationReport fibration_test(const Graph& g, const FieldSpec& field);

}  // namespace tuttelab
