#pragma once

#include "tuttelab/graph.hpp"
#include "tuttelab/multipoly.hpp"
#include "tuttelab/numbers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tuttelab {

struct PhysParams {
    double beta = 1.0;
    std::vector<double> J;
    bool ferromagnetic = false;

    void validate() const;  // ferromagnetic implies every J_e >= 0
};

// t_e = exp(beta * J_e) - 1, componentwise.
std::vector<double> weights_from_energy(const PhysParams& params);

// Exact Boltzmann average <F> = P_{G,F}(q, t) / Z_G(q, t) at a rational weight
// vector. Throws on a vanishing partition function, which cannot happen for
// q >= 1 and t >= 0.
BigRat thermo_average(const Graph& g, long long q, const std::vector<BigRat>& t,
                      const RatPoly& f);

// Volume of the regular n-simplex of side a: a^n / n! * sqrt((n+1) / 2^n).
// The standard simplex {t >= 0, sum t = 1} in m coordinates is the case
// n = m - 1, a = sqrt(2).
double simplex_volume(int n, double a);

struct PeriodEstimate {
    double value = 0.0;
    double std_error = 0.0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    double integrand_min = 0.0;
    double integrand_max = 0.0;
    // Convention tag: the integration measure is (m-1)-dimensional Hausdorff
    // measure on the embedded simplex, whose total mass is simplex_volume
    // with side sqrt(2). Reported so numbers stay comparable.
    std::string measure = "hausdorff(m-1), side sqrt(2)";
};

// Monte Carlo estimate of the integral of <F> over the standard simplex in
// the edge variables. Deterministic per (seed, samples); the partition
// function is checked positive at every sample. Requires q >= 1.
PeriodEstimate period_estimate(const Graph& g, long long q, const RatPoly& f,
                               uint64_t samples, uint64_t seed);

// period_estimate scaled by 1 / Vol(simplex): the mean of <F> over the
// domain. F identically 1 gives exactly 1 with zero standard error.
PeriodEstimate normalized_period(const Graph& g, long long q, const RatPoly& f,
                                 uint64_t samples, uint64_t seed);

}  // namespace tuttelab
