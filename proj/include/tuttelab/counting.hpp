#pragma once

#include "tuttelab/field.hpp"
#include "tuttelab/graph.hpp"
#include "tuttelab/kernel.hpp"
#include "tuttelab/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tuttelab {

// Polynomials over a common variable set; the spin count q must already be
// specialized (no q occurrences) unless the joint (q,t)-mode is used.
struct PolySystem {
    std::vector<MultiPoly> polys;

    PolySystem() = default;
    explicit PolySystem(MultiPoly p) { polys.push_back(std::move(p)); }
    explicit PolySystem(std::vector<MultiPoly> ps) : polys(std::move(ps)) {}

    int arity() const;
    void validate() const;  // nonempty, common arity
    // Order-insensitive content hash of the member polynomials.
    std::string hash() const;
};

struct CountRecord {
    std::string label;       // free-form: family string, graph digest, ...
    std::string poly_hash;   // PolySystem::hash()
    std::optional<long long> spin_q;
    uint32_t p = 0;
    uint32_t r = 1;
    int arity = 0;
    BigInt count = 0;
    std::string method;      // brute | reduced | chain-formula | class-formula | monte-carlo
    double wall_ms = 0.0;
    std::optional<uint64_t> seed;  // monte-carlo only
};

// Exact rational N / q^m in [0, 1].
using RationalProb = BigRat;

// Exhaustive count of common zeros; deterministic for any thread count.
CountRecord brute_count(const PolySystem& system, const FieldSpec& field);

// Count of the q-specialized hypersurface Z_G(q, t) = 0. For q = 0 mod p the
// polynomial collapses to zero and the full space q^m comes back untouched.
CountRecord tutte_count(const Graph& g, long long q, const FieldSpec& field);

// Joint count of pairs (q, t) with Z_G(q, t) = 0, q ranging over the field.
CountRecord tutte_count_joint(const Graph& g, const FieldSpec& field);

RationalProb zfrak(const PolySystem& system, const FieldSpec& field);
RationalProb zfrak_complement(const PolySystem& system, const FieldSpec& field);

struct DelconCountReport {
    BigInt lhs;            // N(Z_{G,q})
    BigInt n_intersection; // N(Z_{G/e,q} and Z_{G\e,q} jointly)
    BigInt n_contracted;   // N(Z_{G/e,q})
    BigInt power_term;     // q^{m-1}
    BigInt rhs;
    bool holds = false;
    std::string detail;
};

// Checks N(Z_G) = q N(Z_{G/e} cap Z_{G\e}) + q^{m-1} - N(Z_{G/e}), all sides
// brute-forced.
DelconCountReport delcon_count_identity(const Graph& g, int edge, long long q,
                                        const FieldSpec& field);

// Wedge-chain shortcut: N = q^M - prod_i (q^{m_i} - N_i), M = sum of block
// edge counts. Refuses q = 0 mod p (use the full-space short circuit there).
CountRecord chain_count(const std::vector<std::pair<Graph, CountRecord>>& blocks,
                        long long q, const FieldSpec& field);

// Value of `poly` with q -> q_value and t -> point, coefficients mod p.
FieldElement eval_poly(const MultiPoly& poly, const FieldSpec& field,
                       FieldElement q_value, const std::vector<FieldElement>& point);

// Explicit Potts state sum over all q^{#V} spin maps with integer weights:
// sum over states of prod_e (1 + t_e [sigma(u) = sigma(v)]). Agrees with the
// subset expansion evaluated at (q, t); meant as an oracle for small graphs.
BigInt potts_state_sum(const Graph& g, long long q, const std::vector<BigInt>& t);

namespace detail {
// Field reduction of one polynomial (q must be specialized away).
KPoly compile_system_member(const MultiPoly& p, const FieldSpec& field);
}

}  // namespace tuttelab
