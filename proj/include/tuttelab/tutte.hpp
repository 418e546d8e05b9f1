#pragma once

#include "tuttelab/graph.hpp"
#include "tuttelab/multipoly.hpp"

namespace tuttelab {

// Z_G(q, t) = sum over spanning subgraphs A of q^{k(A)} prod_{e in A} t_e,
// by direct subset enumeration. Edge count capped (2^m subsets).
MultiPoly tutte_subset(const Graph& g);

// Same polynomial through Z_G = Z_{G\e} + t_e Z_{G/e}, memoized.
MultiPoly tutte_delcon(const Graph& g);

// Psi_G = sum over maximal spanning forests T of prod_{e not in T} t_e.
MultiPoly kirchhoff(const Graph& g);

// Phi_G = sum over maximal spanning forests T of prod_{e in T} t_e.
MultiPoly phi(const Graph& g);

// q^{-k(G)} Z_G; the division is exact because k(A) >= k(E) for every A.
MultiPoly normalized_tutte(const Graph& g);

// Normalized Tutte at q = 0, lowest homogeneous piece in t. Equals Phi_G
// for connected graphs.
MultiPoly lowest_part_at_q0(const Graph& g);

// P_{G,F}(q, t) = sum over A of q^{k(A)} F(t_A) prod_{e in A} t_e, where
// F(t_A) sets t_e = 0 for e outside A.
RatPoly second_polynomial(const Graph& g, const RatPoly& f);

// Checks Psi_G(t) = Phi_G(1/t) * prod_e t_e with denominators cleared.
bool cremona_identity_check(const Graph& g);

}  // namespace tuttelab
