#pragma once

#include "tuttelab/counting.hpp"

namespace tuttelab {

// Exact count of common zeros via linear-variable elimination.
//
// Picks a variable x of degree <= 1 in every member, writes the pivot
// f_1 = A x + B, and splits on A: the A = 0 stratum keeps x free and adjoins
// {A, B}; the A != 0 stratum eliminates x into cross-terms A D_i - B C_i with
// inclusion-exclusion against A = 0. Subproblems are canonicalized (monic,
// deduplicated, variable-compressed) and memoized. Tails of <= 4 variables,
// members past 4096 terms, and systems with no linear variable fall back to
// exhaustive enumeration.
CountRecord reduced_count(const PolySystem& system, const FieldSpec& field);

}  // namespace tuttelab
