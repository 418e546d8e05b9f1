#pragma once

#include "tuttelab/field.hpp"
#include "tuttelab/numbers.hpp"

#include <cstdint>
#include <vector>

namespace tuttelab::detail {

// One monomial over the t-variables, coefficient already reduced into the
// field (element index). Zero-coefficient terms must not appear.
struct KTerm {
    uint32_t c = 0;
    std::vector<uint32_t> e;  // length = arity
};
using KPoly = std::vector<KTerm>;

// Exact number of common zeros of `polys` in F^arity.
//
// Strategy: each polynomial is compiled into a tower of shared Horner nodes,
// one layer per variable prefix x_1..x_i; the walk over prefixes re-evaluates
// only the layers at or above the last incremented coordinate, and the final
// variable is resolved analytically (degree <= 1) or by a bounded scan.
// The result is independent of chunking and worker count.
BigInt count_common_zeros(const FieldSpec& field, int arity,
                          const std::vector<KPoly>& polys,
                          int threads);

}  // namespace tuttelab::detail
