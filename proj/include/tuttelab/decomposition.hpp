#pragma once

#include "tuttelab/counting.hpp"
#include "tuttelab/field.hpp"
#include "tuttelab/numbers.hpp"

#include <string>
#include <vector>

namespace tuttelab {

// One summand of the shipped count decomposition: an integer polynomial in
// the field size times the zero fraction of a (possibly empty) system.
struct DecompositionTerm {
    std::string label;
    std::vector<BigInt> scale;       // ascending coefficients in the field size
    std::vector<MultiPoly> system;   // empty system: the fraction is 1
};

struct DecompositionFixture {
    std::string name;
    std::vector<DecompositionTerm> terms;
    std::string checksum;  // FNV-1a over the canonical serialization
};

// Loads and verifies a fixture file; any checksum or shape problem throws.
DecompositionFixture load_decomposition_fixture(const std::string& path);

// Path of the tetrahedron fixture shipped with the source tree.
std::string k4_fixture_path();

struct ZTermReport {
    std::string label;
    BigRat z;              // zero fraction of the term's system
    BigInt scale_value;    // scale polynomial at the field size
    BigRat contribution;   // product
};

struct K4DecompositionReport {
    uint32_t p = 0;
    uint32_t r = 1;
    std::vector<ZTermReport> terms;
    BigInt formula_value = 0;  // sum of contributions, checked integral
    BigInt brute_value = 0;    // direct tetrahedron count at q = 2
    bool match = false;
    std::string detail;
};

// Evaluates the shipped decomposition term by term over the given field and
// compares with the directly enumerated count. Requires odd characteristic.
K4DecompositionReport k4_decomposition_check(const FieldSpec& field);
K4DecompositionReport k4_decomposition_check(const FieldSpec& field,
                                             const DecompositionFixture& fixture);

}  // namespace tuttelab
