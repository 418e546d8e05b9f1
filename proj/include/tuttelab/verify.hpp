#pragma once

#include <string>
#include <vector>

namespace tuttelab {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckLine> checks;

    int failures() const;
    bool all_pass() const { return failures() == 0; }
};

// Symbolic and numeric identity sweep: subset expansion vs deletion-
// contraction, normalization, the Kirchhoff/Phi reciprocity, the Potts state
// sum, the zero-fraction deletion-contraction laws, and chain factorization.
VerifyReport verify_identities();

// Recomputes every embedded published table row and labels it as matching or
// contradicting. The known tension between the per-spin table at q = 2 and
// the count table is reported explicitly; the suite passes when our own
// audited values are reproduced.
VerifyReport verify_reference_tables();

// reduced_count against brute_count on corpus and randomized systems, capped
// at the given evaluation-space size per instance.
VerifyReport verify_oracle(double max_points);

}  // namespace tuttelab
