#pragma once

#include <string>
#include <vector>

#include "qmn/pairing.hpp"

namespace qmn {

struct CriterionResult {
    int id = 0;
    std::string summary;
    bool pass = false;
    std::string detail;
};

// Runs the full acceptance suite (formula/pipeline grid, fixture
// reconciliation, pairing and homology invariants, bridge identities, genus
// and epsilon checks, raw-vs-simplified invariance).
std::vector<CriterionResult> run_acceptance();

// dim_F2 H(C (x) F2[U]/U^N), computed by plain rank over F2.  Independent of
// reduce(); used as the oracle for the homology engine.
int truncated_homology_dim(const GradedUComplex& c, int N);

// A random graded monomial complex with known free/torsion content,
// disguised by U-homogeneous basis changes and a generator shuffle.
GradedUComplex random_graded_complex(unsigned seed, int max_gens = 8);

}  // namespace qmn
