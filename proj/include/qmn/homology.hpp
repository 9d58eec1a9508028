#pragma once

#include <optional>
#include <vector>

#include "qmn/pairing.hpp"

namespace qmn {

// Free/torsion decomposition of the homology of a graded monomial complex
// over F2[U]: one grading per free F2[U] summand, (grading, p) per
// F2[U]/U^p summand.
struct TorsionSummand {
    std::optional<int> alexander;
    int order = 1;

    friend bool operator==(const TorsionSummand&, const TorsionSummand&) = default;
    friend auto operator<=>(const TorsionSummand&, const TorsionSummand&) = default;
};

struct Decomposition {
    std::vector<std::optional<int>> free;
    std::vector<TorsionSummand> torsion;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Iterated cancellation: repeatedly clears the row and column of a minimal-
// power arrow by U-homogeneous basis changes and removes the pair, recording
// an F2[U]/U^p summand when p > 0.  Survivors are the free part.  Rejects
// complexes with a polynomial matrix entry (two arrows between one pair).
Decomposition reduce(const GradedUComplex& c);

// Minus the grading of the unique free summand.
int tau_from_decomposition(const Decomposition& d);

// Max over free and torsion gradings (assigned summands).
int top_nonzero_grading(const Decomposition& d);

}  // namespace qmn
