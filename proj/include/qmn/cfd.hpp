#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmn/algebra.hpp"
#include "qmn/cfk.hpp"

namespace qmn {

// CFD(X_K) as a labeled directed graph.  iota_0 generators carry the
// Alexander grading of the underlying model basis element; iota_1 chain
// generators carry none.
struct DGenerator {
    std::string id;
    int iota = 0;
    std::optional<int> alexander;
};

struct DEdge {
    std::string from;
    std::string to;
    Alg label = Alg::Zero;  // rho_1 .. rho_123
};

struct TypeDStructure {
    std::vector<DGenerator> gens;
    std::vector<DEdge> edges;

    int index_of(const std::string& id) const;  // -1 if absent
};

// Chain-by-chain construction: one kappa chain of length k_j per vertical arrow,
// one lambda chain of length l_j per horizontal arrow, and the unstable chain
// with s = 2|tau| (D_12 edge xi0 -> eta0 when tau = 0).
TypeDStructure build_cfd(const SimplifiedModel& model);

// Type D relation with vanishing algebra differential: for every generator
// pair, two-step paths with nonzero label product cancel mod 2.
Diagnostics check_typeD_relation(const TypeDStructure& d);

// Idempotent typing of every edge against the generator idempotents.
Diagnostics check_idempotents(const TypeDStructure& d);

// Endpoints of directed paths from `start` whose edge labels match `labels`
// exactly, with multiplicity mod 2.  Sorted, deduplicated.
std::vector<std::string> paths_with_labels(const TypeDStructure& d, const std::string& start,
                                           const std::vector<Alg>& labels);

}  // namespace qmn
