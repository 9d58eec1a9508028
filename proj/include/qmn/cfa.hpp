#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmn/algebra.hpp"
#include "qmn/cfk.hpp"

namespace qmn {

// CFA^-(V, Q_{m,n}).  Ops are right A-infinity multiplications
// m_{k+1}(in, rho_{i_1}, .., rho_{i_k}) = U^u out with the Reeb elements
// stored as individual inputs.
struct AGenerator {
    std::string id;
    int iota = 0;
    char role = 'x';
};

struct AOp {
    std::string in;
    std::vector<Alg> rhos;
    std::string out;
    int u = 0;

    friend bool operator==(const AOp&, const AOp&) = default;
    friend auto operator<=>(const AOp&, const AOp&) = default;
};

struct AInftyModule {
    int m = 0;
    int n = 0;
    std::vector<AGenerator> gens;
    std::vector<AOp> ops;  // sorted, duplicate-free
    // Aligned with ops when nonempty: ops that the simplifying change of
    // basis removes (the x_j -> rho3 rho2 rho1 y_j family, the composites
    // factoring through it, and their chain descendants).
    std::vector<std::uint8_t> removable;

    int iota_of(const std::string& id) const;  // -1 if absent
};

// Generates the module from the parametric relation families plus their
// composition closure.  Requires m, n >= 1.
AInftyModule build_cfa(int m, int n);

// Hand-computed op lists: "Q31" (40 ops), "Q12" (24 ops), "Q23partial"
// (the published partial diagram; containment checks only).
AInftyModule fixture_cfa(const std::string& name);

// Removes the rho3 rho2 rho1 basis-change family and everything derived from
// it.  Modules without tags are handled by syntactic recognition; a module
// with no such ops is returned unchanged.
AInftyModule change_of_basis(const AInftyModule& module, int m, int n);

// Structural checks: idempotent chains on every op, generator counts,
// sortedness, no duplicate ops.
Diagnostics check_cfa(const AInftyModule& module);

// Multiset difference of two op lists (fixture reconciliation).
struct OpDiff {
    std::vector<AOp> missing;  // in reference, not in candidate
    std::vector<AOp> extra;    // in candidate, not in reference
    bool empty() const { return missing.empty() && extra.empty(); }
};
OpDiff diff_ops(const AInftyModule& candidate, const AInftyModule& reference);

// Reviewed divergences between generated modules and the published lists.
// Every entry is forced by the A-infinity relations; details in the test
// suite and README.
OpDiff documented_exceptions(const std::string& fixture_name);

}  // namespace qmn
