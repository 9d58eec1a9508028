#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmn/algebra.hpp"

namespace qmn {

// Bigraded complex over R = F2[U,V]/UV.  Arrows carry monomial coefficients
// U^u V^v with never both positive; A(target) = A(source) + u - v.
struct CfkGenerator {
    std::string id;
    int alexander = 0;
    std::optional<int> maslov;
};

struct CfkArrow {
    std::string from;
    std::string to;
    int u = 0;
    int v = 0;
};

struct CfkComplex {
    std::vector<CfkGenerator> generators;
    std::vector<CfkArrow> arrows;
    bool reduced = false;  // when set, validate() rejects u = v = 0 arrows

    int index_of(const std::string& id) const;  // -1 if absent
    int grading_of(const std::string& id) const;
};

struct Diagnostics {
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

// Reports every violated invariant: unknown/duplicate ids, UV terms,
// grading compatibility, d^2 = 0 over R, and reducedness when flagged.
Diagnostics validate(const CfkComplex& c);

// Reverses all arrows and swaps U- and V-powers.  Alexander gradings are
// kept; staircase and box models have symmetric grading sets, so this agrees
// with the dual complex up to relabeling and satisfies tau -> -tau,
// epsilon -> -epsilon.
CfkComplex mirror(const CfkComplex& c);

// F2-combination of generators, stored as a sorted id list.
using Cycle = std::vector<std::string>;

// A(xi_0): Alexander grading of the generator of the vertical homology
// (arrows with v > 0, U = 0).  Requires rank one and a homogeneous class.
int tau_from_cfk(const CfkComplex& c);

// Distinguished cycle eta_0 generating the horizontal homology (arrows with
// u > 0, V = 0).  Requires rank one.
Cycle horizontal_distinguished(const CfkComplex& c);

// Vertical position of a cycle up to horizontal boundaries:
//   +1  some representative is a vertical boundary,
//    0  some representative is a vertical cycle but none is a boundary,
//   -1  every representative has nonzero vertical differential.
// A non-homogeneous e is accepted only when its class is verifiably a
// vertical cycle mod horizontal boundaries; otherwise the position is not
// well defined and an error is raised.
int vertical_classify(const CfkComplex& c, const Cycle& e);

// Filtered changes of basis making every generator incident to at most one
// U-arrow and one V-arrow (a simultaneously simplified basis).  Requires the
// complex to be reduced; throws when no such basis is reached, i.e. outside
// the supported class.
CfkComplex simplify_basis(const CfkComplex& c);

// vertical_classify of the horizontal distinguished element, computed on the
// simplified basis so the answer is invariant under filtered isomorphisms.
int epsilon_from_cfk(const CfkComplex& c);

// Transcribed subcomplexes around the surviving generator of the satellite
// complex, one per (tau sign, epsilon) case.  Arrows U^{m-n} V^{n-1} that
// vanish in R (both exponents positive) are omitted.
CfkComplex fixture_fig25(int m, int n);
CfkComplex fixture_fig27(int m, int n);
CfkComplex fixture_fig29(int m, int n, int k);
CfkComplex fixture_fig31(int m, int n);
CfkComplex fixture(const std::string& name, int m, int n, int k = 1);

// The horizontally distinguished cycle of the full satellite complex, as far
// as the fixture carries it: sum of odd x's for fig25/fig27, x_{2n+1} for
// fig29, x_{2n-1} for fig31.
Cycle fixture_distinguished_cycle(const std::string& name, int m, int n);

// Companion model: a complex with one simultaneously vertically and
// horizontally simplified basis.  Vertical arrow j is xi_{2j-1} -> xi_{2j}
// with V-power length; horizontal arrow j is eta_{2j-1} -> eta_{2j} with
// U-power length.
struct ModelArrow {
    std::string from;
    std::string to;
    int length = 1;
};

struct SimplifiedModel {
    std::string name;
    CfkComplex complex;
    std::vector<ModelArrow> vertical;
    std::vector<ModelArrow> horizontal;
    std::string xi0;
    std::string eta0;
    int tau = 0;
    int epsilon = 0;
};

// Built-in companion library: unknot, T23, mT23, figure8, T25, mT25, T27,
// mT27 plus synthetic (tau, epsilon) models synth_<tau>_<eps> for the
// mismatched-sign branches.  Throws on unknown names.
SimplifiedModel model(const std::string& name);
std::vector<std::string> model_names();

// Recomputes tau/epsilon from the complex and checks them against the stored
// values and the structural bookkeeping of the model.
Diagnostics check_model(const SimplifiedModel& m);

}  // namespace qmn
