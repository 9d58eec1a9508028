#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmn/cfa.hpp"
#include "qmn/cfd.hpp"

namespace qmn {

// Box tensor output: Alexander-graded complex over F2[U] with monomial
// differential.  Arrows satisfy A(to) = A(from) + u once gradings are
// assigned; U multiplication lowers the grading by one.
struct TensorGenerator {
    std::string a;  // CFA generator
    std::string d;  // CFD generator
    std::optional<int> alexander;

    std::string id() const { return a + "|" + d; }
};

struct UArrow {
    int from = 0;
    int to = 0;
    int u = 0;

    friend bool operator==(const UArrow&, const UArrow&) = default;
    friend auto operator<=>(const UArrow&, const UArrow&) = default;
};

struct GradedUComplex {
    std::vector<TensorGenerator> gens;
    std::vector<UArrow> arrows;  // sorted, mod-2 reduced
    int index_of(const std::string& a, const std::string& d) const;  // -1 if absent
};

// d_box(x (x) y) = sum over ops m(x, rho_{i_1..i_k}) = U^p x' and label paths
// y -> y' of U^p (x' (x) y'), coefficients mod 2.  Generators are the
// idempotent-matched pairs; gradings left unassigned.
GradedUComplex box_tensor(const AInftyModule& A, const TypeDStructure& D);

// Anchors A(x_r (x) d) = -(m-n) A_K(d) + C_{x_r} with C_{x_{m+1}} = 0 and
// C_{x_{m+1 +- t}} = -t, then propagates along arrows.  Components without an
// anchor stay unassigned.  Throws on propagation conflicts.
GradedUComplex assign_gradings(const GradedUComplex& c, int m, int n, const TypeDStructure& D);

// d^2 = 0 over F2[U] and grading compatibility on assigned arrows.
Diagnostics check_tensor_complex(const GradedUComplex& c);

}  // namespace qmn
