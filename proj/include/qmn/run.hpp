#pragma once

#include <string>
#include <vector>

#include "qmn/cfa.hpp"
#include "qmn/cfd.hpp"
#include "qmn/cfk.hpp"
#include "qmn/formulas.hpp"
#include "qmn/homology.hpp"
#include "qmn/pairing.hpp"

namespace qmn {

// Recovers the simplified-basis bookkeeping from a bare complex: vertical and
// horizontal arrows read off the arrow list, distinguished elements from the
// specialized homologies.  Rejects complexes outside the supported class.
SimplifiedModel model_from_complex(CfkComplex c, const std::string& name);

// Companion from the built-in library, or from a CfkComplex JSON file when
// the name contains a path separator or ends in ".json".
SimplifiedModel resolve_companion(const std::string& name_or_path);

struct RunResult {
    int m = 0;
    int n = 0;
    std::string companion;
    int tau_companion = 0;
    int eps_companion = 0;
    int tau_pipeline = 0;
    int tau_formula = 0;
    int epsilon_formula = 0;
    bool agree = false;
    bool raw_cfa = false;
    int cfa_ops = 0;
    int cfd_gens = 0;
    int tensor_gens = 0;
    double milliseconds = 0.0;
};

struct PipelineArtifacts {
    AInftyModule cfa;
    TypeDStructure cfd;
    GradedUComplex tensor;  // graded
    Decomposition decomposition;
};

// build_cfa -> (change_of_basis) -> build_cfd -> box_tensor ->
// assign_gradings -> reduce.  Artifacts are optionally exported.
RunResult compute_run(int m, int n, const SimplifiedModel& companion, bool raw_cfa,
                      PipelineArtifacts* out = nullptr);

// Cartesian sweep in deterministic (m, n, companion) order; cases run on up
// to `parallel` threads.
std::vector<RunResult> sweep(const std::vector<int>& ms, const std::vector<int>& ns,
                             const std::vector<std::string>& companions, bool raw_cfa,
                             int parallel = 1);

// Absolute value of the extremal Alexander grading of the hat-flavor
// support (free summands, torsion generators, torsion kernel bottoms).
// Under the pinned winding orientation this is the satellite genus.
int genus_from_decomposition(const Decomposition& d);

std::string render_table(const std::vector<RunResult>& rows, const std::string& format);

}  // namespace qmn
