#pragma once

#include <string>

#include "qmn/bridge.hpp"
#include "qmn/cfa.hpp"
#include "qmn/cfd.hpp"
#include "qmn/cfk.hpp"
#include "qmn/homology.hpp"
#include "qmn/pairing.hpp"

namespace qmn {

// Deterministic (insertion-ordered, 2-space indented) JSON forms:
//   CfkComplex      {"generators":[{"id","A","M"}], "arrows":[{"from","to","u","v"}]}
//   TypeDStructure  {"gens":[{"id","iota","A"}], "edges":[{"from","to","label"}]}
//   AInftyModule    {"m","n","gens":[{"id","iota","role"}],
//                    "ops":[{"in","rhos":["r3",..],"out","u"}]}
//   GradedUComplex  {"gens":[{"a","y","A"}], "arrows":[{"from","to","u"}]}
//                   with "a|y" composite ids in arrows
//   Decomposition   {"free":[int], "torsion":[{"A","p"}]}

std::string cfk_to_json(const CfkComplex& c);
CfkComplex cfk_from_json(const std::string& text);

std::string cfd_to_json(const TypeDStructure& d);
TypeDStructure cfd_from_json(const std::string& text);

std::string cfa_to_json(const AInftyModule& a);
AInftyModule cfa_from_json(const std::string& text);

std::string tensor_to_json(const GradedUComplex& c);
GradedUComplex tensor_from_json(const std::string& text);

std::string decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);

std::string bridge_report_json(int m, int n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace qmn
