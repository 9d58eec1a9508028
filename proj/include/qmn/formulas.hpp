#pragma once

#include "qmn/algebra.hpp"

namespace qmn {

struct PatternParams {
    int m = 1;
    int n = 1;
};

// Closed form for tau of the satellite with pattern Q_{m,n} in terms of
// (tau, epsilon) of the companion.  Requires epsilon = 0 => tau = 0.
//
// For m = n the published three-way split by sign(tau) conflicts with the
// unknot-pattern property at tau = 0 (Q applied to the unknot is the
// unknot); the epsilon-aware resolution implemented here is the one the
// box-tensor pipeline computes on every companion:
//   tau > 0           -> m
//   tau = 0, eps = -1 -> m - 1
//   otherwise         -> 0
int tau_formula(PatternParams p, int tau_k, int eps_k);

// 0 iff tau = epsilon = 0, else 1.
int epsilon_formula(PatternParams p, int tau_k, int eps_k);

// Cable formulas for K_{p,q}.
int tau_cable(int p, int q, int tau_k, int eps_k);
int epsilon_cable(int p, int q, int tau_k, int eps_k);

// Mazur-pattern special case; equals tau_formula({2,1}, .., ..).
int tau_levine(int tau_k, int eps_k);

int winding(PatternParams p);                       // -(m-n)
int genus_qmn(PatternParams p);                     // min(m,n)
int genus_satellite(int w, int g_k, int g_p);       // |w| g_k + g_p

}  // namespace qmn
