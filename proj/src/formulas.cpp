#include "qmn/formulas.hpp"

#include <algorithm>
#include <cstdlib>

namespace qmn {

namespace {

void check_inputs(PatternParams p, int tau_k, int eps_k) {
    if (p.m < 1 || p.n < 1) throw Error("pattern parameters must be positive");
    if (eps_k < -1 || eps_k > 1) throw Error("epsilon must be -1, 0, or 1");
    if (eps_k == 0 && tau_k != 0) throw Error("epsilon = 0 forces tau = 0");
}

}  // namespace

int tau_formula(PatternParams p, int tau_k, int eps_k) {
    check_inputs(p, tau_k, eps_k);
    int m = p.m, n = p.n;
    if (m == n) {
        if (tau_k > 0) return m;
        if (tau_k == 0 && eps_k == -1) return m - 1;
        return 0;
    }
    int d = std::abs(m - n);
    if (tau_k <= 0 && eps_k >= 0) return d * tau_k;
    if (tau_k < 0 && eps_k == -1) return d * tau_k + d;
    if (tau_k > 0 && eps_k == 1) return d * tau_k + std::min(m, n);
    return d * tau_k + std::max(m, n) - 1;  // tau >= 0, eps = -1
}

int epsilon_formula(PatternParams p, int tau_k, int eps_k) {
    check_inputs(p, tau_k, eps_k);
    return (tau_k == 0 && eps_k == 0) ? 0 : 1;
}

int tau_cable(int p, int q, int tau_k, int eps_k) {
    if (p < 1) throw Error("cable parameter p must be >= 1");
    if (eps_k == 0 && tau_k != 0) throw Error("epsilon = 0 forces tau = 0");
    if (eps_k == 1 || (eps_k == 0 && q >= 0)) return p * tau_k + (p - 1) * (q - 1) / 2;
    return p * tau_k + (p - 1) * (q + 1) / 2;
}

int epsilon_cable(int p, int q, int /*tau_k*/, int eps_k) {
    if (p < 1) throw Error("cable parameter p must be >= 1");
    if (eps_k != 0) return eps_k;
    if (q < -1) return -1;
    if (q > 1) return 1;
    return 0;
}

int tau_levine(int tau_k, int eps_k) {
    if (eps_k == 0 && tau_k != 0) throw Error("epsilon = 0 forces tau = 0");
    if (tau_k <= 0 && eps_k >= 0) return tau_k;
    return tau_k + 1;
}

int winding(PatternParams p) { return -(p.m - p.n); }

int genus_qmn(PatternParams p) {
    if (p.m < 1 || p.n < 1) throw Error("pattern parameters must be positive");
    return std::min(p.m, p.n);
}

int genus_satellite(int w, int g_k, int g_p) {
    if (g_k < 0 || g_p < 0) throw Error("genera must be non-negative");
    return std::abs(w) * g_k + g_p;
}

}  // namespace qmn
