#include "qmn/algebra.hpp"

namespace qmn {

Alg left_idempotent(Alg a) {
    switch (a) {
        case Alg::R1:
        case Alg::R3:
        case Alg::R12:
        case Alg::R123:
            return Alg::I0;
        case Alg::R2:
        case Alg::R23:
            return Alg::I1;
        default:
            throw Error("left_idempotent: not a Reeb element: " + to_string(a));
    }
}

Alg right_idempotent(Alg a) {
    switch (a) {
        case Alg::R1:
        case Alg::R3:
        case Alg::R123:
            return Alg::I1;
        case Alg::R2:
        case Alg::R12:
            return Alg::I0;
        case Alg::R23:
            return Alg::I1;
        default:
            throw Error("right_idempotent: not a Reeb element: " + to_string(a));
    }
}

std::pair<Alg, Alg> idempotent_pair(Alg a) {
    return {left_idempotent(a), right_idempotent(a)};
}

Alg multiply(Alg a, Alg b) {
    if (is_zero(a) || is_zero(b)) return Alg::Zero;
    if (is_idempotent(a) && is_idempotent(b)) return a == b ? a : Alg::Zero;
    if (is_idempotent(a)) return left_idempotent(b) == a ? b : Alg::Zero;
    if (is_idempotent(b)) return right_idempotent(a) == b ? a : Alg::Zero;
    // Reeb times Reeb.
    if (a == Alg::R1 && b == Alg::R2) return Alg::R12;
    if (a == Alg::R2 && b == Alg::R3) return Alg::R23;
    if (a == Alg::R1 && b == Alg::R23) return Alg::R123;
    if (a == Alg::R12 && b == Alg::R3) return Alg::R123;
    return Alg::Zero;
}

Alg sequence_product(std::span<const Alg> seq) {
    if (seq.empty()) throw Error("sequence_product: empty sequence");
    Alg acc = seq[0];
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (is_zero(acc)) return Alg::Zero;
        acc = multiply(acc, seq[i]);
    }
    return acc;
}

std::string to_string(Alg a) {
    switch (a) {
        case Alg::Zero: return "0";
        case Alg::I0: return "i0";
        case Alg::I1: return "i1";
        case Alg::R1: return "r1";
        case Alg::R2: return "r2";
        case Alg::R3: return "r3";
        case Alg::R12: return "r12";
        case Alg::R23: return "r23";
        case Alg::R123: return "r123";
    }
    throw Error("to_string: bad algebra element");
}

Alg alg_from_string(std::string_view s) {
    for (Alg a : kAlgBasis)
        if (to_string(a) == s) return a;
    throw Error("alg_from_string: unknown element '" + std::string(s) + "'");
}

}  // namespace qmn
