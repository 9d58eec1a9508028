#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmn {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Basis of the torus algebra A(T^2): two idempotents, six Reeb elements,
// and a distinguished zero.  Values double as indices into product tables.
enum class Alg : std::uint8_t {
    Zero = 0,
    I0,
    I1,
    R1,
    R2,
    R3,
    R12,
    R23,
    R123,
};

constexpr std::array<Alg, 9> kAlgBasis = {Alg::Zero, Alg::I0,  Alg::I1,
                                          Alg::R1,   Alg::R2,  Alg::R3,
                                          Alg::R12,  Alg::R23, Alg::R123};

constexpr bool is_zero(Alg a) { return a == Alg::Zero; }
constexpr bool is_idempotent(Alg a) { return a == Alg::I0 || a == Alg::I1; }
constexpr bool is_reeb(Alg a) { return !is_zero(a) && !is_idempotent(a); }

// Left/right idempotents of a Reeb element (iota_0/iota_1 convention).
// Throws on zero or idempotent input.
Alg left_idempotent(Alg a);
Alg right_idempotent(Alg a);
std::pair<Alg, Alg> idempotent_pair(Alg a);

// Product in A(T^2).  Every product not forced nonzero by rho_1 rho_2 = rho_12,
// rho_2 rho_3 = rho_23, rho_12 rho_3 = rho_1 rho_23 = rho_123, unitality of
// iota_0 + iota_1, or idempotent orthogonality is zero.
Alg multiply(Alg a, Alg b);

// Left-to-right product of a nonempty sequence of Reeb elements.
Alg sequence_product(std::span<const Alg> seq);

std::string to_string(Alg a);
Alg alg_from_string(std::string_view s);

}  // namespace qmn
