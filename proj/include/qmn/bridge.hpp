#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmn/algebra.hpp"

namespace qmn {

// Schubert normal form b(p, q), stored with p > 0, gcd(p, q) = 1 and q
// normalized into (0, p) when p > 1.  Display uses the window |q| < p/2.
struct SchubertForm {
    long long p = 1;
    long long q = 1;

    friend bool operator==(const SchubertForm&, const SchubertForm&) = default;
};

struct ConwayTangle {
    std::vector<long long> coefficients;  // C(a_1, .., a_k)
};

// Continued fraction q/p = 1/(a_1 + 1/(a_2 + .. + 1/a_k)) in lowest terms.
// Throws on a zero denominator at any stage.
SchubertForm fraction_to_schubert(const ConwayTangle& t);

// b(4mn + 2n + 2m, 2m + 1).
SchubertForm schubert_qmn(int m, int n);

// p = p' and q' congruent to q or to q^{-1} mod p.
bool isotopic(SchubertForm a, SchubertForm b);

// Loop/strand parameters of the inductively built genus-one diagram:
// (m + 1, -(2mn + n - m - 2)).
std::pair<int, int> rs_params(int m, int n);

// b(2|s| + 4|r|, sign(r) (2|r| - 1)); rejects r = 0.
SchubertForm bridge_from_rs(int r, int s);

// Strand counts of the inductive diagram construction plus the derived
// intersection counts (2m+1 vertical, 2m+2n+2nm-2 horizontal) and (r, s).
struct DiagramParams {
    int r = 0;
    int s = 0;
    std::map<std::string, int> strand_counts;  // only nonzero entries
    int vertical_intersections = 0;
    int horizontal_intersections = 0;
};
DiagramParams strand_counts(int m, int n);

std::string to_string(const SchubertForm& b);   // "b(8,3)", display window
std::string to_string(const ConwayTangle& t);   // "C(2,1,2)"
ConwayTangle conway_from_string(const std::string& s);

}  // namespace qmn
