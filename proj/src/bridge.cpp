#include "qmn/bridge.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace qmn {

namespace {

SchubertForm normalize(long long p, long long q) {
    if (p == 0) throw Error("Schubert form needs p != 0");
    if (p < 0) {
        p = -p;
        q = -q;
    }
    long long g = std::gcd(std::abs(q), p);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (p == 1) return {1, 1};
    q %= p;
    if (q < 0) q += p;
    if (q == 0) throw Error("Schubert form b(p,0) with p > 1 is not reduced");
    return {p, q};
}

void require_mn(int m, int n) {
    if (m < 1 || n < 1) throw Error("pattern parameters must be positive");
}

}  // namespace

SchubertForm fraction_to_schubert(const ConwayTangle& t) {
    if (t.coefficients.empty()) throw Error("empty tangle");
    // Fold from the innermost coefficient: x = 1 / (a_i + x).
    long long num = 0, den = 1;  // running x = num/den, starting from 0
    for (auto it = t.coefficients.rbegin(); it != t.coefficients.rend(); ++it) {
        long long n2 = den;
        long long d2 = *it * den + num;
        if (d2 == 0) throw Error("zero denominator in continued fraction");
        num = n2;
        den = d2;
    }
    return normalize(den, num);
}

SchubertForm schubert_qmn(int m, int n) {
    require_mn(m, n);
    long long mm = m, nn = n;
    return normalize(4 * mm * nn + 2 * nn + 2 * mm, 2 * mm + 1);
}

bool isotopic(SchubertForm a, SchubertForm b) {
    SchubertForm x = normalize(a.p, a.q);
    SchubertForm y = normalize(b.p, b.q);
    if (x.p != y.p) return false;
    if (x.q == y.q) return true;
    return (static_cast<__int128>(x.q) * y.q) % x.p == 1 % x.p;
}

std::pair<int, int> rs_params(int m, int n) {
    require_mn(m, n);
    return {m + 1, -(2 * m * n + n - m - 2)};
}

SchubertForm bridge_from_rs(int r, int s) {
    if (r == 0) throw Error("bridge_from_rs needs r != 0");
    long long ar = std::abs(r), as = std::abs(s);
    long long sign = r > 0 ? 1 : -1;
    return normalize(2 * as + 4 * ar, sign * (2 * ar - 1));
}

DiagramParams strand_counts(int m, int n) {
    require_mn(m, n);
    std::map<std::string, int> s;
    // H_{1,1}
    s["T/L"] = 2;
    s["T/R"] = 2;
    s["B/L/W"] = 1;
    s["B/M"] = 1;
    s["B/R"] = 1;
    // Step 1: H_{1,1} -> H_{m,1}
    s["T/L"] += 2 * (m - 1);
    s["T/R"] += m - 1;
    s["B/R"] += m - 1;
    s["V/R"] += m - 1;
    s["B/M"] += m - 1;
    if (n >= 2) {
        // Step 2: the B/L/W strand becomes one more rainbow.
        s["B/L/W"] -= 1;
        s["B/M"] += 1;
        s["T/L"] += 1;
        s["V/R"] += 1;
        s["V/L"] += 2 * m;
        // Step 3
        s["V/L"] += (2 * m + 1) * (n - 2);
        s["V/R"] += n - 2;
    }
    DiagramParams d;
    for (const auto& [k, v] : s)
        if (v != 0) d.strand_counts[k] = v;
    auto rs = rs_params(m, n);
    d.r = rs.first;
    d.s = rs.second;
    d.vertical_intersections = 2 * m + 1;
    d.horizontal_intersections = 2 * m + 2 * n + 2 * n * m - 2;
    return d;
}

std::string to_string(const SchubertForm& b) {
    SchubertForm x = normalize(b.p, b.q);
    long long q = x.q;
    if (x.p > 2 && 2 * q > x.p) q -= x.p;
    std::ostringstream os;
    os << "b(" << x.p << "," << q << ")";
    return os.str();
}

std::string to_string(const ConwayTangle& t) {
    std::ostringstream os;
    os << "C(";
    for (std::size_t i = 0; i < t.coefficients.size(); ++i) {
        if (i) os << ",";
        os << t.coefficients[i];
    }
    os << ")";
    return os.str();
}

ConwayTangle conway_from_string(const std::string& s) {
    if (s.size() < 4 || (s[0] != 'C' && s[0] != 'c') || s[1] != '(' || s.back() != ')')
        throw Error("expected C(a1,a2,...): " + s);
    ConwayTangle t;
    std::stringstream in(s.substr(2, s.size() - 3));
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw Error("bad tangle coefficient in " + s);
        t.coefficients.push_back(std::stoll(tok));
    }
    if (t.coefficients.empty()) throw Error("empty tangle " + s);
    return t;
}

}  // namespace qmn
