#ifndef ULRICH_MONOMIAL_HPP
#define ULRICH_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulrich {

// Exponent vector of a monomial; length is fixed by the ring context.
using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

// Descending graded lexicographic order: higher total degree first,
// ties broken lexicographically with earlier variables dominating.
// This is the canonical term order for iteration and formatting.
struct GradedLexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint32_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;  // lex on exponent vectors, x0 dominant
    }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// All exponent vectors of the given total degree, in descending
// graded-lex order.  Size is C(deg + nvars - 1, nvars - 1).
inline std::vector<Monomial> monomial_basis(int nvars, int deg) {
    if (nvars < 1) throw std::invalid_argument("monomial_basis: need at least one variable");
    if (deg < 0) throw std::invalid_argument("monomial_basis: negative degree");
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(nvars), 0);
    // recursive enumeration, first variable's exponent descending
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            cur[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(rem);
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(e);
            self(self, var + 1, rem - e);
        }
    };
    rec(rec, 0, deg);
    return out;
}

// Default variable names for a ring context: x0, x1, ...
inline std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m[i] >= 2) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace ulrich

#endif
