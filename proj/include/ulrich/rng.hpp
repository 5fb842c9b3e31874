#ifndef ULRICH_RNG_HPP
#define ULRICH_RNG_HPP

#include <cstdint>
#include <random>

#include "ulrich/multipoly.hpp"

namespace ulrich {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Independent stream for trial i of a seeded experiment; the aggregate
// is deterministic regardless of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

// Unbiased draw from [0, bound) via rejection; mt19937_64 output is
// fully specified by the standard, so results are portable.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

// Random homogeneous form: coefficients uniform in [0,p) over a prime
// field, uniform integers in [-10,10] over Q and Z.
template <class D>
MultiPoly<D> rand_homogeneous(const D& dom, int nvars, int deg, std::mt19937_64& rng) {
    MultiPoly<D> p(dom, nvars);
    for (const auto& m : monomial_basis(nvars, deg)) {
        if constexpr (std::is_same_v<D, GFp>) {
            p.add_term(m, uniform_below(rng, dom.modulus()));
        } else {
            long v = static_cast<long>(uniform_below(rng, 21)) - 10;
            p.add_term(m, dom.from_long(v));
        }
    }
    return p;
}

}  // namespace ulrich

#endif
