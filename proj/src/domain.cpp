#include "ulrich/domain.hpp"

namespace ulrich {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

CoefficientDomain CoefficientDomain::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("prime field modulus must be < 2^62");
    if (!is_prime_u64(p)) throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
    return CoefficientDomain(DomainTag::PrimeField, p);
}

std::string CoefficientDomain::name() const {
    switch (tag_) {
        case DomainTag::Rationals: return "Q";
        case DomainTag::Integers: return "Z";
        case DomainTag::PrimeField: return "F_" + std::to_string(p_);
    }
    return "?";
}

}  // namespace ulrich
