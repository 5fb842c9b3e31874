#ifndef ULRICH_DOMAIN_HPP
#define ULRICH_DOMAIN_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ulrich {

// Deterministic Miller-Rabin, valid for all n < 3.3e24 (covers the
// 2^62 modulus bound) with the first twelve prime witnesses.
bool is_prime_u64(std::uint64_t n);

enum class DomainTag { Rationals, Integers, PrimeField };

// Runtime descriptor for the coefficient domain of a ring context.
// The arithmetic itself lives in the ring types QQ, ZZ, GFp below.
class CoefficientDomain {
public:
    static CoefficientDomain rationals() { return CoefficientDomain(DomainTag::Rationals, 0); }
    static CoefficientDomain integers() { return CoefficientDomain(DomainTag::Integers, 0); }
    static CoefficientDomain prime_field(std::uint64_t p);

    DomainTag tag() const { return tag_; }
    std::uint64_t modulus() const { return p_; }
    bool is_field() const { return tag_ != DomainTag::Integers; }
    std::uint64_t characteristic() const { return tag_ == DomainTag::PrimeField ? p_ : 0; }

    bool operator==(const CoefficientDomain& o) const { return tag_ == o.tag_ && p_ == o.p_; }
    bool operator!=(const CoefficientDomain& o) const { return !(*this == o); }

    std::string name() const;

private:
    CoefficientDomain(DomainTag t, std::uint64_t p) : tag_(t), p_(p) {}
    DomainTag tag_;
    std::uint64_t p_;
};

// The three ring contexts share one interface: Elem value type, exact
// arithmetic, and a descriptor.  QQ and ZZ are stateless, GFp carries
// its modulus; all element values are canonical (GFp reduced to [0,p)).

struct QQ {
    using Elem = mpq_class;
    static constexpr bool is_field = true;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::uint64_t characteristic() const { return 0; }
    CoefficientDomain descriptor() const { return CoefficientDomain::rationals(); }
    std::string to_string(const Elem& a) const { return a.get_str(); }
    bool operator==(const QQ&) const { return true; }
};

struct ZZ {
    using Elem = mpz_class;
    static constexpr bool is_field = false;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::uint64_t characteristic() const { return 0; }
    CoefficientDomain descriptor() const { return CoefficientDomain::integers(); }
    std::string to_string(const Elem& a) const { return a.get_str(); }
    bool operator==(const ZZ&) const { return true; }
};

class GFp {
public:
    using Elem = std::uint64_t;
    static constexpr bool is_field = true;

    explicit GFp(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("prime field modulus must be < 2^62");
        if (!is_prime_u64(p)) throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_long(long v) const {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;  // no overflow: p < 2^62
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        return pow(a, p_ - 2);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::uint64_t characteristic() const { return p_; }
    CoefficientDomain descriptor() const { return CoefficientDomain::prime_field(p_); }
    std::string to_string(Elem a) const { return std::to_string(a); }
    bool operator==(const GFp& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

}  // namespace ulrich

#endif
