#ifndef ULRICH_MATFAC_HPP
#define ULRICH_MATFAC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulrich/polymatrix.hpp"

namespace ulrich {

// b = p0^d + sum_i prod_j p_{i,j}, all entries homogeneous of one
// degree m.  The power-term slot is always counted as a summand (an
// absent p0 is the zero form), so a decomposition with s summands
// yields a factorization matrix of size d^{s-1}.
template <class D>
class Decomposition {
public:
    Decomposition(int d, std::optional<MultiPoly<D>> power_term, std::vector<std::vector<MultiPoly<D>>> product_terms)
        : d_(d), power_(std::move(power_term)), products_(std::move(product_terms)) {
        if (d < 2) throw std::invalid_argument("Decomposition: covering degree must be at least 2");
        if (products_.empty()) throw std::invalid_argument("Decomposition: need at least one product term (s >= 2)");
        const MultiPoly<D>* sample = nullptr;
        if (power_ && !power_->is_zero()) sample = &*power_;
        for (const auto& tuple : products_) {
            if (static_cast<int>(tuple.size()) != d) throw std::invalid_argument("Decomposition: each product term needs exactly d factors");
            for (const auto& f : tuple)
                if (!f.is_zero()) sample = &f;
        }
        if (!sample) throw std::invalid_argument("Decomposition: all entries are zero");
        nvars_ = sample->nvars();
        m_ = sample->degree();
        auto check = [&](const MultiPoly<D>& f) {
            if (f.nvars() != nvars_ || !(f.domain() == sample->domain())) throw std::invalid_argument("Decomposition: entries from different rings");
            if (!f.is_homogeneous()) throw std::invalid_argument("Decomposition: inhomogeneous entry");
            if (!f.is_zero() && f.degree() != m_) throw std::invalid_argument("Decomposition: entries of different degrees");
        };
        if (power_) check(*power_);
        for (const auto& tuple : products_)
            for (const auto& f : tuple) check(f);
        dom_ = sample->domain();
    }

    int d() const { return d_; }
    int entry_degree() const { return m_; }
    int nvars() const { return nvars_; }
    const D& domain() const { return *dom_; }
    int summands() const { return 1 + static_cast<int>(products_.size()); }
    const std::vector<std::vector<MultiPoly<D>>>& product_terms() const { return products_; }

    MultiPoly<D> power_term_or_zero() const {
        if (power_) return *power_;
        return MultiPoly<D>::zero(*dom_, nvars_);
    }

    // the branch polynomial b, homogeneous of degree d*m
    MultiPoly<D> branch_polynomial() const {
        MultiPoly<D> b = power_term_or_zero().pow(static_cast<unsigned>(d_));
        for (const auto& tuple : products_) {
            MultiPoly<D> prod = MultiPoly<D>::one(*dom_, nvars_);
            for (const auto& f : tuple) prod = prod * f;
            b = b + prod;
        }
        return b;
    }

private:
    int d_;
    std::optional<MultiPoly<D>> power_;
    std::vector<std::vector<MultiPoly<D>>> products_;
    std::optional<D> dom_;
    int nvars_ = 0;
    int m_ = 0;
};

struct PowerCheck {
    bool ok = false;
    int row = -1;  // first differing entry when not ok
    int col = -1;
    explicit operator bool() const { return ok; }
};

// A^d == b * I, checked symbolically.
template <class D>
PowerCheck verify_power(const SquareMatrix<MultiPoly<D>>& a, int d, const MultiPoly<D>& b) {
    if (d < 1) throw std::invalid_argument("verify_power: need d >= 1");
    int n = a.size();
    if (n == 0) throw std::invalid_argument("verify_power: empty matrix");
    {
        int deg = -1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto& e = a.at(i, j);
                if (!e.is_homogeneous()) throw std::invalid_argument("verify_power: inhomogeneous entry");
                if (!e.is_zero()) {
                    if (deg < 0)
                        deg = e.degree();
                    else if (e.degree() != deg)
                        throw std::invalid_argument("verify_power: entries of mixed degrees");
                }
            }
    }
    SquareMatrix<MultiPoly<D>> p = a.pow(static_cast<unsigned>(d));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const MultiPoly<D>& want = (i == j) ? b : b.make_zero();
            if (p.at(i, j) != want) return PowerCheck{false, i, j};
        }
    return PowerCheck{true, -1, -1};
}

// char poly of A equals p^r, with p = t^d - b supplied by the caller.
template <class D>
bool verify_determinantal(const SquareMatrix<MultiPoly<D>>& a, const TPoly<D>& p, int r) {
    if (r < 1) throw std::invalid_argument("verify_determinantal: need r >= 1");
    if (p.degree() < 1) throw std::invalid_argument("verify_determinantal: p must have positive degree in t");
    if (a.size() != r * p.degree()) throw std::invalid_argument("verify_determinantal: size(A) != r * deg_t(p)");
    if (a.size() > kDetSizeCap) throw std::invalid_argument("verify_determinantal: size exceeds cofactor bound of 12");
    return char_poly(a) == p.pow(static_cast<unsigned>(r));
}

// Certificate that A^d = b*I; construction refuses to return an
// unverified matrix.
template <class D>
struct CyclicFactorization {
    int d;
    int size;
    MultiPoly<D> b;
    SquareMatrix<MultiPoly<D>> A;
    int entry_degree;
    std::string provenance;  // "decomposition" or "external"

    int rank() const { return size / d; }
};

template <class D>
CyclicFactorization<D> factorization_from_matrix(const SquareMatrix<MultiPoly<D>>& a, int d, const MultiPoly<D>& b) {
    auto chk = verify_power(a, d, b);
    if (!chk.ok)
        throw std::invalid_argument("factorization_from_matrix: A^d != b*I, first mismatch at entry (" + std::to_string(chk.row) + "," +
                                    std::to_string(chk.col) + ")");
    int deg = 0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (!a.at(i, j).is_zero()) deg = a.at(i, j).degree();
    return CyclicFactorization<D>{d, a.size(), b, a, deg, "external"};
}

namespace detail {

template <class D>
typename D::Elem validated_root_of_unity(const D& dom, int d, const std::optional<typename D::Elem>& zeta) {
    std::uint64_t ch = dom.characteristic();
    if (ch != 0 && static_cast<std::uint64_t>(d) % ch == 0) throw std::invalid_argument("build_factorization: characteristic divides d");
    typename D::Elem z = dom.one();
    if (zeta) {
        z = *zeta;
    } else if (d == 2) {
        z = dom.neg(dom.one());
    } else {
        throw std::invalid_argument("build_factorization: missing primitive root of unity for d > 2");
    }
    // primitivity: z^d = 1 and z^k != 1 for 0 < k < d
    typename D::Elem pow = dom.one();
    for (int k = 1; k <= d; ++k) {
        pow = dom.mul(pow, z);
        if (k < d && dom.eq(pow, dom.one())) throw std::invalid_argument("build_factorization: root of unity is not primitive of order d");
    }
    if (!dom.eq(pow, dom.one())) throw std::invalid_argument("build_factorization: zeta^d != 1");
    return z;
}

}  // namespace detail

// Cyclic factorization of b from a sum-of-products decomposition.
//
// Start from the 1x1 matrix (p0) and fold in one product term at a
// time: given A with A^d = c*I of size N, the d*N block matrix with
// diagonal blocks zeta^j * A, blocks q_{j+1} * I above the diagonal and
// q_d * I in the lower-left corner satisfies B^d = (c + prod q_j) * I.
// For d = 2 this is the doubling ((A, q*I), (q'*I, -A)).  The returned
// matrix always passes verify_power.
template <class D>
CyclicFactorization<D> build_factorization(const Decomposition<D>& dec, std::optional<typename D::Elem> zeta = std::nullopt) {
    const D& dom = dec.domain();
    const int d = dec.d();
    const int nv = dec.nvars();
    typename D::Elem z = detail::validated_root_of_unity(dom, d, zeta);

    const MultiPoly<D> zero = MultiPoly<D>::zero(dom, nv);
    SquareMatrix<MultiPoly<D>> a(1, dec.power_term_or_zero());
    for (const auto& tuple : dec.product_terms()) {
        int n = a.size();
        SquareMatrix<MultiPoly<D>> b(d * n, zero);
        typename D::Elem zj = dom.one();
        for (int jb = 0; jb < d; ++jb) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (a.at(i, j).is_zero()) continue;
                    b.at(jb * n + i, jb * n + j) = a.at(i, j).scaled(zj);
                }
            const MultiPoly<D>& q = tuple[static_cast<std::size_t>(jb)];
            int target_block = (jb + 1) % d;  // superdiagonal, corner wraps around
            for (int i = 0; i < n; ++i) b.at(jb * n + i, target_block * n + i) = q;
            zj = dom.mul(zj, z);
        }
        a = std::move(b);
    }

    MultiPoly<D> b = dec.branch_polynomial();
    auto chk = verify_power(a, d, b);
    if (!chk.ok) throw std::logic_error("build_factorization: constructed matrix failed verification");
    return CyclicFactorization<D>{d, a.size(), b, std::move(a), dec.entry_degree(), "decomposition"};
}

// Euler totient, for the rank bound without roots of unity.
inline std::uint64_t euler_totient(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Minimal guaranteed rank d^{s-2}, times phi(d) when the base field
// has no primitive d-th root of unity.
inline std::uint64_t rank_bound(int d, int s, bool has_root_of_unity) {
    if (d < 2) throw std::invalid_argument("rank_bound: need d >= 2");
    if (s < 2) throw std::invalid_argument("rank_bound: need s >= 2 (s = 1 forces a reducible covering)");
    std::uint64_t r = 1;
    for (int k = 0; k < s - 2; ++k) {
        r *= static_cast<std::uint64_t>(d);
        if (r > (std::uint64_t{1} << 56)) throw std::overflow_error("rank_bound: result too large");
    }
    return has_root_of_unity ? r : r * euler_totient(static_cast<std::uint64_t>(d));
}

namespace detail {

template <class D>
MultiPoly<D> t_coeff_or_throw(const TPoly<D>& e, int max_deg) {
    if (e.degree() > max_deg) throw std::invalid_argument("skew_symmetrize_d2: entry has unexpected t-degree");
    return e.coeff(0);
}

}  // namespace detail

// The 4x4 doubling matrix in its t*I - A form can be made
// skew-symmetric by reversing the rows with alternating signs; the
// Pfaffian of the result is -(t^2 - b).
template <class D>
SquareMatrix<TPoly<D>> skew_symmetrize_d2(const SquareMatrix<TPoly<D>>& m) {
    if (m.size() != 4) throw std::invalid_argument("skew_symmetrize_d2: expected a 4x4 matrix");
    const D& dom = m.at(0, 0).domain();
    const int nv = m.at(0, 0).nvars();
    const MultiPoly<D> one = MultiPoly<D>::one(dom, nv);
    // recover A from t*I - A and check the doubling shape
    SquareMatrix<MultiPoly<D>> a(4, MultiPoly<D>::zero(dom, nv));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const TPoly<D>& e = m.at(i, j);
            if (i == j) {
                if (e.degree() != 1 || e.coeff(1) != one) throw std::invalid_argument("skew_symmetrize_d2: diagonal entry is not t - p");
                a.at(i, j) = -e.coeff(0);
            } else {
                a.at(i, j) = -detail::t_coeff_or_throw(e, 0);
            }
        }
    auto expect_zero = [&](int i, int j) {
        if (!a.at(i, j).is_zero()) throw std::invalid_argument("skew_symmetrize_d2: input is not the recognized doubling shape");
    };
    expect_zero(0, 3);
    expect_zero(1, 2);
    expect_zero(2, 1);
    expect_zero(3, 0);
    bool shape = a.at(1, 1) == -a.at(0, 0) && a.at(2, 2) == -a.at(0, 0) && a.at(3, 3) == a.at(0, 0) && a.at(1, 3) == a.at(0, 2) &&
                 a.at(3, 1) == a.at(2, 0) && a.at(2, 3) == -a.at(0, 1) && a.at(3, 2) == -a.at(1, 0);
    if (!shape) throw std::invalid_argument("skew_symmetrize_d2: input is not the recognized doubling shape");

    SquareMatrix<TPoly<D>> s(4, TPoly<D>::zero(dom, nv));
    for (int j = 0; j < 4; ++j) {
        s.at(0, j) = m.at(3, j);
        s.at(1, j) = -m.at(2, j);
        s.at(2, j) = m.at(1, j);
        s.at(3, j) = -m.at(0, j);
    }
    return s;
}

}  // namespace ulrich

#endif
