#ifndef ULRICH_NUMERICS_HPP
#define ULRICH_NUMERICS_HPP

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "ulrich/graded.hpp"
#include "ulrich/multipoly.hpp"

namespace ulrich::numerics {

// Counting binomial: C(a, k), zero when a < k or a < 0.
mpz_class binom(long a, int k);

// Binomial as a polynomial value: product formula at an arbitrary
// integer, so C(-1, 3) = -1.  Used for Euler characteristics.
mpz_class binom_signed(long x, int k);

// h^j(P^n, O(i)).  The top-row case is C(-i-1, n) for i <= -n-1, the
// form forced by Serre duality and the Euler characteristic identity.
mpz_class bott(int n, long i, int j);

// A divisorial cover of P^n inside P(O + O(m)) of covering degree d.
struct CoverSpec {
    int n, m, d;
    CoverSpec(int n_, int m_, int d_) : n(n_), m(m_), d(d_) {
        if (n < 1 || m < 1 || d < 1) throw std::invalid_argument("CoverSpec: need n >= 1, m >= 1, d >= 1");
    }
};

// f_* O_X = O + O(-m) + ... + O(-(d-1)m)
std::vector<long> pushforward_splitting(const CoverSpec& c);

// omega_X = O_X(m(d-1) - n - 1)
long canonical_twist(const CoverSpec& c);

// Integer-valued polynomial in t, stored in the binomial basis
// C(t + n - k, n - k) for k = 0..n with exact rational coefficients.
class HilbertPoly {
public:
    // sum of weight * C(t + shift, n) contributions
    static HilbertPoly from_shifted_binomials(int n, const std::vector<std::pair<mpq_class, long>>& parts);

    int n() const { return n_; }
    const std::vector<mpq_class>& binomial_coeffs() const { return binom_; }
    mpq_class eval(long t) const;
    mpz_class eval_integer(long t) const;  // throws if the value is not an integer
    bool integer_valued_on(long lo, long hi) const;

private:
    HilbertPoly(int n, std::vector<mpq_class> c) : n_(n), binom_(std::move(c)) {}
    int n_;
    std::vector<mpq_class> binom_;
};

// P(E)(t) = r*d*C(t+n, n) for an Ulrich sheaf of rank r; h^0 = rd.
HilbertPoly ulrich_hilbert(int r, const CoverSpec& c);

// deg(E) = r*m*d(d-1)/2
mpz_class ulrich_degree(int r, const CoverSpec& c);

// H^{n-2} . c2(E) = m^2 for the special rank-2 bundle on a double cover
mpz_class c2_degree_rank2(const CoverSpec& c);

// An (m,m) complete intersection Z in P^n, n >= 3.
struct CIData {
    int n, m;
    CIData(int n_, int m_) : n(n_), m(m_) {
        if (n < 3) throw std::invalid_argument("CIData: need n >= 3");
        if (m < 1) throw std::invalid_argument("CIData: need m >= 1");
    }
};

enum class CISheaf { Ideal, Structure };

// h^j of I_Z(i) or O_Z(i), resolved through the Koszul sequence
// 0 -> O(-2m) -> O(-m)^2 -> I_Z -> 0 and the ideal sequence.
mpz_class ci_cohomology(const CIData& z, CISheaf sheaf, long i, int j);

// P(I_Z(m))(t) = 2*C(t+n, n) - C(t+n-m, n)
HilbertPoly hilbert_poly_ci(const CIData& z);

// Deformation bookkeeping for the rank-2 bundle attached to the curve
// cut by (t - p0, p1, p3): cohomology of its normal bundle and the
// ext^i(E, E) row.  valid marks the q = 0 regime in which the row is
// the fully backed table; the formulas themselves make sense for any q.
struct ExtTable {
    int m = 0;
    mpz_class q;
    mpz_class h0N, h1N;
    mpz_class hom, ext1, ext2, ext3;
    bool valid = false;
};

ExtTable ext_table_from_q(int m, const mpz_class& q);

template <class F>
ExtTable ext_table(int m, const std::vector<MultiPoly<F>>& ps, const F& dom) {
    static_assert(F::is_field, "ext_table needs a field");
    if (dom.characteristic() == 2) throw std::domain_error("ext_table: characteristic 2 not allowed");
    if (ps.size() != 5) throw std::invalid_argument("ext_table: expected exactly five forms");
    for (const auto& p : ps) {
        if (p.nvars() != 4) throw std::invalid_argument("ext_table: forms must live in four variables");
        if (!p.is_homogeneous_of_degree(m)) throw std::invalid_argument("ext_table: forms must be homogeneous of degree m");
    }
    GradedIdealPiece<F> piece(dom, 4, 2 * m, ps);
    return ext_table_from_q(m, mpz_class(hilbert_function_quotient(piece)));
}

// Parameter-count inequalities:
//   rank1_gap = C(2m+3,3) - 3 - 3*C(m+3,3)      (> 0 kills rank 1, n = 3)
//   rank2_gap = C(2m+n,n) - 5*C(m+n,n)          (> 0 kills special rank 2)
//   noic_dim  = 4*C(m+3,3) - 5                  (dimension of the p1p2+p3p4 locus)
//   noic_codim = C(2m+3,3) + 1 - noic_dim
struct CountRecord {
    mpz_class rank1_gap;
    mpz_class rank2_gap;
    mpz_class noic_dim;
    mpz_class noic_codim;
};

CountRecord counting_inequalities(int n, int m);

}  // namespace ulrich::numerics

#endif
