#include "ulrich/numerics.hpp"

namespace ulrich::numerics {

mpz_class binom(long a, int k) {
    if (k < 0 || a < 0 || a < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
    return r;
}

mpz_class binom_signed(long x, int k) {
    if (k < 0) return 0;
    mpz_class num = 1;
    for (int i = 0; i < k; ++i) num *= mpz_class(x - i);
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

mpz_class bott(int n, long i, int j) {
    if (n < 1) throw std::invalid_argument("bott: need n >= 1");
    if (j < 0 || j > n) throw std::invalid_argument("bott: need 0 <= j <= n");
    if (j == 0 && i >= 0) return binom(n + i, n);
    if (j == n && i <= -n - 1) return binom(-i - 1, n);
    return 0;
}

std::vector<long> pushforward_splitting(const CoverSpec& c) {
    std::vector<long> twists;
    twists.reserve(static_cast<std::size_t>(c.d));
    for (int i = 0; i < c.d; ++i) twists.push_back(-static_cast<long>(i) * c.m);
    return twists;
}

long canonical_twist(const CoverSpec& c) { return static_cast<long>(c.m) * (c.d - 1) - c.n - 1; }

namespace {

// dense rational polynomial in the power basis, local helper for the
// binomial-basis conversion
struct QPoly {
    std::vector<mpq_class> c;  // c[k] * t^k

    int deg() const {
        for (std::size_t k = c.size(); k-- > 0;)
            if (c[k] != 0) return static_cast<int>(k);
        return -1;
    }
    void sub_scaled(const QPoly& o, const mpq_class& s) {
        if (c.size() < o.c.size()) c.resize(o.c.size(), mpq_class(0));
        for (std::size_t k = 0; k < o.c.size(); ++k) c[k] -= s * o.c[k];
    }
};

// C(t + shift, k) expanded in the power basis
QPoly binom_power_basis(long shift, int k) {
    QPoly p;
    p.c = {mpq_class(1)};
    for (int i = 0; i < k; ++i) {
        // multiply by (t + shift - i)
        QPoly q;
        q.c.assign(p.c.size() + 1, mpq_class(0));
        for (std::size_t j = 0; j < p.c.size(); ++j) {
            q.c[j + 1] += p.c[j];
            q.c[j] += p.c[j] * mpq_class(shift - i);
        }
        p = std::move(q);
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    for (auto& v : p.c) v /= mpq_class(fact);
    return p;
}

mpq_class binom_signed_q(long x, int k) {
    mpq_class num = 1;
    for (int i = 0; i < k; ++i) num *= mpq_class(x - i);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    return num / mpq_class(fact);
}

}  // namespace

HilbertPoly HilbertPoly::from_shifted_binomials(int n, const std::vector<std::pair<mpq_class, long>>& parts) {
    if (n < 0) throw std::invalid_argument("HilbertPoly: negative dimension");
    QPoly target;
    target.c.assign(static_cast<std::size_t>(n) + 1, mpq_class(0));
    for (const auto& [w, shift] : parts) target.sub_scaled(binom_power_basis(shift, n), -w);
    if (target.deg() > n) throw std::logic_error("HilbertPoly: degree exceeds n");
    // peel off leading terms against the basis C(t + n - k, n - k)
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(n) + 1, mpq_class(0));
    for (int k = 0; k <= n; ++k) {
        int bdeg = n - k;
        mpq_class lead = bdeg < static_cast<int>(target.c.size()) ? target.c[static_cast<std::size_t>(bdeg)] : mpq_class(0);
        if (lead == 0) continue;
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(bdeg));
        mpq_class ck = lead * mpq_class(fact);
        coeffs[static_cast<std::size_t>(k)] = ck;
        target.sub_scaled(binom_power_basis(n - k, bdeg), ck);
    }
    if (target.deg() >= 0) throw std::logic_error("HilbertPoly: basis conversion left a remainder");
    return HilbertPoly(n, std::move(coeffs));
}

mpq_class HilbertPoly::eval(long t) const {
    mpq_class v = 0;
    for (int k = 0; k <= n_; ++k) {
        const mpq_class& c = binom_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        v += c * binom_signed_q(t + n_ - k, n_ - k);
    }
    return v;
}

mpz_class HilbertPoly::eval_integer(long t) const {
    mpq_class v = eval(t);
    if (v.get_den() != 1) throw std::logic_error("HilbertPoly: non-integer value at integer argument");
    return v.get_num();
}

bool HilbertPoly::integer_valued_on(long lo, long hi) const {
    for (long t = lo; t <= hi; ++t)
        if (eval(t).get_den() != 1) return false;
    return true;
}

HilbertPoly ulrich_hilbert(int r, const CoverSpec& c) {
    if (r < 1) throw std::invalid_argument("ulrich_hilbert: need rank >= 1");
    return HilbertPoly::from_shifted_binomials(c.n, {{mpq_class(static_cast<long>(r) * c.d), static_cast<long>(c.n)}});
}

mpz_class ulrich_degree(int r, const CoverSpec& c) {
    if (r < 1) throw std::invalid_argument("ulrich_degree: need rank >= 1");
    return mpz_class(r) * c.m * c.d * (c.d - 1) / 2;
}

mpz_class c2_degree_rank2(const CoverSpec& c) {
    if (c.d != 2) throw std::invalid_argument("c2_degree_rank2: only double coverings carry this invariant");
    return mpz_class(c.m) * c.m;
}

namespace {

// Hilbert function of the artinian-type quotient S/(g1,g2) for a
// regular sequence of two degree-m forms in n+1 variables
mpz_class hf_ci_quotient(int n, int m, long a) {
    if (a < 0) return 0;
    return binom(a + n, n) - 2 * binom(a - m + n, n) + binom(a - 2 * m + n, n);
}

}  // namespace

mpz_class ci_cohomology(const CIData& z, CISheaf sheaf, long i, int j) {
    const int n = z.n;
    const int m = z.m;
    if (j < 0) return 0;
    if (sheaf == CISheaf::Ideal) {
        if (j == 0) return 2 * bott(n, i - m, 0) - bott(n, i - 2 * m, 0);
        if (j <= n - 2) return 0;
        if (j == n - 1) return hf_ci_quotient(n, m, 2 * m - i - n - 1);
        if (j == n) return bott(n, i, n);
        return 0;
    }
    // structure sheaf of Z, dim Z = n - 2
    if (j == 0) return bott(n, i, 0) - ci_cohomology(z, CISheaf::Ideal, i, 0);
    if (j <= n - 3) return 0;
    if (j == n - 2) return ci_cohomology(z, CISheaf::Ideal, i, n - 1);
    return 0;
}

HilbertPoly hilbert_poly_ci(const CIData& z) {
    return HilbertPoly::from_shifted_binomials(z.n, {{mpq_class(2), static_cast<long>(z.n)}, {mpq_class(-1), static_cast<long>(z.n - z.m)}});
}

ExtTable ext_table_from_q(int m, const mpz_class& q) {
    if (m < 2 || m > 4) throw std::invalid_argument("ext_table: m must be 2, 3 or 4");
    if (q < 0) throw std::invalid_argument("ext_table: negative quotient dimension");
    ExtTable t;
    t.m = m;
    t.q = q;
    CIData z(3, m);
    mpz_class h1_ozm = ci_cohomology(z, CISheaf::Structure, m, 1);
    t.h1N = q + 3 * h1_ozm;
    t.h0N = 5 * binom(m + 3, 3) - binom(2 * m + 3, 3) - 7 + q;
    t.hom = 1;
    t.ext1 = t.h0N - 3;
    if (m == 4) {
        t.ext3 = 1;
        t.ext2 = t.ext1;  // Serre duality, trivial canonical bundle
    } else {
        t.ext3 = 0;
        t.ext2 = t.h1N;
    }
    t.valid = (q == 0);
    return t;
}

CountRecord counting_inequalities(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("counting_inequalities: need n >= 1, m >= 1");
    CountRecord r;
    r.rank1_gap = binom(2 * m + 3, 3) - 3 - 3 * binom(m + 3, 3);
    r.rank2_gap = binom(2 * m + n, n) - 5 * binom(m + n, n);
    r.noic_dim = 4 * binom(m + 3, 3) - 5;
    r.noic_codim = binom(2 * m + 3, 3) + 1 - r.noic_dim;
    return r;
}

}  // namespace ulrich::numerics
