#ifndef ULRICH_GRADED_HPP
#define ULRICH_GRADED_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ulrich/fieldmatrix.hpp"
#include "ulrich/intmatrix.hpp"
#include "ulrich/multipoly.hpp"
#include "ulrich/rng.hpp"

namespace ulrich {

// The degree-t piece of a homogeneous ideal: a list of homogeneous
// generators together with the inspected degree.
template <class D>
class GradedIdealPiece {
public:
    GradedIdealPiece(const D& dom, int nvars, int target_degree, std::vector<MultiPoly<D>> generators)
        : dom_(dom), nvars_(nvars), target_(target_degree), gens_(std::move(generators)) {
        if (nvars < 1) throw std::invalid_argument("GradedIdealPiece: need at least one variable");
        if (target_degree < 0) throw std::invalid_argument("GradedIdealPiece: negative target degree");
        for (const auto& g : gens_) {
            if (!(g.domain() == dom_) || g.nvars() != nvars_) throw std::invalid_argument("GradedIdealPiece: generator from a different ring");
            if (!g.is_homogeneous()) throw std::invalid_argument("GradedIdealPiece: inhomogeneous generator");
            if (!g.is_zero() && g.degree() > target_) throw std::invalid_argument("GradedIdealPiece: generator degree exceeds target degree");
        }
    }

    const D& domain() const { return dom_; }
    int nvars() const { return nvars_; }
    int target_degree() const { return target_; }
    const std::vector<MultiPoly<D>>& generators() const { return gens_; }

private:
    D dom_;
    int nvars_;
    int target_;
    std::vector<MultiPoly<D>> gens_;
};

namespace detail {

// Rows of the relation matrix: every g_i * (monomial of complementary
// degree), as coefficient vectors over monomial_basis(nvars, target).
// Row order is (generator index, monomial order); column order is the
// monomial order.  This is the transpose of multiplication_matrix.
template <class D, class Sink>
void for_each_ideal_row(const GradedIdealPiece<D>& piece, Sink&& sink) {
    const int nv = piece.nvars();
    const int t = piece.target_degree();
    for (const auto& g : piece.generators()) {
        if (g.is_zero()) continue;
        int d = g.degree();
        for (const auto& mu : monomial_basis(nv, t - d)) {
            sink(g, mu);
        }
    }
}

template <class D>
std::size_t ideal_row_count(const GradedIdealPiece<D>& piece) {
    std::size_t rows = 0;
    for (const auto& g : piece.generators()) {
        if (g.is_zero()) continue;
        rows += monomial_basis(piece.nvars(), piece.target_degree() - g.degree()).size();
    }
    return rows;
}

template <class M>
std::size_t monomial_index(const std::vector<M>& basis, const M& m) {
    // basis is in descending graded-lex order; linear scan is fine at
    // these sizes but a binary search keeps the big degree-8 pieces fast
    std::size_t lo = 0, hi = basis.size();
    GradedLexDesc less;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (less(basis[mid], m))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo >= basis.size() || basis[lo] != m) throw std::logic_error("monomial not in basis");
    return lo;
}

}  // namespace detail

// Matrix whose column space is the degree-(target) piece of the ideal:
// rows indexed by monomial_basis(nvars, target), one column per
// generator multiple, ordered by (generator index, monomial order).
template <class F>
FieldMatrix<F> multiplication_matrix(const GradedIdealPiece<F>& piece) {
    static_assert(F::is_field, "use the IntMatrix overload over Z");
    auto rows_basis = monomial_basis(piece.nvars(), piece.target_degree());
    FieldMatrix<F> m(piece.domain(), static_cast<int>(rows_basis.size()), static_cast<int>(detail::ideal_row_count(piece)));
    int col = 0;
    detail::for_each_ideal_row(piece, [&](const MultiPoly<F>& g, const Monomial& mu) {
        for (const auto& [mono, c] : g.terms()) m.at(static_cast<int>(detail::monomial_index(rows_basis, mono_mul(mono, mu))), col) = c;
        ++col;
    });
    return m;
}

inline IntMatrix multiplication_matrix(const GradedIdealPiece<ZZ>& piece) {
    auto rows_basis = monomial_basis(piece.nvars(), piece.target_degree());
    IntMatrix m(static_cast<int>(rows_basis.size()), static_cast<int>(detail::ideal_row_count(piece)));
    int col = 0;
    detail::for_each_ideal_row(piece, [&](const MultiPoly<ZZ>& g, const Monomial& mu) {
        for (const auto& [mono, c] : g.terms()) m.at(static_cast<int>(detail::monomial_index(rows_basis, mono_mul(mono, mu))), col) = c;
        ++col;
    });
    return m;
}

struct FieldQuotientReport {
    int ambient_dim = 0;
    int ideal_dim = 0;
    int quotient_dim = 0;
    std::vector<Monomial> quotient_basis;  // non-pivot monomials, canonical order
};

// Full field-case report in one elimination pass over the relation
// matrix (rows = generator multiples, columns = monomials): the
// non-pivot columns form a monomial basis of the quotient piece.
template <class F>
FieldQuotientReport field_quotient_report(const GradedIdealPiece<F>& piece) {
    static_assert(F::is_field, "field_quotient_report needs a field; use quotient_structure_z over Z");
    auto col_basis = monomial_basis(piece.nvars(), piece.target_degree());
    FieldMatrix<F> rel(piece.domain(), static_cast<int>(detail::ideal_row_count(piece)), static_cast<int>(col_basis.size()));
    int row = 0;
    detail::for_each_ideal_row(piece, [&](const MultiPoly<F>& g, const Monomial& mu) {
        for (const auto& [mono, c] : g.terms()) rel.at(row, static_cast<int>(detail::monomial_index(col_basis, mono_mul(mono, mu)))) = c;
        ++row;
    });
    auto rr = rel.rref();
    FieldQuotientReport rep;
    rep.ambient_dim = static_cast<int>(col_basis.size());
    rep.ideal_dim = rr.rank;
    rep.quotient_dim = rep.ambient_dim - rr.rank;
    std::size_t p = 0;
    for (std::size_t c = 0; c < col_basis.size(); ++c) {
        if (p < rr.pivot_cols.size() && rr.pivot_cols[p] == static_cast<int>(c)) {
            ++p;
            continue;
        }
        rep.quotient_basis.push_back(col_basis[c]);
    }
    return rep;
}

template <class F>
int hilbert_function_quotient(const GradedIdealPiece<F>& piece) {
    return field_quotient_report(piece).quotient_dim;
}

template <class F>
std::vector<Monomial> quotient_basis(const GradedIdealPiece<F>& piece) {
    return field_quotient_report(piece).quotient_basis;
}

// Structure of the degree piece of Z[x..]/I as a finitely generated
// abelian group, read off the Smith normal form of the multiplication
// matrix.  Tensoring with a field k kills exactly the torsion whose
// invariant is invertible in k.
struct ZQuotientStructure {
    int ambient_dim = 0;
    int ideal_rank = 0;
    int free_rank = 0;
    std::vector<mpz_class> torsion;      // invariant factors > 1, in chain order
    std::vector<Monomial> torsion_reps;  // representative monomial per invariant
    std::vector<Monomial> monomials;     // row basis of the ambient degree piece
    std::vector<mpz_class> diag;
    IntMatrix U{0, 0};  // row transform: diag = U * M * V
    IntMatrix W{0, 0};  // U^{-1}; its columns generate the cokernel factors

    // Order of the class of a monomial in the cokernel (0 = infinite).
    mpz_class class_order(const Monomial& m) const {
        std::size_t k = detail::monomial_index(monomials, m);
        for (int i = free_start(); i < ambient_dim; ++i)
            if (U.at(i, static_cast<int>(k)) != 0) return 0;
        mpz_class order = 1;
        for (int i = 0; i < free_start(); ++i) {
            const mpz_class& d = diag[static_cast<std::size_t>(i)];
            if (d == 0) continue;
            mpz_class g, y = U.at(i, static_cast<int>(k));
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), y.get_mpz_t());
            mpz_class o = d / g;
            mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), o.get_mpz_t());
        }
        return order;
    }

private:
    int free_start() const { return ideal_rank; }
};

inline ZQuotientStructure quotient_structure_z(const GradedIdealPiece<ZZ>& piece) {
    IntMatrix m = multiplication_matrix(piece);
    auto t = smith_with_transforms(m);
    ZQuotientStructure r;
    r.ambient_dim = m.rows();
    r.ideal_rank = t.rank;
    r.free_rank = m.rows() - t.rank;
    r.monomials = monomial_basis(piece.nvars(), piece.target_degree());
    r.diag = t.diag;
    for (std::size_t i = 0; i < t.diag.size(); ++i) {
        if (t.diag[i] > 1) {
            r.torsion.push_back(t.diag[i]);
            // the i-th column of W generates this cyclic factor; report
            // the monomial carrying its largest coefficient
            int best = 0;
            mpz_class bestv = abs(t.W.at(0, static_cast<int>(i)));
            for (int row = 1; row < m.rows(); ++row) {
                mpz_class v = abs(t.W.at(row, static_cast<int>(i)));
                if (v > bestv) {
                    bestv = v;
                    best = row;
                }
            }
            r.torsion_reps.push_back(r.monomials[static_cast<std::size_t>(best)]);
        }
    }
    r.U = std::move(t.U);
    r.W = std::move(t.W);
    return r;
}

// Surjectivity of the multiplication map V_m^5 -> V_2m attached to
// (p0,...,p4); the factor 2 on the square term is irrelevant away from
// characteristic 2.
template <class F>
bool jacobian_surjective(const std::vector<MultiPoly<F>>& ps, const F& dom) {
    static_assert(F::is_field, "jacobian_surjective needs a field");
    if (dom.characteristic() == 2) throw std::domain_error("jacobian_surjective: characteristic 2 not allowed");
    if (ps.size() != 5) throw std::invalid_argument("jacobian_surjective: expected exactly five forms");
    int nv = -1, m = -1;
    for (const auto& p : ps) {
        if (nv < 0) nv = p.nvars();
        if (p.nvars() != nv) throw std::invalid_argument("jacobian_surjective: mixed variable counts");
        if (!p.is_homogeneous()) throw std::invalid_argument("jacobian_surjective: inhomogeneous form");
        if (!p.is_zero()) {
            if (m < 0)
                m = p.degree();
            else if (p.degree() != m)
                throw std::invalid_argument("jacobian_surjective: forms of different degrees");
        }
    }
    if (m < 0) return false;  // all five forms vanish
    GradedIdealPiece<F> piece(dom, nv, 2 * m, ps);
    return hilbert_function_quotient(piece) == 0;
}

struct GenericityTrialResult {
    int trials = 0;
    int successes = 0;
    mpq_class ratio() const { return mpq_class(successes, trials); }
};

// Seeded sampling of five degree-m forms in four variables over F_p;
// success ratio of jacobian_surjective certifies that writing a form
// as p0^2 + p1p2 + p3p4 is dominant at that degree.
inline GenericityTrialResult generic_writability_trial(int m, const GFp& dom, int trials, std::uint64_t seed) {
    if (trials <= 0) throw std::invalid_argument("generic_writability_trial: need a positive number of trials");
    if (m < 1) throw std::invalid_argument("generic_writability_trial: need m >= 1");
    if (dom.characteristic() == 2) throw std::domain_error("generic_writability_trial: characteristic 2 not allowed");
    GenericityTrialResult res;
    res.trials = trials;
    for (int i = 0; i < trials; ++i) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        std::vector<MultiPoly<GFp>> ps;
        ps.reserve(5);
        for (int k = 0; k < 5; ++k) ps.push_back(rand_homogeneous(dom, 4, m, rng));
        if (jacobian_surjective(ps, dom)) ++res.successes;
    }
    return res;
}

}  // namespace ulrich

#endif
