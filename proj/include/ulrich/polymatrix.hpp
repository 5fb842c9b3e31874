#ifndef ULRICH_POLYMATRIX_HPP
#define ULRICH_POLYMATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ulrich/multipoly.hpp"
#include "ulrich/tpoly.hpp"

namespace ulrich {

// Square matrix over a commutative ring type T (MultiPoly or TPoly).
template <class T>
class SquareMatrix {
public:
    SquareMatrix(int n, const T& fill) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
        if (n < 0) throw std::invalid_argument("SquareMatrix: negative size");
    }

    int size() const { return n_; }
    T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    SquareMatrix operator*(const SquareMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("SquareMatrix: size mismatch");
        if (n_ == 0) return *this;
        SquareMatrix r(n_, a_[0].make_zero());
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < n_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
                }
            }
        return r;
    }

    SquareMatrix operator-() const {
        SquareMatrix r = *this;
        for (auto& e : r.a_) e = -e;
        return r;
    }

    SquareMatrix pow(unsigned e) const {
        if (n_ == 0 || e == 0) throw std::invalid_argument("SquareMatrix::pow: need positive exponent and size");
        SquareMatrix r = *this;
        for (unsigned k = 1; k < e; ++k) r = r * *this;
        return r;
    }

private:
    int n_;
    std::vector<T> a_;
};

inline constexpr int kDetSizeCap = 12;   // cofactor feasibility bound
inline constexpr int kPfaffianSizeCap = 8;

// Determinant by cofactor expansion with memoized minors.  Minors are
// keyed by the active column mask; the row is implied by its popcount.
// Zero entries are skipped, which matters a lot for the sparse block
// matrices produced by the factorization constructions.
template <class T>
T det(const SquareMatrix<T>& m) {
    int n = m.size();
    if (n == 0) throw std::invalid_argument("det: empty matrix");
    if (n > kDetSizeCap) throw std::invalid_argument("det: size exceeds cofactor bound of 12");
    const T zero = m.at(0, 0).make_zero();
    const T one = m.at(0, 0).make_one();
    std::unordered_map<std::uint32_t, T> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> T {
        if (mask == 0) return one;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int row = n - __builtin_popcount(mask);
        T acc = zero;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const T& e = m.at(row, j);
            if (!e.is_zero()) {
                T sub = self(self, mask & ~(1u << j));
                T term = e * sub;
                acc = (pos % 2 == 0) ? acc + term : acc - term;
            }
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (n == 32 ? 0xffffffffu : ((1u << n) - 1)));
}

// det(t*I - m) as a polynomial in t
template <class D>
TPoly<D> char_poly(const SquareMatrix<MultiPoly<D>>& m) {
    int n = m.size();
    if (n == 0) throw std::invalid_argument("char_poly: empty matrix");
    if (n > kDetSizeCap) throw std::invalid_argument("char_poly: size exceeds cofactor bound of 12");
    const D& dom = m.at(0, 0).domain();
    int nvars = m.at(0, 0).nvars();
    SquareMatrix<TPoly<D>> tm(n, TPoly<D>::zero(dom, nvars));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                tm.at(i, j) = TPoly<D>::t(dom, nvars) - TPoly<D>::constant(m.at(i, j));
            else
                tm.at(i, j) = TPoly<D>::constant(-m.at(i, j));
        }
    return det(tm);
}

template <class D>
SquareMatrix<TPoly<D>> char_matrix(const SquareMatrix<MultiPoly<D>>& m) {
    int n = m.size();
    if (n == 0) throw std::invalid_argument("char_matrix: empty matrix");
    const D& dom = m.at(0, 0).domain();
    int nvars = m.at(0, 0).nvars();
    SquareMatrix<TPoly<D>> tm(n, TPoly<D>::zero(dom, nvars));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                tm.at(i, j) = TPoly<D>::t(dom, nvars) - TPoly<D>::constant(m.at(i, j));
            else
                tm.at(i, j) = TPoly<D>::constant(-m.at(i, j));
        }
    return tm;
}

template <class T>
bool is_skew_symmetric(const SquareMatrix<T>& m) {
    int n = m.size();
    for (int i = 0; i < n; ++i) {
        if (!m.at(i, i).is_zero()) return false;
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != -m.at(j, i)) return false;
    }
    return true;
}

// Pfaffian by recursive expansion along the first active row:
// pf(S) = sum_{l>=2} (-1)^l A(s1, s_l) pf(S minus {s1, s_l}).
template <class T>
T pfaffian(const SquareMatrix<T>& m) {
    int n = m.size();
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("pfaffian: size must be even and positive");
    if (n > kPfaffianSizeCap) throw std::invalid_argument("pfaffian: size exceeds bound of 8");
    if (!is_skew_symmetric(m)) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
    const T zero = m.at(0, 0).make_zero();
    const T one = m.at(0, 0).make_one();
    std::unordered_map<std::uint32_t, T> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> T {
        if (mask == 0) return one;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int first = __builtin_ctz(mask);
        T acc = zero;
        int pos = 1;  // position of s_l in the sorted index list, 1-based
        for (int j = first + 1; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            ++pos;
            const T& e = m.at(first, j);
            if (!e.is_zero()) {
                T sub = self(self, mask & ~((1u << first) | (1u << j)));
                T term = e * sub;
                acc = (pos % 2 == 0) ? acc + term : acc - term;
            }
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (1u << n) - 1);
}

}  // namespace ulrich

#endif
