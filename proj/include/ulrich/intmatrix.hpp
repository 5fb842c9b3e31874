#ifndef ULRICH_INTMATRIX_HPP
#define ULRICH_INTMATRIX_HPP

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace ulrich {

// Dense matrix with arbitrary-precision integer entries.
class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), mpz_class(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    // Fraction-free (Bareiss) elimination; exact rank and the
    // leftmost set of independent columns.
    struct BareissResult {
        int rank;
        std::vector<int> pivot_cols;
    };
    BareissResult bareiss_rank() const;

private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

// Invariant factors d1 | d2 | ... of the Smith normal form, padded
// with zeros up to min(rows, cols); rank counts the nonzero ones.
struct SNFResult {
    std::vector<mpz_class> invariant_factors;
    int rank = 0;
};

SNFResult smith_normal_form(const IntMatrix& m);

// Smith normal form together with the row transform: diag = U*M*V for
// unimodular U (tracked) and V (discarded), and W = U^{-1}.  Columns of
// W express the cokernel generators in the original basis, which is
// what torsion representatives are read from.
struct SmithTransforms {
    std::vector<mpz_class> diag;  // length min(rows, cols), divisibility chain
    int rank = 0;
    IntMatrix U;
    IntMatrix W;
    SmithTransforms(int rows) : U(IntMatrix::identity(rows)), W(IntMatrix::identity(rows)) {}
};

SmithTransforms smith_with_transforms(const IntMatrix& m);

}  // namespace ulrich

#endif
