#ifndef ULRICH_FIELDMATRIX_HPP
#define ULRICH_FIELDMATRIX_HPP

#include <stdexcept>
#include <vector>

#include "ulrich/domain.hpp"

namespace ulrich {

// Dense matrix over a field context F (QQ or GFp), row major.
template <class F>
class FieldMatrix {
    static_assert(F::is_field, "FieldMatrix requires a field domain");

public:
    using Elem = typename F::Elem;

    FieldMatrix(const F& dom, int rows, int cols)
        : dom_(dom), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), dom.zero()) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("FieldMatrix: negative dimension");
    }

    static FieldMatrix identity(const F& dom, int n) {
        FieldMatrix m(dom, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = dom.one();
        return m;
    }

    const F& domain() const { return dom_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Elem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    FieldMatrix transposed() const {
        FieldMatrix t(dom_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const FieldMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!dom_.eq(a_[k], o.a_[k])) return false;
        return true;
    }

    struct RrefResult {
        int rank;
        FieldMatrix rref;
        std::vector<int> pivot_cols;
    };

    // Reduced row echelon form with deterministic pivoting: columns are
    // scanned left to right and the first row with a nonzero entry wins.
    RrefResult rref() const {
        FieldMatrix m = *this;
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i) {
                if (!dom_.is_zero(m.at(i, c))) {
                    pr = i;
                    break;
                }
            }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(r, j));
            Elem inv = dom_.inv(m.at(r, c));
            for (int j = c; j < cols_; ++j) m.at(r, j) = dom_.mul(m.at(r, j), inv);
            for (int i = 0; i < rows_; ++i) {
                if (i == r || dom_.is_zero(m.at(i, c))) continue;
                Elem f = m.at(i, c);
                for (int j = c; j < cols_; ++j) m.at(i, j) = dom_.sub(m.at(i, j), dom_.mul(f, m.at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return RrefResult{r, std::move(m), std::move(pivots)};
    }

    int rank() const { return rref().rank; }

private:
    F dom_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

}  // namespace ulrich

#endif
