#include "ulrich/intmatrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace ulrich {

IntMatrix::BareissResult IntMatrix::bareiss_rank() const {
    IntMatrix m = *this;
    std::vector<int> pivots;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pr = -1;
        for (int i = r; i < rows_; ++i) {
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(r, j));
        // one-step fraction-free update; division by the previous pivot is exact
        for (int i = r + 1; i < rows_; ++i) {
            for (int j = c + 1; j < cols_; ++j) {
                mpz_class v = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        pivots.push_back(c);
        ++r;
    }
    return BareissResult{r, std::move(pivots)};
}

namespace {

// Shared Smith reduction.  When track is true the row transform U and
// its inverse W are maintained alongside.
struct SmithWorker {
    IntMatrix a;
    bool track;
    IntMatrix u, w;

    explicit SmithWorker(const IntMatrix& m, bool track_)
        : a(m), track(track_), u(IntMatrix::identity(track_ ? m.rows() : 0)), w(IntMatrix::identity(track_ ? m.rows() : 0)) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        if (track) {
            for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
            for (int r = 0; r < w.rows(); ++r) std::swap(w.at(r, i), w.at(r, j));
        }
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    }

    // row i -= q * row j
    void row_sub(int i, int j, const mpz_class& q) {
        if (q == 0) return;
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
        if (track) {
            for (int c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
            for (int r = 0; r < w.rows(); ++r) w.at(r, j) += q * w.at(r, i);
        }
    }

    void col_sub(int i, int j, const mpz_class& q) {
        if (q == 0) return;
        for (int r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
    }

    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        if (track) {
            for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
            for (int r = 0; r < w.rows(); ++r) w.at(r, i) = -w.at(r, i);
        }
    }

    // smallest |entry| in the trailing submatrix, lowest (row, col) on ties
    bool find_pivot(int k, int& pi, int& pj) const {
        bool found = false;
        mpz_class best;
        for (int i = k; i < a.rows(); ++i) {
            for (int j = k; j < a.cols(); ++j) {
                if (a.at(i, j) == 0) continue;
                mpz_class v = abs(a.at(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        }
        return found;
    }

    static mpz_class rounded_quotient(const mpz_class& num, const mpz_class& den) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (2 * r > abs(den)) q += 1;
        return q;
    }

    void reduce() {
        int n = std::min(a.rows(), a.cols());
        for (int k = 0; k < n; ++k) {
            int pi, pj;
            if (!find_pivot(k, pi, pj)) break;
            for (;;) {
                swap_rows(k, pi);
                swap_cols(k, pj);
                bool clean = true;
                for (int i = k + 1; i < a.rows(); ++i) {
                    if (a.at(i, k) == 0) continue;
                    row_sub(i, k, rounded_quotient(a.at(i, k), a.at(k, k)));
                    if (a.at(i, k) != 0) clean = false;
                }
                for (int j = k + 1; j < a.cols(); ++j) {
                    if (a.at(k, j) == 0) continue;
                    col_sub(j, k, rounded_quotient(a.at(k, j), a.at(k, k)));
                    if (a.at(k, j) != 0) clean = false;
                }
                if (!clean) {
                    find_pivot(k, pi, pj);
                    continue;
                }
                // pivot must divide the rest of the submatrix
                bool divides = true;
                for (int i = k + 1; i < a.rows() && divides; ++i) {
                    for (int j = k + 1; j < a.cols() && divides; ++j) {
                        if (a.at(i, j) % a.at(k, k) != 0) {
                            row_sub(k, i, mpz_class(-1));  // merge row i into row k
                            divides = false;
                        }
                    }
                }
                if (divides) break;
                find_pivot(k, pi, pj);
            }
            if (a.at(k, k) < 0) negate_row(k);
        }
    }

    std::vector<mpz_class> diagonal() const {
        int n = std::min(a.rows(), a.cols());
        std::vector<mpz_class> d(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) d[static_cast<std::size_t>(k)] = a.at(k, k);
        return d;
    }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
    SmithWorker worker(m, false);
    worker.reduce();
    SNFResult r;
    r.invariant_factors = worker.diagonal();
    for (const auto& d : r.invariant_factors)
        if (d != 0) ++r.rank;
    return r;
}

SmithTransforms smith_with_transforms(const IntMatrix& m) {
    SmithWorker worker(m, true);
    worker.reduce();
    SmithTransforms t(m.rows());
    t.diag = worker.diagonal();
    for (const auto& d : t.diag)
        if (d != 0) ++t.rank;
    t.U = std::move(worker.u);
    t.W = std::move(worker.w);
    return t;
}

}  // namespace ulrich
