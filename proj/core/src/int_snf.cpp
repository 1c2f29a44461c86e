#include "spinor/int_snf.hpp"

#include <algorithm>
#include <utility>

#include "spinor/errors.hpp"

namespace spinor {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionMismatch("matrix dimensions must be positive");
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) throw DimensionMismatch("matrix dimensions must be positive");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

struct Workspace {
    IntMatrix a, left, right;

    explicit Workspace(const IntMatrix& m)
        : a(m), left(IntMatrix::identity(m.rows())), right(IntMatrix::identity(m.cols())) {}

    void swap_rows(std::size_t r, std::size_t s) {
        if (r == s) return;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(s, j));
        for (std::size_t j = 0; j < left.cols(); ++j) std::swap(left.at(r, j), left.at(s, j));
    }
    void swap_cols(std::size_t c, std::size_t d) {
        if (c == d) return;
        for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, c), a.at(i, d));
        for (std::size_t i = 0; i < right.rows(); ++i) std::swap(right.at(i, c), right.at(i, d));
    }
    void add_row(std::size_t r, std::size_t s, const BigInt& f) { // row r += f * row s
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) += f * a.at(s, j);
        for (std::size_t j = 0; j < left.cols(); ++j) left.at(r, j) += f * left.at(s, j);
    }
    void add_col(std::size_t c, std::size_t d, const BigInt& f) { // col c += f * col d
        for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, c) += f * a.at(i, d);
        for (std::size_t i = 0; i < right.rows(); ++i) right.at(i, c) += f * right.at(i, d);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
        for (std::size_t j = 0; j < left.cols(); ++j) left.at(r, j) = -left.at(r, j);
    }

    bool find_pivot(std::size_t k, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        BigInt best = 0;
        for (std::size_t i = k; i < a.rows(); ++i) {
            for (std::size_t j = k; j < a.cols(); ++j) {
                if (a.at(i, j) == 0) continue;
                BigInt mag = abs(a.at(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        }
        return found;
    }
};

} // namespace

IntSnf snf_integers(const IntMatrix& m) {
    Workspace w(m);
    const std::size_t r = m.rows(), c = m.cols();
    const std::size_t steps = std::min(r, c);

    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pi = k, pj = k;
        if (!w.find_pivot(k, pi, pj)) break; // rest of the matrix is zero
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        for (;;) {
            // reduce the pivot column, then the pivot row; if any remainder
            // survives it is strictly smaller, so re-pivot and repeat
            bool dirty = false;
            for (std::size_t i = k + 1; i < r; ++i) {
                if (w.a.at(i, k) == 0) continue;
                BigInt q = w.a.at(i, k) / w.a.at(k, k);
                w.add_row(i, k, -q);
                if (w.a.at(i, k) != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < c; ++j) {
                if (w.a.at(k, j) == 0) continue;
                BigInt q = w.a.at(k, j) / w.a.at(k, k);
                w.add_col(j, k, -q);
                if (w.a.at(k, j) != 0) dirty = true;
            }
            if (dirty) {
                std::size_t qi = k, qj = k;
                w.find_pivot(k, qi, qj);
                w.swap_rows(k, qi);
                w.swap_cols(k, qj);
                continue;
            }
            // pivot divides everything in its row/col; enforce divisibility
            // of the remaining submatrix by folding a bad row into row k
            std::size_t bi = 0, bj = 0;
            bool bad = false;
            for (std::size_t i = k + 1; i < r && !bad; ++i) {
                for (std::size_t j = k + 1; j < c && !bad; ++j) {
                    if (w.a.at(i, j) % w.a.at(k, k) != 0) {
                        bad = true;
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (!bad) break;
            (void)bj;
            w.add_row(k, bi, 1);
        }
        if (w.a.at(k, k) < 0) w.negate_row(k);
    }

    std::vector<BigInt> diagonal(steps);
    for (std::size_t k = 0; k < steps; ++k) diagonal[k] = w.a.at(k, k);
    return IntSnf{std::move(diagonal), std::move(w.left), std::move(w.right)};
}

} // namespace spinor
