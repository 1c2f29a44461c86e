#include "spinor/dvr_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace spinor {

DvrMatrix::DvrMatrix(std::size_t rows, std::size_t cols, std::int64_t p)
    : rows_(rows), cols_(cols), p_(p),
      entries_(rows * cols, LocalizedRational::zero(p)) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionMismatch("matrix dimensions must be positive");
    }
}

DvrMatrix DvrMatrix::identity(std::size_t n, std::int64_t p) {
    DvrMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, LocalizedRational::one(p));
    return m;
}

DvrMatrix DvrMatrix::diagonal_p_powers(std::span<const std::int64_t> exponents, std::int64_t p) {
    DvrMatrix m(exponents.size(), exponents.size(), p);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        m.set(i, i, LocalizedRational::p_power(p, exponents[i]));
    }
    return m;
}

DvrMatrix DvrMatrix::scaled_unit(std::size_t n, std::size_t i, std::size_t j,
                                 const LocalizedRational& c) {
    DvrMatrix m(n, n, c.prime());
    m.set(i, j, c);
    return m;
}

void DvrMatrix::check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw DimensionMismatch("matrix index out of range");
    }
}

const LocalizedRational& DvrMatrix::at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return entries_[i * cols_ + j];
}

void DvrMatrix::set(std::size_t i, std::size_t j, LocalizedRational value) {
    check_index(i, j);
    if (value.prime() != p_) {
        throw PrimeMismatch("entry localized at a different prime");
    }
    entries_[i * cols_ + j] = std::move(value);
}

DvrMatrix DvrMatrix::transpose() const {
    DvrMatrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

DvrMatrix operator*(const DvrMatrix& a, const DvrMatrix& b) {
    if (a.p_ != b.p_) throw PrimeMismatch("matrix product across primes");
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    DvrMatrix c(a.rows_, b.cols_, a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < b.cols_; ++j) {
            LocalizedRational acc = LocalizedRational::zero(a.p_);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                acc = acc + a.at(i, k) * b.at(k, j);
            }
            c.set(i, j, std::move(acc));
        }
    }
    return c;
}

DvrMatrix operator+(const DvrMatrix& a, const DvrMatrix& b) {
    if (a.p_ != b.p_) throw PrimeMismatch("matrix sum across primes");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw DimensionMismatch("matrix sum shape mismatch");
    }
    DvrMatrix c(a.rows_, a.cols_, a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) c.set(i, j, a.at(i, j) + b.at(i, j));
    return c;
}

DvrMatrix DvrMatrix::scaled(const LocalizedRational& c) const {
    DvrMatrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j) * c);
    return r;
}

DvrMatrix DvrMatrix::minor_matrix(std::size_t drop_row, std::size_t drop_col) const {
    DvrMatrix m(rows_ - 1, cols_ - 1, p_);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
        if (i == drop_row) continue;
        for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
            if (j == drop_col) continue;
            m.set(mi, mj, at(i, j));
            ++mj;
        }
        ++mi;
    }
    return m;
}

LocalizedRational DvrMatrix::determinant() const {
    if (!is_square()) throw DimensionMismatch("determinant of non-square matrix");
    if (rows_ == 1) return at(0, 0);
    if (rows_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    LocalizedRational det = LocalizedRational::zero(p_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (at(0, j).is_zero()) continue;
        LocalizedRational term = at(0, j) * minor_matrix(0, j).determinant();
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

DvrMatrix DvrMatrix::adjugate() const {
    if (!is_square()) throw DimensionMismatch("adjugate of non-square matrix");
    const std::size_t n = rows_;
    DvrMatrix adj(n, n, p_);
    if (n == 1) {
        adj.set(0, 0, LocalizedRational::one(p_));
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            LocalizedRational cof = minor_matrix(i, j).determinant();
            if ((i + j) % 2 == 1) cof = -cof;
            adj.set(j, i, std::move(cof)); // transposed cofactor
        }
    }
    return adj;
}

bool operator==(const DvrMatrix& a, const DvrMatrix& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const DvrMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << m.at(i, j) << (j + 1 < m.cols() ? " " : "");
        }
        os << (i + 1 < m.rows() ? "\n" : "]");
    }
    return os;
}

namespace {

struct SnfWorkspace {
    DvrMatrix a, left, right;

    explicit SnfWorkspace(const DvrMatrix& m)
        : a(m),
          left(DvrMatrix::identity(m.rows(), m.prime())),
          right(DvrMatrix::identity(m.cols(), m.prime())) {}

    void swap_rows(std::size_t r, std::size_t s) {
        if (r == s) return;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            auto t = a.at(r, j);
            a.set(r, j, a.at(s, j));
            a.set(s, j, t);
        }
        for (std::size_t j = 0; j < left.cols(); ++j) {
            auto t = left.at(r, j);
            left.set(r, j, left.at(s, j));
            left.set(s, j, t);
        }
    }

    void swap_cols(std::size_t c, std::size_t d) {
        if (c == d) return;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            auto t = a.at(i, c);
            a.set(i, c, a.at(i, d));
            a.set(i, d, t);
        }
        for (std::size_t i = 0; i < right.rows(); ++i) {
            auto t = right.at(i, c);
            right.set(i, c, right.at(i, d));
            right.set(i, d, t);
        }
    }

    // row r -= f * row s
    void add_row(std::size_t r, std::size_t s, const LocalizedRational& f) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            a.set(r, j, a.at(r, j) - f * a.at(s, j));
        }
        for (std::size_t j = 0; j < left.cols(); ++j) {
            left.set(r, j, left.at(r, j) - f * left.at(s, j));
        }
    }

    // col c -= f * col d
    void add_col(std::size_t c, std::size_t d, const LocalizedRational& f) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            a.set(i, c, a.at(i, c) - f * a.at(i, d));
        }
        for (std::size_t i = 0; i < right.rows(); ++i) {
            right.set(i, c, right.at(i, c) - f * right.at(i, d));
        }
    }

    // row r /= u for a unit u
    void scale_row(std::size_t r, const LocalizedRational& u) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            a.set(r, j, a.at(r, j) / u);
        }
        for (std::size_t j = 0; j < left.cols(); ++j) {
            left.set(r, j, left.at(r, j) / u);
        }
    }
};

} // namespace

DvrSnf snf_dvr(const DvrMatrix& m) {
    if (!m.is_square()) {
        throw DimensionMismatch("snf_dvr requires a square matrix");
    }
    const std::size_t n = m.rows();
    SnfWorkspace w(m);
    std::vector<std::int64_t> exponents;
    exponents.reserve(n);

    for (std::size_t k = 0; k < n; ++k) {
        // pivot of minimal valuation, ties broken row-major
        std::size_t pi = k, pj = k;
        Valuation best = Valuation::infinite();
        for (std::size_t i = k; i < n; ++i) {
            for (std::size_t j = k; j < n; ++j) {
                Valuation v = w.a.at(i, j).valuation();
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (best.is_infinite()) {
            throw SingularMatrix("matrix is singular over the fraction field");
        }
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        const LocalizedRational pivot = w.a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w.a.at(i, k).is_zero()) continue;
            w.add_row(i, k, w.a.at(i, k) / pivot);
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (w.a.at(k, j).is_zero()) continue;
            w.add_col(j, k, w.a.at(k, j) / pivot);
        }
        // pivot row now (0,...,0,pivot,0,...,0); make the diagonal entry p^v
        w.scale_row(k, pivot.unit_part());
        exponents.push_back(best.value());
    }
    return DvrSnf{std::move(exponents), std::move(w.left), std::move(w.right)};
}

std::vector<std::int64_t> invariant_exponents(const DvrMatrix& a, const DvrMatrix& b) {
    if (a.prime() != b.prime()) {
        throw PrimeMismatch("lattice bases localized at different primes");
    }
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw DimensionMismatch("lattice bases must be square of equal size");
    }
    const LocalizedRational det_a = a.determinant();
    if (det_a.is_zero()) {
        throw SingularMatrix("first lattice basis is singular");
    }
    // adj(a) * b == det(a) * a^{-1} b, so exponents shift by v_p(det a).
    DvrSnf snf = snf_dvr(a.adjugate() * b);
    const std::int64_t shift = det_a.valuation().value();
    for (auto& e : snf.exponents) e -= shift;
    return std::move(snf.exponents);
}

} // namespace spinor
