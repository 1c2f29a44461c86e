#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "spinor/localized_rational.hpp"

namespace spinor {

/// Dense matrix over Z_(p), all entries sharing one prime.
class DvrMatrix {
public:
    DvrMatrix(std::size_t rows, std::size_t cols, std::int64_t p);

    static DvrMatrix identity(std::size_t n, std::int64_t p);
    /// diag(p^{e_1}, ..., p^{e_n}); exponents must be >= 0.
    static DvrMatrix diagonal_p_powers(std::span<const std::int64_t> exponents, std::int64_t p);
    /// c * E_{i,j} (zero-based indices).
    static DvrMatrix scaled_unit(std::size_t n, std::size_t i, std::size_t j,
                                 const LocalizedRational& c);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::int64_t prime() const noexcept { return p_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const LocalizedRational& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, LocalizedRational value);

    DvrMatrix transpose() const;
    friend DvrMatrix operator*(const DvrMatrix& a, const DvrMatrix& b);
    friend DvrMatrix operator+(const DvrMatrix& a, const DvrMatrix& b);
    DvrMatrix scaled(const LocalizedRational& c) const;

    /// Exact determinant by Laplace expansion (sizes here are small).
    LocalizedRational determinant() const;
    /// adjugate() * M == determinant() * I.
    DvrMatrix adjugate() const;

    friend bool operator==(const DvrMatrix& a, const DvrMatrix& b);

private:
    void check_index(std::size_t i, std::size_t j) const;
    DvrMatrix minor_matrix(std::size_t drop_row, std::size_t drop_col) const;

    std::size_t rows_, cols_;
    std::int64_t p_;
    std::vector<LocalizedRational> entries_;
};

std::ostream& operator<<(std::ostream& os, const DvrMatrix& m);

/// Smith normal form over the discrete valuation ring Z_(p):
/// left * M * right == diag(p^{exponents}), with exponents nondecreasing
/// and both transforms unimodular over Z_(p).
struct DvrSnf {
    std::vector<std::int64_t> exponents;
    DvrMatrix left;
    DvrMatrix right;
};

/// Requires M square and invertible over the fraction field.
/// Throws SingularMatrix otherwise.
DvrSnf snf_dvr(const DvrMatrix& m);

/// Invariant exponents of the lattice pair with basis matrices a and b:
/// the exponents of the Smith normal form of a^{-1} b, sorted nondecreasing.
/// Entries may be negative.
std::vector<std::int64_t> invariant_exponents(const DvrMatrix& a, const DvrMatrix& b);

} // namespace spinor
