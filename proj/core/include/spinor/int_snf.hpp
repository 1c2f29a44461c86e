#pragma once

#include <cstddef>
#include <vector>

#include "spinor/bigint.hpp"

namespace spinor {

/// Dense rectangular matrix over Z, row-major.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<std::vector<BigInt>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const BigInt& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    BigInt& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> entries_;
};

/// Smith normal form over Z: left * M * right is diagonal with
/// d_1 | d_2 | ... and d_i >= 0; the transforms are unimodular.
struct IntSnf {
    std::vector<BigInt> diagonal; // length min(rows, cols)
    IntMatrix left;
    IntMatrix right;
};

IntSnf snf_integers(const IntMatrix& m);

} // namespace spinor
