#pragma once

// Shared helpers for the test suites: independent oracles (determinantal
// divisors over Z and over Z_(p)) and seeded random generators.  Everything
// here is deliberately simple and separate from the library algorithms it
// checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "spinor/abelian.hpp"
#include "spinor/dvr_matrix.hpp"
#include "spinor/gamma.hpp"
#include "spinor/int_snf.hpp"
#include "spinor/localized_rational.hpp"

namespace testsupport {

using spinor::BigInt;
using Rng = std::mt19937_64;

// ---- determinantal-divisor oracles ---------------------------------------

inline void all_subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        out.push_back(pick);
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + static_cast<std::size_t>(i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

inline BigInt int_minor_det(const spinor::IntMatrix& m, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    BigInt det = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < k; ++j) {
        if (m.at(rows[0], cols[j]) == 0) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < k; ++t) {
            if (t != j) sub_cols.push_back(cols[t]);
        }
        const BigInt term = m.at(rows[0], cols[j]) * int_minor_det(m, sub_rows, sub_cols);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

/// d_k = D_k / D_{k-1}, where D_k is the gcd of all k-by-k minors.
inline std::vector<BigInt> determinantal_divisors(const spinor::IntMatrix& m) {
    const std::size_t steps = std::min(m.rows(), m.cols());
    std::vector<BigInt> divisors;
    BigInt previous = 1;
    for (std::size_t k = 1; k <= steps; ++k) {
        std::vector<std::vector<std::size_t>> rows, cols;
        all_subsets(m.rows(), k, rows);
        all_subsets(m.cols(), k, cols);
        BigInt g = 0;
        for (const auto& r : rows) {
            for (const auto& c : cols) {
                g = boost::multiprecision::gcd(g, int_minor_det(m, r, c));
                if (g == 1) break;
            }
            if (g == 1) break;
        }
        if (previous == 0) {
            divisors.push_back(0);
            continue;
        }
        divisors.push_back(g == 0 ? BigInt(0) : g / previous);
        previous = g;
    }
    return divisors;
}

inline spinor::LocalizedRational dvr_minor_det(const spinor::DvrMatrix& m,
                                               const std::vector<std::size_t>& rows,
                                               const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    auto det = spinor::LocalizedRational::zero(m.prime());
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < k; ++j) {
        if (m.at(rows[0], cols[j]).is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < k; ++t) {
            if (t != j) sub_cols.push_back(cols[t]);
        }
        const auto term = m.at(rows[0], cols[j]) * dvr_minor_det(m, sub_rows, sub_cols);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// r_k = v(D_k) - v(D_{k-1}) with v(D_k) the least valuation of a k-minor.
inline std::vector<std::int64_t> dvr_divisor_exponents(const spinor::DvrMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::int64_t> exps;
    std::int64_t previous = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> rows, cols;
        all_subsets(n, k, rows);
        all_subsets(n, k, cols);
        auto best = spinor::Valuation::infinite();
        for (const auto& r : rows) {
            for (const auto& c : cols) {
                best = std::min(best, dvr_minor_det(m, r, c).valuation());
            }
        }
        exps.push_back(best.value() - previous);
        previous = best.value();
    }
    return exps;
}

// ---- random generators -----------------------------------------------------

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random unimodular matrix over Z_(p): elementary operations on the identity.
inline spinor::DvrMatrix random_unimodular(Rng& rng, std::size_t n, std::int64_t p, int ops = 6) {
    auto m = spinor::DvrMatrix::identity(n, p);
    for (int t = 0; t < ops; ++t) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
        if (i == j) continue;
        const auto c = spinor::LocalizedRational::integer(uniform(rng, -3, 3), p);
        const bool row = uniform(rng, 0, 1) == 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (row) {
                m.set(i, k, m.at(i, k) + c * m.at(j, k));
            } else {
                m.set(k, i, m.at(k, i) + c * m.at(k, j));
            }
        }
    }
    return m;
}

/// Random invertible matrix over Z_(p) with controlled exponents:
/// unimodular * diag(p^e) * unimodular.
inline spinor::DvrMatrix random_invertible(Rng& rng, std::size_t n, std::int64_t p,
                                           std::int64_t max_exp = 4) {
    std::vector<std::int64_t> exps(n);
    for (auto& e : exps) e = uniform(rng, 0, max_exp);
    const auto d = spinor::DvrMatrix::diagonal_p_powers(exps, p);
    return random_unimodular(rng, n, p) * d * random_unimodular(rng, n, p);
}

inline spinor::GammaClass random_totally_positive(Rng& rng, int n, std::int64_t max_entry) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(n - 1));
    for (auto& v : b) v = uniform(rng, 0, max_entry);
    return spinor::GammaClass(n, std::move(b));
}

inline spinor::GammaClass random_gamma(Rng& rng, int n, std::int64_t max_abs) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(n - 1));
    for (auto& v : b) v = uniform(rng, -max_abs, max_abs);
    return spinor::GammaClass(n, std::move(b));
}

/// Random invariant-factor chain with order at most ~64.
inline spinor::AbelianGroup random_group(Rng& rng) {
    const int k = static_cast<int>(uniform(rng, 0, 2));
    std::vector<std::int64_t> factors;
    std::int64_t d = uniform(rng, 1, 4);
    for (int i = 0; i < k + 1; ++i) {
        factors.push_back(d);
        d *= uniform(rng, 1, 3);
    }
    return spinor::AbelianGroup(std::move(factors));
}

} // namespace testsupport
