#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spinor/blocks.hpp"
#include "spinor/dvr_matrix.hpp"
#include "spinor/gamma.hpp"

namespace spinor {

/// A maximal order in M_n(k) given by a lattice basis U: the order is
/// U M_n(Z_(p)) U^{-1}, its elements the x with U^{-1} x U integral.
class MatrixOrder {
public:
    explicit MatrixOrder(DvrMatrix basis);
    /// The apartment order with diagonal basis diag(p^{a_i}); the vector is
    /// shifted to minimum 0 first (homothety leaves the order unchanged).
    static MatrixOrder from_apartment(std::span<const std::int64_t> a, std::int64_t p);

    const DvrMatrix& basis() const noexcept { return basis_; }
    std::size_t size() const noexcept { return basis_.rows(); }
    std::int64_t prime() const noexcept { return basis_.prime(); }

    /// Membership of x / p^denominator_shift, deciding integrality of
    /// U^{-1} x U entry by entry via the adjugate.
    bool contains(const DvrMatrix& x, std::int64_t denominator_shift = 0) const;

private:
    DvrMatrix basis_;
    DvrMatrix adjugate_;
    std::int64_t det_valuation_;
};

bool order_contains(const MatrixOrder& order, const DvrMatrix& x);

/// Intersection of the two apartment orders with exponent vectors a and a2:
/// a membership predicate plus a module generating set.
class GeoOrder {
public:
    GeoOrder(std::vector<std::int64_t> a, std::vector<std::int64_t> a2, std::int64_t p);
    static GeoOrder from_type(const GeoType& t, std::int64_t p);

    std::size_t size() const noexcept { return a_.size(); }
    std::int64_t prime() const noexcept { return p_; }

    /// Required valuation of entry (i, j): the larger of the two profiles.
    std::int64_t profile(std::size_t i, std::size_t j) const;

    bool contains(const DvrMatrix& x, std::int64_t denominator_shift = 0) const;

    /// Generators p^{profile(i,j)} E_{i,j} as (integral matrix, shift) pairs
    /// representing matrix / p^shift.
    std::vector<std::pair<DvrMatrix, std::int64_t>> generators() const;

private:
    std::vector<std::int64_t> a_;
    std::vector<std::int64_t> a2_;
    std::int64_t p_;
    MatrixOrder first_;
    MatrixOrder second_;
};

/// Bracket vectors with each coordinate in [-margin, b_i + margin].
std::vector<GammaClass> default_search_box(const GeoType& t, std::int64_t margin = 1);

/// All candidates from the box whose apartment order contains every
/// generator of the GEO, sorted.
std::vector<GammaClass> maximal_orders_containing(const GeoOrder& geo,
                                                  const std::vector<GammaClass>& search_box);

/// Invariant exponents of the diagonal lattice pair p^{a}, p^{a2}, computed
/// through the exact SNF and normalized to minimum 0 (the type-distance lift).
std::vector<std::int64_t> oracle_invariant_exponents(std::span<const std::int64_t> a,
                                                     std::span<const std::int64_t> a2,
                                                     std::int64_t p);

/// Cross-check report between the brute-force enumeration and the grid
/// description of blocks, plus the exponent comparison against gamma.
struct OracleReport {
    struct Mismatch {
        std::string check;          // "block" or "exponents"
        std::vector<std::int64_t> b;
        std::int64_t p = 0;
        std::string detail;
    };
    std::uint64_t checks = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

OracleReport cross_check_geo(const GeoType& t, std::int64_t p);
OracleReport cross_check_sweep(std::span<const int> ranks, std::int64_t max_entry,
                               std::span<const std::int64_t> primes);

} // namespace spinor
