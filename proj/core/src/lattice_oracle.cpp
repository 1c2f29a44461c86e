#include "spinor/lattice_oracle.hpp"

#include <algorithm>
#include <sstream>

namespace spinor {

MatrixOrder::MatrixOrder(DvrMatrix basis)
    : basis_(std::move(basis)), adjugate_(basis_.adjugate()), det_valuation_(0) {
    if (!basis_.is_square()) throw DimensionMismatch("order basis must be square");
    const LocalizedRational det = basis_.determinant();
    if (det.is_zero()) throw SingularMatrix("order basis is singular");
    det_valuation_ = det.valuation().value();
}

MatrixOrder MatrixOrder::from_apartment(std::span<const std::int64_t> a, std::int64_t p) {
    if (a.empty()) throw DimensionMismatch("empty exponent vector");
    const std::int64_t min = *std::min_element(a.begin(), a.end());
    std::vector<std::int64_t> shifted(a.begin(), a.end());
    for (auto& v : shifted) v -= min;
    return MatrixOrder(DvrMatrix::diagonal_p_powers(shifted, p));
}

bool MatrixOrder::contains(const DvrMatrix& x, std::int64_t denominator_shift) const {
    if (x.prime() != prime()) throw PrimeMismatch("element localized at a different prime");
    if (!x.is_square() || x.rows() != size()) {
        throw DimensionMismatch("element size does not match the order");
    }
    // U^{-1} (x / p^s) U = adj(U) x U / (det(U) p^s); unit parts of det do not matter
    const DvrMatrix y = adjugate_ * x * basis_;
    const Valuation required = Valuation::finite(det_valuation_ + denominator_shift);
    for (std::size_t i = 0; i < y.rows(); ++i) {
        for (std::size_t j = 0; j < y.cols(); ++j) {
            if (y.at(i, j).valuation() < required) return false;
        }
    }
    return true;
}

bool order_contains(const MatrixOrder& order, const DvrMatrix& x) { return order.contains(x); }

GeoOrder::GeoOrder(std::vector<std::int64_t> a, std::vector<std::int64_t> a2, std::int64_t p)
    : a_(std::move(a)), a2_(std::move(a2)), p_(p),
      first_(MatrixOrder::from_apartment(a_, p)),
      second_(MatrixOrder::from_apartment(a2_, p)) {
    if (a_.size() != a2_.size()) {
        throw DimensionMismatch("exponent vectors of different length");
    }
}

GeoOrder GeoOrder::from_type(const GeoType& t, std::int64_t p) {
    std::vector<std::int64_t> zero(static_cast<std::size_t>(t.rank()), 0);
    return GeoOrder(std::move(zero), t.type().lift(), p);
}

std::int64_t GeoOrder::profile(std::size_t i, std::size_t j) const {
    return std::max(a_[i] - a_[j], a2_[i] - a2_[j]);
}

bool GeoOrder::contains(const DvrMatrix& x, std::int64_t denominator_shift) const {
    return first_.contains(x, denominator_shift) && second_.contains(x, denominator_shift);
}

std::vector<std::pair<DvrMatrix, std::int64_t>> GeoOrder::generators() const {
    const std::size_t n = a_.size();
    std::vector<std::pair<DvrMatrix, std::int64_t>> gens;
    gens.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t m = profile(i, j);
            const std::int64_t shift = m < 0 ? -m : 0;
            const auto scale = LocalizedRational::p_power(p_, m + shift);
            gens.emplace_back(DvrMatrix::scaled_unit(n, i, j, scale), shift);
        }
    }
    return gens;
}

std::vector<GammaClass> default_search_box(const GeoType& t, std::int64_t margin) {
    const auto& b = t.type().brackets();
    std::vector<GammaClass> box;
    std::vector<std::int64_t> c(b.size());
    for (auto& v : c) v = -margin;
    for (;;) {
        box.emplace_back(t.rank(), c);
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(c.size()) - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)] + margin) {
            c[static_cast<std::size_t>(i)] = -margin;
            --i;
        }
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
    }
    return box;
}

std::vector<GammaClass> maximal_orders_containing(const GeoOrder& geo,
                                                  const std::vector<GammaClass>& search_box) {
    const auto gens = geo.generators();
    std::vector<GammaClass> hits;
    for (const auto& candidate : search_box) {
        if (static_cast<std::size_t>(candidate.rank()) != geo.size()) {
            throw SizeMismatch("candidate rank does not match the order");
        }
        const MatrixOrder order = MatrixOrder::from_apartment(candidate.lift(), geo.prime());
        bool all = true;
        for (const auto& [matrix, shift] : gens) {
            if (!order.contains(matrix, shift)) {
                all = false;
                break;
            }
        }
        if (all) hits.push_back(candidate);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<std::int64_t> oracle_invariant_exponents(std::span<const std::int64_t> a,
                                                     std::span<const std::int64_t> a2,
                                                     std::int64_t p) {
    if (a.size() != a2.size()) throw DimensionMismatch("exponent vectors of different length");
    const std::int64_t min_a = *std::min_element(a.begin(), a.end());
    const std::int64_t min_a2 = *std::min_element(a2.begin(), a2.end());
    std::vector<std::int64_t> sa(a.begin(), a.end());
    std::vector<std::int64_t> sa2(a2.begin(), a2.end());
    for (auto& v : sa) v -= min_a;
    for (auto& v : sa2) v -= min_a2;
    auto exps = invariant_exponents(DvrMatrix::diagonal_p_powers(sa, p),
                                    DvrMatrix::diagonal_p_powers(sa2, p));
    const std::int64_t min = *std::min_element(exps.begin(), exps.end());
    for (auto& e : exps) e -= min;
    return exps;
}

namespace {

std::string join_brackets(const std::vector<GammaClass>& classes) {
    std::ostringstream os;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        os << classes[i] << (i + 1 < classes.size() ? " " : "");
    }
    return os.str();
}

} // namespace

OracleReport cross_check_geo(const GeoType& t, std::int64_t p) {
    OracleReport report;
    const GeoOrder geo = GeoOrder::from_type(t, p);

    const auto brute = maximal_orders_containing(geo, default_search_box(t));
    const auto grid = geo_block(t).vertices();
    ++report.checks;
    if (brute != grid) {
        report.mismatches.push_back({"block", t.type().brackets(), p,
                                     "oracle {" + join_brackets(brute) + "} vs grid {" +
                                         join_brackets(grid) + "}"});
    }

    // exponents of (0, [b]) against the type-distance lift
    const std::vector<std::int64_t> zero(static_cast<std::size_t>(t.rank()), 0);
    const auto oracle_exps = oracle_invariant_exponents(zero, t.type().lift(), p);
    const auto expected = type_distance(GammaClass::from_lift(zero), t.type()).exponents;
    ++report.checks;
    if (oracle_exps != expected) {
        std::ostringstream os;
        os << "oracle exponents vs type distance differ";
        report.mismatches.push_back({"exponents", t.type().brackets(), p, os.str()});
    }
    return report;
}

OracleReport cross_check_sweep(std::span<const int> ranks, std::int64_t max_entry,
                               std::span<const std::int64_t> primes) {
    OracleReport report;
    for (int n : ranks) {
        std::vector<std::int64_t> b(static_cast<std::size_t>(n - 1), 0);
        for (;;) {
            const GeoType t = GeoType::from_brackets(n, b);
            for (std::int64_t p : primes) {
                OracleReport one = cross_check_geo(t, p);
                report.checks += one.checks;
                for (auto& m : one.mismatches) report.mismatches.push_back(std::move(m));
            }
            std::ptrdiff_t i = static_cast<std::ptrdiff_t>(b.size()) - 1;
            while (i >= 0 && b[static_cast<std::size_t>(i)] == max_entry) {
                b[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++b[static_cast<std::size_t>(i)];
        }
    }
    return report;
}

} // namespace spinor
