#include <doctest.h>

#include "spinor/dvr_matrix.hpp"
#include "spinor/int_snf.hpp"
#include "spinor/localized_rational.hpp"
#include "support.hpp"

using namespace spinor;
using testsupport::Rng;

namespace {

DvrMatrix from_ints(std::int64_t p, std::vector<std::vector<std::int64_t>> rows) {
    DvrMatrix m(rows.size(), rows[0].size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.set(i, j, LocalizedRational::integer(rows[i][j], p));
    return m;
}

bool is_unimodular(const DvrMatrix& m) {
    const auto det = m.determinant();
    return !det.is_zero() && det.valuation().value() == 0;
}

std::int64_t exponent_sum(const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (auto e : v) s += e;
    return s;
}

} // namespace

TEST_CASE("valuation of localized rationals") {
    CHECK(LocalizedRational::integer(12, 2).valuation().value() == 2);
    CHECK(LocalizedRational::integer(12, 3).valuation().value() == 1);
    CHECK(LocalizedRational(12, 5, 2).valuation().value() == 2);
    CHECK(LocalizedRational::zero(7).valuation().is_infinite());
    CHECK(Valuation::infinite() > Valuation::finite(1'000'000));

    // 5/3 does not lie in Z_(3)
    CHECK_THROWS_AS(LocalizedRational(5, 3, 3), NonUnitDenominator);
    // but it does lie in Z_(5)
    CHECK(LocalizedRational(5, 3, 5).valuation().value() == 1);
    CHECK_THROWS_AS(LocalizedRational(1, 1, 4), Error); // 4 is not prime
}

TEST_CASE("localized rational arithmetic") {
    const auto a = LocalizedRational(3, 5, 2);
    const auto b = LocalizedRational(1, 3, 2);
    CHECK(a + b == LocalizedRational(14, 15, 2));
    CHECK(a - b == LocalizedRational(4, 15, 2));
    CHECK(a * b == LocalizedRational(1, 5, 2));
    CHECK(a / b == LocalizedRational(9, 5, 2));
    CHECK((a / a) == LocalizedRational::one(2));

    const auto p2 = LocalizedRational::p_power(2, 3);
    CHECK(p2 == LocalizedRational::integer(8, 2));
    CHECK((p2 / LocalizedRational::integer(2, 2)).valuation().value() == 2);
    // dividing out more p's than we have leaves the localization
    CHECK_THROWS_AS(LocalizedRational::one(2) / LocalizedRational::integer(2, 2),
                    NonUnitDenominator);
    CHECK_THROWS_AS(a + LocalizedRational::one(3), PrimeMismatch);

    CHECK(LocalizedRational::parse("-6/4", 3) == LocalizedRational(-3, 2, 3));
    CHECK(LocalizedRational::parse("7", 3) == LocalizedRational::integer(7, 3));
    CHECK_THROWS_AS(LocalizedRational::parse("x/2", 3), ParseError);
    CHECK(LocalizedRational(-3, 2, 3).to_fraction_string() == "-3/2");
}

TEST_CASE("integer smith normal form on worked examples") {
    auto check = [](std::vector<std::vector<std::int64_t>> rows, std::vector<std::int64_t> want) {
        std::vector<std::vector<BigInt>> big;
        for (auto& r : rows) big.emplace_back(r.begin(), r.end());
        const IntMatrix m = IntMatrix::from_rows(big);
        const IntSnf snf = snf_integers(m);
        REQUIRE(snf.diagonal.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(snf.diagonal[i] == want[i]);
        // transforms really diagonalize
        const IntMatrix lhs = snf.left * m * snf.right;
        for (std::size_t i = 0; i < lhs.rows(); ++i)
            for (std::size_t j = 0; j < lhs.cols(); ++j)
                CHECK(lhs.at(i, j) == (i == j && i < want.size() ? snf.diagonal[i] : BigInt(0)));
    };
    check({{2, 0}, {0, 3}}, {1, 6});
    check({{1, 0}, {0, 1}}, {1, 1});
    check({{2, 4}, {6, 8}}, {2, 4}); // determinantal divisors: D1=2, D2=8
    check({{0, 0}, {0, 0}}, {0, 0});
    check({{6, 10, 15}}, {1});
}

TEST_CASE("integer smith normal form against the determinantal-divisor oracle") {
    Rng rng(20240801);
    for (int trial = 0; trial < 40; ++trial) {
        const auto r = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
        const auto c = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = testsupport::uniform(rng, -20, 20);

        const IntSnf snf = snf_integers(m);
        const auto oracle = testsupport::determinantal_divisors(m);
        REQUIRE(snf.diagonal.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(snf.diagonal[i] == oracle[i]);
        for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
            if (snf.diagonal[i] != 0) CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
        }
        const BigInt dl = testsupport::int_minor_det(
            snf.left, [&] { std::vector<std::size_t> v(snf.left.rows()); std::iota(v.begin(), v.end(), 0); return v; }(),
            [&] { std::vector<std::size_t> v(snf.left.rows()); std::iota(v.begin(), v.end(), 0); return v; }());
        CHECK((dl == 1 || dl == -1));
    }
}

TEST_CASE("dvr smith normal form on worked examples") {
    const std::int64_t p = 2;
    SUBCASE("identity") {
        const auto snf = snf_dvr(DvrMatrix::identity(3, p));
        CHECK(snf.exponents == std::vector<std::int64_t>{0, 0, 0});
    }
    SUBCASE("already diagonal") {
        const std::vector<std::int64_t> exps{0, 1};
        const auto snf = snf_dvr(DvrMatrix::diagonal_p_powers(exps, p));
        CHECK(snf.exponents == std::vector<std::int64_t>{0, 1});
    }
    SUBCASE("triangular with off-diagonal unit") {
        // [[p,1],[0,p]]: least entry valuation 0, determinant valuation 2
        const auto m = from_ints(p, {{2, 1}, {0, 2}});
        const auto snf = snf_dvr(m);
        CHECK(snf.exponents == std::vector<std::int64_t>{0, 2});
        CHECK(snf.exponents == testsupport::dvr_divisor_exponents(m));
    }
    SUBCASE("singular") {
        CHECK_THROWS_AS(snf_dvr(from_ints(p, {{1, 1}, {1, 1}})), SingularMatrix);
        CHECK_THROWS_AS(snf_dvr(DvrMatrix(2, 3, p)), DimensionMismatch);
    }
}

TEST_CASE("dvr smith normal form properties on random matrices") {
    Rng rng(7);
    for (std::int64_t p : {2, 3, 5}) {
        for (int trial = 0; trial < 12; ++trial) {
            const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
            const auto m = testsupport::random_invertible(rng, n, p);
            const auto snf = snf_dvr(m);

            CHECK(std::is_sorted(snf.exponents.begin(), snf.exponents.end()));
            CHECK(snf.exponents == testsupport::dvr_divisor_exponents(m));
            CHECK(is_unimodular(snf.left));
            CHECK(is_unimodular(snf.right));

            const DvrMatrix diag = snf.left * m * snf.right;
            CHECK(diag == DvrMatrix::diagonal_p_powers(snf.exponents, p));

            // idempotence: the diagonal is its own normal form
            CHECK(snf_dvr(diag).exponents == snf.exponents);
        }
    }
}

TEST_CASE("invariant exponents on worked examples") {
    const std::int64_t p = 2;
    const std::vector<std::int64_t> d014{0, 1, 4};
    CHECK(invariant_exponents(DvrMatrix::identity(3, p),
                              DvrMatrix::diagonal_p_powers(d014, p)) ==
          std::vector<std::int64_t>{0, 1, 4});

    Rng rng(99);
    const auto a = testsupport::random_invertible(rng, 3, p);
    CHECK(invariant_exponents(a, a) == std::vector<std::int64_t>{0, 0, 0});

    const auto scaled = a.scaled(LocalizedRational::integer(p, p));
    CHECK(invariant_exponents(a, scaled) == std::vector<std::int64_t>{1, 1, 1});

    // negative exponents appear when the second lattice is the smaller one
    CHECK(invariant_exponents(DvrMatrix::diagonal_p_powers(std::vector<std::int64_t>{0, 1}, p),
                              DvrMatrix::identity(2, p)) ==
          std::vector<std::int64_t>{-1, 0});

    CHECK_THROWS_AS(invariant_exponents(DvrMatrix::identity(2, p), DvrMatrix::identity(3, p)),
                    DimensionMismatch);
    CHECK_THROWS_AS(invariant_exponents(DvrMatrix::identity(2, 2), DvrMatrix::identity(2, 3)),
                    PrimeMismatch);
    CHECK_THROWS_AS(invariant_exponents(from_ints(p, {{1, 1}, {1, 1}}), DvrMatrix::identity(2, p)),
                    SingularMatrix);
}

TEST_CASE("invariant exponent identities on random lattice pairs") {
    Rng rng(123);
    for (std::int64_t p : {2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 2, 4));
            const auto a = testsupport::random_invertible(rng, n, p, 3);
            const auto b = testsupport::random_invertible(rng, n, p, 3);
            const auto c = testsupport::random_invertible(rng, n, p, 3);
            const auto base = invariant_exponents(a, b);

            // common change of basis leaves the exponents unchanged
            const auto g = testsupport::random_invertible(rng, n, p, 2);
            CHECK(invariant_exponents(g * a, g * b) == base);

            // determinant check: the exponent sum is v(det b) - v(det a)
            CHECK(exponent_sum(base) ==
                  b.determinant().valuation().value() - a.determinant().valuation().value());

            // homothety shifts all exponents by one
            auto shifted = base;
            for (auto& e : shifted) e += 1;
            CHECK(invariant_exponents(a, b.scaled(LocalizedRational::integer(p, p))) == shifted);

            // totals are exactly additive along chains
            CHECK(exponent_sum(invariant_exponents(a, b)) +
                      exponent_sum(invariant_exponents(b, c)) ==
                  exponent_sum(invariant_exponents(a, c)));
        }
    }
}
