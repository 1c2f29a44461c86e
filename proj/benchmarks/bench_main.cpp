#include <benchmark/benchmark.h>

#include <random>

#include "spinor/blocks.hpp"
#include "spinor/classfield.hpp"
#include "spinor/dvr_matrix.hpp"
#include "spinor/gamma.hpp"
#include "spinor/lattice_oracle.hpp"

namespace {

using namespace spinor;

DvrMatrix random_invertible(std::mt19937_64& rng, std::size_t n, std::int64_t p) {
    std::uniform_int_distribution<std::int64_t> exp(0, 4);
    std::uniform_int_distribution<std::int64_t> coef(-3, 3);
    std::vector<std::int64_t> exps(n);
    for (auto& e : exps) e = exp(rng);
    auto m = DvrMatrix::diagonal_p_powers(exps, p);
    for (int t = 0; t < 8; ++t) {
        const auto i = static_cast<std::size_t>(rng() % n);
        const auto j = static_cast<std::size_t>(rng() % n);
        if (i == j) continue;
        const auto c = LocalizedRational::integer(coef(rng), p);
        for (std::size_t k = 0; k < n; ++k) m.set(i, k, m.at(i, k) + c * m.at(j, k));
    }
    return m;
}

void BM_SnfDvr(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<DvrMatrix> inputs;
    for (int i = 0; i < 16; ++i) inputs.push_back(random_invertible(rng, n, 3));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(snf_dvr(inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_SnfDvr)->Arg(3)->Arg(4)->Arg(6);

void BM_InvariantExponents(benchmark::State& state) {
    std::mt19937_64 rng(11);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_invertible(rng, n, 2);
    const auto b = random_invertible(rng, n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invariant_exponents(a, b));
    }
}
BENCHMARK(BM_InvariantExponents)->Arg(3)->Arg(5);

void BM_Orbit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::int64_t> b(static_cast<std::size_t>(n - 1));
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<std::int64_t>(i % 3);
    const GammaClass x(n, b);
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbit(x));
    }
}
BENCHMARK(BM_Orbit)->Arg(5)->Arg(6)->Arg(7);

void BM_Placements(benchmark::State& state) {
    const Block host = geo_block(GeoType::from_brackets(3, {6, 4}));
    const GeoType guest = GeoType::from_brackets(3, {3, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(placements(host, guest));
    }
}
BENCHMARK(BM_Placements);

void BM_CommPlacements(benchmark::State& state) {
    const Block host = comm_block(CommAlgebra({{2, 1}, {1, 1}}));
    const GeoType guest = GeoType::from_brackets(3, {1, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(placements(host, guest));
    }
}
BENCHMARK(BM_CommPlacements);

void BM_MaximalOrdersContaining(benchmark::State& state) {
    const auto t = GeoType::from_brackets(3, {2, 1});
    const auto geo = GeoOrder::from_type(t, 2);
    const auto box = default_search_box(t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximal_orders_containing(geo, box));
    }
}
BENCHMARK(BM_MaximalOrdersContaining);

void BM_Sigma(benchmark::State& state) {
    GenusInput input;
    input.degree = 6;
    input.group = AbelianGroup({2, 12});
    PlaceData p1;
    p1.id = "p1";
    p1.frobenius = {1, 3};
    p1.capacity = 3;
    p1.geo_type = GammaClass(3, {2, 2});
    PlaceData p2;
    p2.id = "p2";
    p2.frobenius = {0, 1};
    p2.capacity = 2;
    p2.geo_type = GammaClass(2, {4});
    input.places = {p1, p2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma(input));
    }
}
BENCHMARK(BM_Sigma);

} // namespace

BENCHMARK_MAIN();
