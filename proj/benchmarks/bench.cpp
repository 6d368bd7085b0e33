#include <benchmark/benchmark.h>

#include <random>

#include "hullmass/census.hpp"
#include "hullmass/code.hpp"
#include "hullmass/formulas.hpp"

using namespace hullmass;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<unsigned> dist(0, f.order() - 1);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<Elem>(dist(rng)));
    return m;
}

void BM_rref(benchmark::State& state) {
    const Field& f = Field::of_order(4);
    Matrix m = random_matrix(f, 16, 32, 42);
    for (auto _ : state) benchmark::DoNotOptimize(m.rref().rank);
}
BENCHMARK(BM_rref);

void BM_hull_census_4_2_gf4(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = census::hull_census(Inner::hermitian, 2, 4, 2);
        benchmark::DoNotOptimize(rep.total);
    }
}
BENCHMARK(BM_hull_census_4_2_gf4);

void BM_hull_mass_large(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = formulas::hull_mass({Inner::hermitian, 3, 64, 32, 4});
        benchmark::DoNotOptimize(rep.count);
    }
}
BENCHMARK(BM_hull_mass_large);

void BM_group_enumeration_sp4_2(benchmark::State& state) {
    for (auto _ : state) {
        std::size_t count = 0;
        census::for_each_group_element(formulas::GroupKind::symplectic, 2, 2,
                                       [&](const Matrix&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_group_enumeration_sp4_2);

void BM_hull_report(benchmark::State& state) {
    const Field& f = Field::of_order(9);
    Matrix m = random_matrix(f, 3, 8, 7);
    LinearCode c = LinearCode::from_rows(m);
    for (auto _ : state) benchmark::DoNotOptimize(c.hull(Inner::hermitian).hull_dim);
}
BENCHMARK(BM_hull_report);

}  // namespace

BENCHMARK_MAIN();
