#include <benchmark/benchmark.h>

#include <random>

#include "semicore/echelon.hpp"

using namespace semicore;

namespace {

Poly random_poly(const Field& k, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> coeff(-9, 9);
    std::vector<Scalar> cs;
    for (int i = 0; i <= degree; ++i) cs.push_back(k.from_int(coeff(rng)));
    cs.back() = k.one();
    return Poly(k, std::move(cs));
}

Field field_for(int id) { return id == 0 ? Field::rationals() : Field::prime(1000003); }

EchelonSpace half_space(const Field& k, int bound, std::mt19937_64& rng) {
    EchelonSpace space(k, bound);
    for (int d = 0; d <= bound; d += 2) space.insert(random_poly(k, d, rng), Exec::Serial);
    return space;
}

void reduce_batch(benchmark::State& state, Exec exec) {
    const Field k = field_for(static_cast<int>(state.range(0)));
    const int bound = static_cast<int>(state.range(1));
    std::mt19937_64 rng(7);
    const EchelonSpace space = half_space(k, bound, rng);
    std::vector<Poly> batch;
    for (int i = 0; i < 64; ++i) batch.push_back(random_poly(k, bound, rng));
    for (auto _ : state) {
        std::vector<Poly> work = batch;
        if (exec == Exec::Serial) {
            kernels::reduce_batch_serial(space, work);
        } else {
            kernels::reduce_batch_parallel(space, work);
        }
        benchmark::DoNotOptimize(work.data());
    }
}

void eliminate(benchmark::State& state, Exec exec) {
    const Field k = field_for(static_cast<int>(state.range(0)));
    const int bound = static_cast<int>(state.range(1));
    std::mt19937_64 rng(11);
    const Poly pivot = random_poly(k, bound / 2, rng);
    std::vector<Poly> rows;
    for (int i = 0; i < 256; ++i) rows.push_back(random_poly(k, bound, rng));
    for (auto _ : state) {
        std::vector<Poly> work = rows;
        std::vector<Poly*> ptrs;
        for (Poly& p : work) ptrs.push_back(&p);
        if (exec == Exec::Serial) {
            kernels::eliminate_column_serial(ptrs, pivot, bound / 2);
        } else {
            kernels::eliminate_column_parallel(ptrs, pivot, bound / 2);
        }
        benchmark::DoNotOptimize(work.data());
    }
}

}  // namespace

BENCHMARK_CAPTURE(reduce_batch, serial, Exec::Serial)->ArgsProduct({{0, 1}, {64, 256}});
BENCHMARK_CAPTURE(reduce_batch, parallel, Exec::Parallel)->ArgsProduct({{0, 1}, {64, 256}});
BENCHMARK_CAPTURE(eliminate, serial, Exec::Serial)->ArgsProduct({{0, 1}, {64, 256}});
BENCHMARK_CAPTURE(eliminate, parallel, Exec::Parallel)->ArgsProduct({{0, 1}, {64, 256}});

BENCHMARK_MAIN();
