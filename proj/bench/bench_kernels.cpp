// Serial reference versus OpenMP implementation for the parallel kernels.
// Argument 0 selects Exec::Serial, 1 selects Exec::Parallel.

#include <benchmark/benchmark.h>

#include <vector>

#include "multdec/code.hpp"
#include "multdec/decoder.hpp"
#include "multdec/polyring_linalg.hpp"
#include "multdec/pruning.hpp"
#include "multdec/rng.hpp"
#include "multdec/wronskian.hpp"

using namespace multdec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

Polynomial random_poly(Rng& rng, const PrimeField& F, Block block, std::size_t k, unsigned deg) {
    std::vector<Term> terms;
    for (const auto& e : exponents_up_to(block == Block::XZ ? 2 * k : k, deg))
        terms.push_back({e, static_cast<std::uint32_t>(rng.below(F.p()))});
    return Polynomial::from_terms(F, block, k, std::move(terms));
}

std::vector<std::uint32_t> range_set(std::uint32_t n) {
    std::vector<std::uint32_t> S(n);
    for (std::uint32_t i = 0; i < n; ++i) S[i] = i;
    return S;
}

void BM_encode(benchmark::State& state) {
    const CodeParams P(Grid(PrimeField(10007), range_set(30), 2), 4, 20);
    Rng rng(1);
    const auto f = random_poly(rng, P.field(), Block::X, 2, 20);
    for (auto _ : state) benchmark::DoNotOptimize(encode(f, P, exec_of(state)));
}

void BM_max_rank_evaluation(benchmark::State& state) {
    const PrimeField F(101);
    Rng rng(2);
    PolyMatrix A(F, 2, 5, 7);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 7; ++j) A.at(i, j) = random_poly(rng, F, Block::Z, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(max_rank_evaluation(A, exec_of(state)));
}

void BM_subspace_restriction_sum(benchmark::State& state) {
    const PrimeField F(31);
    const Grid G(F, range_set(12), 2);
    Rng rng(3);
    std::vector<Polynomial> basis;
    for (int i = 0; i < 3; ++i) basis.push_back(random_poly(rng, F, Block::X, 2, 6));
    for (auto _ : state) benchmark::DoNotOptimize(subspace_restriction_sum(basis, G, 5, exec_of(state)));
}

void BM_exhaustive_oracle(benchmark::State& state) {
    const CodeParams P(Grid(PrimeField(53), {0, 1}, 2), 6, 1);
    Rng rng(4);
    const auto w = corrupt(encode(random_poly(rng, P.field(), Block::X, 2, 1), P), Rational(1, 4), 5);
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_codeword_oracle(w, Rational(3, 4), exec_of(state)));
}

void BM_interpolate(benchmark::State& state) {
    const CodeParams P(Grid(PrimeField(17), range_set(14), 1), 11, 1);
    Rng rng(6);
    const auto w = corrupt(encode(random_poly(rng, P.field(), Block::X, 1, 1), P), Rational(1, 7), 7);
    const auto dp = choose_params(P, 9);
    for (auto _ : state) benchmark::DoNotOptimize(interpolate(w, dp, exec_of(state)));
}

void BM_prune(benchmark::State& state) {
    const CodeParams P(Grid(PrimeField(17), range_set(14), 1), 11, 1);
    Rng rng(8);
    const auto f = random_poly(rng, P.field(), Block::X, 1, 1);
    const auto w = corrupt(encode(f, P), Rational(1, 7), 9);
    const auto W = solve_equation_subspace(interpolate(w, choose_params(P, 9)), P.d());
    const PruneConfig cfg{3, 2000, 10, Rational(6, 7)};
    for (auto _ : state) benchmark::DoNotOptimize(prune(w, W, cfg, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_encode)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_max_rank_evaluation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subspace_restriction_sum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exhaustive_oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_interpolate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_prune)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
