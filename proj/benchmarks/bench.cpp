#include <benchmark/benchmark.h>

#include <random>

#include "autfn/audit.hpp"
#include "autfn/equivariant.hpp"
#include "autfn/matrix.hpp"
#include "autfn/shapes.hpp"
#include "autfn/word.hpp"

using namespace autfn;

namespace {

std::vector<Word> random_words(int count, int rank, int len) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> idx(1, rank);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Word> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Letter> letters;
        for (int j = 0; j < len; ++j) letters.emplace_back(idx(rng), sign(rng) ? 1 : -1);
        out.emplace_back(rank, std::move(letters));
    }
    return out;
}

void BM_ReduceConcat(benchmark::State& state) {
    auto words = random_words(64, 6, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce_concat(words[i % 64], words[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(BM_ReduceConcat);

void BM_ApplyRotation(benchmark::State& state) {
    auto words = random_words(64, 6, 64);
    Automorphism r = rotation(1, 6);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(r.apply(words[i % 64]));
        ++i;
    }
}
BENCHMARK(BM_ApplyRotation);

void BM_ClosureSignedPermutations(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto gens = signed_permutation_generators(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure(gens, 50'000));
    }
}
BENCHMARK(BM_ClosureSignedPermutations)->Arg(3)->Arg(4)->Arg(5);

void BM_TorsionAudit(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit_torsion(n));
    }
}
BENCHMARK(BM_TorsionAudit)->Arg(3)->Arg(4);

void BM_Determinant(benchmark::State& state) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> entry(-3, 3);
    int n = static_cast<int>(state.range(0));
    IntegerMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(det(m));
    }
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8)->Arg(12);

void BM_BarycentricSubdivision(benchmark::State& state) {
    Complex oct = octahedron();
    for (auto _ : state) {
        benchmark::DoNotOptimize(barycentric_subdivision(oct));
    }
}
BENCHMARK(BM_BarycentricSubdivision);

void BM_StrataOctahedron(benchmark::State& state) {
    EquivariantComplex e = subdivide(make_equivariant(
        octahedron(), {octahedron_reflection(0), octahedron_reflection(1)}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(strata_chi(e, 2));
    }
}
BENCHMARK(BM_StrataOctahedron);

}  // namespace

BENCHMARK_MAIN();
