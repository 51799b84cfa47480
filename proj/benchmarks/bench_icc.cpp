#include <benchmark/benchmark.h>

#include <random>

#include "icc/analyzer/analyzer.hpp"
#include "icc/catalog/free_group.hpp"
#include "icc/linalg/hermite.hpp"
#include "icc/linalg/polynomial.hpp"
#include "icc/matgroup/matrix_group.hpp"
#include "icc/oracle/concrete_group.hpp"

using namespace icc;
using linalg::IntMatrix;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t r, int steps) {
  IntMatrix u = IntMatrix::identity(r);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = rng() % r, j = rng() % r;
    if (i == j) continue;
    IntMatrix e = IntMatrix::identity(r);
    e(i, j) = static_cast<int>(rng() % 3) - 1;
    u = e * u;
  }
  return u;
}

}  // namespace

static void BM_Hnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  const IntMatrix a = random_matrix(rng, n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::hnf(a));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_Charpoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(2);
  const IntMatrix a = random_matrix(rng, n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::charpoly(a));
}
BENCHMARK(BM_Charpoly)->Arg(4)->Arg(8)->Arg(16);

static void BM_MatrixOrder(benchmark::State& state) {
  std::mt19937 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix p = random_unimodular(rng, n, 20);
  IntMatrix perm(n, n);
  for (std::size_t i = 0; i < n; ++i) perm((i + 1) % n, i) = 1;
  const IntMatrix m = p * perm * p.inverse_unimodular();
  for (auto _ : state) benchmark::DoNotOptimize(matgroup::matrix_order(m));
}
BENCHMARK(BM_MatrixOrder)->Arg(4)->Arg(8)->Arg(12);

static void BM_FiniteOrbitSublatticeDihedral(benchmark::State& state) {
  const matgroup::MatGroupGens g({IntMatrix{{1, 1}, {0, -1}}, IntMatrix{{1, 0}, {0, -1}}});
  for (auto _ : state) benchmark::DoNotOptimize(matgroup::finite_orbit_sublattice(g));
}
BENCHMARK(BM_FiniteOrbitSublatticeDihedral);

// Block-diagonal group: a finite block (signed permutations) next to a
// hyperbolic block, conjugated into general position.
static void BM_FiniteOrbitSublatticeMixed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(4);
  IntMatrix a = IntMatrix::identity(n), b = IntMatrix::identity(n);
  a(0, 0) = 0, a(0, 1) = -1, a(1, 0) = 1, a(1, 1) = 0;
  b(n - 2, n - 2) = 2, b(n - 2, n - 1) = 1, b(n - 1, n - 2) = 1, b(n - 1, n - 1) = 1;
  const IntMatrix p = random_unimodular(rng, n, 12);
  const IntMatrix pi = p.inverse_unimodular();
  const matgroup::MatGroupGens g({p * a * pi, p * b * pi});
  for (auto _ : state) benchmark::DoNotOptimize(matgroup::finite_orbit_sublattice(g));
}
BENCHMARK(BM_FiniteOrbitSublatticeMixed)->Arg(4)->Arg(6)->Arg(8);

static void BM_NielsenReduce(benchmark::State& state) {
  using catalog::Word;
  // images of a product of transvections, total length grows with the arg
  std::vector<Word> t{Word{1}, Word{2}, Word{3}};
  for (int k = 0; k < state.range(0); ++k) {
    t[k % 3] = t[k % 3] * t[(k + 1) % 3];
  }
  for (auto _ : state) benchmark::DoNotOptimize(catalog::nielsen_reduce(t, 3));
}
BENCHMARK(BM_NielsenReduce)->Arg(6)->Arg(12)->Arg(18);

static void BM_ConjugacyBallSol(benchmark::State& state) {
  const auto spec = analyzer::make_extension(catalog::FgAbelian{2, {}}, catalog::GroupDesc(catalog::FgAbelian{1, {}}), {},
                                             analyzer::MatrixAction{IntMatrix{{2, 1}, {1, 1}}});
  const auto g = oracle::materialize(spec);
  const auto u = g.kernel_element(linalg::make_vector({1, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::conjugacy_ball(g, u, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ConjugacyBallSol)->Arg(2)->Arg(4)->Arg(6);

static void BM_AnalyzeFreeSwap(benchmark::State& state) {
  using catalog::Word;
  const auto spec = analyzer::make_extension(
      catalog::Free{{"a", "b"}}, catalog::GroupDesc(catalog::FiniteGroup{catalog::PermGroup(2, {{1, 0}})}), {},
      analyzer::FreeAction{catalog::FreeAut(2, {Word{2}, Word{1}})});
  for (auto _ : state) benchmark::DoNotOptimize(analyzer::analyze(spec));
}
BENCHMARK(BM_AnalyzeFreeSwap);

BENCHMARK_MAIN();
