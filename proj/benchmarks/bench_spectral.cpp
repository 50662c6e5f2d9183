#include <benchmark/benchmark.h>

#include <map>
#include <utility>
#include <vector>

#include "bngap/bn_rep.hpp"
#include "bngap/group_ring.hpp"
#include "bngap/rng.hpp"
#include "bngap/signed_permutation.hpp"
#include "bngap/spectral.hpp"
#include "bngap/witness.hpp"

using namespace bngap;

namespace {

Eigen::MatrixXd random_symmetric(int dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const double x = rng.uniform01() - 0.5;
      m(i, j) = x;
      m(j, i) = x;
    }
  return m;
}

}  // namespace

static void BM_JacobiMinEigen(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const SymmetricMatrix m(random_symmetric(dim, 0x40c0ULL + dim));
  for (auto _ : state) benchmark::DoNotOptimize(min_eigenvalue(m).psi);
}
BENCHMARK(BM_JacobiMinEigen)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

static void BM_PsiFamilyWitness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto w = witness_vnk(n, n / 2).weight_element();
  for (auto _ : state) benchmark::DoNotOptimize(psi_family(w).psi);
}
BENCHMARK(BM_PsiFamilyWitness)->DenseRange(4, 8);

static void BM_WalshHadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(0x3adULL);
  std::vector<double> base(std::size_t{1} << n);
  for (auto& x : base) x = rng.uniform01();
  for (auto _ : state) {
    auto a = base;
    walsh_hadamard_in_place(a);
    benchmark::DoNotOptimize(a.data());
  }
}
BENCHMARK(BM_WalshHadamard)->DenseRange(12, 20, 2);

static void BM_InducedEvaluate(benchmark::State& state) {
  const InducedRep rep(Bipartition{Partition({2, 1}), Partition({2, 1})});
  SplitMix64 rng(0x1cedULL);
  std::vector<int> perm(6);
  for (int i = 0; i < 6; ++i) perm[i] = i;
  for (int i = 5; i > 0; --i)
    std::swap(perm[i], perm[rng.next() % static_cast<std::uint64_t>(i + 1)]);
  std::vector<std::int8_t> signs(6);
  for (int i = 0; i < 6; ++i) signs[i] = (rng.next() & 1) ? 1 : -1;
  const auto g = SignedPermutation::from_parts(perm, signs);
  for (auto _ : state) benchmark::DoNotOptimize(rep.evaluate(g).sum());
}
BENCHMARK(BM_InducedEvaluate);

static void BM_CayleyOracle(benchmark::State& state) {
  SplitMix64 rng(0xfadeULL);
  std::map<std::pair<int, int>, double> tw;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) tw[{i, j}] = rng.uniform01();
  std::map<SubsetMask, double> dw;
  for (std::uint32_t mask = 1; mask < 8; ++mask)
    dw[SubsetMask(3, mask)] = rng.uniform01();
  const auto w = build_weight_element(3, tw, dw);
  for (auto _ : state) benchmark::DoNotOptimize(cayley_oracle_psi(w).psi);
}
BENCHMARK(BM_CayleyOracle);

static void BM_EnumerateGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(n).size());
}
BENCHMARK(BM_EnumerateGroup)->DenseRange(4, 6);

BENCHMARK_MAIN();
