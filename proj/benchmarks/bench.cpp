#include <benchmark/benchmark.h>

#include <random>

#include "cayley/grid.hpp"
#include "cayley/spin7.hpp"
#include "cayley/topology.hpp"

using namespace cayley;

namespace {

Form random_form(std::mt19937_64& g, int dim, int deg) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  Form f(dim, deg);
  for (Mask m = 0; m < (Mask(1) << dim); ++m)
    if (popcount(m) == deg) f.add(m, Scalar(num(g), den(g)));
  return f;
}

void BM_wedge33(benchmark::State& state) {
  std::mt19937_64 g(1);
  Form a = random_form(g, 6, 3), b = random_form(g, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_wedge33);

void BM_hodge_star(benchmark::State& state) {
  std::mt19937_64 g(2);
  auto s = su3::standard_su3();
  Form a = random_form(g, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(s.star(a));
}
BENCHMARK(BM_hodge_star);

void BM_hitchin_dual(benchmark::State& state) {
  std::mt19937_64 g(3);
  Form psi = su3::standard_re_omega();
  for (auto _ : state) benchmark::DoNotOptimize(su3::hitchin_dual(psi));
}
BENCHMARK(BM_hitchin_dual);

void BM_assemble_recover(benchmark::State& state) {
  auto d = spin7::standard_spin7();
  Vec X(8, Scalar(0)), Y(8, Scalar(0));
  X[6] = Scalar(1);
  Y[7] = Scalar(1);
  Form phi = spin7::assemble_phi(d);
  for (auto _ : state)
    benchmark::DoNotOptimize(spin7::recover_data(phi, X, Y));
}
BENCHMARK(BM_assemble_recover);

void BM_fd_d(benchmark::State& state) {
  grid::GridChart c{6, int(state.range(0)), 1.0, {1, 2, 3}};
  grid::GridField f =
      grid::make_field(c, 1, [](const std::array<double, 8>& x, Mask m) {
        return std::sin(6.28 * x[0] + double(m));
      });
  for (auto _ : state) benchmark::DoNotOptimize(grid::fd_d(f));
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(f.npoints()));
}
BENCHMARK(BM_fd_d)->Arg(16)->Arg(32);

void BM_chern_scan(benchmark::State& state) {
  topo::IntersectionLattice L;
  L.rank = 4;
  L.Q.assign(4, std::vector<mpq_class>(4, 0));
  L.Q[0][0] = 1;
  for (int i = 1; i < 4; ++i) L.Q[std::size_t(i)][std::size_t(i)] = -1;
  for (auto _ : state)
    benchmark::DoNotOptimize(topo::chern_scan(L, {3, 1, 1, 1}));
}
BENCHMARK(BM_chern_scan);

}  // namespace

BENCHMARK_MAIN();
