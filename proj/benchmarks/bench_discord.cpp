#include <benchmark/benchmark.h>

#include <random>

#include "xdiscord/discord.hpp"
#include "xdiscord/entropy.hpp"
#include "xdiscord/models.hpp"
#include "xdiscord/scan.hpp"

namespace {

using namespace xdiscord;

RealXState random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double p[4] = {unif(rng), unif(rng), unif(rng), unif(rng)};
  const double sum = p[0] + p[1] + p[2] + p[3];
  for (double& x : p) x /= sum;
  RealXState s{p[0], p[1], p[2], p[3], 0.0, 0.0};
  s.u = unif(rng) * std::sqrt(s.a * s.d);
  s.v = unif(rng) * std::sqrt(s.b * s.c);
  return s;
}

void BM_cond_entropy(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const RealXState s = random_state(rng);
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cond_entropy(s, theta));
    theta += 1e-9;
  }
}
BENCHMARK(BM_cond_entropy);

void BM_cond_entropy_oracle(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const RealXState s = random_state(rng);
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cond_entropy_oracle(s, theta, 0.0));
    theta += 1e-9;
  }
}
BENCHMARK(BM_cond_entropy_oracle);

void BM_discord_random(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const RealXState s = random_state(rng);
  for (auto _ : state) benchmark::DoNotOptimize(discord(s));
}
BENCHMARK(BM_discord_random);

void BM_discord_horodecki_qtheta(benchmark::State& state) {
  const RealXState s = horodecki(0.228, 0.1014);
  for (auto _ : state) benchmark::DoNotOptimize(discord(s));
}
BENCHMARK(BM_discord_horodecki_qtheta);

void BM_xyz_thermal(benchmark::State& state) {
  const XYZParams p{1.0, 1.0, 1.02, 1.0, 1.0, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(xyz_thermal(p));
}
BENCHMARK(BM_xyz_thermal);

void BM_volume_hypercube(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        estimate_volume(SampleSpace::Hypercube5, state.range(0), 1, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_volume_hypercube)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
