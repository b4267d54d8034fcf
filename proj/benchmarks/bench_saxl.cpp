#include <benchmark/benchmark.h>

#include <map>

#include "saxl/catalog.hpp"
#include "saxl/constructions.hpp"
#include "saxl/delta_engine.hpp"
#include "saxl/group_file.hpp"
#include "saxl/subgroup_lattice.hpp"
#include "saxl/suborbits.hpp"

using namespace saxl;

namespace {

const GroupAction &cached(const std::string &name) {
  static std::map<std::string, GroupAction> built;
  auto it = built.find(name);
  if (it == built.end())
    it = built.emplace(name, find_entry(name)->build(kDefaultLabelCap)).first;
  return it->second;
}

void BM_SchreierSimsM23(benchmark::State &state) {
  const GroupFile f = read_group_file(data_dir() / "groups" / "m23_23colon11.json");
  for (auto _ : state) {
    PermGroup G(f.generators);
    benchmark::DoNotOptimize(G.order());
  }
}
BENCHMARK(BM_SchreierSimsM23)->Unit(benchmark::kMillisecond);

void BM_SchreierSimsPGL3(benchmark::State &state) {
  const GroupAction &a = cached("pgl3_7");
  for (auto _ : state) {
    PermGroup G(a.G.generators());
    benchmark::DoNotOptimize(G.order());
  }
}
BENCHMARK(BM_SchreierSimsPGL3)->Unit(benchmark::kMillisecond);

void BM_SingerOrbit(benchmark::State &state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    GroupAction a = build_singer_normalizer_action(3, q, LrVariant::kFull);
    benchmark::DoNotOptimize(a.space.size());
  }
}
BENCHMARK(BM_SingerOrbit)->Arg(3)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SuborbitsBruteforce(benchmark::State &state, const char *name) {
  const GroupAction &a = cached(name);
  for (auto _ : state)
    benchmark::DoNotOptimize(suborbits_bruteforce(a.space, a.G, a.H, a.name).valency);
}
BENCHMARK_CAPTURE(BM_SuborbitsBruteforce, a9_asl23, "a9_asl23")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SuborbitsBruteforce, pgl3_7, "pgl3_7")->Unit(benchmark::kMillisecond);

void BM_SubgroupLattice(benchmark::State &state, const char *name) {
  const GroupAction &a = cached(name);
  for (auto _ : state) {
    SubgroupClassTable t(a.H);
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK_CAPTURE(BM_SubgroupLattice, pgl3_7, "pgl3_7")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SubgroupLattice, gl5_2, "gl5_2")->Unit(benchmark::kMillisecond);

void BM_DeltaEngine(benchmark::State &state, const char *name) {
  const GroupAction &a = cached(name);
  for (auto _ : state)
    benchmark::DoNotOptimize(run_delta_engine(a.space, a.G, a.H, a.name).report.valency);
}
BENCHMARK_CAPTURE(BM_DeltaEngine, m10_8colon2, "m10_8colon2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DeltaEngine, pgl3_7, "pgl3_7")->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
