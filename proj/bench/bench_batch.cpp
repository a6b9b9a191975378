// Times the OpenMP batch kernels against their serial references and checks
// that both produce the same results.
//
//   bench_batch [--n 60] [--reps 3] [--seed 1]

#include <omp.h>

#include <chrono>
#include <cstdio>

#include <CLI11.hpp>

#include "greedy/batch.hpp"
#include "greedy/delaunay.hpp"
#include "greedy/harness/generate.hpp"

using namespace greedy;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-20s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, same ? "match" : "MISMATCH");
}

bool same_stats(const batch::BatteryStats& a, const batch::BatteryStats& b) {
  return a.routes == b.routes && a.delivered == b.delivered && a.total_hops == b.total_hops &&
         a.max_hops == b.max_hops && a.failures.size() == b.failures.size();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel vs serial batch kernels"};
  std::size_t n = 60;
  int reps = 3;
  std::uint64_t seed = 1;
  app.add_option("--n", n, "Number of sites");
  app.add_option("--reps", reps, "Repetitions (best time is reported)");
  app.add_option("--seed", seed, "Instance seed");
  CLI11_PARSE(app, argc, argv);

  harness::GeneratorSpec spec;
  spec.n = n;
  spec.seed = seed;
  SiteSet sites = harness::generate(spec);
  GeometricGraph dg = delaunay_graph(sites);
  // Drop one edge so the region kernel has failures to find as well.
  GeometricGraph damaged = dg.without_edge(dg.edges().front().first, dg.edges().front().second);
  Rng rng(seed);
  auto battery = batch::destination_battery(sites, 10, rng);

  std::printf("n=%zu, %zu destinations, %d OpenMP threads\n", n, battery.size(), omp_get_max_threads());

  batch::BatteryStats rs, rp;
  double ts = best_of(reps, [&] { rs = batch::reference::route_battery(damaged, battery); });
  double tp = best_of(reps, [&] { rp = batch::route_battery(damaged, battery); });
  report("route_battery", ts, tp, same_stats(rs, rp));

  std::vector<EqualityVerdict> es, ep;
  ts = best_of(reps, [&] { es = batch::reference::regions_equal_all(damaged); });
  tp = best_of(reps, [&] { ep = batch::regions_equal_all(damaged); });
  bool same = es.size() == ep.size();
  for (std::size_t k = 0; same && k < es.size(); ++k) same = es[k].equal == ep[k].equal && es[k].witness == ep[k].witness;
  report("regions_equal_all", ts, tp, same);

  std::vector<batch::PairClass> os, op;
  ts = best_of(reps, [&] { os = batch::reference::oracle_all_pairs(sites); });
  tp = best_of(reps, [&] { op = batch::oracle_all_pairs(sites); });
  same = os.size() == op.size();
  for (std::size_t k = 0; same && k < os.size(); ++k) same = os[k].i == op[k].i && os[k].j == op[k].j && os[k].edge_class == op[k].edge_class;
  report("oracle_all_pairs", ts, tp, same);
  return 0;
}
