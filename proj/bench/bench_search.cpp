// Wall-clock comparison of the serial and OpenMP search kernels on full
// choosability scans (every assignment is examined, nothing is found).

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kchoose/enumerate.hpp"
#include "kchoose/listcolor.hpp"
#include "kchoose/named_graphs.hpp"

using namespace kchoose;

namespace {

struct Instance {
  std::string graph;
  int list_size;
  int palette;
};

template <typename F>
std::pair<SearchOutcome, double> timed(F&& run, int repeats) {
  SearchOutcome outcome;
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    outcome = run();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return {outcome, best};
}

bool same(const SearchOutcome& a, const SearchOutcome& b) {
  return a.status == b.status && a.found == b.found && a.examined == b.examined;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel exhaustive search"};
  bool smoke = false;
  int repeats = 3;
  int max_jobs = omp_get_max_threads();
  app.add_flag("--smoke", smoke, "One small instance, one repeat");
  app.add_option("--repeats", repeats)->check(CLI::PositiveNumber);
  app.add_option("--max-jobs", max_jobs)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::vector<Instance> instances = {{"cycle:8", 2, 5}, {"theta:2,2,6", 2, 5}, {"kbip:2,6", 2, 3}, {"grid:2,4", 3, 4}};
  if (smoke) {
    instances = {{"cycle:6", 2, 4}};
    repeats = 1;
    max_jobs = std::min(max_jobs, 2);
  }
  std::vector<int> job_counts;
  for (int j = 1; j <= max_jobs; j *= 2) job_counts.push_back(j);

  std::printf("%-14s %5s %10s %10s", "instance", "k", "examined", "serial[s]");
  for (int j : job_counts) std::printf("  %9s", ("par" + std::to_string(j) + "[s]").c_str());
  std::printf("  speedup\n");
  bool consistent = true;
  for (const Instance& inst : instances) {
    const Graph g = build_named(inst.graph);
    const AssignmentEnumerator e(g, SizeFunction::uniform(g, inst.list_size), inst.palette, {});
    const AssignmentPredicate infeasible = [&](std::span<const ColorSet> lists) {
      return !is_feasible(g, ListAssignment{inst.palette, {lists.begin(), lists.end()}});
    };
    const std::uint64_t budget = std::uint64_t{1} << 40;
    const auto [serial, serial_time] = timed([&] { return find_first_serial(e, infeasible, budget); }, repeats);
    std::printf("%-14s %5d %10llu %10.3f", inst.graph.c_str(), inst.palette,
                static_cast<unsigned long long>(serial.examined), serial_time);
    double best = serial_time;
    for (int jobs : job_counts) {
      const auto [par, par_time] = timed([&] { return find_first_parallel(e, infeasible, budget, jobs); }, repeats);
      consistent = consistent && same(serial, par);
      best = std::min(best, par_time);
      std::printf("  %9.3f", par_time);
    }
    std::printf("  %6.2fx\n", serial_time / best);
  }
  std::printf("%s\n", consistent ? "parallel outcomes identical to serial" : "MISMATCH between serial and parallel");
  return consistent ? 0 : 1;
}
