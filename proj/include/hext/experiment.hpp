#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hext/digraph.hpp"
#include "hext/subalgebra.hpp"

namespace hext {

enum class FinderStrategy { Closure, ChunkScan };

std::string to_string(FinderStrategy strategy);
FinderStrategy strategy_from_string(const std::string& name);

/// Monte Carlo sweep description. Per-trial seeds are derived from
/// (master_seed, n, trial index), so results are schedule-independent and
/// single trials can be re-run in isolation.
struct ExperimentConfig {
  std::vector<int> n_values;
  double p = 0.5;
  int trials = 1;
  std::uint64_t master_seed = 0;
  FinderStrategy strategy = FinderStrategy::Closure;
  int k = 1;        // chunk-scan target count
  int workers = 1;

  /// Digraph source, (n, p, seed) -> digraph. Defaults to
  /// gen_random_digraph; tests substitute planted instances.
  std::function<Digraph(int, double, std::uint64_t)> generator;
};

struct ReportRow {
  int n = 0;
  double p = 0.0;
  int trials = 0;
  int successes = 0;
  double frequency = 0.0;
  double mean_steps = 0.0;
  double wall_ms = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;        // echo, including seeds
  std::vector<ReportRow> rows;    // sorted by n
};

/// Probability that a fixed 3-set induces a loopless triangle under
/// independent edges: all six cross edges present, all three loops absent.
double loopless_triangle_probability(double p);

/// Companion expression p^6*(1-p^3): all six cross edges present and at
/// least one loop absent. Reported alongside the loopless value so the
/// difference between the two is visible in the data.
double lenient_triangle_probability(double p);

/// Acceptance probability of one fresh chunk when m sets are already used:
/// C(|B|-3m, 3) * p^(3l) * (1-p^l)^(n-3), with |B| = n - floor(n/2).
/// Requires |B| >= 3m + 3.
double per_step_probability(int n, int m, int l, double p);

/// Pre-limit lower bound r*n^3*p^(3l)*(1-p^l)^n with r = (1/2-3k/n)^3/6.
/// Requires n > 6k so that r > 0.
double simplified_bound(int n, int k, int l, double p);

/// Runs `trials` seeded digraphs per n and records how often the
/// configured finder succeeds (closure: a witness is returned; chunk-scan:
/// some accepted set induces a loopless triangle).
ExperimentReport estimate_finder_success(const ExperimentConfig& config);

struct TriangleFrequencyReport {
  double p = 0.0;
  std::int64_t trials = 0;
  std::int64_t hits = 0;
  double frequency = 0.0;
  double analytic = 0.0;  // loopless_triangle_probability(p)
  double lenient = 0.0;   // lenient_triangle_probability(p)
};

/// Samples `trials` independent random digraphs on exactly 3 vertices
/// (9 potential edges including loops) and returns the fraction that
/// induce a loopless triangle.
TriangleFrequencyReport estimate_triangle_frequency(double p,
                                                    std::int64_t trials,
                                                    std::uint64_t seed,
                                                    int workers = 1);

/// CSV with header "n,p,trials,successes,frequency,mean_steps,ms". The ms
/// column is 0 unless include_timing is set, keeping default output a pure
/// function of the config.
void write_report_csv(const ExperimentReport& report, std::ostream& out,
                      bool include_timing = false);

}  // namespace hext
