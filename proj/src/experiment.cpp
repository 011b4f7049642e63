#include "hext/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "hext/random.hpp"

namespace hext {

namespace {

using Clock = std::chrono::steady_clock;

void check_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ValidationError("probability must satisfy 0 < p < 1, got " +
                          std::to_string(p));
  }
}

/// fn(i) for every i in [0, count), striped across workers. Callers write
/// results into disjoint per-index slots, so aggregation in index order is
/// identical for any worker count.
template <typename Fn>
void run_indexed(std::int64_t count, int workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([t, count, workers, &fn] {
      for (std::int64_t i = t; i < count; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::string to_string(FinderStrategy strategy) {
  switch (strategy) {
    case FinderStrategy::Closure:
      return "closure";
    case FinderStrategy::ChunkScan:
      return "chunk-scan";
  }
  throw Error("unreachable strategy value");
}

FinderStrategy strategy_from_string(const std::string& name) {
  if (name == "closure") return FinderStrategy::Closure;
  if (name == "chunk-scan") return FinderStrategy::ChunkScan;
  throw ValidationError("unknown strategy '" + name +
                        "' (expected closure or chunk-scan)");
}

double loopless_triangle_probability(double p) {
  check_probability(p);
  return std::pow(p, 6) * std::pow(1.0 - p, 3);
}

double lenient_triangle_probability(double p) {
  check_probability(p);
  return std::pow(p, 6) * (1.0 - std::pow(p, 3));
}

double per_step_probability(int n, int m, int l, double p) {
  check_probability(p);
  if (n < 1 || m < 0 || l < 0) {
    throw ValidationError("per-step probability requires n >= 1, m >= 0, l >= 0");
  }
  const int b = n - n / 2;
  if (b - 3 * m < 3) {
    throw ValidationError("need |B| - 3m >= 3: |B| = " + std::to_string(b) +
                          ", m = " + std::to_string(m));
  }
  const long double x = static_cast<long double>(b - 3 * m);
  const long double choose3 = x * (x - 1) * (x - 2) / 6.0L;
  const long double pl = std::pow(static_cast<long double>(p), l);
  const long double q = choose3 *
                        std::pow(static_cast<long double>(p), 3 * l) *
                        std::pow(1.0L - pl, n - 3);
  return static_cast<double>(q);
}

double simplified_bound(int n, int k, int l, double p) {
  check_probability(p);
  if (k < 0 || l < 0) {
    throw ValidationError("simplified bound requires k >= 0 and l >= 0");
  }
  if (n <= 6 * k) {
    throw ValidationError("r <= 0: need n > 6k, got n = " + std::to_string(n) +
                          ", k = " + std::to_string(k));
  }
  const long double r =
      std::pow(0.5L - 3.0L * k / n, 3) / 6.0L;
  const long double pl = std::pow(static_cast<long double>(p), l);
  const long double value = r * std::pow(static_cast<long double>(n), 3) *
                            std::pow(static_cast<long double>(p), 3 * l) *
                            std::pow(1.0L - pl, n);
  return static_cast<double>(value);
}

ExperimentReport estimate_finder_success(const ExperimentConfig& config) {
  if (config.trials < 1) {
    throw ValidationError("trials must be >= 1, got " +
                          std::to_string(config.trials));
  }
  if (config.workers < 1) {
    throw ValidationError("workers must be >= 1, got " +
                          std::to_string(config.workers));
  }
  if (config.n_values.empty()) {
    throw ValidationError("experiment needs at least one n value");
  }
  for (int n : config.n_values) {
    if (n < 2) {
      throw ValidationError("experiment requires n >= 2, got " +
                            std::to_string(n));
    }
  }
  check_probability(config.p);
  if (config.strategy == FinderStrategy::ChunkScan && config.k < 0) {
    throw ValidationError("chunk-scan requires k >= 0");
  }
  const auto generate = config.generator
                            ? config.generator
                            : [](int n, double p, std::uint64_t seed) {
                                return gen_random_digraph(n, p, seed);
                              };

  struct TrialResult {
    bool success = false;
    std::uint64_t steps = 0;
  };

  ExperimentReport report;
  report.config = config;
  for (int n : config.n_values) {
    std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));
    const auto start = Clock::now();
    run_indexed(config.trials, config.workers, [&](std::int64_t trial) {
      const std::uint64_t seed =
          derive_seed(config.master_seed, static_cast<std::uint64_t>(n),
                      static_cast<std::uint64_t>(trial));
      const Digraph g = generate(n, config.p, seed);
      TrialResult& slot = results[static_cast<std::size_t>(trial)];
      if (config.strategy == FinderStrategy::Closure) {
        ClosureSearch search = closure_find_triangle_subalgebra(g);
        slot.success = search.witness.has_value();
        slot.steps = search.candidates_checked;
      } else {
        ProcedureTrace trace =
            chunk_scan_find(g, config.k, std::nullopt, config.p);
        slot.success = trace.triangle_index.has_value();
        slot.steps = trace.steps.size();
      }
    });
    const double wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start)
            .count();

    ReportRow row;
    row.n = n;
    row.p = config.p;
    row.trials = config.trials;
    std::uint64_t total_steps = 0;
    for (const TrialResult& r : results) {
      row.successes += r.success ? 1 : 0;
      total_steps += r.steps;
    }
    row.frequency = static_cast<double>(row.successes) /
                    static_cast<double>(config.trials);
    row.mean_steps = static_cast<double>(total_steps) /
                     static_cast<double>(config.trials);
    row.wall_ms = wall_ms;
    report.rows.push_back(row);
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const ReportRow& a, const ReportRow& b) { return a.n < b.n; });
  return report;
}

TriangleFrequencyReport estimate_triangle_frequency(double p,
                                                    std::int64_t trials,
                                                    std::uint64_t seed,
                                                    int workers) {
  check_probability(p);
  if (trials < 1) {
    throw ValidationError("trials must be >= 1, got " + std::to_string(trials));
  }
  if (workers < 1) {
    throw ValidationError("workers must be >= 1, got " +
                          std::to_string(workers));
  }
  std::vector<char> hit(static_cast<std::size_t>(trials), 0);
  run_indexed(trials, workers, [&](std::int64_t trial) {
    const Digraph g = gen_random_digraph(
        3, p, derive_seed(seed, 3, static_cast<std::uint64_t>(trial)));
    hit[static_cast<std::size_t>(trial)] =
        is_loopless_triangle(g, std::array<Element, 3>{1, 2, 3}) ? 1 : 0;
  });

  TriangleFrequencyReport report;
  report.p = p;
  report.trials = trials;
  for (char h : hit) report.hits += h;
  report.frequency =
      static_cast<double>(report.hits) / static_cast<double>(trials);
  report.analytic = loopless_triangle_probability(p);
  report.lenient = lenient_triangle_probability(p);
  return report;
}

void write_report_csv(const ExperimentReport& report, std::ostream& out,
                      bool include_timing) {
  out << "n,p,trials,successes,frequency,mean_steps,ms\n";
  char line[256];
  for (const ReportRow& row : report.rows) {
    const long long ms =
        include_timing ? std::llround(row.wall_ms) : 0;
    std::snprintf(line, sizeof(line), "%d,%.6f,%d,%d,%.6f,%.3f,%lld\n", row.n,
                  row.p, row.trials, row.successes, row.frequency,
                  row.mean_steps, ms);
    out << line;
  }
}

}  // namespace hext
