// Command-line front end: generation, solving, subalgebra search, instance
// transformations, and Monte Carlo experiments over one set of JSON/CSV
// formats. Exit codes: 0 = positive answer, 1 = negative answer,
// 2 = usage or format error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hext/digraph.hpp"
#include "hext/experiment.hpp"
#include "hext/io.hpp"
#include "hext/random.hpp"
#include "hext/reductions.hpp"
#include "hext/solver.hpp"
#include "hext/subalgebra.hpp"

namespace {

using namespace hext;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

struct GenOptions {
  int n = 0;
  int arity = 2;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool loopless = false;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  RandomModel model;
  model.n = opt.n;
  model.arity = opt.arity;
  model.p = opt.p;
  model.seed = opt.seed;
  model.loopless = opt.loopless;
  save_structure(opt.out, gen_random_relation(model));
  return 0;
}

struct SolveOptions {
  std::string instance;
  bool brute_force = false;
  std::uint64_t cap = kDefaultBruteForceCap;
};

int run_solve(const SolveOptions& opt) {
  const ExtInstance instance = load_instance(opt.instance);
  const SolveOutcome outcome = opt.brute_force
                                   ? brute_force_ext(instance, opt.cap)
                                   : solve_ext(instance);
  std::cout << outcome_to_json_string(outcome) << "\n";
  return outcome.solvable ? 0 : 1;
}

struct FindOptions {
  std::string graph;
  std::string strategy = "closure";
  int k = 1;
  std::optional<int> l;
  std::optional<double> p;
  std::string out;
};

int run_find(const FindOptions& opt) {
  const Digraph g = Digraph::from_structure(load_structure(opt.graph));
  std::optional<SubalgebraWitness> witness;
  if (strategy_from_string(opt.strategy) == FinderStrategy::Closure) {
    witness = closure_find_triangle_subalgebra(g).witness;
  } else {
    if (!opt.l && !opt.p) {
      throw ValidationError("chunk-scan needs --l or --p");
    }
    witness = chunk_scan_find(g, opt.k, opt.l, opt.p).triangle_witness();
  }
  if (!witness) {
    std::cout << "none\n";
    return 1;
  }
  std::cout << witness_to_json_string(*witness) << "\n";
  if (!opt.out.empty()) save_witness(opt.out, *witness);
  return 0;
}

struct ReduceOptions {
  std::string graph, structure, instance, witness, target, out;
  int l = 2;
  int m = 1;
  int k = 2;
  Element pivot = 1;
  std::optional<Element> e;
};

int run_reduce_3col(const ReduceOptions& opt) {
  const SimpleGraph h = load_simple_graph(opt.graph);
  const Digraph g = Digraph::from_structure(load_structure(opt.target));
  const SubalgebraWitness w = load_witness(opt.witness);
  save_instance(opt.out, three_col_to_ext(h, g, w));
  return 0;
}

int run_reduce_slice(const ReduceOptions& opt) {
  const RelationalStructure a = load_structure(opt.structure);
  save_structure(opt.out, slice_to_binary(a, opt.pivot).to_structure());
  return 0;
}

int run_reduce_lift(const ReduceOptions& opt) {
  // uses the instance's input and partial; the bundled target is replaced
  // by the l-ary structure from --target
  const ExtInstance binary = load_instance(opt.instance);
  save_instance(opt.out,
                lift_binary_instance(binary.input, binary.partial, opt.l,
                                     opt.pivot, load_structure(opt.target)));
  return 0;
}

int run_reduce_pair(const ReduceOptions& opt) {
  const RelationalStructure a = load_structure(opt.structure);
  save_structure(opt.out, pair_to_binary(a, opt.e));
  return 0;
}

int run_reduce_split(const ReduceOptions& opt) {
  const ExtInstance binary = load_instance(opt.instance);
  save_instance(opt.out,
                split_binary_instance(binary.input, binary.partial, opt.m,
                                      opt.k, opt.e, load_structure(opt.target)));
  return 0;
}

struct ExperimentOptions {
  std::vector<int> n_values;
  double p = 0.5;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string strategy = "closure";
  int k = 1;
  int workers = 1;
  bool timing = false;
  std::string out;
  std::string sidecar;
};

int run_experiment_finder(const ExperimentOptions& opt) {
  ExperimentConfig config;
  config.n_values = opt.n_values;
  config.p = opt.p;
  config.trials = opt.trials;
  config.master_seed = opt.seed;
  config.strategy = strategy_from_string(opt.strategy);
  config.k = opt.k;
  config.workers = opt.workers;

  const ExperimentReport report = estimate_finder_success(config);
  std::ofstream csv(opt.out);
  if (!csv) throw ValidationError("cannot write " + opt.out);
  write_report_csv(report, csv, opt.timing);
  const std::string sidecar =
      opt.sidecar.empty() ? opt.out + ".config.json" : opt.sidecar;
  write_text_file(sidecar, experiment_sidecar_json(config, "finder"));
  return 0;
}

int run_experiment_triangle(const ExperimentOptions& opt) {
  const TriangleFrequencyReport report =
      estimate_triangle_frequency(opt.p, opt.trials, opt.seed, opt.workers);
  char line[256];
  std::snprintf(line, sizeof(line), "empirical_frequency %.9f\n",
                report.frequency);
  std::cout << line;
  std::snprintf(line, sizeof(line), "analytic_loopless %.9f\n",
                report.analytic);
  std::cout << line;
  std::snprintf(line, sizeof(line), "six_edges_some_loop_absent %.9f\n",
                report.lenient);
  std::cout << line;
  std::snprintf(line, sizeof(line),
                "note: the two expressions disagree by %.9f; the empirical "
                "frequency tracks analytic_loopless\n",
                report.lenient - report.analytic);
  std::cout << line;

  if (!opt.out.empty()) {
    ExperimentReport csv_report;
    ReportRow row;
    row.n = 3;
    row.p = report.p;
    row.trials = static_cast<int>(report.trials);
    row.successes = static_cast<int>(report.hits);
    row.frequency = report.frequency;
    row.mean_steps = 1.0;
    csv_report.rows.push_back(row);
    std::ofstream csv(opt.out);
    if (!csv) throw ValidationError("cannot write " + opt.out);
    write_report_csv(csv_report, csv, opt.timing);
    const std::string sidecar =
        opt.sidecar.empty() ? opt.out + ".config.json" : opt.sidecar;
    write_text_file(sidecar, triangle_sidecar_json(opt.p, opt.trials, opt.seed,
                                                   opt.workers));
  }
  return 0;
}

struct VerifyOptions {
  std::string graph, witness, map, instance, source, target;
};

int run_verify_witness(const VerifyOptions& opt) {
  const Digraph g = Digraph::from_structure(load_structure(opt.graph));
  const SubalgebraWitness w = load_witness(opt.witness);
  if (auto reason = describe_witness_failure(g, w)) {
    std::cout << "invalid: " << *reason << "\n";
    return 1;
  }
  std::cout << "valid\n";
  return 0;
}

int run_verify_hom(const VerifyOptions& opt) {
  const TotalMap map = load_map(opt.map);
  if (!opt.instance.empty()) {
    const ExtInstance instance = load_instance(opt.instance);
    if (!is_homomorphism(map, instance.input, instance.target)) {
      std::cout << "invalid: map is not a homomorphism\n";
      return 1;
    }
    if (!is_extension(map, instance.partial)) {
      std::cout << "invalid: map does not extend the partial assignment\n";
      return 1;
    }
  } else {
    const RelationalStructure source = load_structure(opt.source);
    const RelationalStructure target = load_structure(opt.target);
    if (!is_homomorphism(map, source, target)) {
      std::cout << "invalid: map is not a homomorphism\n";
      return 1;
    }
  }
  std::cout << "valid\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relational structures, homomorphism extension, and random "
               "digraph experiments"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "generate a random relational structure");
  gen->add_option("--n", gen_opt.n, "domain size")->required()->check(CLI::PositiveNumber);
  gen->add_option("--arity", gen_opt.arity, "relation arity")->required()->check(CLI::PositiveNumber);
  gen->add_option("--p", gen_opt.p, "tuple probability in (0,1)")->required();
  gen->add_option("--seed", gen_opt.seed, "generator seed")->required();
  gen->add_flag("--loopless", gen_opt.loopless, "exclude constant tuples (a,...,a)");
  gen->add_option("--out", gen_opt.out, "output structure JSON")->required();

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand("solve", "decide an extension instance");
  solve->add_option("--instance", solve_opt.instance, "instance JSON")->required();
  solve->add_flag("--brute-force", solve_opt.brute_force, "exhaustive oracle instead of search");
  solve->add_option("--cap", solve_opt.cap, "brute-force candidate cap");

  FindOptions find_opt;
  CLI::App* find = app.add_subcommand("find", "search for a triangle subalgebra witness");
  find->add_option("--graph", find_opt.graph, "digraph structure JSON")->required();
  find->add_option("--strategy", find_opt.strategy, "closure or chunk-scan")
      ->check(CLI::IsMember({"closure", "chunk-scan"}));
  find->add_option("--k", find_opt.k, "chunk-scan: stop after k disjoint sets");
  find->add_option("--l", find_opt.l, "chunk-scan: forcing vertices per chunk");
  find->add_option("--p", find_opt.p, "chunk-scan: edge probability used to pick l");
  find->add_option("--out", find_opt.out, "also write the witness JSON here");

  ReduceOptions reduce_opt;
  CLI::App* reduce = app.add_subcommand("reduce", "instance transformations");
  reduce->require_subcommand(1);
  CLI::App* r3col = reduce->add_subcommand("3col-to-ext", "3-colorability to extension instance");
  r3col->add_option("--graph", reduce_opt.graph, "graph to color (JSON or DIMACS)")->required();
  r3col->add_option("--target", reduce_opt.target, "target digraph JSON")->required();
  r3col->add_option("--witness", reduce_opt.witness, "triangle subalgebra witness JSON")->required();
  r3col->add_option("--out", reduce_opt.out, "output instance JSON")->required();
  CLI::App* rslice = reduce->add_subcommand("slice", "binary slice of an l-ary structure");
  rslice->add_option("--structure", reduce_opt.structure, "l-ary structure JSON")->required();
  rslice->add_option("--pivot", reduce_opt.pivot, "pivot element")->required();
  rslice->add_option("--out", reduce_opt.out, "output structure JSON")->required();
  CLI::App* rlift = reduce->add_subcommand("lift", "lift a binary instance to an l-ary target");
  rlift->add_option("--instance", reduce_opt.instance, "binary instance JSON (input+partial used)")->required();
  rlift->add_option("--l", reduce_opt.l, "target arity")->required();
  rlift->add_option("--pivot", reduce_opt.pivot, "element the fresh e is bound to")->required();
  rlift->add_option("--target", reduce_opt.target, "l-ary target structure JSON")->required();
  rlift->add_option("--out", reduce_opt.out, "output instance JSON")->required();
  CLI::App* rpair = reduce->add_subcommand("pair", "coordinate pairing of a k-ary structure");
  rpair->add_option("--structure", reduce_opt.structure, "k-ary structure JSON")->required();
  rpair->add_option("--e", reduce_opt.e, "fixed element (odd k only)");
  rpair->add_option("--out", reduce_opt.out, "output structure JSON")->required();
  CLI::App* rsplit = reduce->add_subcommand("split", "split a binary instance over a k-ary target");
  rsplit->add_option("--instance", reduce_opt.instance, "binary instance JSON (input+partial used)")->required();
  rsplit->add_option("--m", reduce_opt.m, "coordinates per block")->required();
  rsplit->add_option("--k", reduce_opt.k, "target arity (2m or 2m+1)")->required();
  rsplit->add_option("--e", reduce_opt.e, "fixed element (odd k only)");
  rsplit->add_option("--target", reduce_opt.target, "k-ary target structure JSON")->required();
  rsplit->add_option("--out", reduce_opt.out, "output instance JSON")->required();

  ExperimentOptions exp_opt;
  CLI::App* experiment = app.add_subcommand("experiment", "Monte Carlo runs, CSV output");
  experiment->require_subcommand(1);
  CLI::App* finder = experiment->add_subcommand("finder", "success frequency of a subalgebra finder");
  finder->add_option("--n", exp_opt.n_values, "domain sizes (comma separated)")
      ->required()->delimiter(',');
  finder->add_option("--p", exp_opt.p, "edge probability")->required();
  finder->add_option("--trials", exp_opt.trials, "trials per n")->required();
  finder->add_option("--seed", exp_opt.seed, "master seed")->required();
  finder->add_option("--strategy", exp_opt.strategy, "closure or chunk-scan")
      ->check(CLI::IsMember({"closure", "chunk-scan"}));
  finder->add_option("--k", exp_opt.k, "chunk-scan: disjoint sets to collect");
  finder->add_option("--workers", exp_opt.workers, "worker threads")->check(CLI::PositiveNumber);
  finder->add_flag("--timing", exp_opt.timing, "write measured wall time into the ms column");
  finder->add_option("--out", exp_opt.out, "output CSV path")->required();
  finder->add_option("--sidecar", exp_opt.sidecar, "config echo path (default <out>.config.json)");
  CLI::App* triangle = experiment->add_subcommand("triangle", "loopless-triangle frequency on 3 vertices");
  triangle->add_option("--p", exp_opt.p, "edge probability")->required();
  triangle->add_option("--trials", exp_opt.trials, "number of sampled digraphs")->required();
  triangle->add_option("--seed", exp_opt.seed, "master seed")->required();
  triangle->add_option("--workers", exp_opt.workers, "worker threads")->check(CLI::PositiveNumber);
  triangle->add_option("--out", exp_opt.out, "optional CSV path");
  triangle->add_option("--sidecar", exp_opt.sidecar, "config echo path (default <out>.config.json)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "check witnesses and homomorphisms");
  verify->require_subcommand(1);
  CLI::App* vwitness = verify->add_subcommand("witness", "check a triangle subalgebra witness");
  vwitness->add_option("--graph", verify_opt.graph, "digraph structure JSON")->required();
  vwitness->add_option("--witness", verify_opt.witness, "witness JSON")->required();
  CLI::App* vhom = verify->add_subcommand("hom", "check a claimed homomorphism");
  vhom->add_option("--map", verify_opt.map, "total map JSON")->required();
  vhom->add_option("--instance", verify_opt.instance, "instance JSON (hom + extension check)");
  vhom->add_option("--source", verify_opt.source, "source structure JSON");
  vhom->add_option("--target", verify_opt.target, "target structure JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (solve->parsed()) return run_solve(solve_opt);
    if (find->parsed()) return run_find(find_opt);
    if (reduce->parsed()) {
      if (r3col->parsed()) return run_reduce_3col(reduce_opt);
      if (rslice->parsed()) return run_reduce_slice(reduce_opt);
      if (rlift->parsed()) return run_reduce_lift(reduce_opt);
      if (rpair->parsed()) return run_reduce_pair(reduce_opt);
      if (rsplit->parsed()) return run_reduce_split(reduce_opt);
    }
    if (experiment->parsed()) {
      if (finder->parsed()) return run_experiment_finder(exp_opt);
      if (triangle->parsed()) return run_experiment_triangle(exp_opt);
    }
    if (verify->parsed()) {
      if (vwitness->parsed()) return run_verify_witness(verify_opt);
      if (vhom->parsed()) {
        if (verify_opt.instance.empty() &&
            (verify_opt.source.empty() || verify_opt.target.empty())) {
          throw ValidationError("verify hom needs --instance or --source and --target");
        }
        return run_verify_hom(verify_opt);
      }
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
