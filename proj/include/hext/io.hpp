#pragma once

#include <iosfwd>
#include <string>

#include "hext/experiment.hpp"
#include "hext/reductions.hpp"
#include "hext/solver.hpp"
#include "hext/structure.hpp"
#include "hext/subalgebra.hpp"

namespace hext {

/// JSON file formats, all versioned with "format": 1 at top level.
///   structure: {"format":1,"domain":n,"relations":[{"arity":k,"tuples":[[..],..]},..]}
///   instance:  {"format":1,"input":{..},"target":{..},"partial":{"bindings":[[e,t],..]}}
///   witness:   {"format":1,"forcing":[..],"image":[a,b,c]}
///   map:       {"format":1,"image":[..]}
/// Loaders raise ValidationError naming the offending field.

RelationalStructure load_structure(const std::string& path);
void save_structure(const std::string& path, const RelationalStructure& s);

ExtInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const ExtInstance& instance);

SubalgebraWitness load_witness(const std::string& path);
void save_witness(const std::string& path, const SubalgebraWitness& w);

TotalMap load_map(const std::string& path);
void save_map(const std::string& path, const TotalMap& map);

std::string structure_to_json_string(const RelationalStructure& s);
std::string witness_to_json_string(const SubalgebraWitness& w);

/// Outcome as printed by the CLI:
/// {"solvable":bool,"witness":[..]|null,"nodes":int}
std::string outcome_to_json_string(const SolveOutcome& outcome);

/// Undirected 3-coloring inputs: JSON structure files (each binary tuple
/// read as an undirected edge) or DIMACS-like edge lists ("p edge n m"
/// header, "e u v" lines, "c" comments). load_simple_graph sniffs the
/// format from the first non-space byte.
SimpleGraph load_simple_graph(const std::string& path);
SimpleGraph parse_dimacs(std::istream& in, const std::string& context);
void write_dimacs(const SimpleGraph& g, std::ostream& out);

/// Config echo written next to experiment CSVs.
std::string experiment_sidecar_json(const ExperimentConfig& config,
                                    const std::string& kind);
std::string triangle_sidecar_json(double p, std::int64_t trials,
                                  std::uint64_t seed, int workers);

}  // namespace hext
