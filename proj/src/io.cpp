#include "hext/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hext {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw ValidationError(context + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& context) {
  if (!j.is_object()) fail(context, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(context + "." + name, "missing");
  return *it;
}

int int_field(const Json& j, const char* name, const std::string& context) {
  const Json& v = field(j, name, context);
  if (!v.is_number_integer()) fail(context + "." + name, "expected an integer");
  return v.get<int>();
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    throw ValidationError(path + ": not valid JSON");
  }
  return j;
}

void check_format(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a JSON object");
  auto it = j.find("format");
  if (it == j.end()) fail(path + ".format", "missing (expected 1)");
  if (!it->is_number_integer() || it->get<int>() != 1) {
    fail(path + ".format", "unsupported version (expected 1)");
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << j.dump(2) << "\n";
}

Json structure_to_json(const RelationalStructure& s) {
  Json relations = Json::array();
  for (const Relation& r : s.relations()) {
    Json tuples = Json::array();
    for (const auto& t : r.tuples()) tuples.push_back(t);
    relations.push_back(Json{{"arity", r.arity()}, {"tuples", tuples}});
  }
  return Json{{"domain", s.domain_size()}, {"relations", relations}};
}

RelationalStructure structure_from_json(const Json& j,
                                        const std::string& context) {
  const int domain = int_field(j, "domain", context);
  const Json& rels = field(j, "relations", context);
  if (!rels.is_array()) fail(context + ".relations", "expected an array");

  std::vector<Relation> relations;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string rel_ctx = context + ".relations[" + std::to_string(i) + "]";
    const int arity = int_field(rels[i], "arity", rel_ctx);
    const Json& tuples = field(rels[i], "tuples", rel_ctx);
    if (!tuples.is_array()) fail(rel_ctx + ".tuples", "expected an array");
    std::vector<std::vector<Element>> rows;
    rows.reserve(tuples.size());
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      const Json& tuple = tuples[t];
      const std::string tuple_ctx =
          rel_ctx + ".tuples[" + std::to_string(t) + "]";
      if (!tuple.is_array()) fail(tuple_ctx, "expected an array");
      std::vector<Element> row;
      row.reserve(tuple.size());
      for (const Json& e : tuple) {
        if (!e.is_number_integer()) fail(tuple_ctx, "expected integer entries");
        row.push_back(e.get<Element>());
      }
      rows.push_back(std::move(row));
    }
    try {
      relations.emplace_back(arity, std::move(rows));
    } catch (const ValidationError& err) {
      fail(rel_ctx, err.what());
    }
  }
  try {
    return RelationalStructure(domain, std::move(relations));
  } catch (const ValidationError& err) {
    fail(context, err.what());
  }
}

Json partial_to_json(const PartialAssignment& partial) {
  Json bindings = Json::array();
  for (const auto& [x, v] : partial.bindings()) {
    bindings.push_back(Json::array({x, v}));
  }
  return Json{{"bindings", bindings}};
}

PartialAssignment partial_from_json(const Json& j, const std::string& context) {
  const Json& bindings = field(j, "bindings", context);
  if (!bindings.is_array()) fail(context + ".bindings", "expected an array");
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(bindings.size());
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    const Json& b = bindings[i];
    const std::string ctx = context + ".bindings[" + std::to_string(i) + "]";
    if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() ||
        !b[1].is_number_integer()) {
      fail(ctx, "expected a pair [element, target]");
    }
    pairs.emplace_back(b[0].get<Element>(), b[1].get<Element>());
  }
  try {
    return PartialAssignment(std::move(pairs));
  } catch (const ValidationError& err) {
    fail(context + ".bindings", err.what());
  }
}

}  // namespace

RelationalStructure load_structure(const std::string& path) {
  Json j = parse_file(path);
  check_format(j, path);
  return structure_from_json(j, path);
}

void save_structure(const std::string& path, const RelationalStructure& s) {
  Json j = Json{{"format", 1}};
  j.update(structure_to_json(s));
  write_file(path, j);
}

ExtInstance load_instance(const std::string& path) {
  Json j = parse_file(path);
  check_format(j, path);
  RelationalStructure input =
      structure_from_json(field(j, "input", path), path + ".input");
  RelationalStructure target =
      structure_from_json(field(j, "target", path), path + ".target");
  PartialAssignment partial =
      partial_from_json(field(j, "partial", path), path + ".partial");
  return ExtInstance{std::move(input), std::move(target), std::move(partial)};
}

void save_instance(const std::string& path, const ExtInstance& instance) {
  Json j = Json{{"format", 1},
                {"input", structure_to_json(instance.input)},
                {"target", structure_to_json(instance.target)},
                {"partial", partial_to_json(instance.partial)}};
  write_file(path, j);
}

SubalgebraWitness load_witness(const std::string& path) {
  Json j = parse_file(path);
  check_format(j, path);
  const Json& forcing = field(j, "forcing", path);
  const Json& image = field(j, "image", path);
  if (!forcing.is_array() || forcing.empty()) {
    fail(path + ".forcing", "expected a non-empty array");
  }
  if (!image.is_array() || image.size() != 3) {
    fail(path + ".image", "expected an array of exactly 3 vertices");
  }
  SubalgebraWitness w;
  for (const Json& v : forcing) {
    if (!v.is_number_integer()) fail(path + ".forcing", "expected integers");
    w.forcing.push_back(v.get<Element>());
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!image[i].is_number_integer()) fail(path + ".image", "expected integers");
    w.image[i] = image[i].get<Element>();
  }
  return w;
}

void save_witness(const std::string& path, const SubalgebraWitness& w) {
  write_file(path, Json{{"format", 1},
                        {"forcing", w.forcing},
                        {"image", Json::array({w.image[0], w.image[1], w.image[2]})}});
}

TotalMap load_map(const std::string& path) {
  Json j = parse_file(path);
  check_format(j, path);
  const Json& image = field(j, "image", path);
  if (!image.is_array()) fail(path + ".image", "expected an array");
  std::vector<Element> values;
  values.reserve(image.size());
  for (const Json& v : image) {
    if (!v.is_number_integer()) fail(path + ".image", "expected integers");
    values.push_back(v.get<Element>());
  }
  return TotalMap(std::move(values));
}

void save_map(const std::string& path, const TotalMap& map) {
  write_file(path, Json{{"format", 1}, {"image", map.image()}});
}

std::string structure_to_json_string(const RelationalStructure& s) {
  Json j = Json{{"format", 1}};
  j.update(structure_to_json(s));
  return j.dump(2);
}

std::string witness_to_json_string(const SubalgebraWitness& w) {
  return Json{{"format", 1},
              {"forcing", w.forcing},
              {"image", Json::array({w.image[0], w.image[1], w.image[2]})}}
      .dump(2);
}

std::string outcome_to_json_string(const SolveOutcome& outcome) {
  Json j;
  j["solvable"] = outcome.solvable;
  j["witness"] = outcome.witness ? Json(outcome.witness->image()) : Json(nullptr);
  j["nodes"] = outcome.nodes;
  return j.dump();
}

SimpleGraph parse_dimacs(std::istream& in, const std::string& context) {
  std::string line;
  int n = -1;
  long long declared_edges = -1;
  std::vector<std::pair<Element, Element>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;  // blank line
    const std::string where = context + " line " + std::to_string(line_no);
    if (kind == "c") continue;
    if (kind == "p") {
      std::string format;
      if (!(ls >> format >> n >> declared_edges) || format != "edge" || n < 0) {
        fail(where, "expected 'p edge <vertices> <edges>'");
      }
      continue;
    }
    if (kind == "e") {
      if (n < 0) fail(where, "edge before 'p edge' header");
      Element u = 0, v = 0;
      if (!(ls >> u >> v)) fail(where, "expected 'e <u> <v>'");
      edges.emplace_back(u, v);
      continue;
    }
    fail(where, "unknown record '" + kind + "'");
  }
  if (n < 0) fail(context, "missing 'p edge' header");
  if (declared_edges != static_cast<long long>(edges.size())) {
    fail(context, "header declared " + std::to_string(declared_edges) +
                      " edges, found " + std::to_string(edges.size()));
  }
  try {
    return make_simple_graph(n, std::move(edges));
  } catch (const ValidationError& err) {
    fail(context, err.what());
  }
}

void write_dimacs(const SimpleGraph& g, std::ostream& out) {
  out << "p edge " << g.n << " " << g.edges.size() << "\n";
  for (const auto& [u, v] : g.edges) {
    out << "e " << u << " " << v << "\n";
  }
}

SimpleGraph load_simple_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  char first = 0;
  in >> std::ws;
  first = static_cast<char>(in.peek());
  if (first == '{') {
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ValidationError(path + ": not valid JSON");
    check_format(j, path);
    RelationalStructure s = structure_from_json(j, path);
    if (s.relations().size() != 1 || s.relation(0).arity() != 2) {
      fail(path, "3-coloring input must have exactly one binary relation");
    }
    std::vector<std::pair<Element, Element>> edges;
    edges.reserve(s.relation(0).size());
    for (const auto& t : s.relation(0).tuples()) edges.emplace_back(t[0], t[1]);
    try {
      return make_simple_graph(s.domain_size(), std::move(edges));
    } catch (const ValidationError& err) {
      fail(path, err.what());
    }
  }
  return parse_dimacs(in, path);
}

std::string experiment_sidecar_json(const ExperimentConfig& config,
                                    const std::string& kind) {
  Json j{{"format", 1},
         {"kind", kind},
         {"n", config.n_values},
         {"p", config.p},
         {"trials", config.trials},
         {"master_seed", config.master_seed},
         {"strategy", to_string(config.strategy)},
         {"k", config.k},
         {"workers", config.workers}};
  return j.dump(2);
}

std::string triangle_sidecar_json(double p, std::int64_t trials,
                                  std::uint64_t seed, int workers) {
  Json j{{"format", 1},
         {"kind", "triangle"},
         {"p", p},
         {"trials", trials},
         {"master_seed", seed},
         {"workers", workers}};
  return j.dump(2);
}

}  // namespace hext
