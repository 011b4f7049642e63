#include "hext/subalgebra.hpp"

#include <algorithm>

namespace hext {

std::vector<Element> forcing_image(const Digraph& g,
                                   const std::vector<Element>& vs) {
  if (vs.empty()) {
    throw ValidationError("forcing image of an empty vertex list is undefined");
  }
  const int words = g.words_per_row();
  std::vector<std::uint64_t> acc(g.out_row(vs[0]).begin(),
                                 g.out_row(vs[0]).end());
  for (std::size_t i = 1; i < vs.size(); ++i) {
    auto row = g.out_row(vs[i]);
    for (int w = 0; w < words; ++w) acc[static_cast<std::size_t>(w)] &= row[static_cast<std::size_t>(w)];
  }
  return bits_to_vertices(acc);
}

bool is_loopless_triangle(const Digraph& g, const std::array<Element, 3>& c) {
  if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
    throw ValidationError("triangle check requires three distinct vertices");
  }
  for (Element v : c) {
    if (g.has_edge(v, v)) return false;
  }
  for (Element u : c) {
    for (Element v : c) {
      if (u != v && !g.has_edge(u, v)) return false;
    }
  }
  return true;
}

bool is_loopless_triangle(const Digraph& g, const std::vector<Element>& c) {
  std::vector<Element> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != 3) {
    throw ValidationError("triangle check requires a 3-element vertex set, got " +
                          std::to_string(sorted.size()) + " distinct vertices");
  }
  return is_loopless_triangle(g, std::array<Element, 3>{sorted[0], sorted[1], sorted[2]});
}

int choose_l(int n, double p) {
  if (n < 1) {
    throw ValidationError("choose_l requires n >= 1, got " + std::to_string(n));
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw ValidationError("choose_l requires 0 < p < 1, got " +
                          std::to_string(p));
  }
  long double value = static_cast<long double>(n);
  const long double lp = static_cast<long double>(p);
  int l = 0;
  while (value * lp >= 1.0L) {
    value *= lp;
    ++l;
  }
  return l;
}

std::optional<std::string> describe_witness_failure(
    const Digraph& g, const SubalgebraWitness& w) {
  if (w.forcing.empty()) return "witness has no forcing vertices";
  for (Element v : w.forcing) {
    if (v < 1 || v > g.vertex_count()) {
      return "forcing vertex " + std::to_string(v) + " out of range 1.." +
             std::to_string(g.vertex_count());
    }
  }
  std::array<Element, 3> image = w.image;
  std::sort(image.begin(), image.end());
  if (image[0] == image[1] || image[1] == image[2]) {
    return "image vertices are not distinct";
  }
  for (Element v : image) {
    if (v < 1 || v > g.vertex_count()) {
      return "image vertex " + std::to_string(v) + " out of range 1.." +
             std::to_string(g.vertex_count());
    }
  }
  const std::vector<Element> actual = forcing_image(g, w.forcing);
  if (!std::equal(actual.begin(), actual.end(), image.begin(), image.end())) {
    return "image does not equal the forcing vertices' common out-neighborhood";
  }
  for (Element v : image) {
    if (g.has_edge(v, v)) {
      return "image has a loop at " + std::to_string(v);
    }
  }
  for (Element u : image) {
    for (Element v : image) {
      if (u != v && !g.has_edge(u, v)) {
        return "image lacks edge (" + std::to_string(u) + "," +
               std::to_string(v) + ")";
      }
    }
  }
  return std::nullopt;
}

bool verify_witness(const Digraph& g, const SubalgebraWitness& w) {
  return !describe_witness_failure(g, w).has_value();
}

std::optional<SubalgebraWitness> ProcedureTrace::triangle_witness() const {
  if (!triangle_index) return std::nullopt;
  const FoundSubalgebra& f = found[*triangle_index];
  return SubalgebraWitness{f.forcing, f.members};
}

ProcedureTrace chunk_scan_find(const Digraph& g, int k,
                               std::optional<int> l_override,
                               std::optional<double> p) {
  if (k < 0) {
    throw ValidationError("chunk scan requires k >= 0, got " +
                          std::to_string(k));
  }
  const int n = g.vertex_count();
  const int a_size = n / 2;

  ProcedureTrace trace;
  if (l_override) {
    trace.l = *l_override;
  } else if (p) {
    trace.l = choose_l(n, *p);
  } else {
    throw ValidationError("chunk scan needs either an l override or p");
  }
  trace.found_k = (k == 0);
  if (trace.l < 1 || trace.l > a_size) return trace;  // zero steps

  trace.chunk_count = a_size / trace.l;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < trace.chunk_count; ++i) {
    if (static_cast<int>(trace.found.size()) >= k) break;
    ProcedureStep step;
    step.index = i;
    for (int j = 1; j <= trace.l; ++j) {
      step.chunk.push_back(j + i * trace.l);
    }
    step.image = forcing_image(g, step.chunk);

    bool in_b = true;
    bool fresh = true;
    for (Element v : step.image) {
      if (v <= a_size) in_b = false;
      if (used[static_cast<std::size_t>(v)]) fresh = false;
    }
    if (step.image.size() != 3) {
      step.outcome = StepOutcome::WrongSize;
    } else if (!in_b) {
      step.outcome = StepOutcome::OutsideB;
    } else if (!fresh) {
      step.outcome = StepOutcome::OverlapsUsed;
    } else {
      step.outcome = StepOutcome::Accepted;
      for (Element v : step.image) used[static_cast<std::size_t>(v)] = 1;
      FoundSubalgebra found;
      found.forcing = step.chunk;
      found.members = {step.image[0], step.image[1], step.image[2]};
      trace.found.push_back(found);
      if (!trace.triangle_index &&
          is_loopless_triangle(g, found.members)) {
        trace.triangle_index = trace.found.size() - 1;
      }
    }
    trace.steps.push_back(std::move(step));
  }
  trace.found_k = static_cast<int>(trace.found.size()) >= k;
  return trace;
}

ClosureSearch closure_find_triangle_subalgebra(const Digraph& g) {
  ClosureSearch result;
  const int n = g.vertex_count();
  const int words = g.words_per_row();
  std::vector<std::uint64_t> common_in(static_cast<std::size_t>(words));
  std::vector<std::uint64_t> image(static_cast<std::size_t>(words));
  for (Element a = 1; a <= n - 2; ++a) {
    if (g.has_edge(a, a)) {
      // every 3-set through a fails the triangle test; still counted
      result.candidates_checked += static_cast<std::uint64_t>(n - a) *
                                   static_cast<std::uint64_t>(n - a - 1) / 2;
      continue;
    }
    for (Element b = a + 1; b <= n - 1; ++b) {
      if (g.has_edge(b, b) || !g.has_edge(a, b) || !g.has_edge(b, a)) {
        result.candidates_checked += static_cast<std::uint64_t>(n - b);
        continue;
      }
      for (Element c = b + 1; c <= n; ++c) {
        ++result.candidates_checked;
        if (g.has_edge(c, c) || !g.has_edge(a, c) || !g.has_edge(c, a) ||
            !g.has_edge(b, c) || !g.has_edge(c, b)) {
          continue;
        }
        auto ra = g.in_row(a);
        auto rb = g.in_row(b);
        auto rc = g.in_row(c);
        bool any = false;
        for (int w = 0; w < words; ++w) {
          common_in[static_cast<std::size_t>(w)] =
              ra[static_cast<std::size_t>(w)] & rb[static_cast<std::size_t>(w)] &
              rc[static_cast<std::size_t>(w)];
          any = any || common_in[static_cast<std::size_t>(w)] != 0;
        }
        if (!any) continue;

        // forcing image of all common in-neighbors
        std::fill(image.begin(), image.end(), ~std::uint64_t{0});
        for (int w = 0; w < words; ++w) {
          std::uint64_t bits = common_in[static_cast<std::size_t>(w)];
          while (bits != 0) {
            int bit = __builtin_ctzll(bits);
            bits &= bits - 1;
            auto row = g.out_row(static_cast<Element>(w * 64 + bit + 1));
            for (int x = 0; x < words; ++x) {
              image[static_cast<std::size_t>(x)] &= row[static_cast<std::size_t>(x)];
            }
          }
        }
        std::vector<std::uint64_t> expected(static_cast<std::size_t>(words), 0);
        expected[static_cast<std::size_t>((a - 1) / 64)] |= std::uint64_t{1} << ((a - 1) % 64);
        expected[static_cast<std::size_t>((b - 1) / 64)] |= std::uint64_t{1} << ((b - 1) % 64);
        expected[static_cast<std::size_t>((c - 1) / 64)] |= std::uint64_t{1} << ((c - 1) % 64);
        if (image == expected) {
          SubalgebraWitness w;
          w.forcing = bits_to_vertices(common_in);
          w.image = {a, b, c};
          result.witness = std::move(w);
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace hext
