#include "parity/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "parity/json_io.hpp"
#include "parity/rect.hpp"

namespace parity {

std::vector<EdgeVector> brute_constraint_space(const Hypergraph& h) {
  const std::size_t m = h.num_edges();
  if (m > kBruteEdgeCap) {
    throw GuardError("brute_constraint_space: " + std::to_string(m) +
                     " edges exceeds the 2^" + std::to_string(kBruteEdgeCap) +
                     " scan guard");
  }
  EdgeIndexPtr index = EdgeIndex::for_hypergraph(h);
  std::vector<EdgeVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    EdgeVector v = EdgeVector::zero(index);
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) v.set(i);
    }
    if (is_constraint(h, v)) out.push_back(std::move(v));
  }
  return out;
}

GraphCorpus GraphCorpus::generate(std::size_t v_max, std::size_t e_max) {
  std::vector<Edge> all_pairs;
  for (VertexId a = 1; a <= v_max; ++a) {
    for (VertexId b = a + 1; b <= v_max; ++b) {
      all_pairs.push_back({a, b});
    }
  }
  std::map<CanonicalForm, Hypergraph> classes;
  classes.emplace(canonical_form(Hypergraph()), Hypergraph());

  std::vector<Edge> current;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (!current.empty()) {
      Hypergraph g = Hypergraph::from_edges(current);
      CanonicalForm f = canonical_form(g);
      classes.emplace(std::move(f), std::move(g));
    }
    if (current.size() == e_max) return;
    for (std::size_t i = next; i < all_pairs.size(); ++i) {
      current.push_back(all_pairs[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);

  GraphCorpus corpus;
  corpus.v_max_ = v_max;
  corpus.e_max_ = e_max;
  for (auto& [f, g] : classes) corpus.graphs_.push_back(std::move(g));
  return corpus;
}

GraphCorpus GraphCorpus::from_graphs(const std::vector<Hypergraph>& graphs) {
  std::map<CanonicalForm, Hypergraph> classes;
  GraphCorpus corpus;
  for (const Hypergraph& g : graphs) {
    corpus.v_max_ = std::max(corpus.v_max_, g.num_vertices());
    corpus.e_max_ = std::max(corpus.e_max_, g.num_edges());
    classes.emplace(canonical_form(g), g);
  }
  for (auto& [f, g] : classes) corpus.graphs_.push_back(std::move(g));
  return corpus;
}

GraphCorpus GraphCorpus::load_or_generate(std::size_t v_max, std::size_t e_max,
                                          const std::string& cache_path) {
  {
    std::ifstream in(cache_path);
    if (in) {
      std::string header;
      std::getline(in, header);
      std::ostringstream want;
      want << "parity-corpus v=" << v_max << " e=" << e_max;
      if (header.rfind(want.str(), 0) == 0) {
        GraphCorpus corpus;
        corpus.v_max_ = v_max;
        corpus.e_max_ = e_max;
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          corpus.graphs_.push_back(io::hypergraph_from_string(line));
        }
        return corpus;
      }
    }
  }
  GraphCorpus corpus = generate(v_max, e_max);
  std::ofstream out(cache_path);
  if (out) {
    out << "parity-corpus v=" << v_max << " e=" << e_max
        << " count=" << corpus.graphs_.size() << "\n";
    for (const Hypergraph& g : corpus.graphs_) {
      out << io::hypergraph_to_string(g) << "\n";
    }
  }
  return corpus;
}

namespace {

bool cycle_edge_closed(const Hypergraph& g) {
  return cycle_edge_restriction(g).num_edges() == g.num_edges();
}

}  // namespace

std::set<CanonicalForm> brute_preimage(const CompiledHypergraph& p,
                                       const GraphCorpus& corpus) {
  CanonicalForm target = canonical_form(p.hypergraph);
  std::set<CanonicalForm> out;
  for (const Hypergraph& g : corpus.graphs()) {
    if (g.num_edges() == 0) {
      if (p.hypergraph.num_vertices() == 0 && p.hypergraph.num_edges() == 0) {
        out.insert(canonical_form(g));
      }
      continue;
    }
    if (!cycle_edge_closed(g)) continue;
    CompiledSet set = compiled_set(g);
    if (!set.exhaustive) {
      throw GuardError("brute_preimage: compiled set truncated");
    }
    if (set.contains(target)) out.insert(canonical_form(g));
  }
  return out;
}

bool has_connected_cycle_space(const Hypergraph& g) {
  Gf2Basis basis = cycle_basis(g);
  if (basis.dim() == 0) return true;
  std::vector<EdgeVector> space = enumerate_space(basis);
  std::vector<EdgeVector> cycles;
  for (const EdgeVector& v : space) {
    if (is_simple_cycle(v)) cycles.push_back(v);
  }
  if (cycles.empty()) return true;
  // union-find over cycles joined by shared edges
  std::vector<std::size_t> parent(cycles.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      bool share = false;
      for (std::size_t p = 0; p < cycles[i].length() && !share; ++p) {
        share = cycles[i].test(p) && cycles[j].test(p);
      }
      if (share) parent[find(i)] = find(j);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < cycles.size(); ++i) roots.insert(find(i));
  return roots.size() <= 1;
}

UniquenessReport brute_uniqueness_scan(std::size_t dim_limit,
                                       const GraphCorpus& corpus) {
  // eligible: nonempty, cycle-edge-closed, connected cycle space
  std::map<std::size_t, std::vector<const Hypergraph*>> by_dim;
  for (const Hypergraph& g : corpus.graphs()) {
    if (g.num_edges() == 0) continue;
    std::size_t dim = dim_formula(g);
    if (dim == 0 || dim > dim_limit) continue;
    if (!cycle_edge_closed(g)) continue;
    if (!has_connected_cycle_space(g)) continue;
    by_dim[dim].push_back(&g);
  }

  UniquenessReport report;
  for (const auto& [dim, graphs] : by_dim) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        ++report.pairs_checked;
        if (!par_equal(*graphs[i], *graphs[j])) continue;
        UniquenessViolation v{*graphs[i], *graphs[j], dim};
        if (dim <= 2) {
          report.violations.push_back(std::move(v));
        } else {
          report.witnesses.push_back(std::move(v));
        }
      }
    }
  }
  return report;
}

bool brute_is_isomorphic(const Hypergraph& h1, const Hypergraph& h2) {
  if (h1.num_vertices() != h2.num_vertices() || h1.num_edges() != h2.num_edges()) {
    return false;
  }
  const auto& v1 = h1.vertices();
  std::vector<VertexId> v2 = h2.vertices();
  std::sort(v2.begin(), v2.end());
  do {
    std::vector<std::pair<VertexId, VertexId>> mapping;
    for (std::size_t i = 0; i < v1.size(); ++i) {
      mapping.emplace_back(v1[i], v2[i]);
    }
    if (h1.relabel(mapping) == h2) return true;
  } while (std::next_permutation(v2.begin(), v2.end()));
  return false;
}

}  // namespace parity
