#include "parity/labeling.hpp"

#include <algorithm>
#include <numeric>

#include "parity/gf2.hpp"

namespace parity {

Label make_label(std::uint32_t i, std::uint32_t j) {
  if (i == j) throw InputError("label must pair two distinct integers");
  return i < j ? Label{i, j} : Label{j, i};
}

Hypergraph induced_graph(const Hypergraph& h, const LoopLabeling& l) {
  std::set<Label> labels;
  for (const Edge& e : h.edges()) {
    for (VertexId v : e) {
      auto it = l.labels.find(v);
      if (it == l.labels.end()) {
        throw InputError("vertex " + std::to_string(v) + " has no label");
      }
      labels.insert(it->second);
    }
  }
  std::vector<Edge> edges;
  for (const Label& lab : labels) {
    edges.push_back(Edge{lab.first, lab.second});
  }
  return Hypergraph::from_edges(std::move(edges));
}

bool is_loop_labeling(const Hypergraph& h, const LoopLabeling& l) {
  std::set<Label> seen;
  for (const auto& [v, lab] : l.labels) {
    if (lab.first == lab.second) return false;
    if (!seen.insert(make_label(lab.first, lab.second)).second) {
      return false;  // not injective
    }
  }
  for (const Edge& e : h.edges()) {
    for (VertexId v : e) {
      if (!l.labels.count(v)) return false;
    }
  }
  if (h.num_edges() == 0) return true;

  Hypergraph g = induced_graph(h, l);
  EdgeIndexPtr index = EdgeIndex::for_hypergraph(g);
  for (const Edge& e : h.edges()) {
    std::vector<Edge> image;
    for (VertexId v : e) {
      const Label& lab = l.labels.at(v);
      image.push_back(Edge{lab.first, lab.second});
    }
    EdgeVector vec = EdgeVector::from_edges(index, image);
    if (!is_constraint(g, vec)) return false;  // C = L for graphs
  }
  return true;
}

std::optional<std::vector<std::size_t>> weakly_fundamental_edge_order(
    const Hypergraph& h) {
  const auto& edges = h.edges();
  const std::size_t n = edges.size();
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  std::set<VertexId> covered;
  std::set<std::vector<bool>> dead;

  std::function<bool()> dfs = [&]() -> bool {
    if (order.size() == n) return true;
    if (dead.count(used)) return false;
    // candidates with a private vertex; those touching the covered region
    // first so connected prefixes are preferred
    std::vector<std::size_t> touching, apart;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool has_private = false;
      bool touches = order.empty();
      for (VertexId v : edges[i]) {
        if (!covered.count(v)) {
          has_private = true;
        } else {
          touches = true;
        }
      }
      if (!has_private) continue;
      (touches ? touching : apart).push_back(i);
    }
    std::vector<std::size_t> candidates = touching;
    candidates.insert(candidates.end(), apart.begin(), apart.end());
    for (std::size_t i : candidates) {
      std::vector<VertexId> added;
      for (VertexId v : edges[i]) {
        if (covered.insert(v).second) added.push_back(v);
      }
      used[i] = true;
      order.push_back(i);
      if (dfs()) return true;
      order.pop_back();
      used[i] = false;
      for (VertexId v : added) covered.erase(v);
    }
    dead.insert(used);
    return false;
  };

  if (dfs()) return order;
  return std::nullopt;
}

namespace {

using InducedId = std::uint32_t;
using IEdge = std::pair<InducedId, InducedId>;  // normalized a < b

IEdge iedge(InducedId a, InducedId b) { return a < b ? IEdge{a, b} : IEdge{b, a}; }

struct State {
  std::vector<std::optional<IEdge>> labels;  // by compiled vertex position
  std::set<IEdge> graph_edges;
  InducedId num_induced = 0;
  std::vector<InducedId> dsu;  // parent per induced id - 1
  std::uint32_t components = 0;

  InducedId find(InducedId x) const {
    while (dsu[x - 1] != x) x = dsu[x - 1];
    return x;
  }
};

// One candidate cycle for the edge being placed.
struct CycleCandidate {
  std::vector<IEdge> new_edges;   // fresh labels, construction order
  InducedId fresh_used = 0;       // induced vertices allocated
  std::uint32_t components_after = 0;
};

struct CycleEnumerator {
  const State& state;
  std::size_t need;          // number of new edges = unlabeled vertices
  std::size_t max_labels;
  bool label_cap_hit = false;

  std::vector<CycleCandidate> found;
  std::set<std::vector<IEdge>> seen;  // dedupe by sorted new-edge list

  std::set<InducedId> on_cycle;       // vertices used by the cycle so far
  std::vector<IEdge> new_edges;
  InducedId fresh_used = 0;

  explicit CycleEnumerator(const State& s, std::size_t need_, std::size_t cap)
      : state(s), need(need_), max_labels(cap) {}

  bool edge_ok(InducedId a, InducedId b) const {
    if (a == b) return false;
    IEdge e = iedge(a, b);
    if (state.graph_edges.count(e)) return false;  // injectivity
    return std::find(new_edges.begin(), new_edges.end(), e) == new_edges.end();
  }

  InducedId next_fresh() const { return state.num_induced + fresh_used + 1; }

  bool vertex_exists(InducedId v) const { return v <= state.num_induced; }

  void accept() {
    std::vector<IEdge> key = new_edges;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;

    // dimension bookkeeping: need - fresh + (c_after - c_before) must be 1
    std::vector<InducedId> parent = state.dsu;
    for (InducedId f = 1; f <= fresh_used; ++f) {
      parent.push_back(state.num_induced + f);
    }
    auto find = [&](InducedId x) {
      while (parent[x - 1] != x) x = parent[x - 1] = parent[parent[x - 1] - 1];
      return x;
    };
    std::uint32_t c_after = state.components + fresh_used;
    for (const IEdge& e : new_edges) {
      InducedId ra = find(e.first);
      InducedId rb = find(e.second);
      if (ra != rb) {
        parent[ra - 1] = rb;
        --c_after;
      }
    }
    long delta = static_cast<long>(need) - static_cast<long>(fresh_used) +
                 (static_cast<long>(c_after) - static_cast<long>(state.components));
    if (delta != 1) return;

    CycleCandidate cand;
    cand.new_edges = new_edges;
    cand.fresh_used = fresh_used;
    cand.components_after = c_after;
    found.push_back(std::move(cand));
  }

  // Next-vertex choices for an open path position: any existing induced
  // vertex not already on the cycle, or one canonical fresh vertex.
  std::vector<InducedId> vertex_choices() {
    std::vector<InducedId> out;
    for (InducedId v = 1; v <= state.num_induced; ++v) {
      if (!on_cycle.count(v)) out.push_back(v);
    }
    if (state.num_induced + fresh_used + 1 > max_labels) {
      label_cap_hit = true;
    } else {
      out.push_back(next_fresh());
    }
    return out;
  }

  // Connector: walk `remaining` new edges from `cur` so the last one lands
  // on `target`, then continue with `rest`.
  void connector(InducedId cur, InducedId target, std::size_t remaining,
                 const std::function<void()>& rest) {
    if (remaining == 1) {
      if (!edge_ok(cur, target)) return;
      new_edges.push_back(iedge(cur, target));
      rest();
      new_edges.pop_back();
      return;
    }
    for (InducedId u : vertex_choices()) {
      if (u == target || !edge_ok(cur, u)) continue;
      bool fresh = !vertex_exists(u);
      if (fresh) ++fresh_used;
      on_cycle.insert(u);
      new_edges.push_back(iedge(cur, u));
      connector(u, target, remaining - 1, rest);
      new_edges.pop_back();
      on_cycle.erase(u);
      if (fresh) --fresh_used;
    }
  }
};

// Maximal paths of the already-labeled part of an edge. Returns each path as
// a vertex sequence; nullopt when the labeled part cannot sit inside a
// simple cycle (a branch vertex or a closed subcycle).
std::optional<std::vector<std::vector<InducedId>>> path_decomposition(
    const std::vector<IEdge>& old_labels) {
  std::map<InducedId, std::vector<InducedId>> adj;
  for (const IEdge& e : old_labels) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
    if (adj[e.first].size() > 2 || adj[e.second].size() > 2) return std::nullopt;
  }
  std::vector<std::vector<InducedId>> paths;
  std::set<IEdge> walked;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() != 1) continue;  // path endpoints only
    IEdge first = iedge(v, nbrs[0]);
    if (walked.count(first)) continue;
    std::vector<InducedId> path{v};
    InducedId prev = v;
    InducedId cur = nbrs[0];
    walked.insert(first);
    path.push_back(cur);
    while (adj[cur].size() == 2) {
      InducedId nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      walked.insert(iedge(cur, nxt));
      prev = cur;
      cur = nxt;
      path.push_back(cur);
    }
    paths.push_back(std::move(path));
  }
  if (walked.size() != old_labels.size()) {
    return std::nullopt;  // leftover edges form a closed cycle
  }
  return paths;
}

void compositions(std::size_t total, std::size_t parts,
                  std::vector<std::size_t>& cur,
                  const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (parts == 1) {
    if (total >= 1) {
      cur.push_back(total);
      f(cur);
      cur.pop_back();
    }
    return;
  }
  for (std::size_t s = 1; s + (parts - 1) <= total; ++s) {
    cur.push_back(s);
    compositions(total - s, parts - 1, cur, f);
    cur.pop_back();
  }
}

// Enumerates candidate simple cycles for one edge: the labeled part (given
// as path blocks) is arranged around the cycle in every order/orientation,
// and the gaps are filled with new-edge connectors.
std::vector<CycleCandidate> enumerate_cycles(const State& state,
                                             const std::vector<IEdge>& old_labels,
                                             std::size_t edge_size,
                                             std::size_t max_labels,
                                             bool& label_cap_hit) {
  const std::size_t need = edge_size - old_labels.size();
  CycleEnumerator en(state, need, max_labels);

  if (old_labels.empty()) {
    // an entirely new cycle of edge_size edges
    std::function<void(InducedId, InducedId, std::size_t)> extend =
        [&](InducedId start, InducedId cur, std::size_t placed) {
          if (placed == edge_size - 1) {
            if (en.edge_ok(cur, start)) {
              en.new_edges.push_back(iedge(cur, start));
              en.accept();
              en.new_edges.pop_back();
            }
            return;
          }
          for (InducedId u : en.vertex_choices()) {
            if (u == start || !en.edge_ok(cur, u)) continue;
            bool fresh = !en.vertex_exists(u);
            if (fresh) ++en.fresh_used;
            en.on_cycle.insert(u);
            en.new_edges.push_back(iedge(cur, u));
            extend(start, u, placed + 1);
            en.new_edges.pop_back();
            en.on_cycle.erase(u);
            if (fresh) --en.fresh_used;
          }
        };
    for (InducedId start : en.vertex_choices()) {
      bool fresh = !en.vertex_exists(start);
      if (fresh) ++en.fresh_used;
      en.on_cycle.insert(start);
      extend(start, start, 0);
      en.on_cycle.erase(start);
      if (fresh) --en.fresh_used;
    }
    label_cap_hit = label_cap_hit || en.label_cap_hit;
    return en.found;
  }

  auto paths_opt = path_decomposition(old_labels);
  if (!paths_opt) return {};
  std::vector<std::vector<InducedId>> paths = *paths_opt;
  const std::size_t r = paths.size();

  for (const auto& p : paths) {
    for (InducedId v : p) en.on_cycle.insert(v);
  }

  // arrangement: paths[0] fixed forward; permute and orient the rest
  std::vector<std::size_t> rest(r > 0 ? r - 1 : 0);
  std::iota(rest.begin(), rest.end(), std::size_t{1});
  std::sort(rest.begin(), rest.end());
  do {
    for (std::uint32_t flips = 0; flips < (1u << rest.size()); ++flips) {
      std::vector<std::vector<InducedId>> arranged{paths[0]};
      for (std::size_t i = 0; i < rest.size(); ++i) {
        std::vector<InducedId> p = paths[rest[i]];
        if ((flips >> i) & 1u) std::reverse(p.begin(), p.end());
        arranged.push_back(std::move(p));
      }
      std::vector<std::size_t> comp;
      compositions(need, r, comp, [&](const std::vector<std::size_t>& sizes) {
        // connectors close arranged[i] tail to arranged[i+1] head
        std::function<void(std::size_t)> place = [&](std::size_t i) {
          if (i == r) {
            en.accept();
            return;
          }
          InducedId from = arranged[i].back();
          InducedId to = arranged[(i + 1) % r].front();
          en.connector(from, to, sizes[i], [&]() { place(i + 1); });
        };
        place(0);
      });
    }
  } while (std::next_permutation(rest.begin(), rest.end()));

  label_cap_hit = label_cap_hit || en.label_cap_hit;
  return en.found;
}

LoopLabeling state_to_labeling(const Hypergraph& ph, const State& s) {
  LoopLabeling l;
  const auto& vs = ph.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (s.labels[i]) {
      l.labels[vs[i]] = Label{s.labels[i]->first, s.labels[i]->second};
    }
  }
  return l;
}

}  // namespace

CanonicalForm labeling_canonical_form(const Hypergraph& h, const LoopLabeling& l) {
  (void)h;  // equality is per fixed hypergraph; only the labels enter the key
  // Induced vertices may permute freely (one shared color); each labeled
  // hypergraph vertex becomes a pinned marker with its own color, joined to
  // its label pair by a 3-vertex edge.
  constexpr VertexId kMarkerBase = 1u << 24;
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::vector<std::pair<VertexId, std::uint32_t>> color_of;
  std::set<VertexId> induced;
  for (const auto& [v, lab] : l.labels) {
    induced.insert(lab.first);
    induced.insert(lab.second);
    vertices.push_back(kMarkerBase + v);
    color_of.emplace_back(kMarkerBase + v, v + 1);
    edges.push_back(make_edge({lab.first, lab.second, kMarkerBase + v}));
  }
  for (VertexId v : induced) {
    vertices.push_back(v);
    color_of.emplace_back(v, 0);
  }
  Hypergraph structure = Hypergraph::create(std::move(vertices), std::move(edges));
  std::sort(color_of.begin(), color_of.end());
  std::vector<std::uint32_t> colors;
  colors.reserve(color_of.size());
  for (const auto& [v, c] : color_of) colors.push_back(c);
  return canonical_form_colored(structure, colors, /*vertex_cap=*/512);
}

LabelingSearchResult search_labelings(const CompiledHypergraph& p,
                                      const LabelingSearchOptions& opts) {
  const Hypergraph& ph = p.hypergraph;
  for (const Edge& e : ph.edges()) {
    if (e.size() < 3) {
      throw InputError("compiled edge of size " + std::to_string(e.size()) +
                       " admits no loop labeling (a cycle needs >= 3 edges)");
    }
  }

  LabelingSearchResult result;
  if (ph.num_edges() == 0) {
    result.labelings.push_back(LoopLabeling{});
    result.examined = 1;
    return result;
  }

  auto order = weakly_fundamental_edge_order(ph);
  if (!order) {
    throw UnsupportedError(
        "no weakly fundamental edge order exists; the labeling search is only "
        "justified for weakly fundamental sources");
  }

  VertexIndex vidx(ph);
  State initial;
  initial.labels.assign(ph.num_vertices(), std::nullopt);

  std::map<std::string, State> wave;
  wave.emplace("", std::move(initial));
  bool label_cap_hit = false;

  for (std::size_t step = 0; step < order->size(); ++step) {
    const Edge& e = ph.edges()[(*order)[step]];
    std::map<std::string, State> next;
    for (const auto& [key, state] : wave) {
      std::vector<std::size_t> unlabeled;
      std::vector<IEdge> old_labels;
      for (VertexId v : e) {
        std::size_t posn = vidx.position(v);
        if (state.labels[posn]) {
          old_labels.push_back(*state.labels[posn]);
        } else {
          unlabeled.push_back(posn);
        }
      }
      std::vector<CycleCandidate> cands = enumerate_cycles(
          state, old_labels, e.size(), opts.max_labels, label_cap_hit);

      for (const CycleCandidate& cand : cands) {
        // every bijection of new labels onto the unlabeled vertices
        std::vector<std::size_t> perm(cand.new_edges.size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        do {
          State child = state;
          for (std::size_t i = 0; i < unlabeled.size(); ++i) {
            child.labels[unlabeled[i]] = cand.new_edges[perm[i]];
          }
          for (const IEdge& ne : cand.new_edges) child.graph_edges.insert(ne);
          for (InducedId f = 1; f <= cand.fresh_used; ++f) {
            child.dsu.push_back(state.num_induced + f);
          }
          child.num_induced = state.num_induced + cand.fresh_used;
          for (const IEdge& ne : cand.new_edges) {
            InducedId ra = child.find(ne.first);
            InducedId rb = child.find(ne.second);
            if (ra != rb) child.dsu[ra - 1] = rb;
          }
          child.components = cand.components_after;

          if (step + 1 == order->size()) ++result.examined;
          std::string ckey =
              labeling_canonical_form(ph, state_to_labeling(ph, child)).bytes();
          next.emplace(std::move(ckey), std::move(child));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
    wave = std::move(next);
  }

  if (label_cap_hit) {
    throw GuardError("labeling search exceeded max_labels = " +
                     std::to_string(opts.max_labels));
  }

  for (const auto& [key, state] : wave) {
    result.labelings.push_back(state_to_labeling(ph, state));
  }
  return result;
}

PreimageResult preimage(const CompiledHypergraph& p,
                        const LabelingSearchOptions& opts) {
  LabelingSearchResult search = search_labelings(p, opts);
  PreimageResult out;
  out.labelings_examined = search.examined;
  out.exhaustive = search.exhaustive;
  for (const LoopLabeling& l : search.labelings) {
    out.classes.insert(canonical_form(induced_graph(p.hypergraph, l)));
  }
  return out;
}

}  // namespace parity
