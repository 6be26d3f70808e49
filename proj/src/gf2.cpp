#include "parity/gf2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace parity {

EdgeIndex::EdgeIndex(std::vector<Edge> edges) : edges_(std::move(edges)) {
  lookup_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    lookup_.emplace_back(edges_[i], i);
  }
  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t i = 1; i < lookup_.size(); ++i) {
    if (lookup_[i].first == lookup_[i - 1].first) {
      throw InputError("edge enumeration contains a duplicate edge");
    }
  }
}

std::shared_ptr<const EdgeIndex> EdgeIndex::for_hypergraph(const Hypergraph& h) {
  return std::shared_ptr<const EdgeIndex>(new EdgeIndex(h.edges()));
}

std::shared_ptr<const EdgeIndex> EdgeIndex::from_edges(std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(std::move(e));
  return std::shared_ptr<const EdgeIndex>(new EdgeIndex(std::move(edges)));
}

std::size_t EdgeIndex::position(const Edge& e) const {
  auto it = std::lower_bound(
      lookup_.begin(), lookup_.end(), e,
      [](const std::pair<Edge, std::size_t>& entry, const Edge& key) {
        return entry.first < key;
      });
  if (it == lookup_.end() || it->first != e) {
    throw InputError("edge not present in the edge index");
  }
  return it->second;
}

bool EdgeIndex::contains(const Edge& e) const {
  auto it = std::lower_bound(
      lookup_.begin(), lookup_.end(), e,
      [](const std::pair<Edge, std::size_t>& entry, const Edge& key) {
        return entry.first < key;
      });
  return it != lookup_.end() && it->first == e;
}

EdgeVector EdgeVector::zero(EdgeIndexPtr index) {
  EdgeVector v;
  v.index_ = std::move(index);
  v.words_.assign((v.index_->size() + 63) / 64, 0);
  return v;
}

EdgeVector EdgeVector::from_edges(EdgeIndexPtr index, const std::vector<Edge>& edges) {
  EdgeVector v = zero(std::move(index));
  for (const Edge& raw : edges) {
    Edge e = raw;
    std::sort(e.begin(), e.end());
    v.set(v.index_->position(e));
  }
  return v;
}

bool EdgeVector::test(std::size_t pos) const {
  return (words_[pos / 64] >> (pos % 64)) & 1u;
}

void EdgeVector::set(std::size_t pos, bool value) {
  if (value) {
    words_[pos / 64] |= std::uint64_t{1} << (pos % 64);
  } else {
    words_[pos / 64] &= ~(std::uint64_t{1} << (pos % 64));
  }
}

bool EdgeVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t EdgeVector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

std::vector<Edge> EdgeVector::support() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < length(); ++i) {
    if (test(i)) out.push_back(index_->edge(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool EdgeVector::same_index(const EdgeVector& other) const {
  return index_ == other.index_ || *index_ == *other.index_;
}

bool EdgeVector::operator==(const EdgeVector& other) const {
  return same_index(other) && words_ == other.words_;
}

bool EdgeVector::operator<(const EdgeVector& other) const {
  for (std::size_t i = 0; i < std::min(length(), other.length()); ++i) {
    bool a = test(i);
    bool b = other.test(i);
    if (a != b) return b;  // 0 before 1 at the first differing coordinate
  }
  return length() < other.length();
}

EdgeVector sym_diff(const EdgeVector& a, const EdgeVector& b) {
  if (!a.same_index(b)) {
    throw InputError("symmetric difference of vectors over different edge indices");
  }
  EdgeVector out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    out.words_[i] ^= b.words_[i];
  }
  return out;
}

namespace {

// Row reduction working set: rows are (vector, coefficient mask over the
// original rows). Coefficient masks track how each reduced row was built;
// they are optional because rank checks on large bases do not need them.
struct ReducedRows {
  std::vector<EdgeVector> rows;
  std::vector<std::vector<std::uint8_t>> coeffs;
  std::vector<std::size_t> pivot;  // pivot position per stored row

  static ReducedRows build(const std::vector<EdgeVector>& input,
                           bool with_coeffs = true) {
    ReducedRows rr;
    for (std::size_t r = 0; r < input.size(); ++r) {
      EdgeVector v = input[r];
      std::vector<std::uint8_t> c;
      if (with_coeffs) {
        c.assign(input.size(), 0);
        c[r] = 1;
      }
      for (std::size_t k = 0; k < rr.rows.size(); ++k) {
        if (v.test(rr.pivot[k])) {
          v = sym_diff(v, rr.rows[k]);
          if (with_coeffs) {
            for (std::size_t j = 0; j < c.size(); ++j) c[j] ^= rr.coeffs[k][j];
          }
        }
      }
      if (v.is_zero()) continue;  // dependent row
      std::size_t p = 0;
      while (!v.test(p)) ++p;
      rr.rows.push_back(std::move(v));
      if (with_coeffs) rr.coeffs.push_back(std::move(c));
      rr.pivot.push_back(p);
    }
    return rr;
  }

  // Reduces c in place; returns the combination of original rows used, or
  // nullopt if c is outside the span.
  std::optional<std::vector<std::uint8_t>> express(EdgeVector c) const {
    std::vector<std::uint8_t> used(coeffs.empty() ? 0 : coeffs[0].size(), 0);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (c.test(pivot[k])) {
        c = sym_diff(c, rows[k]);
        for (std::size_t j = 0; j < used.size(); ++j) used[j] ^= coeffs[k][j];
      }
    }
    if (!c.is_zero()) return std::nullopt;
    return used;
  }
};

}  // namespace

Gf2Basis Gf2Basis::create(std::vector<EdgeVector> vectors, EdgeIndexPtr index) {
  for (const EdgeVector& v : vectors) {
    if (!(v.index() == index || *v.index() == *index)) {
      throw InputError("basis vector indexed over a different edge enumeration");
    }
    if (v.is_zero()) {
      throw InputError("basis must not contain the zero vector");
    }
  }
  ReducedRows rr = ReducedRows::build(vectors, /*with_coeffs=*/false);
  if (rr.rows.size() != vectors.size()) {
    throw InputError("basis vectors are linearly dependent");
  }
  Gf2Basis b;
  b.index_ = std::move(index);
  b.vectors_ = std::move(vectors);
  return b;
}

void Gf2Basis::set_classification(bool fundamental, bool weakly,
                                  std::vector<std::size_t> order) {
  is_fundamental_ = fundamental;
  is_weakly_fundamental_ = weakly;
  weakly_fundamental_order_ = std::move(order);
}

bool is_constraint(const Hypergraph& h, const EdgeVector& c) {
  if (!(*c.index() == *EdgeIndex::for_hypergraph(h))) {
    // accept any enumeration of h's edge set
    for (std::size_t i = 0; i < c.length(); ++i) {
      if (!h.has_edge(c.index()->edge(i))) {
        throw InputError("constraint vector indexed over foreign edges");
      }
    }
    if (c.length() != h.num_edges()) {
      throw InputError("constraint vector length does not match the edge set");
    }
  }
  std::map<VertexId, std::size_t> degree;
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (!c.test(i)) continue;
    for (VertexId v : c.index()->edge(i)) ++degree[v];
  }
  return std::all_of(degree.begin(), degree.end(),
                     [](const auto& kv) { return kv.second % 2 == 0; });
}

Gf2Basis constraint_space_basis(const Hypergraph& h) {
  EdgeIndexPtr index = EdgeIndex::for_hypergraph(h);
  const std::size_t m = index->size();
  VertexIndex vidx(h);

  // Incidence rows as m-bit masks.
  std::vector<EdgeVector> rows(vidx.size(), EdgeVector::zero(index));
  for (std::size_t e = 0; e < m; ++e) {
    for (VertexId v : index->edge(e)) {
      rows[vidx.position(v)].set(e);
    }
  }

  // Column-ordered elimination; pivot_row_for_col[c] is the row reduced at
  // column c, or npos for free columns.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_row_for_col(m, npos);
  std::vector<bool> row_used(rows.size(), false);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = npos;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!row_used[r] && rows[r].test(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == npos) continue;
    row_used[pivot] = true;
    pivot_row_for_col[col] = pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != pivot && rows[r].test(col)) {
        rows[r] = sym_diff(rows[r], rows[pivot]);
      }
    }
  }

  std::vector<EdgeVector> basis;
  for (std::size_t free_col = 0; free_col < m; ++free_col) {
    if (pivot_row_for_col[free_col] != npos) continue;
    EdgeVector v = EdgeVector::zero(index);
    v.set(free_col);
    for (std::size_t col = 0; col < m; ++col) {
      std::size_t r = pivot_row_for_col[col];
      if (r != npos && rows[r].test(free_col)) {
        v.set(col);
      }
    }
    basis.push_back(std::move(v));
  }
  return Gf2Basis::create(std::move(basis), index);
}

namespace {

struct Forest {
  // parent edge of each vertex position (npos at roots), plus depth
  std::vector<std::size_t> parent_pos;
  std::vector<std::size_t> parent_edge;
  std::vector<std::size_t> depth;
  std::vector<bool> edge_in_tree;
  std::size_t components = 0;
};

constexpr std::size_t kNoPos = static_cast<std::size_t>(-1);

Forest bfs_forest(const VertexIndex& vidx, const EdgeIndex& index) {
  const std::size_t n = vidx.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (nbr, edge)
  for (std::size_t e = 0; e < index.size(); ++e) {
    const Edge& ed = index.edge(e);
    std::size_t a = vidx.position(ed[0]);
    std::size_t b = vidx.position(ed[1]);
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  for (auto& lst : adj) std::sort(lst.begin(), lst.end());

  Forest f;
  f.parent_pos.assign(n, kNoPos);
  f.parent_edge.assign(n, kNoPos);
  f.depth.assign(n, 0);
  f.edge_in_tree.assign(index.size(), false);
  std::vector<bool> visited(n, false);

  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    ++f.components;
    visited[start] = true;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (const auto& [w, e] : adj[u]) {
        if (visited[w]) continue;
        visited[w] = true;
        f.parent_pos[w] = u;
        f.parent_edge[w] = e;
        f.depth[w] = f.depth[u] + 1;
        f.edge_in_tree[e] = true;
        q.push(w);
      }
    }
  }
  return f;
}

// Tree path between the endpoints of a non-tree edge, walking parents until
// the first common node.
std::vector<std::size_t> fundamental_cycle_edges(const Forest& f, std::size_t a,
                                                 std::size_t b) {
  std::vector<std::size_t> edges;
  std::size_t x = a;
  std::size_t y = b;
  while (f.depth[x] > f.depth[y]) {
    edges.push_back(f.parent_edge[x]);
    x = f.parent_pos[x];
  }
  while (f.depth[y] > f.depth[x]) {
    edges.push_back(f.parent_edge[y]);
    y = f.parent_pos[y];
  }
  while (x != y) {
    edges.push_back(f.parent_edge[x]);
    edges.push_back(f.parent_edge[y]);
    x = f.parent_pos[x];
    y = f.parent_pos[y];
  }
  return edges;
}

void require_graph(const Hypergraph& g, const char* op) {
  if (!g.is_graph()) {
    throw InputError(std::string(op) + " requires a graph (all edges of size two)");
  }
}

}  // namespace

Gf2Basis cycle_basis(const Hypergraph& g) {
  require_graph(g, "cycle_basis");
  EdgeIndexPtr index = EdgeIndex::for_hypergraph(g);
  VertexIndex vidx(g);
  Forest f = bfs_forest(vidx, *index);

  std::vector<EdgeVector> basis;
  for (std::size_t e = 0; e < index->size(); ++e) {
    if (f.edge_in_tree[e]) continue;
    const Edge& ed = index->edge(e);
    EdgeVector v = EdgeVector::zero(index);
    v.set(e);
    for (std::size_t t :
         fundamental_cycle_edges(f, vidx.position(ed[0]), vidx.position(ed[1]))) {
      v.set(t);
    }
    basis.push_back(std::move(v));
  }
  Gf2Basis b = Gf2Basis::create(std::move(basis), index);
  std::vector<std::size_t> order(b.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  b.set_classification(true, true, std::move(order));
  return b;
}

std::size_t dim_formula(const Hypergraph& g) {
  require_graph(g, "dim_formula");
  return g.num_edges() - g.num_vertices() + g.num_components();
}

std::optional<std::vector<std::uint8_t>> in_span(const Gf2Basis& basis,
                                                 const EdgeVector& c) {
  if (basis.dim() == 0) {
    if (c.is_zero()) return std::vector<std::uint8_t>{};
    return std::nullopt;
  }
  if (!(c.index() == basis.index() || *c.index() == *basis.index())) {
    throw InputError("vector and basis use different edge indices");
  }
  ReducedRows rr = ReducedRows::build(basis.vectors());
  return rr.express(c);
}

std::vector<EdgeVector> enumerate_space(const Gf2Basis& basis, std::size_t cap) {
  if (basis.dim() >= 63 || (std::size_t{1} << basis.dim()) > cap) {
    throw GuardError("enumerate_space: 2^" + std::to_string(basis.dim()) +
                     " elements exceeds the cap");
  }
  EdgeIndexPtr index =
      basis.index() ? basis.index() : EdgeIndex::from_edges({});
  std::vector<EdgeVector> out;
  const std::size_t total = std::size_t{1} << basis.dim();
  out.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    EdgeVector v = EdgeVector::zero(index);
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      if ((mask >> i) & 1u) v = sym_diff(v, basis.vectors()[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool is_simple_cycle(const EdgeVector& c) {
  if (c.is_zero()) return false;
  std::map<VertexId, std::size_t> degree;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (!c.test(i)) continue;
    const Edge& e = c.index()->edge(i);
    if (e.size() != 2) return false;
    ++degree[e[0]];
    ++degree[e[1]];
    edges.push_back(e);
  }
  for (const auto& [v, d] : degree) {
    if (d != 2) return false;
  }
  // connectivity of the support
  std::map<VertexId, VertexId> parent;
  for (const auto& [v, d] : degree) parent[v] = v;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : edges) parent[find(e[0])] = find(e[1]);
  std::set<VertexId> roots;
  for (const auto& [v, d] : degree) roots.insert(find(v));
  return roots.size() == 1;
}

namespace {

// Depth-first search for an enumeration satisfying the private-edge prefix
// condition. Any first element works; each later element must contribute an
// edge unseen so far.
bool weakly_fundamental_order(const std::vector<EdgeVector>& vs,
                              std::vector<std::size_t>& order,
                              std::vector<bool>& used, EdgeVector& covered,
                              std::set<std::vector<bool>>& dead) {
  if (order.size() == vs.size()) return true;
  std::vector<bool> key = used;
  if (dead.count(key)) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (used[i]) continue;
    bool has_private = false;
    for (std::size_t p = 0; p < vs[i].length() && !has_private; ++p) {
      if (vs[i].test(p) && !covered.test(p)) has_private = true;
    }
    if (!order.empty() && !has_private) continue;
    EdgeVector saved = covered;
    for (std::size_t p = 0; p < vs[i].length(); ++p) {
      if (vs[i].test(p)) covered.set(p);
    }
    used[i] = true;
    order.push_back(i);
    if (weakly_fundamental_order(vs, order, used, covered, dead)) return true;
    order.pop_back();
    used[i] = false;
    covered = saved;
  }
  dead.insert(std::move(key));
  return false;
}

}  // namespace

BasisClassification classify_basis(const Gf2Basis& basis) {
  BasisClassification out;
  if (basis.dim() > kClassifyDimCap) {
    throw GuardError("classify_basis: order search capped at dim " +
                     std::to_string(kClassifyDimCap));
  }
  const auto& vs = basis.vectors();
  for (const EdgeVector& v : vs) {
    if (!is_simple_cycle(v)) {
      return out;  // kOther
    }
  }

  bool fundamental = true;
  for (std::size_t i = 0; i < vs.size() && fundamental; ++i) {
    EdgeVector others = EdgeVector::zero(basis.index());
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (j == i) continue;
      for (std::size_t p = 0; p < vs[j].length(); ++p) {
        if (vs[j].test(p)) others.set(p);
      }
    }
    bool has_private = false;
    for (std::size_t p = 0; p < vs[i].length() && !has_private; ++p) {
      if (vs[i].test(p) && !others.test(p)) has_private = true;
    }
    fundamental = has_private;
  }

  std::vector<std::size_t> order;
  std::vector<bool> used(vs.size(), false);
  EdgeVector covered =
      basis.dim() == 0 ? EdgeVector() : EdgeVector::zero(basis.index());
  bool weakly = true;
  if (basis.dim() > 0) {
    std::set<std::vector<bool>> dead;
    weakly = weakly_fundamental_order(vs, order, used, covered, dead);
  }

  out.is_fundamental = fundamental;
  out.is_weakly_fundamental = weakly;
  out.order = std::move(order);
  if (fundamental) {
    out.kind = BasisKind::kFundamental;
  } else if (weakly) {
    out.kind = BasisKind::kWeaklyFundamental;
  } else {
    out.kind = BasisKind::kOther;
  }
  return out;
}

Gf2Basis with_classification(Gf2Basis basis) {
  BasisClassification c = classify_basis(basis);
  basis.set_classification(c.is_fundamental, c.is_weakly_fundamental, c.order);
  return basis;
}

}  // namespace parity
