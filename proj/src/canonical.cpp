#include "parity/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace parity {

namespace {

void put_u32(std::string& out, std::uint32_t x) {
  out.push_back(static_cast<char>((x >> 24) & 0xff));
  out.push_back(static_cast<char>((x >> 16) & 0xff));
  out.push_back(static_cast<char>((x >> 8) & 0xff));
  out.push_back(static_cast<char>(x & 0xff));
}

std::uint32_t get_u32(const std::string& in, std::size_t& pos) {
  if (pos + 4 > in.size()) throw InputError("truncated canonical form");
  std::uint32_t x = 0;
  for (int i = 0; i < 4; ++i) {
    x = (x << 8) | static_cast<unsigned char>(in[pos++]);
  }
  return x;
}

// Partition of dense vertex positions into ordered cells. Cell order is part
// of the state: canonical ranks are assigned cell by cell.
using Partition = std::vector<std::vector<std::size_t>>;

struct CanonSearch {
  std::size_t n;
  std::vector<std::vector<std::size_t>> edges;          // positions, sorted
  std::vector<std::vector<std::size_t>> incident;       // vertex -> edge ids
  std::vector<std::uint32_t> colors;                    // per position
  bool use_colors = false;
  std::set<std::vector<std::size_t>> edge_set;          // for automorphism tests

  std::string best;
  bool have_best = false;

  // Whether swapping u and v alone is an automorphism. Used to prune the
  // cell loop: the subtrees of interchangeable vertices produce identical
  // encodings (twins, isolated vertices, same-side bipartite vertices).
  bool transposition_fixes(std::size_t u, std::size_t v) const {
    if (colors[u] != colors[v]) return false;
    for (std::size_t e : incident[u]) {
      std::vector<std::size_t> mapped;
      mapped.reserve(edges[e].size());
      for (std::size_t w : edges[e]) {
        mapped.push_back(w == u ? v : (w == v ? u : w));
      }
      std::sort(mapped.begin(), mapped.end());
      if (!edge_set.count(mapped)) return false;
    }
    for (std::size_t e : incident[v]) {
      std::vector<std::size_t> mapped;
      mapped.reserve(edges[e].size());
      for (std::size_t w : edges[e]) {
        mapped.push_back(w == u ? v : (w == v ? u : w));
      }
      std::sort(mapped.begin(), mapped.end());
      if (!edge_set.count(mapped)) return false;
    }
    return true;
  }

  // Signature-driven refinement. Signatures are isomorphism-invariant given
  // the current cell indices, so splitting and reordering cells by signature
  // keeps the whole procedure relabeling-invariant.
  void refine(Partition& part) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::size_t> cell_of(n);
      for (std::size_t c = 0; c < part.size(); ++c) {
        for (std::size_t v : part[c]) cell_of[v] = c;
      }
      Partition next;
      for (const auto& cell : part) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // signature: for each incident edge, its size plus the sorted cell
        // ids of all its members
        std::map<std::string, std::vector<std::size_t>> split;
        for (std::size_t v : cell) {
          std::vector<std::vector<std::size_t>> sig;
          for (std::size_t e : incident[v]) {
            std::vector<std::size_t> row;
            row.push_back(edges[e].size());
            for (std::size_t w : edges[e]) row.push_back(cell_of[w]);
            std::sort(row.begin() + 1, row.end());
            sig.push_back(std::move(row));
          }
          std::sort(sig.begin(), sig.end());
          std::ostringstream key;
          for (const auto& row : sig) {
            for (std::size_t x : row) key << x << ',';
            key << ';';
          }
          split[key.str()].push_back(v);
        }
        if (split.size() > 1) changed = true;
        for (auto& [key, members] : split) {
          std::sort(members.begin(), members.end());
          next.push_back(std::move(members));
        }
      }
      part = std::move(next);
    }
  }

  std::string encode(const std::vector<std::size_t>& rank_of) const {
    std::string out;
    put_u32(out, use_colors ? 1u : 0u);
    put_u32(out, static_cast<std::uint32_t>(n));
    put_u32(out, static_cast<std::uint32_t>(edges.size()));
    if (use_colors) {
      // canonical-rank order
      std::vector<std::uint32_t> by_rank(n);
      for (std::size_t v = 0; v < n; ++v) by_rank[rank_of[v]] = colors[v];
      for (std::uint32_t c : by_rank) put_u32(out, c);
    }
    std::vector<std::vector<std::size_t>> mapped;
    mapped.reserve(edges.size());
    for (const auto& e : edges) {
      std::vector<std::size_t> m;
      m.reserve(e.size());
      for (std::size_t v : e) m.push_back(rank_of[v]);
      std::sort(m.begin(), m.end());
      mapped.push_back(std::move(m));
    }
    std::sort(mapped.begin(), mapped.end());
    for (const auto& e : mapped) {
      put_u32(out, static_cast<std::uint32_t>(e.size()));
      for (std::size_t v : e) put_u32(out, static_cast<std::uint32_t>(v));
    }
    return out;
  }

  void search(Partition part) {
    refine(part);
    std::size_t target = part.size();
    for (std::size_t c = 0; c < part.size(); ++c) {
      if (part[c].size() > 1) {
        target = c;
        break;
      }
    }
    if (target == part.size()) {
      std::vector<std::size_t> rank_of(n);
      for (std::size_t c = 0; c < part.size(); ++c) rank_of[part[c][0]] = c;
      std::string enc = encode(rank_of);
      if (!have_best || enc < best) {
        best = std::move(enc);
        have_best = true;
      }
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v : part[target]) {
      bool redundant = false;
      for (std::size_t u : tried) {
        if (transposition_fixes(u, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(part.size() + 1);
      for (std::size_t c = 0; c < part.size(); ++c) {
        if (c == target) {
          child.push_back({v});
          std::vector<std::size_t> rest;
          for (std::size_t w : part[c]) {
            if (w != v) rest.push_back(w);
          }
          child.push_back(std::move(rest));
        } else {
          child.push_back(part[c]);
        }
      }
      search(std::move(child));
    }
  }
};

CanonicalForm canonicalize(const Hypergraph& h,
                           const std::vector<std::uint32_t>* colors,
                           std::size_t vertex_cap) {
  if (h.num_vertices() > vertex_cap) {
    throw GuardError("instance too large: " + std::to_string(h.num_vertices()) +
                     " vertices exceeds the cap of " + std::to_string(vertex_cap));
  }
  if (colors != nullptr && colors->size() != h.num_vertices()) {
    throw InputError("color vector length does not match vertex count");
  }

  VertexIndex idx(h);
  CanonSearch cs;
  cs.n = idx.size();
  cs.incident.resize(cs.n);
  for (const Edge& e : h.edges()) {
    std::vector<std::size_t> pe;
    pe.reserve(e.size());
    for (VertexId v : e) pe.push_back(idx.position(v));
    std::sort(pe.begin(), pe.end());
    for (std::size_t p : pe) cs.incident[p].push_back(cs.edges.size());
    cs.edge_set.insert(pe);
    cs.edges.push_back(std::move(pe));
  }
  if (colors != nullptr) {
    cs.use_colors = true;
    cs.colors = *colors;
  } else {
    cs.colors.assign(cs.n, 0);
  }

  // Initial partition: color, then degree, then incident edge-size multiset.
  std::map<std::tuple<std::uint32_t, std::size_t, std::vector<std::size_t>>,
           std::vector<std::size_t>>
      cells;
  for (std::size_t v = 0; v < cs.n; ++v) {
    std::vector<std::size_t> sizes;
    for (std::size_t e : cs.incident[v]) sizes.push_back(cs.edges[e].size());
    std::sort(sizes.begin(), sizes.end());
    cells[{cs.colors[v], cs.incident[v].size(), std::move(sizes)}].push_back(v);
  }
  Partition part;
  for (auto& [key, members] : cells) part.push_back(std::move(members));

  cs.search(std::move(part));
  return CanonicalForm(std::move(cs.best));
}

}  // namespace

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

Hypergraph CanonicalForm::representative() const {
  std::size_t pos = 0;
  std::uint32_t colored = get_u32(bytes_, pos);
  std::uint32_t n = get_u32(bytes_, pos);
  std::uint32_t m = get_u32(bytes_, pos);
  if (colored) pos += 4 * static_cast<std::size_t>(n);  // skip color block
  std::vector<VertexId> vertices;
  for (std::uint32_t v = 1; v <= n; ++v) vertices.push_back(v);
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < m; ++i) {
    std::uint32_t sz = get_u32(bytes_, pos);
    Edge e;
    for (std::uint32_t j = 0; j < sz; ++j) {
      e.push_back(get_u32(bytes_, pos) + 1);  // ranks are 0-based
    }
    edges.push_back(make_edge(std::move(e)));
  }
  return Hypergraph::create(std::move(vertices), std::move(edges));
}

CanonicalForm canonical_form(const Hypergraph& h, std::size_t vertex_cap) {
  return canonicalize(h, nullptr, vertex_cap);
}

CanonicalForm canonical_form_colored(const Hypergraph& h,
                                     const std::vector<std::uint32_t>& colors,
                                     std::size_t vertex_cap) {
  return canonicalize(h, &colors, vertex_cap);
}

bool is_isomorphic(const Hypergraph& h1, const Hypergraph& h2, std::size_t vertex_cap) {
  if (h1.num_vertices() != h2.num_vertices() || h1.num_edges() != h2.num_edges()) {
    return false;
  }
  return canonical_form(h1, vertex_cap) == canonical_form(h2, vertex_cap);
}

}  // namespace parity
