#include "parity/compile.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

namespace parity {

namespace {

std::vector<Edge> basis_edge_union(const Gf2Basis& basis) {
  std::set<Edge> out;
  for (const EdgeVector& v : basis.vectors()) {
    for (const Edge& e : v.support()) out.insert(e);
  }
  return {out.begin(), out.end()};
}

CompiledHypergraph compile_impl(const Hypergraph& h, const Gf2Basis& basis,
                                std::vector<Edge> enumeration) {
  for (const EdgeVector& v : basis.vectors()) {
    if (!is_constraint(h, v)) {
      throw InputError("basis element is not a constraint of the hypergraph");
    }
  }
  const std::size_t m = enumeration.size();
  std::map<Edge, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[enumeration[i]] = i;

  std::vector<VertexId> vertices;
  for (std::size_t i = 1; i <= m; ++i) vertices.push_back(static_cast<VertexId>(i));
  std::vector<Edge> edges;
  for (const EdgeVector& v : basis.vectors()) {
    Edge compiled;
    for (const Edge& e : v.support()) {
      compiled.push_back(static_cast<VertexId>(pos.at(e) + 1));
    }
    edges.push_back(make_edge(std::move(compiled)));
  }

  CompiledHypergraph out;
  out.hypergraph = Hypergraph::create(std::move(vertices), std::move(edges));
  out.source_edges = std::move(enumeration);
  out.basis = basis;
  return out;
}

}  // namespace

CompiledHypergraph compile(const Hypergraph& h, const Gf2Basis& basis) {
  return compile_impl(h, basis, basis_edge_union(basis));
}

CompiledHypergraph compile_with_enumeration(const Hypergraph& h, const Gf2Basis& basis,
                                            const std::vector<Edge>& enumeration) {
  std::vector<Edge> cleaned;
  for (const Edge& raw : enumeration) {
    Edge e = raw;
    std::sort(e.begin(), e.end());
    cleaned.push_back(std::move(e));
  }
  std::vector<Edge> expected = basis_edge_union(basis);
  std::vector<Edge> sorted_given = cleaned;
  std::sort(sorted_given.begin(), sorted_given.end());
  if (sorted_given != expected) {
    throw InputError("enumeration is not a permutation of the basis edge set E_B");
  }
  return compile_impl(h, basis, std::move(cleaned));
}

BasisEnumeration enumerate_bases(const Gf2Basis& space, std::size_t cap) {
  const std::size_t n = space.dim();
  if (n > kEnumerateBasesDimCap) {
    throw GuardError("enumerate_bases: dimension " + std::to_string(n) +
                     " exceeds the cap of " + std::to_string(kEnumerateBasesDimCap));
  }
  BasisEnumeration out;
  const std::uint32_t limit = static_cast<std::uint32_t>(1u << n);

  // Coefficient masks over the input basis; a set {c_1 < ... < c_n} of
  // independent masks is one unordered basis of the span. Independence is
  // tracked with an xor-basis keyed by highest set bit.
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> xor_basis(n, 0);  // slot i: element with top bit i

  auto reduce = [&](std::uint32_t c) {
    for (std::size_t bit = n; bit-- > 0;) {
      if ((c >> bit) & 1u) {
        if (xor_basis[bit] == 0) break;
        c ^= xor_basis[bit];
      }
    }
    return c;
  };

  auto insert = [&](std::uint32_t c) {
    c = reduce(c);
    for (std::size_t bit = n; bit-- > 0;) {
      if ((c >> bit) & 1u) {
        xor_basis[bit] = c;
        return bit;
      }
    }
    throw InputError("insert of dependent coefficient vector");
  };

  std::function<void(std::uint32_t)> dfs = [&](std::uint32_t min_next) {
    if (out.truncated) return;
    if (chosen.size() == n) {
      std::vector<EdgeVector> vectors;
      for (std::uint32_t c : chosen) {
        EdgeVector v = EdgeVector::zero(space.index());
        for (std::size_t i = 0; i < n; ++i) {
          if ((c >> i) & 1u) v = sym_diff(v, space.vectors()[i]);
        }
        vectors.push_back(std::move(v));
      }
      if (out.bases.size() >= cap) {
        out.truncated = true;
        return;
      }
      out.bases.push_back(Gf2Basis::create(std::move(vectors), space.index()));
      return;
    }
    for (std::uint32_t c = min_next; c < limit; ++c) {
      if (reduce(c) == 0) continue;
      std::size_t slot = insert(c);
      chosen.push_back(c);
      dfs(c + 1);
      chosen.pop_back();
      xor_basis[slot] = 0;
      if (out.truncated) return;
    }
  };

  if (n == 0) {
    out.bases.push_back(Gf2Basis());  // the empty basis of the trivial space
    return out;
  }
  dfs(1);
  return out;
}

CompiledSet compiled_set(const Hypergraph& h, std::size_t cap, unsigned threads) {
  Gf2Basis space = constraint_space_basis(h);
  BasisEnumeration en = enumerate_bases(space, cap);

  CompiledSet out;
  out.exhaustive = !en.truncated;

  if (threads <= 1 || en.bases.size() < 2 * threads) {
    for (const Gf2Basis& b : en.bases) {
      out.classes.insert(canonical_form(compile(h, b).hypergraph));
    }
    return out;
  }

  std::vector<std::set<CanonicalForm>> partials(threads);
  std::vector<std::thread> workers;
  const std::size_t chunk = (en.bases.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t]() {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(en.bases.size(), lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        partials[t].insert(canonical_form(compile(h, en.bases[i]).hypergraph));
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& p : partials) out.classes.merge(p);
  return out;
}

bool par_equal(const Hypergraph& g1, const Hypergraph& g2, std::size_t cap) {
  if (!g1.is_graph() || !g2.is_graph()) {
    throw InputError("par_equal requires graphs");
  }
  const std::size_t d1 = dim_formula(g1);
  const std::size_t d2 = dim_formula(g2);
  if (d1 != d2) return false;
  if (d1 == 0) return true;  // both compile to the empty hypergraph

  Gf2Basis b1 = cycle_basis(g1);
  Gf2Basis b2 = cycle_basis(g2);
  std::size_t eb1 = basis_edge_union(b1).size();
  std::size_t eb2 = basis_edge_union(b2).size();
  if (eb1 != eb2) return false;

  // Fast path: one isomorphic compiled pair already decides equality.
  CanonicalForm f1 = canonical_form(compile(g1, b1).hypergraph);
  CanonicalForm f2 = canonical_form(compile(g2, b2).hypergraph);
  if (f1 == f2) return true;

  CompiledSet set1 = compiled_set(g1, cap);
  if (!set1.exhaustive) {
    throw GuardError("par_equal: basis enumeration truncated; raise the cap");
  }
  return set1.contains(f2);
}

}  // namespace parity
