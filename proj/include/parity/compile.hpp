#ifndef PARITY_COMPILE_HPP
#define PARITY_COMPILE_HPP

#include <optional>
#include <set>
#include <vector>

#include "parity/canonical.hpp"
#include "parity/gf2.hpp"
#include "parity/hypergraph.hpp"

namespace parity {

// Compiled hypergraph P_B of a basis: vertices 1..m index the edges E_B
// covered by the basis, and each basis constraint pulls back to one edge.
struct CompiledHypergraph {
  Hypergraph hypergraph;           // vertices 1..m
  std::vector<Edge> source_edges;  // enumeration: vertex i <-> source_edges[i-1]
  std::optional<Gf2Basis> basis;   // generating basis (provenance)

  std::size_t num_vertices() const { return hypergraph.num_vertices(); }
};

// Builds P_B under the canonical enumeration (E_B sorted ascending). The
// basis must consist of independent nonzero constraints of h.
CompiledHypergraph compile(const Hypergraph& h, const Gf2Basis& basis);

// Same with an explicit enumeration of E_B (position i holds h(i+1)), e.g. a
// table from a worked example. Must be a permutation of E_B.
CompiledHypergraph compile_with_enumeration(const Hypergraph& h, const Gf2Basis& basis,
                                            const std::vector<Edge>& enumeration);

inline constexpr std::size_t kEnumerateBasesDimCap = 12;
inline constexpr std::size_t kDefaultBasisCap = 100000;

struct BasisEnumeration {
  std::vector<Gf2Basis> bases;
  bool truncated = false;
};

// All bases of span(space), one per unordered independent set, generated in
// lexicographic coefficient order and truncated at cap. Throws GuardError
// when dim exceeds 12 (the basis count grows as prod(2^n - 2^i)).
BasisEnumeration enumerate_bases(const Gf2Basis& space,
                                 std::size_t cap = kDefaultBasisCap);

// Set of compiled hypergraphs P_H as canonical forms.
struct CompiledSet {
  std::set<CanonicalForm> classes;
  bool exhaustive = true;

  bool contains(const CanonicalForm& f) const { return classes.count(f) > 0; }
};

// Canonical forms of compile(h, B) over all constraint-space bases. A cap
// hit yields a truncated result with exhaustive=false, not an error.
// threads > 1 partitions the basis sequence across workers; compile() is
// pure, so the merged result is identical.
CompiledSet compiled_set(const Hypergraph& h, std::size_t cap = kDefaultBasisCap,
                         unsigned threads = 1);

// True iff g1 and g2 have the same set of compiled hypergraphs. One
// isomorphic compiled pair is enough to decide equality, so the fundamental
// bases are compared first before falling back to full enumeration of one
// side. Throws GuardError when enumeration would be truncated by cap.
bool par_equal(const Hypergraph& g1, const Hypergraph& g2,
               std::size_t cap = kDefaultBasisCap);

}  // namespace parity

#endif  // PARITY_COMPILE_HPP
