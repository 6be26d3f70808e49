#ifndef PARITY_LABELING_HPP
#define PARITY_LABELING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "parity/canonical.hpp"
#include "parity/compile.hpp"
#include "parity/hypergraph.hpp"

namespace parity {

// Unordered pair of distinct non-negative integers, stored (first < second):
// one edge of the induced graph.
using Label = std::pair<std::uint32_t, std::uint32_t>;

Label make_label(std::uint32_t i, std::uint32_t j);

// Injective map from hypergraph vertices to labels. Valid labelings map
// every edge into the cycle space of the induced graph.
struct LoopLabeling {
  std::map<VertexId, Label> labels;
};

// Graph whose vertices are the integers used by labels of edge-covered
// vertices and whose edges are those labels. Labels of isolated hypergraph
// vertices do not contribute. Throws InputError when a covered vertex is
// unlabeled.
Hypergraph induced_graph(const Hypergraph& h, const LoopLabeling& l);

// Checks the two defining properties: injectivity, and l(e) lying in the
// cycle space of the induced graph for every edge e.
bool is_loop_labeling(const Hypergraph& h, const LoopLabeling& l);

struct LabelingSearchOptions {
  // Cap on distinct induced-graph vertices a labeling may use. The search
  // never needs more than the compiled vertex count, so the default covers
  // everything this library's guards admit.
  std::size_t max_labels = 64;
};

struct LabelingSearchResult {
  std::vector<LoopLabeling> labelings;
  // Complete labelings generated before deduplication.
  std::uint64_t examined = 0;
  bool exhaustive = true;
};

// All loop labelings l of p with dim(L_{G_{p,l}}) = |E_p| whose per-edge
// images are simple cycles, up to renaming of label integers. For weakly
// fundamental sources this class determines the full parity preimage, which
// is the only use the library puts it to.
//
// The search places one compiled edge at a time along a weakly fundamental
// edge order: the already-labeled part of an edge must form a path in the
// current induced graph and the new part a path through fresh vertices
// joining that path's two endpoints, with the cycle-space dimension forced
// to grow by exactly one per edge. States equivalent up to renaming are
// merged after every step.
//
// Errors: InputError for an edge of size < 3 (no graph cycle that short);
// UnsupportedError when no weakly fundamental edge order exists; GuardError
// when max_labels is exceeded.
LabelingSearchResult search_labelings(const CompiledHypergraph& p,
                                      const LabelingSearchOptions& opts = {});

struct PreimageResult {
  std::set<CanonicalForm> classes;  // induced graphs, one form per class
  std::uint64_t labelings_examined = 0;
  bool exhaustive = true;
};

// Canonical forms of induced graphs over all found labelings: the parity
// preimage of [p] restricted to cycle-covered graphs.
PreimageResult preimage(const CompiledHypergraph& p,
                        const LabelingSearchOptions& opts = {});

// Key for labeling equality up to renaming of label integers: hypergraph
// vertices stay pinned, label integers may permute.
CanonicalForm labeling_canonical_form(const Hypergraph& h, const LoopLabeling& l);

// A weakly fundamental edge order (each edge owns a vertex unseen earlier),
// preferring orders that keep prefixes connected; nullopt when none exists.
std::optional<std::vector<std::size_t>> weakly_fundamental_edge_order(
    const Hypergraph& h);

}  // namespace parity

#endif  // PARITY_LABELING_HPP
