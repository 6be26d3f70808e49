#ifndef PARITY_ORACLE_HPP
#define PARITY_ORACLE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "parity/canonical.hpp"
#include "parity/compile.hpp"
#include "parity/hypergraph.hpp"

namespace parity {

// Brute-force reference implementations. Everything here scans exhaustively
// and exists to validate the optimized operations on small instances; none
// of it is reachable from the compilation pipeline itself.

inline constexpr std::size_t kBruteEdgeCap = 20;

// All even-degree edge subsets, by direct scan of all 2^|E| subsets.
// Guarded at |E| <= 20.
std::vector<EdgeVector> brute_constraint_space(const Hypergraph& h);

// Exhaustive list of pairwise non-isomorphic graphs with at most v_max
// vertices and e_max edges, no isolated vertices (plus the empty graph),
// generated by edge-subset enumeration and canonical deduplication.
class GraphCorpus {
 public:
  static GraphCorpus generate(std::size_t v_max, std::size_t e_max);

  // Corpus over an explicit set of graphs (deduplicated up to isomorphism);
  // for scans over hand-picked instances.
  static GraphCorpus from_graphs(const std::vector<Hypergraph>& graphs);

  // Cached variant: loads from cache_path when it matches (v_max, e_max),
  // regenerating and rewriting otherwise. The cache is a line-oriented file
  // of graph JSONs under a one-line header.
  static GraphCorpus load_or_generate(std::size_t v_max, std::size_t e_max,
                                      const std::string& cache_path);

  const std::vector<Hypergraph>& graphs() const { return graphs_; }
  std::size_t v_max() const { return v_max_; }
  std::size_t e_max() const { return e_max_; }

 private:
  std::vector<Hypergraph> graphs_;
  std::size_t v_max_ = 0;
  std::size_t e_max_ = 0;
};

// Corpus graphs g (restricted to cycle edges, i.e. g = g|_{E_L}) whose
// compiled set contains [p]; the brute-force counterpart of preimage().
std::set<CanonicalForm> brute_preimage(const CompiledHypergraph& p,
                                       const GraphCorpus& corpus);

struct UniquenessViolation {
  Hypergraph g1;
  Hypergraph g2;
  std::size_t dim = 0;
};

struct UniquenessReport {
  // dim <= 2 pairs that are par-equal yet non-isomorphic (expected: none)
  std::vector<UniquenessViolation> violations;
  // dim >= 3 par-equal non-isomorphic pairs (expected to exist at large
  // enough corpus bounds)
  std::vector<UniquenessViolation> witnesses;
  std::size_t pairs_checked = 0;
};

// Scans all corpus pairs with connected cycle space, g = g|_{E_L} and equal
// cycle dimension <= dim_limit: par-equality of distinct classes in
// dimension one or two is a violation; in dimension three and above it is
// recorded as a non-uniqueness witness.
UniquenessReport brute_uniqueness_scan(std::size_t dim_limit,
                                       const GraphCorpus& corpus);

// True iff the spanning set L_H of simple cycles is nonempty-connected under
// shared edges (or empty). Whole-space enumeration; small graphs only.
bool has_connected_cycle_space(const Hypergraph& g);

// Brute-force isomorphism by bijection search, for cross-checking the
// canonical form; factorial in the vertex count.
bool brute_is_isomorphic(const Hypergraph& h1, const Hypergraph& h2);

}  // namespace parity

#endif  // PARITY_ORACLE_HPP
