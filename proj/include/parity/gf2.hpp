#ifndef PARITY_GF2_HPP
#define PARITY_GF2_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "parity/hypergraph.hpp"

namespace parity {

// Ordered list of edges establishing vector coordinates. Shared (immutable)
// between all vectors over the same hypergraph so index mismatches are cheap
// to detect.
class EdgeIndex {
 public:
  // Coordinates in sorted edge order; the canonical enumeration used
  // throughout for reproducible output.
  static std::shared_ptr<const EdgeIndex> for_hypergraph(const Hypergraph& h);

  // Explicit enumeration (e.g. a table from a worked example). Edges must be
  // distinct.
  static std::shared_ptr<const EdgeIndex> from_edges(std::vector<Edge> edges);

  std::size_t size() const { return edges_.size(); }
  const Edge& edge(std::size_t pos) const { return edges_[pos]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t position(const Edge& e) const;  // throws InputError if absent
  bool contains(const Edge& e) const;

  bool operator==(const EdgeIndex& other) const { return edges_ == other.edges_; }

 private:
  explicit EdgeIndex(std::vector<Edge> edges);
  std::vector<Edge> edges_;
  std::vector<std::pair<Edge, std::size_t>> lookup_;  // sorted for position()
};

using EdgeIndexPtr = std::shared_ptr<const EdgeIndex>;

// Characteristic vector of an edge subset over a fixed EdgeIndex. Addition
// is symmetric difference, i.e. componentwise XOR.
class EdgeVector {
 public:
  static EdgeVector zero(EdgeIndexPtr index);
  static EdgeVector from_edges(EdgeIndexPtr index, const std::vector<Edge>& edges);

  const EdgeIndexPtr& index() const { return index_; }
  std::size_t length() const { return index_->size(); }

  bool test(std::size_t pos) const;
  void set(std::size_t pos, bool value = true);

  bool is_zero() const;
  std::size_t popcount() const;

  // Support as a sorted list of edges.
  std::vector<Edge> support() const;

  bool same_index(const EdgeVector& other) const;

  bool operator==(const EdgeVector& other) const;
  // Deterministic order: lexicographic on coordinates (position 0 first).
  bool operator<(const EdgeVector& other) const;

  friend EdgeVector sym_diff(const EdgeVector& a, const EdgeVector& b);

 private:
  EdgeIndexPtr index_;
  std::vector<std::uint64_t> words_;
};

// Componentwise XOR; throws InputError when the operands disagree on their
// EdgeIndex.
EdgeVector sym_diff(const EdgeVector& a, const EdgeVector& b);

// Ordered independent set of nonzero EdgeVectors spanning a cycle or
// constraint subspace.
class Gf2Basis {
 public:
  Gf2Basis() = default;

  // Validates: shared index, no zero vector, linear independence.
  static Gf2Basis create(std::vector<EdgeVector> vectors, EdgeIndexPtr index);

  std::size_t dim() const { return vectors_.size(); }
  const std::vector<EdgeVector>& vectors() const { return vectors_; }
  const EdgeIndexPtr& index() const { return index_; }

  bool is_fundamental() const { return is_fundamental_; }
  bool is_weakly_fundamental() const { return is_weakly_fundamental_; }
  // Witnessing order (indices into vectors()) when weakly fundamental.
  const std::vector<std::size_t>& weakly_fundamental_order() const {
    return weakly_fundamental_order_;
  }

  void set_classification(bool fundamental, bool weakly,
                          std::vector<std::size_t> order);

 private:
  EdgeIndexPtr index_;
  std::vector<EdgeVector> vectors_;
  bool is_fundamental_ = false;
  bool is_weakly_fundamental_ = false;
  std::vector<std::size_t> weakly_fundamental_order_;
};

// True iff every vertex touched by c meets an even number of c's edges.
bool is_constraint(const Hypergraph& h, const EdgeVector& c);

// Basis of the constraint space: kernel of the vertex-edge incidence matrix
// over GF(2), by Gaussian elimination. For graphs this equals a cycle-space
// basis.
Gf2Basis constraint_space_basis(const Hypergraph& h);

// Fundamental cycle basis from a breadth-first spanning forest grown from
// the lowest vertex id of each component. Every element is a simple cycle.
// Throws InputError when h is not a graph.
Gf2Basis cycle_basis(const Hypergraph& g);

// |E| - |V| + c for graphs.
std::size_t dim_formula(const Hypergraph& g);

// GF(2) coefficients of c over the basis if c lies in its span.
// coefficients[i] multiplies basis.vectors()[i].
std::optional<std::vector<std::uint8_t>> in_span(const Gf2Basis& basis,
                                                 const EdgeVector& c);

inline constexpr std::size_t kDefaultEnumerateSpaceCap = std::size_t{1} << 20;

// All 2^dim span elements, zero first, in mask order (bit i selects
// basis vector i). Throws GuardError when 2^dim exceeds the cap.
std::vector<EdgeVector> enumerate_space(const Gf2Basis& basis,
                                        std::size_t cap = kDefaultEnumerateSpaceCap);

// True iff the support of c is a simple cycle of the graph underlying its
// index: nonempty, all edges of size two, every touched vertex of degree
// exactly two, and connected.
bool is_simple_cycle(const EdgeVector& c);

enum class BasisKind { kFundamental, kWeaklyFundamental, kOther };

struct BasisClassification {
  BasisKind kind = BasisKind::kOther;
  bool is_fundamental = false;
  bool is_weakly_fundamental = false;
  // A witnessing enumeration (indices into the basis) when weakly
  // fundamental; for fundamental bases any order works and the identity is
  // reported.
  std::vector<std::size_t> order;
};

inline constexpr std::size_t kClassifyDimCap = 20;

// Classifies per the fundamental / weakly fundamental cycle-basis classes.
// Both classes require every element to be a simple cycle. The order search
// is exponential in the basis size and guarded at dim <= 20.
BasisClassification classify_basis(const Gf2Basis& basis);

// Applies classify_basis and returns a copy with the flags set.
Gf2Basis with_classification(Gf2Basis basis);

}  // namespace parity

#endif  // PARITY_GF2_HPP
