#ifndef PARITY_CANONICAL_HPP
#define PARITY_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "parity/hypergraph.hpp"

namespace parity {

inline constexpr std::size_t kDefaultCanonVertexCap = 64;

// Relabeling-invariant key: two hypergraphs produce the same bytes iff they
// are isomorphic. Usable as a map/set key; representative() reconstructs the
// canonically labeled hypergraph (vertices 1..n).
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string hex() const;

  Hypergraph representative() const;

  auto operator<=>(const CanonicalForm& other) const = default;

 private:
  std::string bytes_;
};

// Exact canonicalization by partition refinement plus backtracking over
// target cells; exponential in the worst case, which is acceptable at the
// instance sizes this library guards for. Throws GuardError when the vertex
// count exceeds vertex_cap ("instance too large").
CanonicalForm canonical_form(const Hypergraph& h,
                             std::size_t vertex_cap = kDefaultCanonVertexCap);

// Same, but only color-preserving relabelings are considered: colors[i] is
// the color of the i-th vertex in h.vertices() order, and the color values
// are part of the key. Used to compare vertex-labeled structures.
CanonicalForm canonical_form_colored(const Hypergraph& h,
                                     const std::vector<std::uint32_t>& colors,
                                     std::size_t vertex_cap = kDefaultCanonVertexCap);

// True iff an edge-preserving vertex bijection exists. Consistent with
// canonical_form equality by construction.
bool is_isomorphic(const Hypergraph& h1, const Hypergraph& h2,
                   std::size_t vertex_cap = kDefaultCanonVertexCap);

}  // namespace parity

#endif  // PARITY_CANONICAL_HPP
