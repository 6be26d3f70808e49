#ifndef PARITY_JSON_IO_HPP
#define PARITY_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "parity/compile.hpp"
#include "parity/gf2.hpp"
#include "parity/hypergraph.hpp"
#include "parity/labeling.hpp"
#include "parity/rect.hpp"

namespace parity::io {

using json = nlohmann::json;

// Hypergraph wire format: {"vertices":[int...],"edges":[[int...]...]} with
// vertices and edges sorted ascending. Emission is byte-stable.
json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);
std::string hypergraph_to_string(const Hypergraph& h);
Hypergraph hypergraph_from_string(const std::string& text);

// Basis: {"edge_index":[edge...],"vectors":[[edge...]...],"dim":N} plus
// classification flags when set.
json basis_to_json(const Gf2Basis& b);
Gf2Basis basis_from_json(const json& j);

// Compiled hypergraph:
// {"num_vertices":m,"edges":[[int...]...],"source_edges":[[int...]...]}
// where compiled vertex i corresponds to source_edges[i-1].
json compiled_to_json(const CompiledHypergraph& c);
CompiledHypergraph compiled_from_json(const json& j);

// Treats an arbitrary hypergraph (e.g. a hand-written plaquette layout) as a
// compiled hypergraph with no recorded provenance.
CompiledHypergraph compiled_from_layout(Hypergraph h);

// Labeling: {"labels":{"<vertex>":[i,j],...}}
json labeling_to_json(const LoopLabeling& l);
LoopLabeling labeling_from_json(const json& j);

// {"classes":[hypergraph...],"exhaustive":bool,"labelings_examined":N}
json preimage_to_json(const PreimageResult& r);

// {"classes":[hypergraph...],"exhaustive":bool,"count":N}
json compiled_set_to_json(const CompiledSet& s);

// {"m":..,"n":..,"grid":[[[a,b]...]...],"plaquettes":[[ids]...],
//  "row_partition":[...],"col_partition":[...]}
json rect_to_json(const RectCompilation& r);

json rect_layout_to_json(const RectLayout& r);

// Canonical text form used everywhere output is emitted: 2-space indent plus
// trailing newline.
std::string dumps(const json& j);

}  // namespace parity::io

#endif  // PARITY_JSON_IO_HPP
