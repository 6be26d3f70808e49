#include "parity.h"

#include <cstring>
#include <string>

#include "parity/canonical.hpp"
#include "parity/compile.hpp"
#include "parity/gf2.hpp"
#include "parity/json_io.hpp"
#include "parity/labeling.hpp"
#include "parity/problem.hpp"
#include "parity/rect.hpp"

// Opaque handle: owns a core hypergraph value.
struct parity_hypergraph {
  parity::Hypergraph value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
parity_status guarded(F&& fn) {
  try {
    fn();
    return PARITY_OK;
  } catch (const parity::InputError& e) {
    g_last_error = e.what();
    return PARITY_ERR_INPUT;
  } catch (const parity::GuardError& e) {
    g_last_error = e.what();
    return PARITY_ERR_GUARD;
  } catch (const parity::UnsupportedError& e) {
    g_last_error = e.what();
    return PARITY_ERR_UNSUPPORTED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PARITY_ERR_INTERNAL;
  }
}

parity_status require(bool cond, const char* message) {
  if (!cond) {
    g_last_error = message;
    return PARITY_ERR_INPUT;
  }
  return PARITY_OK;
}

}  // namespace

extern "C" {

const char* parity_version(void) { return "parity 1.0.0"; }

const char* parity_last_error(void) { return g_last_error.c_str(); }

void parity_string_free(char* s) { delete[] s; }

parity_status parity_hypergraph_from_json(const char* json_text,
                                          parity_hypergraph** out) {
  if (auto st = require(json_text && out, "null argument")) return st;
  return guarded([&] {
    auto h = parity::io::hypergraph_from_string(json_text);
    *out = new parity_hypergraph{std::move(h)};
  });
}

parity_status parity_hypergraph_from_ising(const char* text, parity_hypergraph** out,
                                           char** out_warnings) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] {
    parity::ParsedProblem problem = parity::parse_problem(text);
    if (out_warnings) {
      parity::io::json w = parity::io::json::array();
      for (const std::string& s : problem.warnings) w.push_back(s);
      *out_warnings = dup_string(w.dump());
    }
    *out = new parity_hypergraph{std::move(problem.graph)};
  });
}

void parity_hypergraph_free(parity_hypergraph* h) { delete h; }

parity_status parity_hypergraph_to_json(const parity_hypergraph* h, char** out_json) {
  if (auto st = require(h && out_json, "null argument")) return st;
  return guarded([&] {
    *out_json = dup_string(parity::io::dumps(parity::io::hypergraph_to_json(h->value)));
  });
}

parity_status parity_is_graph(const parity_hypergraph* h, int* out) {
  if (auto st = require(h && out, "null argument")) return st;
  *out = h->value.is_graph() ? 1 : 0;
  return PARITY_OK;
}

parity_status parity_canonical_key(const parity_hypergraph* h, char** out_hex) {
  if (auto st = require(h && out_hex, "null argument")) return st;
  return guarded([&] { *out_hex = dup_string(parity::canonical_form(h->value).hex()); });
}

parity_status parity_is_isomorphic(const parity_hypergraph* a,
                                   const parity_hypergraph* b, int* out) {
  if (auto st = require(a && b && out, "null argument")) return st;
  return guarded([&] { *out = parity::is_isomorphic(a->value, b->value) ? 1 : 0; });
}

parity_status parity_cycle_basis(const parity_hypergraph* g, char** out_json) {
  if (auto st = require(g && out_json, "null argument")) return st;
  return guarded([&] {
    parity::Gf2Basis b = parity::with_classification(parity::cycle_basis(g->value));
    *out_json = dup_string(parity::io::dumps(parity::io::basis_to_json(b)));
  });
}

parity_status parity_constraint_basis(const parity_hypergraph* h, char** out_json) {
  if (auto st = require(h && out_json, "null argument")) return st;
  return guarded([&] {
    parity::Gf2Basis b = parity::constraint_space_basis(h->value);
    if (h->value.is_graph()) b = parity::with_classification(std::move(b));
    *out_json = dup_string(parity::io::dumps(parity::io::basis_to_json(b)));
  });
}

parity_status parity_cycle_dim(const parity_hypergraph* g, uint64_t* out_dim) {
  if (auto st = require(g && out_dim, "null argument")) return st;
  return guarded([&] { *out_dim = parity::dim_formula(g->value); });
}

parity_status parity_compile_auto(const parity_hypergraph* h, char** out_json) {
  if (auto st = require(h && out_json, "null argument")) return st;
  return guarded([&] {
    parity::Gf2Basis basis = h->value.is_graph()
                                 ? parity::cycle_basis(h->value)
                                 : parity::constraint_space_basis(h->value);
    parity::CompiledHypergraph c = parity::compile(h->value, basis);
    *out_json = dup_string(parity::io::dumps(parity::io::compiled_to_json(c)));
  });
}

parity_status parity_compile_basis_index(const parity_hypergraph* h, uint64_t index,
                                         uint64_t cap, char** out_json) {
  if (auto st = require(h && out_json, "null argument")) return st;
  return guarded([&] {
    parity::Gf2Basis space = parity::constraint_space_basis(h->value);
    parity::BasisEnumeration en =
        parity::enumerate_bases(space, static_cast<std::size_t>(cap));
    if (index >= en.bases.size()) {
      throw parity::InputError("basis index " + std::to_string(index) +
                               " out of range (" + std::to_string(en.bases.size()) +
                               " bases" + (en.truncated ? ", truncated" : "") + ")");
    }
    parity::CompiledHypergraph c =
        parity::compile(h->value, en.bases[static_cast<std::size_t>(index)]);
    *out_json = dup_string(parity::io::dumps(parity::io::compiled_to_json(c)));
  });
}

parity_status parity_compiled_set(const parity_hypergraph* h, uint64_t cap,
                                  unsigned threads, char** out_json) {
  if (auto st = require(h && out_json, "null argument")) return st;
  return guarded([&] {
    parity::CompiledSet s =
        parity::compiled_set(h->value, static_cast<std::size_t>(cap), threads);
    *out_json = dup_string(parity::io::dumps(parity::io::compiled_set_to_json(s)));
  });
}

parity_status parity_par_equal(const parity_hypergraph* a, const parity_hypergraph* b,
                               uint64_t cap, int* out_equal) {
  if (auto st = require(a && b && out_equal, "null argument")) return st;
  return guarded([&] {
    *out_equal =
        parity::par_equal(a->value, b->value, static_cast<std::size_t>(cap)) ? 1 : 0;
  });
}

parity_status parity_preimage(const parity_hypergraph* layout, uint64_t max_labels,
                              char** out_json) {
  if (auto st = require(layout && out_json, "null argument")) return st;
  return guarded([&] {
    parity::CompiledHypergraph p = parity::io::compiled_from_layout(layout->value);
    parity::LabelingSearchOptions opts;
    opts.max_labels = static_cast<std::size_t>(max_labels);
    parity::PreimageResult r = parity::preimage(p, opts);
    *out_json = dup_string(parity::io::dumps(parity::io::preimage_to_json(r)));
  });
}

parity_status parity_cycle_edge_restriction(const parity_hypergraph* g,
                                            parity_hypergraph** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] {
    *out = new parity_hypergraph{parity::cycle_edge_restriction(g->value)};
  });
}

parity_status parity_rect_compile(const parity_hypergraph* g, int* out_compilable,
                                  char** out_json) {
  if (auto st = require(g && out_compilable && out_json, "null argument")) return st;
  return guarded([&] {
    auto r = parity::rect_compile(g->value);
    if (!r) {
      *out_compilable = 0;
      *out_json = nullptr;
      return;
    }
    *out_compilable = 1;
    *out_json = dup_string(parity::io::dumps(parity::io::rect_to_json(*r)));
  });
}

parity_status parity_is_rect_layout(const parity_hypergraph* h, int* out_is,
                                    char** out_json) {
  if (auto st = require(h && out_is && out_json, "null argument")) return st;
  return guarded([&] {
    auto r = parity::is_rect_layout(h->value);
    if (!r) {
      *out_is = 0;
      *out_json = nullptr;
      return;
    }
    *out_is = 1;
    *out_json = dup_string(parity::io::dumps(parity::io::rect_layout_to_json(*r)));
  });
}

}  // extern "C"
