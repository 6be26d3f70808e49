/* Public C interface to the parity compilation library.
 *
 * All objects are opaque handles created and destroyed here; every function
 * returns a parity_status, writes results through out-parameters, and leaves
 * a diagnostic retrievable via parity_last_error() on failure. Structured
 * results are JSON strings in the library's documented wire formats; free
 * them with parity_string_free().
 */

#ifndef PARITY_H
#define PARITY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum parity_status {
  PARITY_OK = 0,
  /* negative decisions are reported through out-parameters, not statuses */
  PARITY_ERR_INPUT = 2,       /* malformed or inconsistent input */
  PARITY_ERR_GUARD = 3,       /* a resource guard (size cap) was exceeded */
  PARITY_ERR_UNSUPPORTED = 4, /* outside the supported fragment */
  PARITY_ERR_INTERNAL = 5
} parity_status;

typedef struct parity_hypergraph parity_hypergraph;

const char* parity_version(void);

/* Message for the most recent failing call on this thread. */
const char* parity_last_error(void);

void parity_string_free(char* s);

/* ---- construction and serialization ---- */

/* {"vertices":[int...],"edges":[[int...]...]} */
parity_status parity_hypergraph_from_json(const char* json_text,
                                          parity_hypergraph** out);

/* Term lines "J a b" or "a b", ';' or newline separated, '#' comments.
 * When out_warnings is non-null it receives a JSON array of strings. */
parity_status parity_hypergraph_from_ising(const char* text,
                                           parity_hypergraph** out,
                                           char** out_warnings);

void parity_hypergraph_free(parity_hypergraph* h);

parity_status parity_hypergraph_to_json(const parity_hypergraph* h, char** out_json);

/* ---- structure queries ---- */

parity_status parity_is_graph(const parity_hypergraph* h, int* out);

/* Relabeling-invariant key (hex); equal keys iff isomorphic. */
parity_status parity_canonical_key(const parity_hypergraph* h, char** out_hex);

parity_status parity_is_isomorphic(const parity_hypergraph* a,
                                   const parity_hypergraph* b, int* out);

/* ---- GF(2) spaces ---- */

/* {"dim":N,"edge_index":[...],"vectors":[...],...} */
parity_status parity_cycle_basis(const parity_hypergraph* g, char** out_json);
parity_status parity_constraint_basis(const parity_hypergraph* h, char** out_json);
parity_status parity_cycle_dim(const parity_hypergraph* g, uint64_t* out_dim);

/* ---- parity compilation ---- */

/* Compile with the deterministic automatic basis (fundamental cycle basis
 * for graphs, constraint-space basis otherwise). */
parity_status parity_compile_auto(const parity_hypergraph* h, char** out_json);

/* Compile with the index-th basis of the constraint space, in the library's
 * deterministic basis enumeration order. */
parity_status parity_compile_basis_index(const parity_hypergraph* h, uint64_t index,
                                         uint64_t cap, char** out_json);

/* {"classes":[...],"exhaustive":bool,"count":N}; threads > 1 partitions the
 * basis enumeration. */
parity_status parity_compiled_set(const parity_hypergraph* h, uint64_t cap,
                                  unsigned threads, char** out_json);

parity_status parity_par_equal(const parity_hypergraph* a, const parity_hypergraph* b,
                               uint64_t cap, int* out_equal);

/* ---- preimages of layouts ---- */

/* layout is any hypergraph treated as a compiled layout;
 * {"classes":[...],"exhaustive":bool,"labelings_examined":N} */
parity_status parity_preimage(const parity_hypergraph* layout, uint64_t max_labels,
                              char** out_json);

/* ---- rectangular plaquette layouts ---- */

parity_status parity_cycle_edge_restriction(const parity_hypergraph* g,
                                            parity_hypergraph** out);

/* *out_compilable = 1 and a RectCompilation JSON when g compiles onto a
 * rectangular layout; *out_compilable = 0 and *out_json = NULL otherwise. */
parity_status parity_rect_compile(const parity_hypergraph* g, int* out_compilable,
                                  char** out_json);

/* *out_is = 1 and {"m":..,"n":..,"grid":[...]} when h is a rectangular
 * plaquette layout. */
parity_status parity_is_rect_layout(const parity_hypergraph* h, int* out_is,
                                    char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PARITY_H */
