#ifndef D2C_H
#define D2C_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum D2cCcToGaCase {
  D2C_CC_TO_GA_CASE_K1_OR_K2 = 0,
  D2C_CC_TO_GA_CASE_NON_BIPARTITE = 1,
  D2C_CC_TO_GA_CASE_UNBALANCED = 2,
  D2C_CC_TO_GA_CASE_BALANCED = 3,
} D2cCcToGaCase;

// Verdict reason; `None` for a YES verdict.
typedef enum D2cReason {
  D2C_REASON_NONE = 0,
  D2C_REASON_NON_BIPARTITE = 1,
  D2C_REASON_COMPONENT_NOT_DISTINGUISHABLE = 2,
  D2C_REASON_THREE_ISOMORPHIC_COMPONENTS = 3,
  D2C_REASON_ISOMORPHIC_PAIR_NOT_ASYMMETRIC = 4,
} D2cReason;

typedef enum D2cStatus {
  D2C_STATUS_OK = 0,
  D2C_STATUS_NULL_POINTER = 1,
  D2C_STATUS_INVALID_UTF8 = 2,
  D2C_STATUS_PARSE_ERROR = 3,
  D2C_STATUS_INVALID_INPUT = 4,
  D2C_STATUS_BUFFER_TOO_SMALL = 5,
  D2C_STATUS_REFUSED = 6,
  D2C_STATUS_INTERNAL = 7,
  D2C_STATUS_PANIC = 8,
} D2cStatus;

// Opaque graph handle.
typedef struct D2cGraph D2cGraph;

// Opaque decision result handle.
typedef struct D2cVerdict D2cVerdict;

enum D2cStatus d2c_graph_from_graph6(const char *text, struct D2cGraph **out);

enum D2cStatus d2c_graph_from_edge_list(const char *text, struct D2cGraph **out);

// `edges` holds `m` pairs as `2 * m` consecutive vertex ids.
enum D2cStatus d2c_graph_from_edges(uintptr_t n,
                                    const uintptr_t *edges,
                                    uintptr_t m,
                                    struct D2cGraph **out);

void d2c_graph_free(struct D2cGraph *g);

// Number of vertices; 0 for a null handle.
uintptr_t d2c_graph_order(const struct D2cGraph *g);

// Number of edges; 0 for a null handle.
uintptr_t d2c_graph_size(const struct D2cGraph *g);

enum D2cStatus d2c_graph_to_graph6(const struct D2cGraph *g, char **out);

void d2c_string_free(char *s);

// Message for the last failed call on this thread; empty after a success.
// Valid until the next call into this library on the same thread.
const char *d2c_last_error_message(void);

enum D2cStatus d2c_decide(const struct D2cGraph *g, struct D2cVerdict **out);

void d2c_verdict_free(struct D2cVerdict *v);

bool d2c_verdict_is_yes(const struct D2cVerdict *v);

enum D2cReason d2c_verdict_reason(const struct D2cVerdict *v);

// Copies the witness coloring (values 1 and 2) of a YES verdict into `buf`.
enum D2cStatus d2c_verdict_witness(const struct D2cVerdict *v, uint8_t *buf, uintptr_t len);

// One-line summary, e.g. `YES witness=[1,2]`.
enum D2cStatus d2c_verdict_to_string(const struct D2cVerdict *v, char **out);

// Full certificate as JSON.
enum D2cStatus d2c_verdict_to_json(const struct D2cVerdict *v, char **out);

// Writes a nontrivial automorphism into `perm[..len]` (`len >= n`) if one exists.
enum D2cStatus d2c_has_nta(const struct D2cGraph *g, uintptr_t *perm, uintptr_t len, bool *found);

enum D2cStatus d2c_has_color_preserving_nta(const struct D2cGraph *g,
                                            const uint8_t *colors,
                                            uintptr_t ncolors,
                                            uintptr_t *perm,
                                            uintptr_t len,
                                            bool *found);

enum D2cStatus d2c_are_isomorphic(const struct D2cGraph *g1,
                                  const struct D2cGraph *g2,
                                  uintptr_t *perm,
                                  uintptr_t len,
                                  bool *found);

enum D2cStatus d2c_canonical_key(const struct D2cGraph *g, char **out);

enum D2cStatus d2c_verify_distinguishing(const struct D2cGraph *g,
                                         const uint8_t *colors,
                                         uintptr_t ncolors,
                                         bool *out);

enum D2cStatus d2c_oracle_chi_d_le_2(const struct D2cGraph *g, uintptr_t threshold, bool *out);

enum D2cStatus d2c_ga_to_cc(const struct D2cGraph *g, struct D2cGraph **out);

enum D2cStatus d2c_cc_to_ga(const struct D2cGraph *g,
                            struct D2cGraph **out,
                            enum D2cCcToGaCase *case_out);

#endif  /* D2C_H */
