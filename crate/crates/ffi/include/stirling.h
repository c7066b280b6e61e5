#ifndef STIRLING_H
#define STIRLING_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Flag for [`stirling_complex_new`]: drop the covering condition.
 */
#define STIRLING_NO_COVER 1

/**
 * Flag for [`stirling_complex_new`]: separate robots of different colors too.
 */
#define STIRLING_SEPARATE_ALL 2

/**
 * Result of every fallible call.
 */
typedef enum StirlingStatus {
  STIRLING_STATUS_OK = 0,
  STIRLING_STATUS_NULL_POINTER = 1,
  STIRLING_STATUS_INVALID_ARGUMENT = 2,
  STIRLING_STATUS_PARSE_ERROR = 3,
  STIRLING_STATUS_EMPTY_COMPLEX = 4,
  STIRLING_STATUS_UNREACHABLE = 5,
  STIRLING_STATUS_HYPOTHESIS_NOT_MET = 6,
  STIRLING_STATUS_OVERFLOW = 7,
  STIRLING_STATUS_BUFFER_TOO_SMALL = 8,
  /**
   * Broken invariant or a caught panic.
   */
  STIRLING_STATUS_INTERNAL = 9,
} StirlingStatus;

typedef enum StirlingPlanMode {
  /**
   * Constructive planner; needs a connected graph and at least three colors.
   */
  STIRLING_PLAN_MODE_CONSTRUCTIVE = 0,
  /**
   * Shortest plan by breadth-first search.
   */
  STIRLING_PLAN_MODE_BFS = 1,
} StirlingPlanMode;

typedef struct StirlingComplex StirlingComplex;

typedef struct StirlingGraph StirlingGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *stirling_version(void);

/**
 * Message for the last failed call on this thread, or null after a
 * successful one. Valid until the next call into the library.
 */
const char *stirling_last_error(void);

/**
 * Parses an edge list: `n m` header, then one `u v` line per edge.
 *
 * # Safety
 * `edge_list` must be a NUL-terminated string and `graph` a valid pointer.
 */
enum StirlingStatus stirling_graph_parse(const char *edge_list, struct StirlingGraph **graph);

/**
 * Builds a named graph such as `"P4"`, `"T5"`, `"C6"` or `"K5"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `graph` a valid pointer.
 */
enum StirlingStatus stirling_graph_named(const char *name, struct StirlingGraph **graph);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2m` endpoints.
 *
 * # Safety
 * `endpoints` must point to `2 * m` values (it may be null when `m` is 0).
 */
enum StirlingStatus stirling_graph_new(size_t n,
                                       const size_t *endpoints,
                                       size_t m,
                                       struct StirlingGraph **graph);

/**
 * # Safety
 * `graph` must come from this library and not be freed twice. Null is ignored.
 */
void stirling_graph_free(struct StirlingGraph *graph);

/**
 * # Safety
 * Pointers must be valid.
 */
enum StirlingStatus stirling_graph_vertex_count(const struct StirlingGraph *graph, size_t *n);

/**
 * # Safety
 * Pointers must be valid.
 */
enum StirlingStatus stirling_graph_edge_count(const struct StirlingGraph *graph, size_t *m);

/**
 * Complex of `graph` with `r` groups of the given sizes. `flags` combines
 * `STIRLING_NO_COVER` and `STIRLING_SEPARATE_ALL`. The graph is copied.
 *
 * # Safety
 * `sizes` must point to `r` values; other pointers must be valid.
 */
enum StirlingStatus stirling_complex_new(const struct StirlingGraph *graph,
                                         const size_t *sizes,
                                         size_t r,
                                         uint32_t flags,
                                         struct StirlingComplex **complex);

/**
 * # Safety
 * `complex` must come from this library and not be freed twice. Null is ignored.
 */
void stirling_complex_free(struct StirlingComplex *complex);

/**
 * Cell counts by dimension. Pass a null `buf` to query the length.
 *
 * # Safety
 * `buf` must hold `cap` values; other pointers must be valid.
 */
enum StirlingStatus stirling_complex_f_vector(const struct StirlingComplex *complex,
                                              uint64_t *buf,
                                              size_t cap,
                                              size_t *len);

/**
 * Number of connected components.
 *
 * # Safety
 * Pointers must be valid.
 */
enum StirlingStatus stirling_complex_component_count(const struct StirlingComplex *complex,
                                                     size_t *count);

/**
 * Closed-form counts for group sizes `(2, 1, ..., 1)` with one group per vertex.
 *
 * # Safety
 * Pointers must be valid.
 */
enum StirlingStatus stirling_count_two_one(const struct StirlingGraph *graph,
                                           uint64_t *f0,
                                           uint64_t *f1);

/**
 * `L = f1 - f0 + 1` for group sizes `(2, 1, ..., 1)`. Needs a connected graph.
 *
 * # Safety
 * Pointers must be valid.
 */
enum StirlingStatus stirling_wedge_count(const struct StirlingGraph *graph, int64_t *count);

/**
 * Closed-form counts for `r` groups of size `n - 1`. Pass a null `buf`
 * to query the length.
 *
 * # Safety
 * `buf` must hold `cap` values; other pointers must be valid.
 */
enum StirlingStatus stirling_count_uniform(const struct StirlingGraph *graph,
                                           size_t r,
                                           uint64_t *buf,
                                           size_t cap,
                                           size_t *len);

/**
 * Plans moves between two 0-cells written like `{0,1}|{2}`. On success
 * `plan_text` receives the plan in the text format read by
 * [`stirling_verify_plan`]; free it with [`stirling_string_free`].
 *
 * # Safety
 * Strings must be NUL-terminated; other pointers must be valid.
 */
enum StirlingStatus stirling_plan(const struct StirlingComplex *complex,
                                  const char *from,
                                  const char *to,
                                  enum StirlingPlanMode mode,
                                  char **plan_text);

/**
 * Replays a plan. `valid` receives 1 or 0; on 0, `step` receives the
 * failing step (0 for the start cell, `k + 1` for move `k`, moves + 1 for
 * the end cell). A null `end` uses the plan's `# end:` line.
 *
 * # Safety
 * Strings must be NUL-terminated or null where allowed; other pointers must be valid.
 */
enum StirlingStatus stirling_verify_plan(const struct StirlingComplex *complex,
                                         const char *plan_text,
                                         const char *end,
                                         int *valid,
                                         size_t *step);

/**
 * # Safety
 * `s` must come from this library and not be freed twice. Null is ignored.
 */
void stirling_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STIRLING_H */
