#ifndef EXFORGE_H
#define EXFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes; the nonzero library codes match the CLI exit codes.
typedef enum ExStatus {
  EX_STATUS_OK = 0,
  // Invalid argument, parameter or input file contents.
  EX_STATUS_USAGE = 2,
  // A size budget would be exceeded.
  EX_STATUS_BUDGET = 3,
  // An eigensolver did not reach its tolerance.
  EX_STATUS_NUMERICAL = 4,
  // File system failure.
  EX_STATUS_IO = 5,
  // A required pointer argument was null.
  EX_STATUS_NULL_POINTER = 6,
  // Internal panic caught at the boundary.
  EX_STATUS_PANIC = 7,
} ExStatus;

// Opaque regular multigraph.
typedef struct ExGraph ExGraph;

// Short-interval almost-prime witness for `x`.
typedef struct ExWuWitness {
  uint64_t x;
  // Left end of the open interval `(x - x^(101/232), x]`.
  double interval_lo;
  // Largest almost-prime in the interval; meaningful only when `found`.
  uint64_t q;
  bool found;
} ExWuWitness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or null. The pointer stays
// valid until the next failing call on the same thread.
const char *exforge_last_error_message(void);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void exforge_string_free(char *s);

// Library version as a static string.
const char *exforge_version(void);

// Build a graph from a spec string such as `"paley:13"` or `"pipeline:8,lps,1"`.
//
// # Safety
// `spec` must be a nul-terminated string; `out` must be writable.
enum ExStatus exforge_graph_construct(const char *spec, size_t size_budget, struct ExGraph **out);

// Read a graph file.
//
// # Safety
// `path` must be a nul-terminated string; `out` must be writable.
enum ExStatus exforge_graph_read(const char *path, struct ExGraph **out);

// Write a graph file (no extra comment lines).
//
// # Safety
// `g` must be a live handle; `path` a nul-terminated string.
enum ExStatus exforge_graph_write(const struct ExGraph *g, const char *path);

// Release a graph handle. Null is ignored.
//
// # Safety
// `g` must come from this library and not have been freed.
void exforge_graph_free(struct ExGraph *g);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t exforge_graph_vertex_count(const struct ExGraph *g);

// Degree, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
uint32_t exforge_graph_degree(const struct ExGraph *g);

// New handle for `g` with `steps` factors of `K2` appended.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum ExStatus exforge_graph_augment(const struct ExGraph *g,
                                    uint32_t steps,
                                    size_t size_budget,
                                    struct ExGraph **out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum ExStatus exforge_graph_is_connected(const struct ExGraph *g, bool *out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum ExStatus exforge_graph_is_bipartite(const struct ExGraph *g, bool *out);

// The two largest eigenvalues of a connected graph, by Lanczos iteration.
//
// # Safety
// `g` must be a live handle; `lambda1` and `lambda2` must be writable.
enum ExStatus exforge_graph_top2(const struct ExGraph *g,
                                 double tolerance,
                                 uint64_t seed,
                                 double *lambda1,
                                 double *lambda2);

// All eigenvalues, descending, into `values[0..n]`; `capacity` must be at least `n`.
//
// # Safety
// `g` must be a live handle; `values` must have room for `capacity` doubles.
enum ExStatus exforge_graph_spectrum(const struct ExGraph *g,
                                     double tolerance,
                                     double *values,
                                     size_t capacity);

// Certify `g` against the plan revealed by peeling `K2` factors; the
// report document (TOML) is returned through `report`.
//
// # Safety
// `g` must be a live handle; `report` must be writable. Free the result
// with [`exforge_string_free`].
enum ExStatus exforge_graph_certify(const struct ExGraph *g,
                                    double tolerance,
                                    size_t dense_threshold,
                                    uint64_t seed,
                                    size_t size_budget,
                                    char **report);

// Deterministic primality for all 64-bit inputs.
bool exforge_is_prime(uint64_t n);

// Number of prime factors of `n` with multiplicity.
//
// # Safety
// `out` must be writable.
enum ExStatus exforge_big_omega(uint64_t n, uint32_t *out);

// Number of divisors of `n`.
//
// # Safety
// `out` must be writable.
enum ExStatus exforge_divisor_count(uint64_t n, uint64_t *out);

// Largest `q <= x` with at most two prime factors; `in_interval` tells
// whether `q > x - x^(101/232)`.
//
// # Safety
// `q` and `in_interval` must be writable.
enum ExStatus exforge_find_p2(uint64_t x, uint64_t *q, bool *in_interval);

// # Safety
// `out` must be writable.
enum ExStatus exforge_wu_witness(uint64_t x, struct ExWuWitness *out);

// `4 sqrt(k - 1) + k^(101/232)`.
double exforge_paper_bound(uint64_t k);

// `d(q + 1) sqrt(q)`.
double exforge_pizer_bound(uint64_t q);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EXFORGE_H */
