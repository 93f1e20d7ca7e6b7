#ifndef SEPMORPH_H
#define SEPMORPH_H

/* Generated with cbindgen:0.29.4 */

/* Generated by cbindgen from sepmorph-ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Scheme check: the curve degree must be positive.
 */
#define SM_CHECK_DEGREE_POSITIVE 1

/**
 * Scheme check: a plane scheme has a pseudoline exactly for odd degree.
 */
#define SM_CHECK_PSEUDOLINE_PARITY (1 << 1)

/**
 * Scheme check: the component count exceeds g + 1.
 */
#define SM_CHECK_HARNACK_KLEIN (1 << 2)

/**
 * Scheme check: an oval nest is deeper than the degree allows.
 */
#define SM_CHECK_NEST_DEPTH (1 << 3)

/**
 * Scheme check: the component count has the wrong parity for a
 * separating curve of this class.
 */
#define SM_CHECK_PARITY (1 << 4)

/**
 * Result of a C-ABI call. Zero is success; everything else is a failure
 * and leaves a message readable through `sm_last_error`.
 */
typedef enum SmStatus {
  /**
   * The call succeeded.
   */
  SM_STATUS_OK = 0,
  /**
   * The inputs describe no valid object (bad degree, component count,
   * scheme text, surface data, trace, or an out-of-range query).
   */
  SM_STATUS_INVALID_INPUT = 1,
  /**
   * The library caught itself producing contradictory results. Not a
   * caller error; please report it.
   */
  SM_STATUS_INCONSISTENT = 2,
  /**
   * A required pointer argument was `NULL`.
   */
  SM_STATUS_NULL_ARGUMENT = 3,
  /**
   * A string argument was not valid UTF-8.
   */
  SM_STATUS_UTF8 = 4,
  /**
   * The output buffer cannot hold the result; `*len` holds the
   * required size.
   */
  SM_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * An internal panic was caught at the boundary.
   */
  SM_STATUS_PANIC = 6,
} SmStatus;

/**
 * Which obstruction rule produced a verdict. `SM_RULE_NONE` marks
 * verdicts where no rule excludes the queried degree.
 */
typedef enum SmRule {
  SM_RULE_NONE = 0,
  SM_RULE_THM_MAIN = 1,
  SM_RULE_THM_MAIN_D1 = 2,
  SM_RULE_PLANE_ODD_CLOSED_FORM = 3,
  SM_RULE_PLANE_EVEN_CLOSED_FORM = 4,
  SM_RULE_QUADRIC_EVEN_CLOSED_FORM = 5,
  SM_RULE_QUADRIC_ODD_CLOSED_FORM = 6,
  SM_RULE_QUINTIC_SPECIAL_CASE = 7,
} SmRule;

/**
 * Opaque handle to a parsed real scheme.
 */
typedef struct SmScheme SmScheme;

/**
 * Opaque handle to an intersection-lattice description of a surface.
 */
typedef struct SmSurface SmSurface;

/**
 * Answer of an obstruction query for one curve. When `applies` is true,
 * separating morphisms of degree exactly `l` do not exist and
 * `min_sep_degree` is a valid lower bound `l + 1`; otherwise the bound
 * degrades to `l` and the chain fields report why the rule refused.
 */
typedef struct SmVerdict {
  /**
   * Number of real connected components the query was made for.
   */
  int64_t l;
  /**
   * Arithmetic genus of the curve class.
   */
  int64_t genus;
  bool applies;
  enum SmRule rule;
  /**
   * Parity correction, 0 or 1.
   */
  int64_t epsilon;
  /**
   * True when the rule reserves intersection points on a residual
   * curve; the count is then in `m`.
   */
  bool has_m;
  int64_t m;
  /**
   * The rule applies iff `left_bound < middle < right_bound`.
   */
  int64_t left_bound;
  int64_t middle;
  int64_t right_bound;
  /**
   * Number of rule hypotheses that failed; zero iff `applies`.
   */
  int64_t failed_count;
  /**
   * True for the quintic special case, whose justification lies
   * outside the closed-form rules.
   */
  bool beyond_closed_forms;
  /**
   * Lower bound for the degree of any separating morphism.
   */
  int64_t min_sep_degree;
} SmVerdict;

/**
 * Component counts and shape measures of a parsed scheme.
 */
typedef struct SmSchemeStats {
  /**
   * Total components: ovals plus the pseudoline if present.
   */
  int64_t l;
  /**
   * Deepest oval nesting, 0 for an empty scheme.
   */
  int64_t depth;
  /**
   * Unordered oval pairs that are either disjoint or nested.
   */
  int64_t injective_pairs;
  bool pseudoline;
} SmSchemeStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the library as a static NUL-terminated string.
 */
const char *sm_version(void);

/**
 * Message describing the most recent failure on the calling thread.
 * The pointer stays valid until the next failing call on this thread.
 * Before any failure it is the empty string, never `NULL`.
 */
const char *sm_last_error(void);

/**
 * Look up a built-in surface by name (`P2` or `QuadricEllipsoid`) and
 * store a new handle in `*out`.
 */
enum SmStatus sm_surface_builtin(const char *name, struct SmSurface **out);

/**
 * Parse surface-definition TOML text and store a handle to the surface
 * named `name` in `*out`.
 */
enum SmStatus sm_surface_from_toml(const char *text, const char *name, struct SmSurface **out);

/**
 * Release a surface handle. `NULL` is accepted and ignored.
 */
void sm_surface_free(struct SmSurface *surface);

/**
 * Rank of the surface lattice, which is the length every coordinate
 * vector passed for this surface must have.
 */
enum SmStatus sm_surface_rank(const struct SmSurface *surface, size_t *out);

/**
 * True when the surface satisfies every setup condition the obstruction
 * rules assume.
 */
enum SmStatus sm_surface_setup_ok(const struct SmSurface *surface, bool *out);

/**
 * Adjunction genus of the class with the given coordinates.
 */
enum SmStatus sm_adjunction_genus(const struct SmSurface *surface,
                                  const int64_t *coords,
                                  size_t n_coords,
                                  int64_t *out);

/**
 * Run the general obstruction machinery for a separating curve of the
 * given class with `l` real components and fill `*out`.
 */
enum SmStatus sm_obstruction(const struct SmSurface *surface,
                             const int64_t *coords,
                             size_t n_coords,
                             int64_t l,
                             struct SmVerdict *out);

/**
 * Closed-form obstruction verdict for a plane curve of degree `d` with
 * `l` real components.
 */
enum SmStatus sm_plane_obstruction(int64_t d, int64_t l, struct SmVerdict *out);

/**
 * Closed-form obstruction verdict for a bidegree `(d, d)` curve on the
 * quadric ellipsoid with `l` real components.
 */
enum SmStatus sm_quadric_obstruction(int64_t d, int64_t l, struct SmVerdict *out);

/**
 * Lower bound for the number of base points of a totally real pencil on
 * a plane curve of degree `d` with `l` components. Errors when the
 * plane obstruction does not apply to the pair.
 */
enum SmStatus sm_pencil_bound(int64_t d, int64_t l, int64_t *out);

/**
 * Enumerate, in increasing order, the component counts the closed-form
 * rules obstruct for the named built-in surface at the given degree.
 * Uses the integer buffer protocol: `*len` receives the count.
 */
enum SmStatus sm_enumerate_obstructed(const char *surface_name,
                                      int64_t degree,
                                      int64_t *buf,
                                      size_t cap,
                                      size_t *len);

/**
 * Parse scheme text (for example `J u <3 u 1<2>>`) into a canonical
 * scheme handle stored in `*out`.
 */
enum SmStatus sm_scheme_parse(const char *text, struct SmScheme **out);

/**
 * Release a scheme handle. `NULL` is accepted and ignored.
 */
void sm_scheme_free(struct SmScheme *scheme_handle);

/**
 * Fill `*out` with the component counts and shape measures of a scheme.
 */
enum SmStatus sm_scheme_stats(const struct SmScheme *scheme_handle, struct SmSchemeStats *out);

/**
 * Write the canonical text of a scheme using the text buffer protocol.
 * With `compact` true all spaces are dropped; the result still parses.
 */
enum SmStatus sm_scheme_print(const struct SmScheme *scheme_handle,
                              bool compact,
                              char *buf,
                              size_t cap,
                              size_t *len);

/**
 * Check a scheme against a plane curve of degree `degree`. On success
 * `*violations` is a bitmask of `SM_CHECK_*` flags, zero when the
 * scheme is consistent.
 */
enum SmStatus sm_scheme_check_plane(const struct SmScheme *scheme_handle,
                                    int64_t degree,
                                    uint32_t *violations);

/**
 * Check a scheme against a bidegree `(degree, degree)` curve on the
 * quadric ellipsoid. Schemes with a pseudoline are invalid input here.
 * The parity flag is only checked when `type_one` is true.
 */
enum SmStatus sm_scheme_check_quadric(const struct SmScheme *scheme_handle,
                                      int64_t degree,
                                      bool type_one,
                                      uint32_t *violations);

/**
 * True when the scheme of a degree-`degree` plane curve contains a nest
 * deep enough to force a totally real pencil through its center.
 */
enum SmStatus sm_nest_pencil_exists(const struct SmScheme *scheme_handle,
                                    int64_t degree,
                                    bool *out);

/**
 * Enumerate, in increasing order, the component counts admissible for
 * the degree-`degree` stage of the plane construction. Integer buffer
 * protocol.
 */
enum SmStatus sm_admissible_l(int64_t degree, int64_t *buf, size_t cap, size_t *len);

/**
 * Build a construction trace reaching the admissible pair
 * `(degree, l)` and write its line-oriented text form using the text
 * buffer protocol.
 */
enum SmStatus sm_construct_trace(int64_t degree, int64_t l, char *buf, size_t cap, size_t *len);

/**
 * Parse the line-oriented trace text and replay it. `*ok` reports
 * whether the replay reproduces the trace; unparsable text is an error.
 */
enum SmStatus sm_verify_trace(const char *text, bool *ok);

/**
 * Check that every admissible pair with degree at most `d_max` is
 * reachable by the construction steps. `*ok` receives the answer.
 */
enum SmStatus sm_reachability(int64_t d_max, bool *ok);

/**
 * For plane degree `degree`, find the largest constructible component
 * count the obstruction also excludes. `*l_out` receives the count and,
 * when `verdict` is not `NULL`, `*verdict` the excluding verdict.
 */
enum SmStatus sm_witness(int64_t degree, int64_t *l_out, struct SmVerdict *verdict);

/**
 * Write the construction trace behind `sm_witness` for the same degree
 * using the text buffer protocol.
 */
enum SmStatus sm_witness_trace(int64_t degree, char *buf, size_t cap, size_t *len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEPMORPH_H */
