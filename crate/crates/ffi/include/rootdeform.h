#ifndef ROOTDEFORM_H
#define ROOTDEFORM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Constraint verdict bits for `rd_verify`.
 */
#define RD_CONSTRAINT_INTERTWINE_MINUS (1 << 0)

#define RD_CONSTRAINT_INTERTWINE_PLUS (1 << 1)

#define RD_CONSTRAINT_COMMUTES (1 << 2)

#define RD_CONSTRAINT_ANTIUNITARY (1 << 3)

#define RD_CONSTRAINT_DET (1 << 4)

#define RD_CONSTRAINT_LIMIT (1 << 5)

#define RD_CONSTRAINT_ALL 63

/**
 * Status codes returned by every fallible call.
 */
typedef enum RdStatus {
  Ok = 0,
  NullArgument = 1,
  InvalidInput = 2,
  AnsatzInapplicable = 3,
  InternalError = 4,
} RdStatus;

/**
 * Opaque factorized-element handle.
 */
typedef struct RdElement RdElement;

/**
 * Opaque root-system handle.
 */
typedef struct RdSystem RdSystem;

/**
 * Opaque deformation-matrix handle.
 */
typedef struct RdTheta RdTheta;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *rd_last_error_message(void);

/**
 * Build a catalog root system (A{n}, D{n}, E6, E7, E8, B2, G2).
 *
 * # Safety
 * `name` must be a valid NUL-terminated string; `out` must be writable.
 */
enum RdStatus rd_system_new(const char *name, struct RdSystem **out);

/**
 * # Safety
 * `sys` must come from `rd_system_new` and not be freed twice.
 */
void rd_system_free(struct RdSystem *sys);

/**
 * Rank, or 0 on a null handle.
 *
 * # Safety
 * `sys` must be a live handle or null.
 */
uint32_t rd_system_rank(const struct RdSystem *sys);

/**
 * Coxeter number, or 0 on a null handle.
 *
 * # Safety
 * `sys` must be a live handle or null.
 */
uint32_t rd_system_coxeter_number(const struct RdSystem *sys);

/**
 * Factorize an element from 1-based vertex subsets of the two colors.
 *
 * # Safety
 * Pointer/length pairs must describe valid arrays; `out` must be writable.
 */
enum RdStatus rd_factorize(const struct RdSystem *sys,
                           const uint32_t *minus,
                           uintptr_t minus_len,
                           const uint32_t *plus,
                           uintptr_t plus_len,
                           struct RdElement **out);

/**
 * # Safety
 * `el` must come from `rd_factorize` and not be freed twice.
 */
void rd_element_free(struct RdElement *el);

/**
 * Order of the element, or 0 on a null handle.
 *
 * # Safety
 * `el` must be a live handle or null.
 */
uint32_t rd_element_order(const struct RdElement *el);

/**
 * Build the deformation matrix; fails unless 4 divides the element order.
 *
 * # Safety
 * `el` must be a live handle; `out` must be writable.
 */
enum RdStatus rd_build_theta(const struct RdElement *el, struct RdTheta **out);

/**
 * # Safety
 * `theta` must come from `rd_build_theta` and not be freed twice.
 */
void rd_theta_free(struct RdTheta *theta);

/**
 * 1 when every kappa-component vanishes, else 0.
 *
 * # Safety
 * `theta` must be a live handle or null.
 */
int32_t rd_theta_is_trivial(const struct RdTheta *theta);

/**
 * Verify the five constraints; `out_flags` receives one bit per verdict
 * (see the RD_CONSTRAINT_* constants). All bits set means all pass.
 *
 * # Safety
 * Handles must be live; `out_flags` must be writable.
 */
enum RdStatus rd_verify(const struct RdTheta *theta,
                        const struct RdElement *el,
                        uint32_t *out_flags);

/**
 * Evaluate theta numerically at real epsilon into a row-major buffer of
 * interleaved (re, im) pairs; `len` must be at least 2 * rank * rank.
 *
 * # Safety
 * `theta` must be live; `out` must point to at least `len` doubles.
 */
enum RdStatus rd_theta_eval(const struct RdTheta *theta,
                            double epsilon,
                            double *out,
                            uintptr_t len);

/**
 * The symbolic theta matrix as JSON rows of ring scalars.
 *
 * # Safety
 * `theta` must be a live handle or null.
 */
char *rd_theta_json(const struct RdTheta *theta);

/**
 * Render the reduced orbit table in plain compact notation.
 *
 * # Safety
 * Handles must be live or null.
 */
char *rd_orbit_table(const struct RdSystem *sys, const struct RdElement *el);

/**
 * Distinct-root count of the reduced root space, or 0 on null handles.
 *
 * # Safety
 * Handles must be live or null.
 */
uint32_t rd_reduced_root_count(const struct RdSystem *sys, const struct RdElement *el);

/**
 * Invariance of the reduced space under each factor; outputs are 0/1.
 *
 * # Safety
 * Handles must be live; output pointers must be writable.
 */
enum RdStatus rd_invariance(const struct RdSystem *sys,
                            const struct RdElement *el,
                            int32_t *out_minus,
                            int32_t *out_plus);

/**
 * Scan every bicolored candidate; returns a JSON-lines report.
 *
 * # Safety
 * `sys` must be a live handle or null.
 */
char *rd_scan_json(const struct RdSystem *sys, int32_t force);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void rd_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ROOTDEFORM_H */
