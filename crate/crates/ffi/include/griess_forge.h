#ifndef GRIESS_FORGE_H
#define GRIESS_FORGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status returned by every fallible call.
typedef enum GfStatus {
  GF_STATUS_OK = 0,
  GF_STATUS_NULL_POINTER = 1,
  GF_STATUS_INVALID_UTF8 = 2,
  GF_STATUS_INVALID_ARGUMENT = 3,
  GF_STATUS_COMPUTATION_FAILED = 4,
  GF_STATUS_PANIC = 5,
} GfStatus;

// Opaque finite-dimensional algebra.
typedef struct GfAlgebra GfAlgebra;

// Opaque bundle of check reports.
typedef struct GfReport GfReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. Owned by the
// library; valid until the next failing call on the same thread.
const char *gf_last_error(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void gf_string_free(char *s);

// Report schema version.
uint32_t gf_schema_version(void);

// Commutant algebra at node `"1A"`, `"2A"` or `"3A"`.
//
// # Safety
// `node` is a NUL-terminated string, `out` a valid pointer.
enum GfStatus gf_commutant_new(const char *node, struct GfAlgebra **out);

// The 3A-algebra from its table (`from_orbit = false`) or as the closure
// of an Ising orbit in sqrt2 E8.
//
// # Safety
// `out` must be a valid pointer.
enum GfStatus gf_u3a_new(bool from_orbit, struct GfAlgebra **out);

// # Safety
// `a` is NULL or a handle from this library, freed once.
void gf_algebra_free(struct GfAlgebra *a);

// Dimension, or 0 for NULL.
//
// # Safety
// `a` is NULL or a live handle.
uintptr_t gf_algebra_dim(const struct GfAlgebra *a);

// Structure constants and Gram matrix as JSON.
//
// # Safety
// `a` is a live handle and `out` a valid pointer.
enum GfStatus gf_algebra_json(const struct GfAlgebra *a, char **out);

// Fusion product `L(r1,s1) x L(r2,s2)` at level `m`, rendered as text.
//
// # Safety
// `out` must be a valid pointer.
enum GfStatus gf_fusion(uint32_t m, uint32_t r1, uint32_t s1, uint32_t r2, uint32_t s2, char **out);

// Runs a suite: `central-charges`, `ising-e8`, `commutant-1A|2A|3A`,
// `u3a`, `involutions-1A|2A|3A|e8-orbit`, `minimal-models`, `codes`,
// `leech`, `appendix`, `properties`, or `all`.
//
// # Safety
// `suite` is a NUL-terminated string, `out` a valid pointer.
enum GfStatus gf_report_run(const char *suite, bool skip_slow, struct GfReport **out);

// # Safety
// `r` is NULL or a handle from this library, freed once.
void gf_report_free(struct GfReport *r);

// Whether no check failed; false for NULL.
//
// # Safety
// `r` is NULL or a live handle.
bool gf_report_passed(const struct GfReport *r);

// Number of checks over all suites.
//
// # Safety
// `r` is NULL or a live handle.
uintptr_t gf_report_check_count(const struct GfReport *r);

// Number of failed checks.
//
// # Safety
// `r` is NULL or a live handle.
uintptr_t gf_report_failure_count(const struct GfReport *r);

// The report as JSON.
//
// # Safety
// `r` is a live handle and `out` a valid pointer.
enum GfStatus gf_report_json(const struct GfReport *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRIESS_FORGE_H */
