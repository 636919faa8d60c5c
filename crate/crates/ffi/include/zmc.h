#ifndef ZMC_H
#define ZMC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. `ZMC_STATUS_OK` is zero, everything else is an error.
typedef enum ZmcStatus {
  ZMC_STATUS_OK = 0,
  ZMC_STATUS_NULL_POINTER = 1,
  ZMC_STATUS_INVALID_UTF8 = 2,
  ZMC_STATUS_NON_INVERTIBLE = 3,
  ZMC_STATUS_NULL_CONE = 4,
  ZMC_STATUS_DOMAIN_VIOLATION = 5,
  ZMC_STATUS_PATH_DEPENDENT = 6,
  ZMC_STATUS_UNKNOWN_ENTRY = 7,
  ZMC_STATUS_PARSE = 8,
  ZMC_STATUS_CONFIG = 9,
  ZMC_STATUS_IO = 10,
  ZMC_STATUS_BUFFER_TOO_SMALL = 11,
  ZMC_STATUS_PANIC = 12,
} ZmcStatus;

// A parsed para-holomorphic expression.
typedef struct ZmcExpr ZmcExpr;

// A surface patch taken from the catalog, placement included.
typedef struct ZmcPatch ZmcPatch;

// A para-complex number `re + j im`.
typedef struct ZmcParaComplex {
  double re;
  double im;
} ZmcParaComplex;

// A point of Minkowski 3-space in `(t, x, y)` coordinates.
typedef struct ZmcPoint3 {
  double t;
  double x;
  double y;
} ZmcPoint3;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *zmc_version(void);

// Copies the calling thread's last error message into `buf`.
//
// Returns the size needed including the terminating NUL (1 when there is no
// error). Nothing is written if `buf` is null or `len` is too small.
//
// # Safety
// `buf` must be null or point to `len` writable bytes.
size_t zmc_last_error_message(char *buf, size_t len);

// `a / b`, failing on a null-cone divisor.
//
// # Safety
// `out` must be null or valid for writes.
enum ZmcStatus zmc_pc_div(struct ZmcParaComplex a,
                          struct ZmcParaComplex b,
                          struct ZmcParaComplex *out);

// The logarithm, defined off the null cone.
//
// # Safety
// `out` must be null or valid for writes.
enum ZmcStatus zmc_pc_log(struct ZmcParaComplex z, struct ZmcParaComplex *out);

struct ZmcParaComplex zmc_pc_exp(struct ZmcParaComplex z);

struct ZmcParaComplex zmc_pc_arctan(struct ZmcParaComplex z);

// `re² − im²`.
double zmc_pc_norm2(struct ZmcParaComplex z);

// Parses an expression in the prefix text format, e.g. `"div(1, sub(pow(z, 2), 1))"`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be null or valid for writes.
// On success `*out` owns a handle to release with [`zmc_expr_free`].
enum ZmcStatus zmc_expr_parse(const char *text, struct ZmcExpr **out);

// # Safety
// `expr` must be a live handle; `out` must be null or valid for writes.
enum ZmcStatus zmc_expr_eval(const struct ZmcExpr *expr,
                             struct ZmcParaComplex z,
                             struct ZmcParaComplex *out);

// Symbolic derivative as a new handle.
//
// # Safety
// `expr` must be a live handle; `out` must be null or valid for writes.
enum ZmcStatus zmc_expr_deriv(const struct ZmcExpr *expr, struct ZmcExpr **out);

// Writes the canonical text of `expr` into `buf`.
//
// On `ZMC_STATUS_BUFFER_TOO_SMALL`, `*needed` still receives the size to allocate.
//
// # Safety
// `expr` must be a live handle, `buf` null or `len` writable bytes, `needed` null or valid.
enum ZmcStatus zmc_expr_to_string(const struct ZmcExpr *expr,
                                  char *buf,
                                  size_t len,
                                  size_t *needed);

// # Safety
// `expr` must be null or a handle not freed before.
void zmc_expr_free(struct ZmcExpr *expr);

// Opens the parametrized patch of a catalog entry such as `"scherk_S1p"`.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be null or valid for writes.
enum ZmcStatus zmc_patch_from_catalog(const char *name, struct ZmcPatch **out);

// The placed surface point at a parameter inside the patch region.
//
// # Safety
// `patch` must be a live handle; `out` must be null or valid for writes.
enum ZmcStatus zmc_patch_evaluate(const struct ZmcPatch *patch,
                                  struct ZmcParaComplex z,
                                  struct ZmcPoint3 *out);

// Whether `z` lies in the patch region.
//
// # Safety
// `patch` must be a live handle.
bool zmc_patch_contains(const struct ZmcPatch *patch, struct ZmcParaComplex z);

// # Safety
// `patch` must be null or a handle not freed before.
void zmc_patch_free(struct ZmcPatch *patch);

// Residual of an implicit surface (`"E4"`, `"scherk_S1p"`, ...) at `p`.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be null or valid for writes.
enum ZmcStatus zmc_implicit_residual(const char *name, struct ZmcPoint3 p, double *out);

// The point over `(a, b)` of a catalog graph entry such as `"graph_S1p"`.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be null or valid for writes.
enum ZmcStatus zmc_graph_eval(const char *name, double a, double b, struct ZmcPoint3 *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZMC_H */
