/* Copyright 2026 The hexphase Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/* C interface to libhexphase.
 *
 * Matrices and landscapes are returned as opaque handles owned by the caller
 * and released with hp_matrix_free / hp_landscape_free. Every fallible call
 * returns an hp_status; on failure hp_last_error() describes the problem for
 * the calling thread until its next failing call.
 *
 * Sector sizes N are limited to hp_max_n(), 50 unless the environment variable
 * HEXPHASE_MAX_N overrides it.
 */

#ifndef HEXPHASE_HEXPHASE_H
#define HEXPHASE_HEXPHASE_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(HEXPHASE_BUILDING)
#define HEXPHASE_API __declspec(dllexport)
#else
#define HEXPHASE_API __declspec(dllimport)
#endif
#else
#define HEXPHASE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum hp_status {
  HP_OK = 0,
  HP_ERR_ARGUMENT = 2,
  HP_ERR_INVARIANT = 3,
  HP_ERR_IO = 4,
  HP_ERR_INTERNAL = 5
} hp_status;

typedef enum hp_format { HP_FORMAT_CSV = 0, HP_FORMAT_JSON = 1, HP_FORMAT_SVG = 2 } hp_format;

typedef struct hp_matrix hp_matrix;
typedef struct hp_landscape hp_landscape;

HEXPHASE_API const char* hp_version(void);
HEXPHASE_API const char* hp_last_error(void);
HEXPHASE_API int hp_max_n(void);

/* ---- matrices ---------------------------------------------------------- */

HEXPHASE_API void hp_matrix_free(hp_matrix* m);
HEXPHASE_API size_t hp_matrix_rows(const hp_matrix* m);
HEXPHASE_API size_t hp_matrix_cols(const hp_matrix* m);
HEXPHASE_API hp_status hp_matrix_get(const hp_matrix* m, size_t row, size_t col, double* re, double* im);
/* Label of a row or column; NULL when the matrix carries no labels. */
HEXPHASE_API const char* hp_matrix_row_label(const hp_matrix* m, size_t row);
HEXPHASE_API const char* hp_matrix_col_label(const hp_matrix* m, size_t col);

HEXPHASE_API hp_status hp_unitarity_defect(const hp_matrix* m, double* out);
HEXPHASE_API hp_status hp_commutator_norm(const hp_matrix* a, const hp_matrix* b, double* out);

/* Hexagonal Fourier matrix at level N (rows: orbit labels, cols: grid points). */
HEXPHASE_API hp_status hp_fourier_matrix(int n, hp_matrix** out);
HEXPHASE_API hp_status hp_standard_dft(int n, hp_matrix** out);

/* Cyclic polar completion of S+ for spin j = two_j / 2: S+ = E D. Any output
 * pointer may be NULL. */
HEXPHASE_API hp_status hp_su2_polar(int two_j, hp_matrix** e, hp_matrix** d, hp_matrix** s_plus);

/* Line-by-line completion of C12 / C23 in the N-sector. */
HEXPHASE_API hp_status hp_su3_line_completion(int n, hp_matrix** e12, hp_matrix** e23);
/* The commuting N = 1 completion. */
HEXPHASE_API hp_status hp_su3_wrap_solution(hp_matrix** e12, hp_matrix** e23);
/* Qutrit clock (Z) and shift (X). */
HEXPHASE_API hp_status hp_qutrit_pair(hp_matrix** z, hp_matrix** x);

/* eta_which = F h_which F^dagger, which in {1, 2}. */
HEXPHASE_API hp_status hp_phase_operator(int n, int which, hp_matrix** out);

/* ---- landscapes (values on first-hextant points) ----------------------- */

HEXPHASE_API void hp_landscape_free(hp_landscape* l);
HEXPHASE_API size_t hp_landscape_size(const hp_landscape* l);
HEXPHASE_API int hp_landscape_level(const hp_landscape* l);
HEXPHASE_API hp_status hp_landscape_get(const hp_landscape* l, size_t index, int* a, int* b, double* value);

/* Probabilities |F(lambda, x0)|^2 over phase labels for the Fock input
 * (n1, n2, n3); the level is n1 + n2 + n3. */
HEXPHASE_API hp_status hp_histogram(int n1, int n2, int n3, hp_landscape** out);
/* Var(eta_which) over the Fock states of the N-sector, placed at (n1, n2). */
HEXPHASE_API hp_status hp_variance_landscape(int n, int which, hp_landscape** out);
/* Normalized Shannon entropy of a histogram landscape. */
HEXPHASE_API hp_status hp_flatness(const hp_landscape* l, double* out);

/* ---- serialization ------------------------------------------------------ */

/* path NULL or "-" writes to standard output. SVG is landscape-only. */
HEXPHASE_API hp_status hp_write_matrix(const hp_matrix* m, hp_format format, const char* path);
HEXPHASE_API hp_status hp_write_landscape(const hp_landscape* l, hp_format format, const char* path);

/* ---- self-check --------------------------------------------------------- */

typedef void (*hp_check_callback)(const char* name, int passed, const char* detail, void* user);

/* Runs the invariant suite up to max_n. Returns HP_ERR_INVARIANT when any
 * check fails. */
HEXPHASE_API hp_status hp_verify(int max_n, hp_check_callback callback, void* user);

#ifdef __cplusplus
}
#endif

#endif /* HEXPHASE_HEXPHASE_H */
