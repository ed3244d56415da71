/*
 * Copyright 2026 The qdel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * qdel: simulator for approximate quantum deletion machines.
 *
 * C ABI over the C++ core. Every function returns a qdel_status; on failure
 * qdel_last_error_message() describes the problem for the calling thread.
 * Objects handed out through an out-pointer are owned by the caller and
 * released with the matching *_destroy function. No function keeps global
 * mutable state, so handles may be used from any thread as long as a single
 * handle is not destroyed while in use.
 *
 * Basis convention: subsystem 0 is the leftmost ket label, flat index is
 * row-major over subsystems. Matrices cross the ABI as row-major arrays of
 * qdel_complex.
 */

#ifndef QDEL_QDEL_H_
#define QDEL_QDEL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QDEL_BUILDING_LIBRARY)
#    define QDEL_API __declspec(dllexport)
#  else
#    define QDEL_API __declspec(dllimport)
#  endif
#else
#  define QDEL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdel_status {
  QDEL_OK = 0,
  QDEL_ERR_NULL_ARGUMENT = 1,
  QDEL_ERR_INVALID_ARGUMENT = 2,
  QDEL_ERR_DIMENSION_MISMATCH = 3,
  QDEL_ERR_KIND_MISMATCH = 4,
  QDEL_ERR_NOT_NORMALIZED = 5,
  QDEL_ERR_NOT_HERMITIAN = 6,
  QDEL_ERR_NOT_UNITARY = 7,
  QDEL_ERR_IMAGINARY_RESIDUE = 8,
  QDEL_ERR_OUT_OF_SCOPE = 9,
  QDEL_ERR_UNKNOWN_MACHINE = 10,
  QDEL_ERR_INDEX_OUT_OF_RANGE = 11,
  QDEL_ERR_BUFFER_TOO_SMALL = 12,
  QDEL_ERR_INTERNAL = 99
} qdel_status;

typedef struct qdel_complex {
  double re;
  double im;
} qdel_complex;

QDEL_API const char* qdel_version(void);
QDEL_API const char* qdel_status_string(qdel_status status);

/* Message for the most recent failure on this thread; empty after success. */
QDEL_API const char* qdel_last_error_message(void);

/* ------------------------------------------------------------------------ */
/* Linear algebra objects                                                    */

typedef enum qdel_kind {
  QDEL_KIND_PURE_STATE = 0,
  QDEL_KIND_DENSITY_OPERATOR = 1,
  QDEL_KIND_UNITARY = 2
} qdel_kind;

typedef struct qdel_object qdel_object;

/* Constructors validate: states must be normalized, density operators
 * Hermitian with unit trace and PSD, unitaries unitary (tolerance 1e-12,
 * eigenvalues 1e-10). Nothing is renormalized. */
QDEL_API qdel_status qdel_pure_state_create(const size_t* dims, size_t ndims,
                                            const qdel_complex* amps,
                                            size_t namps, qdel_object** out);
QDEL_API qdel_status qdel_density_operator_create(const size_t* dims,
                                                  size_t ndims,
                                                  const qdel_complex* entries,
                                                  size_t nentries,
                                                  qdel_object** out);
QDEL_API qdel_status qdel_unitary_create(const size_t* dims, size_t ndims,
                                         const qdel_complex* entries,
                                         size_t nentries, qdel_object** out);
QDEL_API void qdel_object_destroy(qdel_object* obj);

QDEL_API qdel_status qdel_object_kind(const qdel_object* obj, qdel_kind* out);

/* Copies the subsystem dimensions. *ndims receives the count even when the
 * buffer is too small. */
QDEL_API qdel_status qdel_object_dims(const qdel_object* obj, size_t* dims,
                                      size_t capacity, size_t* ndims);

/* Copies amplitudes (states) or row-major entries (operators). */
QDEL_API qdel_status qdel_object_data(const qdel_object* obj,
                                      qdel_complex* data, size_t capacity,
                                      size_t* count);

/* Kronecker product of two objects of the same kind. */
QDEL_API qdel_status qdel_tensor_product(const qdel_object* a,
                                         const qdel_object* b,
                                         qdel_object** out);
QDEL_API qdel_status qdel_partial_trace(const qdel_object* rho,
                                        const size_t* keep, size_t nkeep,
                                        qdel_object** out);
QDEL_API qdel_status qdel_outer(const qdel_object* phi, qdel_object** out);
QDEL_API qdel_status qdel_apply(const qdel_object* unitary,
                                const qdel_object* phi, qdel_object** out);
QDEL_API qdel_status qdel_fidelity_against(const qdel_object* rho,
                                           const qdel_object* phi,
                                           double* out);
QDEL_API qdel_status qdel_eigen_min(const qdel_object* rho, double* out);

/* ------------------------------------------------------------------------ */
/* Deletion machines                                                         */

typedef enum qdel_machine {
  QDEL_MACHINE_ONE_TRANSFORMER_LIMIT = 0,
  QDEL_MACHINE_TWO_TRANSFORMER_LIMIT = 1,
  QDEL_MACHINE_PB_WITH_TRANSFORMER = 2,
  QDEL_MACHINE_PB_ALONE = 3
} qdel_machine;

typedef enum qdel_branch {
  QDEL_BRANCH_NONE = 0,
  QDEL_BRANCH_POSITIVE_PRODUCT = 1,
  QDEL_BRANCH_NEGATIVE_PRODUCT = 2
} qdel_branch;

/* |S> = m1|0> + m2|1>, m1^2 + |m2|^2 = 1 within 1e-12. */
typedef struct qdel_blank {
  double m1;
  qdel_complex m2;
} qdel_blank;

/* |psi> = alpha|0> + beta|1>, alpha >= 0, alpha^2 + |beta|^2 = 1. */
typedef struct qdel_input {
  double alpha;
  qdel_complex beta;
} qdel_input;

typedef struct qdel_fidelity_report {
  qdel_machine machine;
  qdel_blank blank;
  int has_input; /* 0 for the two limiting machines */
  qdel_input input;
  double fidelity;
  qdel_branch branch;
} qdel_fidelity_report;

typedef struct qdel_branched_fidelity {
  double positive_branch;
  double negative_branch;
  int degenerate;
} qdel_branched_fidelity;

typedef struct qdel_table_row {
  double m1_sq;
  double m2_sq;
  double diff;
  qdel_branched_fidelity fidelity;
} qdel_table_row;

/* "one-transformer", "two-transformer", "pb-with-transformer", "pb-alone". */
QDEL_API const char* qdel_machine_name(qdel_machine machine);
QDEL_API qdel_status qdel_machine_parse(const char* name, qdel_machine* out);

QDEL_API qdel_status qdel_sigma(const qdel_blank* blank, qdel_object** out);
QDEL_API qdel_status qdel_sigma_perp(const qdel_blank* blank,
                                     qdel_object** out);
QDEL_API qdel_status qdel_sigma_prime(const qdel_blank* blank,
                                      qdel_object** out);
QDEL_API qdel_status qdel_transformer(qdel_object** out);

/* Three-subsystem state (2, 2, 3); machine basis order |A>, |A0>, |A1>. */
QDEL_API qdel_status qdel_pb_delete(const qdel_input* input,
                                    const qdel_blank* blank, qdel_object** out);
QDEL_API qdel_status qdel_pb_with_transformer_rho2(const qdel_input* input,
                                                   const qdel_blank* blank,
                                                   qdel_object** out);
QDEL_API qdel_status qdel_pb_alone_rho2(const qdel_input* input,
                                        const qdel_blank* blank,
                                        qdel_object** out);
/* Closed form of the mode-2 operator, row-major 2x2. */
QDEL_API qdel_status qdel_pb_with_transformer_rho2_closed_form(
    const qdel_input* input, const qdel_blank* blank, qdel_complex out[4]);
/* Real m2 only; QDEL_ERR_OUT_OF_SCOPE otherwise. */
QDEL_API qdel_status qdel_pb_with_transformer_f2_closed_form(
    const qdel_input* input, const qdel_blank* blank, double* out);

/* Any machine. `input` may be NULL for the limiting machines. */
QDEL_API qdel_status qdel_fidelity(qdel_machine machine,
                                   const qdel_blank* blank,
                                   const qdel_input* input,
                                   qdel_fidelity_report* out);

/* Trapezoid average over alpha^2 uniform on [0, 1]. */
QDEL_API qdel_status qdel_average_fidelity(qdel_machine machine,
                                           const qdel_blank* blank,
                                           size_t samples, double* out);
QDEL_API qdel_status qdel_monte_carlo_average_fidelity(
    qdel_machine machine, const qdel_blank* blank, size_t samples,
    uint64_t seed, double* out);

/* ------------------------------------------------------------------------ */
/* Limiting fidelities                                                       */

QDEL_API qdel_status qdel_f1_limiting(const qdel_blank* blank,
                                      qdel_branched_fidelity* out);
QDEL_API qdel_status qdel_f_two_transformer(const qdel_blank* blank,
                                            double* out);
/* Two-transformer limit measured against |S> instead of |S'>. */
QDEL_API qdel_status qdel_f_two_transformer_against_sigma(
    const qdel_blank* blank, double* out);
QDEL_API qdel_status qdel_f_two_transformer_branched(
    double m1_sq, qdel_branched_fidelity* out);
QDEL_API qdel_status qdel_rho2_two_transformer_limit(qdel_object** out);

/* which = 1 or 2. Writes up to `capacity` rows; *count receives 11. */
QDEL_API qdel_status qdel_table(int which, qdel_table_row* rows,
                                size_t capacity, size_t* count);

/* ------------------------------------------------------------------------ */
/* Verification                                                              */

typedef struct qdel_verify_options {
  double algebraic_tolerance;  /* default 1e-12 */
  double eigen_tolerance;      /* default 1e-10 */
  double table_tolerance;      /* default 0.01 */
  double average_tolerance;    /* default 1e-6 */
  size_t quadrature_samples;   /* default 10001 */
  double transformer_perturbation; /* default 0; nonzero breaks T on purpose */
  uint64_t seed;
} qdel_verify_options;

typedef struct qdel_verify_outcome {
  const char* check;  /* owned by the report */
  int passed;
  double deviation;   /* +inf when the check could not be evaluated */
  double tolerance;
  const char* anchor; /* owned by the report */
} qdel_verify_outcome;

typedef struct qdel_verify_report qdel_verify_report;

QDEL_API void qdel_verify_options_default(qdel_verify_options* options);
QDEL_API qdel_status qdel_verify_run(const qdel_verify_options* options,
                                     qdel_verify_report** out);
QDEL_API size_t qdel_verify_report_count(const qdel_verify_report* report);
QDEL_API qdel_status qdel_verify_report_get(const qdel_verify_report* report,
                                            size_t index,
                                            qdel_verify_outcome* out);
QDEL_API int qdel_verify_report_all_passed(const qdel_verify_report* report);
QDEL_API void qdel_verify_report_destroy(qdel_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* QDEL_QDEL_H_ */
