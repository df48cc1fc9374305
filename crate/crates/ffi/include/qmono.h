/* C ABI for the qmono entanglement-monogamy library. */

#ifndef QMONO_H
#define QMONO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Measure selector: 0 concurrence, 1 CREN, 2 Bures.
typedef enum QmMeasureKind {
  QmMeasureKind_Concurrence = 0,
  QmMeasureKind_Cren = 1,
  QmMeasureKind_Bures = 2,
} QmMeasureKind;

// Status codes returned by every fallible call.
typedef enum QmStatus {
  QmStatus_Ok = 0,
  QmStatus_NullPointer = 1,
  QmStatus_InvalidInput = 2,
  QmStatus_PreconditionViolated = 3,
  QmStatus_DegenerateInput = 4,
  QmStatus_ParseError = 5,
  QmStatus_NumericalError = 6,
} QmStatus;

// Opaque pure-state handle.
typedef struct QmState QmState;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the most recent error message of this thread into `buf`
// (NUL-terminated, truncated to `len`). Returns the full message
// length in bytes, excluding the terminator.
//
// # Safety
// `buf` must point to `len` writable bytes, or be null (query mode).
size_t qm_last_error_message(char *buf, size_t len);

// Parses a state from the JSON document
// `{"dims":[2,2,2],"amps":[[re,im],...]}`.
//
// # Safety
// `json` must be a valid NUL-terminated string; `out` must be a valid
// pointer.
enum QmStatus qm_state_from_json(const char *json, struct QmState **out);

// Builds a state from subsystem dimensions and interleaved
// (re, im) amplitude pairs in lexicographic basis order.
//
// # Safety
// `dims` must point to `n_dims` values and `re_im` to `2 * n_amps`
// doubles.
enum QmStatus qm_state_new(const size_t *dims,
                           size_t n_dims,
                           const double *re_im,
                           size_t n_amps,
                           struct QmState **out);

// Builds the canonical three-qubit state
// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
//
// # Safety
// `out` must be a valid pointer.
enum QmStatus qm_acin_state(double l0,
                            double l1,
                            double l2,
                            double l3,
                            double l4,
                            double phi,
                            struct QmState **out);

// Deterministic random n-qubit state (1..=4 qubits).
//
// # Safety
// `out` must be a valid pointer.
enum QmStatus qm_random_state(size_t n_qubits, uint64_t seed, struct QmState **out);

// Releases a handle returned by one of the constructors. Null is a
// no-op.
//
// # Safety
// `state` must be a pointer previously returned by a constructor and
// not yet freed.
void qm_state_free(struct QmState *state);

// Number of subsystems of a state handle; 0 for null.
//
// # Safety
// `state` must be a live handle or null.
size_t qm_state_subsystems(const struct QmState *state);

// Evaluates a measure on the split `party_a` vs the rest
// (`party_b < 0`) or on the reduced pair (`party_a`, `party_b`).
//
// # Safety
// `state` must be a live handle; `out` a valid pointer.
enum QmStatus qm_measure(const struct QmState *state,
                         enum QmMeasureKind kind,
                         size_t party_a,
                         ptrdiff_t party_b,
                         double *out);

// Closed-form concurrences of the canonical family, written as
// (A|rest, AB, AC) into `out3`.
//
// # Safety
// `out3` must point to three writable doubles.
enum QmStatus qm_closed_form_concurrences(double l0,
                                          double l1,
                                          double l2,
                                          double l3,
                                          double l4,
                                          double phi,
                                          double *out3);

// B(c) = 2 - 2 sqrt((1 + sqrt(1 - c^2)) / 2).
//
// # Safety
// `out` must be a valid pointer.
enum QmStatus qm_bures_from_concurrence(double c, double *out);

// Smallest admissible exponent (1 + log2(m + 2)) * gamma.
double qm_alpha_min(double m, double gamma);

// Largest m admissible at the given exponent:
// floor(2^(alpha/gamma - 1) - 2), clamped at zero.
uint64_t qm_optimal_m(double alpha, double gamma);

// Kernel h(x, y) = (1 + y)^x - y^x + y^(-x) - m x y.
//
// # Safety
// `out` must be a valid pointer.
enum QmStatus qm_h_kernel(double x, double y, double m, double *out);

// Case-1 scalar lower bound on (1 + t)^x (0 < t <= k <= 1).
//
// # Safety
// `out` must be a valid pointer.
enum QmStatus qm_case1_rhs(double t, double k, double x, double m, double *out);

// Case-2 scalar lower bound on (1 + t)^x (t >= k >= 1).
//
// # Safety
// `out` must be a valid pointer.
enum QmStatus qm_case2_rhs(double t, double k, double x, double m, double *out);

// Case-1 chain, tightest first, written into `out6`.
//
// # Safety
// `out6` must point to six writable doubles.
enum QmStatus qm_case1_chain(double t, double k, double x, double m, double *out6);

// Case-2 chain, tightest first, written into `out5`.
//
// # Safety
// `out5` must point to five writable doubles.
enum QmStatus qm_case2_chain(double t, double k, double x, double m, double *out5);

// Tripartite bound without side information (k = 1 family).
//
// # Safety
// `out` must be a valid pointer.
enum QmStatus qm_tripartite_bound(double e_ab,
                                  double e_ac,
                                  double alpha,
                                  double gamma,
                                  double m,
                                  double *out);

// Tripartite bound exploiting the ratio bound k.
//
// # Safety
// `out` must be a valid pointer.
enum QmStatus qm_tripartite_bound_with_ratio(double e_ab,
                                             double e_ac,
                                             double alpha,
                                             double gamma,
                                             double m,
                                             double k,
                                             double *out);

// N-partite cascade bound; `tails` must hold `n_pairwise - 1` values.
//
// # Safety
// `pairwise` and `tails` must point to the stated number of doubles;
// `out` must be valid.
enum QmStatus qm_cascade_bound(const double *pairwise,
                               size_t n_pairwise,
                               const double *tails,
                               size_t n_tails,
                               double alpha,
                               double gamma,
                               double m,
                               double k,
                               double *out);

// N-partite split-regime bound with split index `split` (1-based).
//
// # Safety
// `pairwise` and `tails` must point to the stated number of doubles;
// `out` must be valid.
enum QmStatus qm_split_bound(const double *pairwise,
                             size_t n_pairwise,
                             const double *tails,
                             size_t n_tails,
                             size_t split,
                             double alpha,
                             double gamma,
                             double m,
                             double k,
                             double *out);

// Scalar power-sum lower bound on (p_1 + ... + p_N)^x for descending
// positive values.
//
// # Safety
// `values` must point to `n` doubles; `out` must be valid.
enum QmStatus qm_power_sum_lower_bound(const double *values,
                                       size_t n,
                                       double x,
                                       double m,
                                       double *out);

// Descending-order bound over sorted pairwise measures.
//
// # Safety
// `measures_desc` must point to `n` doubles; `out` must be valid.
enum QmStatus qm_descending_order_bound(const double *measures_desc,
                                        size_t n,
                                        double alpha,
                                        double gamma,
                                        double m,
                                        double *out);

// The five relaxation levels of the descending-order bound, tightest
// first, written into `out5`.
//
// # Safety
// `measures_desc` must point to `n` doubles; `out5` to five.
enum QmStatus qm_descending_order_chain(const double *measures_desc,
                                        size_t n,
                                        double alpha,
                                        double gamma,
                                        double m,
                                        double *out5);

// Simple descending bound e_1^a + sum [i^a - (i-1)^a] e_i^a, alpha >= 1.
//
// # Safety
// `measures_desc` must point to `n` doubles; `out` must be valid.
enum QmStatus qm_ordered_power_bound(const double *measures_desc,
                                     size_t n,
                                     double alpha,
                                     double *out);

// Runs the full verification sweep; returns 0 when every suite
// passes, 1 otherwise.
int32_t qm_verify_run(uint64_t seed, uint64_t factor, size_t threads);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QMONO_H */
