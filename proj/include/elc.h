/* elc — exact elasticity-complex toolkit, C API.
 *
 * Tensor fields are exchanged as JSON documents:
 *   { "dim": 3, "order": 2, "variance": "cc",
 *     "components": { "11": "1 x2^2" } }
 * with polynomial components in the signed-term grammar
 * "3/2 x1^2 x2 - 1 x3". Omitted components are zero; variance flags are
 * 'c' (covariant) and 'v' (contravariant).
 *
 * All functions return ELC_OK on success. On failure they return a status
 * code and leave a human-readable message in elc_last_error() (thread
 * local). Out-parameters are written only on success unless noted.
 * Strings returned through char** are malloc'd; release them with
 * elc_string_free. Fields returned through elc_field** are released with
 * elc_field_free.
 */
#ifndef ELC_H
#define ELC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum elc_status {
  ELC_OK = 0,
  ELC_ERR_PARSE = 1,     /* malformed JSON, polynomial or rational text */
  ELC_ERR_INVARIANT = 2, /* structural precondition violated */
  ELC_ERR_MATH = 3,      /* mathematical verdict (e.g. not divergence-free) */
  ELC_ERR_USAGE = 4      /* null handle or bad argument */
} elc_status;

typedef struct elc_field elc_field;

/* Message for the most recent failure on this thread; never NULL. */
const char* elc_last_error(void);

void elc_string_free(char* s);
void elc_field_free(elc_field* f);

/* ---- documents ---- */
elc_status elc_field_parse(const char* json_text, elc_field** out);
elc_status elc_field_to_json(const elc_field* f, char** out_json);
elc_status elc_field_clone(const elc_field* f, elc_field** out);

int elc_field_dim(const elc_field* f);   /* -1 on null */
int elc_field_order(const elc_field* f); /* -1 on null */
int elc_field_is_zero(const elc_field* f);
int elc_field_equal(const elc_field* a, const elc_field* b);

/* ---- elasticity pipeline ---- */
elc_status elc_sym_gradient(const elc_field* xi, elc_field** eps);
elc_status elc_saint_venant(const elc_field* eps, elc_field** w);
elc_status elc_incompatibility(const elc_field* eps, elc_field** inc);
/* inc and the scalar trace from the order-4 tensor; scal is a polynomial
 * string. */
elc_status elc_inc_from_w(const elc_field* w, elc_field** inc, char** scal);
elc_status elc_reconstruct_w(const elc_field* inc, elc_field** w);
elc_status elc_kulkarni_nomizu(const elc_field* a, const elc_field* b, elc_field** out);
/* In dimension 2 the compatibility condition reduces to this scalar. */
elc_status elc_scal_2d(const elc_field* w, char** scal);

/* Displacement recovery; xi0 (constant one-form) and omega0 (constant
 * antisymmetric matrix) may be NULL for a zero rigid part. */
elc_status elc_cesaro_volterra(const elc_field* eps, const elc_field* xi0,
                               const elc_field* omega0, elc_field** xi);
elc_status elc_obstruction_k2(const elc_field* w, elc_field** out);
elc_status elc_homotopy_residual(const elc_field* eps, elc_field** out);

/* ---- generalized complex ---- */
elc_status elc_is_member(int n_width, const elc_field* t, int* out);
elc_status elc_project_member(int n_width, const elc_field* t, elc_field** out);
elc_status elc_dv_differential(int n_width, const elc_field* t, elc_field** out);

/* ---- duality ---- */
elc_status elc_hodge_star(const elc_field* t, elc_field** out);
/* primal_degree = 2*dim - order(input). */
elc_status elc_hodge_star_inverse(const elc_field* p, elc_field** out);
elc_status elc_codifferential(const elc_field* p, elc_field** out);
elc_status elc_divergence(const elc_field* sigma, elc_field** out);
elc_status elc_airy_stress(const elc_field* phi, elc_field** sigma);
elc_status elc_beltrami_stress(const elc_field* phi, elc_field** sigma);
/* On ELC_ERR_MATH (not divergence-free), *divergence_out carries the
 * offending divergence field when the pointer is non-NULL. */
elc_status elc_recover_potential(const elc_field* sigma, elc_field** phi,
                                 elc_field** divergence_out);

/* ---- property suite ----
 * options_json: {"N":2,"k":1,"dim":3,"degree":3,"trials":20,"seed":1}
 * (all keys optional, NULL means defaults). Whenever the suite runs, the
 * report JSON is written even if checks fail; returns ELC_OK when every
 * check passed, ELC_ERR_MATH on check failures. */
elc_status elc_verify(const char* options_json, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* ELC_H */
