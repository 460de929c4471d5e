#ifndef ELC_ELASTICITY_HPP
#define ELC_ELASTICITY_HPP

#include <utility>

#include "elc/tensor.hpp"

namespace elc {

// The N = 2 specialization on R^2 / R^3: strains, the fourth-order
// Saint-Venant compatibility tensor, curls, the incompatibility tensor and
// the trace / Kulkarni-Nomizu correspondence between the two.

// eps_ij = (d_j xi_i + d_i xi_j) / 2 for a covariant one-form field.
TensorField sym_gradient(const TensorField& xi);
// Omega_ij = (d_j xi_i - d_i xi_j) / 2.
TensorField spin_tensor(const TensorField& xi);

// W_ijkl = dl dk eps_ij - dl di eps_jk + di dj eps_kl - dk dj eps_il.
// Vanishes exactly when eps derives from a displacement field.
TensorField saint_venant(const TensorField& eps);

// (rot^c L)_ij = eps_ipq dp L_qj and (rot^r L)_ij = eps_jpq dp L_iq, n = 3.
TensorField column_curl(const TensorField& l);
TensorField row_curl(const TensorField& l);

// Inc eps = rot^c rot^r eps (n = 3), symmetric.
TensorField incompatibility(const TensorField& eps);

// Inc from the trace of W: Inc = -tr12 W + Scal q, Scal = tr[tr12 W] / 2.
std::pair<TensorField, Polynomial> inc_from_w(const TensorField& w);

// (a ^ b)_ijkl = a_ij b_kl + a_kl b_ij - a_jk b_il - a_il b_jk.
TensorField kulkarni_nomizu(const TensorField& a, const TensorField& b);

// W = -(Inc) ^ q + (Scal/2) q ^ q with Scal = tr[Inc]; inverts inc_from_w on
// Saint-Venant images in dimension 3.
TensorField reconstruct_w(const TensorField& inc);

// In dimension 2 the condition W = 0 collapses to Scal = 0.
Polynomial scal_2d(const TensorField& w);

// Linear isomorphism between R^3 and antisymmetric matrices:
// Omega_ij = -eps_ijk w^k and w^i = -(1/2) eps_ijk Omega_jk.
TensorField spin_from_axial(const TensorField& w);
TensorField axial_from_spin(const TensorField& omega);

} // namespace elc

#endif
