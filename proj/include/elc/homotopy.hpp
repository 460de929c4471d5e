#ifndef ELC_HOMOTOPY_HPP
#define ELC_HOMOTOPY_HPP

#include "elc/tensor.hpp"

namespace elc {

// Exact homotopy integrators along straight segments from the origin.
// Polynomial fields make every integral a polynomial, so all identities
// below hold as literal polynomial equalities.

// Poincare integrator on alternating k-forms, k >= 1:
// (K a)(x) = int_0^1 s^{k-1} x . a(sx) ds, an alternating (k-1)-form.
// Satisfies K(d a) + d(K a) = a with the classical exterior derivative.
TensorField poincare_k(const TensorField& alpha);

// Obstruction integrator on Saint-Venant-symmetric fields:
// (K2 W)_ij = int_0^1 dt int_0^t s x^k x^l W_ijkl(sx) ds, symmetric order 2.
// Nonzero K2(W) measures the incompatibility of the strain behind W.
TensorField obstruction_k2(const TensorField& w);

// Displacement recovery:
// (K1 eps)_i = int_0^1 x^k eps_ik(tx) dt
//            + int_0^1 (1-t) x^k x^l (dl eps_ik - di eps_kl)(tx) dt
// plus the rigid part xi0 + omega0.x. When saint_venant(eps) = 0 the result
// satisfies sym_gradient = eps exactly. xi0 (constant one-form) and omega0
// (constant antisymmetric matrix) may be null for a zero rigid part.
TensorField cesaro_volterra(const TensorField& eps, const TensorField* xi0 = nullptr,
                            const TensorField* omega0 = nullptr);

// eps - sym_gradient(K1 eps) - K2(saint_venant(eps)); identically zero for
// every symmetric polynomial strain, compatible or not.
TensorField homotopy_residual(const TensorField& eps);

} // namespace elc

#endif
