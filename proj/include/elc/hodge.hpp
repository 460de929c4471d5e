#ifndef ELC_HODGE_HPP
#define ELC_HODGE_HPP

#include "elc/complex.hpp"
#include "elc/error.hpp"
#include "elc/tensor.hpp"

namespace elc {

// Generalized Hodge star for the width-2 complex: a double Levi-Civita
// contraction pairing degree k with dual degree 2n-k. The k input slots and
// 2n-k output slots are interleaved by parity between the two epsilon
// factors (inputs first; for odd k the output parity blocks swap so each
// factor carries exactly n indices). Covariant members map to contravariant
// members of the dual space.
TensorField hodge_star(const ComplexPosition& pos, const TensorField& t);
// Exact inverse; the normalization per (n, k) is the double-contraction
// eigenvalue, computed once and cached (1/4, 1/2, 1, 1/2, 1/4 across the
// degrees in 2D; 1/4 at the stress and potential degrees in 3D).
TensorField hodge_star_inverse(const ComplexPosition& pos, const TensorField& p);
// The eigenvalue of unstar o star on the member space at (n, k).
Rational star_roundtrip_eigenvalue(int dim, int k);

// Generalized co-differential d*_k = star_{2n-k} o d_{2n-k-1} o star^{-1}:
// takes a dual member of degree k+1 to one of degree k; the degree is read
// from the input. Satisfies d* d* d* = 0.
TensorField codifferential(const TensorField& p);

// Divergence d_i sigma^{ij} of a contravariant order-2 field.
TensorField stress_divergence(const TensorField& sigma);

// Airy map in 2D: sigma^ij = eps^ik eps^jl dk dl phi; divergence-free.
TensorField airy_stress(const Polynomial& phi);
// Beltrami map in 3D: sigma^ij = eps^imk eps^jnl dk dl phi_mn.
TensorField beltrami_stress(const TensorField& phi);

// Star-conjugated homotopy operators for the dual complex,
// K* = star o K o star^{-1}:
//   dual_poincare_k:    dual degree 2n-2 -> 2n-1  (from the displacement
//                       integrator K1)
//   dual_obstruction_k: dual degree 2n-4 -> 2n-2  (from K2)
TensorField dual_poincare_k(const TensorField& p);
TensorField dual_obstruction_k(const TensorField& p);
// P - d*(K* P) - K2*(SV* P) on dual members of degree 2n-2; identically
// zero, the conjugate of the primal homotopy identity.
TensorField dual_homotopy_residual(const TensorField& p);

// Carries the offending divergence when a stress is not divergence-free.
class DivergenceError : public Error {
public:
  explicit DivergenceError(TensorField div)
      : Error(ErrorKind::math, "stress field is not divergence-free"), divergence_(std::move(div)) {}
  const TensorField& divergence() const { return divergence_; }

private:
  TensorField divergence_;
};

// Recovers a stress potential for a divergence-free contravariant symmetric
// sigma: a scalar (order-0 field) with airy_stress(phi) = sigma in 2D, a
// symmetric order-2 covariant phi with beltrami_stress(phi) = sigma in 3D.
// The potential is one representative of its gauge class; only the forward
// map is pinned. Throws DivergenceError when the input is not
// divergence-free.
TensorField recover_potential(const TensorField& sigma);

} // namespace elc

#endif
