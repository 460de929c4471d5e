#ifndef ELC_COMPLEX_HPP
#define ELC_COMPLEX_HPP

#include <cstdint>

#include "elc/tensor.hpp"
#include "elc/young.hpp"

namespace elc {

// Position (N, k) in the width-N generalized complex over R^n: the space of
// covariant order-k tensor fields with the symmetry of dv_tableau(N, k).
// N = 1 is the de Rham complex of alternating forms; N = 2 hosts elasticity.
struct ComplexPosition {
  int N;
  int k;
  int dim;
};

std::int64_t space_dimension(const ComplexPosition& pos);

// Fixed point of the tableau projector (uniform variance required).
bool is_member(const ComplexPosition& pos, const TensorField& t);
// Projection onto the member space.
TensorField project_member(const ComplexPosition& pos, const TensorField& t);

// d_k = F_{D^{k+1}_N} o grad. Requires is_member(pos, t).
TensorField dv_differential(const ComplexPosition& pos, const TensorField& t);

// The (N+1)-fold composite d_{k+N} o ... o d_k; identically zero.
TensorField nilpotency_composite(const ComplexPosition& pos, const TensorField& t);

// Classical exterior derivative on alternating forms,
// (d w)_{i1..i{k+1}} = sum_m (-1)^{m-1} d_{i_m} w_{..no i_m..}.
// The N = 1 differential is proportional to it degree by degree; the
// constants are pinned down in the tests.
TensorField exterior_derivative(const TensorField& t);

} // namespace elc

#endif
