#include "elc/complex.hpp"

#include <string>

#include "elc/error.hpp"

namespace elc {

namespace {

void check_position(const ComplexPosition& pos) {
  if (pos.N < 1) throw invariant_error("complex width must be >= 1");
  if (pos.k < 0) throw invariant_error("complex degree must be >= 0");
  if (pos.dim < 1) throw invariant_error("ambient dimension must be >= 1");
}

void check_input(const ComplexPosition& pos, const TensorField& t) {
  check_position(pos);
  if (t.dim() != pos.dim) throw invariant_error("tensor dimension does not match the position");
  if (t.order() != pos.k) throw invariant_error("tensor order does not match the position");
}

} // namespace

std::int64_t space_dimension(const ComplexPosition& pos) {
  check_position(pos);
  if (pos.k == 0) return 1;
  return schur_dimension(dv_tableau(pos.N, pos.k).diagram(), pos.dim);
}

bool is_member(const ComplexPosition& pos, const TensorField& t) {
  check_input(pos, t);
  if (pos.k == 0) return true;
  return young_project(dv_tableau(pos.N, pos.k), t) == t;
}

TensorField project_member(const ComplexPosition& pos, const TensorField& t) {
  check_input(pos, t);
  if (pos.k == 0) return t;
  return young_project(dv_tableau(pos.N, pos.k), t);
}

TensorField dv_differential(const ComplexPosition& pos, const TensorField& t) {
  check_input(pos, t);
  if (!is_member(pos, t))
    throw invariant_error("input is not a member of the complex at (N=" + std::to_string(pos.N) +
                          ", k=" + std::to_string(pos.k) + ")");
  return young_project(dv_tableau(pos.N, pos.k + 1), t.gradient());
}

TensorField nilpotency_composite(const ComplexPosition& pos, const TensorField& t) {
  check_input(pos, t);
  TensorField cur = t;
  for (int step = 0; step <= pos.N; ++step)
    cur = dv_differential({pos.N, pos.k + step, pos.dim}, cur);
  return cur;
}

TensorField exterior_derivative(const TensorField& t) {
  const int k = t.order();
  const int n = t.dim();
  if (!is_member({1, k, n}, t)) throw invariant_error("exterior derivative requires an alternating form");
  TensorField grad = t.gradient(); // (grad t)_{i1..ik, j} = d_j t_{i1..ik}
  TensorField r = TensorField::zero(n, k + 1, Variance::covariant);
  std::vector<int> src(k + 1);
  for (MultiIndex mi(n, k + 1); !mi.done(); mi.next()) {
    auto idx = mi.get();
    Polynomial acc(n);
    for (int m = 0; m <= k; ++m) {
      // omit slot m, differentiate by it
      int wpos = 0;
      for (int i = 0; i <= k; ++i) {
        if (i == m) continue;
        src[wpos++] = idx[i];
      }
      src[k] = idx[m];
      const Polynomial& term = grad.at(std::span<const int>(src.data(), k + 1));
      if (m % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    r[r.flatten(idx)] = std::move(acc);
  }
  return r;
}

} // namespace elc
