#include "elc/homotopy.hpp"

#include "elc/complex.hpp"
#include "elc/elasticity.hpp"
#include "elc/error.hpp"

namespace elc {

namespace {

Polynomial one(int dim) { return Polynomial::constant(dim, Rational(1)); }

} // namespace

TensorField poincare_k(const TensorField& alpha) {
  const int n = alpha.dim();
  const int k = alpha.order();
  if (k < 1) throw invariant_error("the integrator needs a form of degree >= 1");
  if (!is_member({1, k, n}, alpha)) throw invariant_error("input form is not alternating");
  const int s = Polynomial(n).var_s();

  TensorField scaled = alpha.scale_substitute(s); // alpha(sx)
  TensorField r = TensorField::zero(n, k - 1);
  Polynomial weight = Polynomial::variable(n, s).pow(static_cast<unsigned>(k - 1));
  std::vector<int> src(k);
  for (MultiIndex mi(n, k - 1); !mi.done(); mi.next()) {
    auto rest = mi.get();
    Polynomial acc(n);
    for (int j = 0; j < n; ++j) {
      src[0] = j;
      for (int i = 0; i < k - 1; ++i) src[i + 1] = rest[i];
      acc += Polynomial::coordinate(n, j) * scaled[scaled.flatten(src)];
    }
    acc = (weight * acc).definite_integral(s, Polynomial(n), one(n));
    r[r.flatten(rest)] = std::move(acc);
  }
  return r;
}

TensorField obstruction_k2(const TensorField& w) {
  const int n = w.dim();
  if (w.order() != 4 || !w.uniform_variance(Variance::covariant))
    throw invariant_error("expected a covariant order-4 field");
  if (!is_member({2, 4, n}, w)) throw invariant_error("field lacks the Saint-Venant symmetries");
  const int t = Polynomial(n).var_t();
  const int s = Polynomial(n).var_s();

  TensorField ws = w.scale_substitute(s); // W(sx)
  TensorField r = TensorField::zero(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial acc(n);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          acc += Polynomial::coordinate(n, k) * Polynomial::coordinate(n, l) * ws.at({i, j, k, l});
      acc = (Polynomial::variable(n, s) * acc)
                .definite_integral(s, Polynomial(n), Polynomial::variable(n, t));
      acc = acc.definite_integral(t, Polynomial(n), one(n));
      r.set({i, j}, std::move(acc));
    }
  return r;
}

TensorField cesaro_volterra(const TensorField& eps, const TensorField* xi0,
                            const TensorField* omega0) {
  const int n = eps.dim();
  if (eps.order() != 2 || !eps.uniform_variance(Variance::covariant) || !eps.symmetric_pair(0, 1))
    throw invariant_error("expected a symmetric covariant strain field");
  if (xi0) {
    if (xi0->dim() != n || xi0->order() != 1 || !xi0->uniform_variance(Variance::covariant))
      throw invariant_error("xi0 must be a covariant one-form on R^n");
    if (!xi0->gradient().is_zero()) throw invariant_error("xi0 must be constant");
  }
  if (omega0) {
    if (omega0->dim() != n || omega0->order() != 2 ||
        !omega0->uniform_variance(Variance::covariant))
      throw invariant_error("omega0 must be a covariant order-2 field on R^n");
    if (!omega0->gradient().is_zero()) throw invariant_error("omega0 must be constant");
    if (!omega0->antisymmetric_pair(0, 1)) throw invariant_error("omega0 must be antisymmetric");
  }
  const int t = Polynomial(n).var_t();

  TensorField grad = eps.gradient(); // (grad eps)_{ik,l} = d_l eps_ik
  TensorField eps_t = eps.scale_substitute(t);
  TensorField grad_t = grad.scale_substitute(t);
  Polynomial tvar = Polynomial::variable(n, t);

  TensorField xi = TensorField::zero(n, 1);
  for (int i = 0; i < n; ++i) {
    Polynomial first(n);
    for (int k = 0; k < n; ++k) first += Polynomial::coordinate(n, k) * eps_t.at({i, k});
    first = first.definite_integral(t, Polynomial(n), one(n));

    Polynomial second(n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        second += Polynomial::coordinate(n, k) * Polynomial::coordinate(n, l) *
                  (grad_t.at({i, k, l}) - grad_t.at({k, l, i}));
    second = ((one(n) - tvar) * second).definite_integral(t, Polynomial(n), one(n));

    Polynomial total = first + second;
    if (xi0) total += xi0->at({i});
    if (omega0)
      for (int j = 0; j < n; ++j) total += omega0->at({i, j}) * Polynomial::coordinate(n, j);
    xi.set({i}, std::move(total));
  }
  return xi;
}

TensorField homotopy_residual(const TensorField& eps) {
  TensorField xi = cesaro_volterra(eps);
  TensorField obstruction = obstruction_k2(saint_venant(eps));
  return eps - sym_gradient(xi) - obstruction;
}

} // namespace elc
