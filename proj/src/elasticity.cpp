#include "elc/elasticity.hpp"

#include "elc/error.hpp"

namespace elc {

namespace {

void check_one_form(const TensorField& xi) {
  if (xi.order() != 1 || !xi.uniform_variance(Variance::covariant))
    throw invariant_error("expected a covariant one-form field");
}

void check_strain(const TensorField& eps) {
  if (eps.order() != 2 || !eps.uniform_variance(Variance::covariant))
    throw invariant_error("expected a covariant order-2 field");
  if (!eps.symmetric_pair(0, 1)) throw invariant_error("strain field must be symmetric");
}

void check_dim3(const TensorField& t, const char* what) {
  if (t.dim() != 3) throw invariant_error(std::string(what) + " is only defined in dimension 3");
}

} // namespace

TensorField sym_gradient(const TensorField& xi) {
  check_one_form(xi);
  const int n = xi.dim();
  TensorField r = TensorField::zero(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial p = xi.at({i}).derivative(j) + xi.at({j}).derivative(i);
      r.set({i, j}, p * Rational(1, 2));
    }
  return r;
}

TensorField spin_tensor(const TensorField& xi) {
  check_one_form(xi);
  const int n = xi.dim();
  TensorField r = TensorField::zero(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial p = xi.at({i}).derivative(j) - xi.at({j}).derivative(i);
      r.set({i, j}, p * Rational(1, 2));
    }
  return r;
}

TensorField saint_venant(const TensorField& eps) {
  check_strain(eps);
  const int n = eps.dim();
  TensorField w = TensorField::zero(n, 4);
  std::vector<int> idx(4);
  for (MultiIndex mi(n, 4); !mi.done(); mi.next()) {
    auto q = mi.get();
    int i = q[0], j = q[1], k = q[2], l = q[3];
    Polynomial p = eps.at({i, j}).derivative(k).derivative(l) -
                   eps.at({j, k}).derivative(i).derivative(l) +
                   eps.at({k, l}).derivative(j).derivative(i) -
                   eps.at({i, l}).derivative(j).derivative(k);
    w[w.flatten(q)] = std::move(p);
  }
  return w;
}

TensorField column_curl(const TensorField& l) {
  check_dim3(l, "column curl");
  if (l.order() != 2) throw invariant_error("curl requires an order-2 field");
  TensorField eps3 = TensorField::levi_civita(3);
  TensorField r = TensorField::zero(3, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Polynomial acc(3);
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
          const Polynomial& sgn = eps3.at({i, p, q});
          if (sgn.is_zero()) continue;
          acc += sgn * l.at({q, j}).derivative(p);
        }
      r.set({i, j}, std::move(acc));
    }
  return r;
}

TensorField row_curl(const TensorField& l) {
  check_dim3(l, "row curl");
  if (l.order() != 2) throw invariant_error("curl requires an order-2 field");
  TensorField eps3 = TensorField::levi_civita(3);
  TensorField r = TensorField::zero(3, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Polynomial acc(3);
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
          const Polynomial& sgn = eps3.at({j, p, q});
          if (sgn.is_zero()) continue;
          acc += sgn * l.at({i, q}).derivative(p);
        }
      r.set({i, j}, std::move(acc));
    }
  return r;
}

TensorField incompatibility(const TensorField& eps) {
  check_dim3(eps, "incompatibility");
  check_strain(eps);
  return column_curl(row_curl(eps));
}

std::pair<TensorField, Polynomial> inc_from_w(const TensorField& w) {
  check_dim3(w, "inc_from_w");
  if (w.order() != 4 || !w.uniform_variance(Variance::covariant))
    throw invariant_error("expected a covariant order-4 field");
  if (!w.antisymmetric_pair(0, 2) || !w.antisymmetric_pair(1, 3))
    throw invariant_error("field lacks the Saint-Venant symmetries");
  TensorField tr = TensorField::zero(3, 2);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      Polynomial acc(3);
      for (int i = 0; i < 3; ++i) acc += w.at({i, i, k, l});
      tr.set({k, l}, std::move(acc));
    }
  Polynomial scal(3);
  for (int k = 0; k < 3; ++k) scal += tr.at({k, k});
  scal = scal * Rational(1, 2);
  TensorField inc = -tr;
  for (int k = 0; k < 3; ++k) inc.set({k, k}, inc.at({k, k}) + scal);
  return {std::move(inc), std::move(scal)};
}

TensorField kulkarni_nomizu(const TensorField& a, const TensorField& b) {
  if (a.dim() != b.dim()) throw invariant_error("dimension mismatch");
  check_strain(a);
  check_strain(b);
  const int n = a.dim();
  TensorField r = TensorField::zero(n, 4);
  for (MultiIndex mi(n, 4); !mi.done(); mi.next()) {
    auto q = mi.get();
    int i = q[0], j = q[1], k = q[2], l = q[3];
    Polynomial p = a.at({i, j}) * b.at({k, l}) + a.at({k, l}) * b.at({i, j}) -
                   a.at({j, k}) * b.at({i, l}) - a.at({i, l}) * b.at({j, k});
    r[r.flatten(q)] = std::move(p);
  }
  return r;
}

TensorField reconstruct_w(const TensorField& inc) {
  check_dim3(inc, "reconstruct_w");
  check_strain(inc);
  Polynomial scal(3);
  for (int k = 0; k < 3; ++k) scal += inc.at({k, k});
  TensorField q = TensorField::euclid_metric(3);
  TensorField w = -kulkarni_nomizu(inc, q);
  w += kulkarni_nomizu(q, q).scaled(scal * Rational(1, 2));
  return w;
}

Polynomial scal_2d(const TensorField& w) {
  if (w.dim() != 2 || w.order() != 4) throw invariant_error("expected an order-4 field on R^2");
  Polynomial tr(2);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) tr += w.at({i, i, k, k});
  return tr * Rational(1, 2);
}

TensorField spin_from_axial(const TensorField& w) {
  check_dim3(w, "spin_from_axial");
  if (w.order() != 1) throw invariant_error("axial vector must have order 1");
  TensorField eps3 = TensorField::levi_civita(3);
  TensorField r = TensorField::zero(3, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Polynomial acc(3);
      for (int k = 0; k < 3; ++k) {
        const Polynomial& sgn = eps3.at({i, j, k});
        if (sgn.is_zero()) continue;
        acc -= sgn * w.at({k});
      }
      r.set({i, j}, std::move(acc));
    }
  return r;
}

TensorField axial_from_spin(const TensorField& omega) {
  check_dim3(omega, "axial_from_spin");
  if (omega.order() != 2 || !omega.antisymmetric_pair(0, 1))
    throw invariant_error("spin tensor must be antisymmetric");
  TensorField eps3 = TensorField::levi_civita(3);
  TensorField r = TensorField::zero(3, 1, Variance::contravariant);
  for (int i = 0; i < 3; ++i) {
    Polynomial acc(3);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Polynomial& sgn = eps3.at({i, j, k});
        if (sgn.is_zero()) continue;
        acc -= sgn * omega.at({j, k});
      }
    r.set({i}, acc * Rational(1, 2));
  }
  return r;
}

} // namespace elc
