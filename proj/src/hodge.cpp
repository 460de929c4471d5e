#include "elc/hodge.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "elc/elasticity.hpp"
#include "elc/homotopy.hpp"

namespace elc {

namespace {

void check_star_position(const ComplexPosition& pos) {
  if (pos.N != 2) throw invariant_error("the star operator is defined for the width-2 complex");
  if (pos.dim < 2 || pos.dim > 3) throw invariant_error("the star operator requires dimension 2 or 3");
  if (pos.k < 0 || pos.k > 2 * pos.dim) throw invariant_error("star degree out of range");
}

// Combined index list L = (i_1..i_k, j_1..j_{2n-k}). Each epsilon factor
// takes every other entry; for odd k the output parity blocks swap so both
// factors carry exactly n indices.
struct StarSplit {
  std::vector<int> a;
  std::vector<int> b;
};

StarSplit star_split(int n, int k) {
  const int m = 2 * n - k;
  StarSplit sp;
  std::vector<int> iodd, ieven, jodd, jeven;
  for (int r = 0; r < k; ++r) (r % 2 == 0 ? iodd : ieven).push_back(r);
  for (int r = 0; r < m; ++r) (r % 2 == 0 ? jodd : jeven).push_back(k + r);
  auto cat = [](std::vector<int> x, const std::vector<int>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  if (k % 2 == 0) {
    sp.a = cat(iodd, jodd);
    sp.b = cat(ieven, jeven);
  } else {
    sp.a = cat(iodd, jeven);
    sp.b = cat(ieven, jodd);
  }
  return sp;
}

// Double Levi-Civita contraction between the k "input" slots of t and the
// 2n-k free slots; `forward` reads t on the input block and writes the
// output block, the transpose does the opposite.
TensorField double_epsilon_contract(const TensorField& t, int n, int k, bool forward) {
  const int m = 2 * n - k;
  const int t_order = forward ? k : m;
  if (t.order() != t_order) throw invariant_error("field order does not match the star degree");
  StarSplit sp = star_split(n, k);

  TensorField out =
      TensorField::zero(n, forward ? m : k, forward ? Variance::contravariant : Variance::covariant);
  std::vector<int> combined(2 * n);
  std::vector<int> pa(n), pb(n);
  std::iota(pa.begin(), pa.end(), 0);
  do {
    int sa = Permutation(pa).signature();
    std::iota(pb.begin(), pb.end(), 0);
    do {
      int sb = Permutation(pb).signature();
      for (int r = 0; r < n; ++r) {
        combined[sp.a[r]] = pa[r];
        combined[sp.b[r]] = pb[r];
      }
      std::span<const int> input(combined.data(), k);
      std::span<const int> output(combined.data() + k, m);
      const Rational sign(sa * sb);
      if (forward) {
        const Polynomial& v = k > 0 ? t.at(input) : t[0];
        if (!v.is_zero()) out[m > 0 ? out.flatten(output) : 0] += v * sign;
      } else {
        const Polynomial& v = m > 0 ? t.at(output) : t[0];
        if (!v.is_zero()) out[k > 0 ? out.flatten(input) : 0] += v * sign;
      }
    } while (std::next_permutation(pb.begin(), pb.end()));
  } while (std::next_permutation(pa.begin(), pa.end()));
  return out;
}

// Eigenvalue of (transpose contraction) o (forward contraction) on the
// member space at (n, k); Schur's lemma makes the composite a scalar there.
Rational star_eigenvalue(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Rational> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;

  const ComplexPosition pos{2, k, n};
  if (space_dimension(pos) == 0)
    throw invariant_error("the star operator is degenerate at this degree (empty symmetry class)");
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::size_t>(n);
  for (std::size_t basis = 0; basis < count; ++basis) {
    TensorField e = TensorField::zero(n, k);
    e[basis] = Polynomial::constant(n, Rational(1));
    TensorField member = project_member(pos, e);
    if (member.is_zero()) continue;
    TensorField round = double_epsilon_contract(double_epsilon_contract(member, n, k, true), n, k, false);
    std::size_t probe = 0;
    while (member[probe].is_zero()) ++probe;
    Rational lambda =
        round[probe].constant_term() / member[probe].constant_term();
    if (round != member.scaled(lambda) || lambda.is_zero())
      throw math_error("star roundtrip is not scalar on the member space");
    cache.emplace(std::make_pair(n, k), lambda);
    return lambda;
  }
  throw math_error("could not probe the member space for the star normalization");
}

void check_dual_member(const TensorField& p, int n, int dual_degree) {
  if (p.dim() != n || p.order() != dual_degree)
    throw invariant_error("dual field has the wrong order for this operation");
  if (!p.uniform_variance(Variance::contravariant))
    throw invariant_error("dual fields must be contravariant");
  TensorField cov = p.with_variance(std::vector<Variance>(p.order(), Variance::covariant));
  if (!is_member({2, dual_degree, n}, cov))
    throw invariant_error("field is not a member of the dual space at degree " +
                          std::to_string(dual_degree));
}

} // namespace

TensorField hodge_star(const ComplexPosition& pos, const TensorField& t) {
  check_star_position(pos);
  if (t.dim() != pos.dim || t.order() != pos.k)
    throw invariant_error("field does not match the star position");
  if (!t.uniform_variance(Variance::covariant))
    throw invariant_error("the star consumes covariant members");
  if (!is_member({2, pos.k, pos.dim}, t))
    throw invariant_error("field is not a member of the complex at this degree");
  return double_epsilon_contract(t, pos.dim, pos.k, true);
}

TensorField hodge_star_inverse(const ComplexPosition& pos, const TensorField& p) {
  check_star_position(pos);
  const int n = pos.dim;
  check_dual_member(p, n, 2 * n - pos.k);
  TensorField raw = double_epsilon_contract(p, n, pos.k, false);
  return raw.scaled(Rational(1) / star_eigenvalue(n, pos.k));
}

Rational star_roundtrip_eigenvalue(int dim, int k) { return star_eigenvalue(dim, k); }

TensorField codifferential(const TensorField& p) {
  const int n = p.dim();
  if (n < 2 || n > 3) throw invariant_error("the co-differential requires dimension 2 or 3");
  const int kp = p.order();
  if (kp < 1 || kp > 2 * n) throw invariant_error("co-differential degree out of range");
  check_dual_member(p, n, kp);
  const int k = kp - 1;
  // d*_k = star_{2n-k} o d_{2n-k-1} o star_{2n-k-1}^{-1}
  TensorField t = hodge_star_inverse({2, 2 * n - k - 1, n}, p);
  TensorField dt = dv_differential({2, 2 * n - k - 1, n}, t);
  return hodge_star({2, 2 * n - k, n}, dt);
}

TensorField stress_divergence(const TensorField& sigma) {
  if (sigma.order() != 2 || !sigma.uniform_variance(Variance::contravariant))
    throw invariant_error("expected a contravariant order-2 stress field");
  const int n = sigma.dim();
  TensorField r = TensorField::zero(n, 1, Variance::contravariant);
  for (int j = 0; j < n; ++j) {
    Polynomial acc(n);
    for (int i = 0; i < n; ++i) acc += sigma.at({i, j}).derivative(i);
    r.set({j}, std::move(acc));
  }
  return r;
}

TensorField airy_stress(const Polynomial& phi) {
  const int n = phi.dim();
  if (n != 2) throw invariant_error("the Airy map lives in dimension 2");
  TensorField eps2 = TensorField::levi_civita(2);
  TensorField r = TensorField::zero(2, 2, Variance::contravariant);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Polynomial acc(2);
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const Polynomial& a = eps2.at({i, k});
          const Polynomial& b = eps2.at({j, l});
          if (a.is_zero() || b.is_zero()) continue;
          acc += a * b * phi.derivative(k).derivative(l);
        }
      r.set({i, j}, std::move(acc));
    }
  return r;
}

TensorField beltrami_stress(const TensorField& phi) {
  if (phi.dim() != 3) throw invariant_error("the Beltrami map lives in dimension 3");
  if (phi.order() != 2 || !phi.uniform_variance(Variance::covariant) || !phi.symmetric_pair(0, 1))
    throw invariant_error("the Beltrami potential must be a symmetric covariant order-2 field");
  TensorField eps3 = TensorField::levi_civita(3);
  TensorField r = TensorField::zero(3, 2, Variance::contravariant);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Polynomial acc(3);
      for (int m = 0; m < 3; ++m)
        for (int k = 0; k < 3; ++k) {
          const Polynomial& a = eps3.at({i, m, k});
          if (a.is_zero()) continue;
          for (int nn = 0; nn < 3; ++nn)
            for (int l = 0; l < 3; ++l) {
              const Polynomial& b = eps3.at({j, nn, l});
              if (b.is_zero()) continue;
              acc += a * b * phi.at({m, nn}).derivative(k).derivative(l);
            }
        }
      r.set({i, j}, std::move(acc));
    }
  return r;
}

TensorField dual_poincare_k(const TensorField& p) {
  const int n = p.dim();
  check_dual_member(p, n, 2 * n - 2);
  TensorField eps = hodge_star_inverse({2, 2, n}, p);
  TensorField xi = cesaro_volterra(eps);
  return hodge_star({2, 1, n}, xi);
}

TensorField dual_obstruction_k(const TensorField& p) {
  const int n = p.dim();
  check_dual_member(p, n, 2 * n - 4);
  TensorField w = hodge_star_inverse({2, 4, n}, p);
  return hodge_star({2, 2, n}, obstruction_k2(w));
}

TensorField dual_homotopy_residual(const TensorField& p) {
  const int n = p.dim();
  check_dual_member(p, n, 2 * n - 2);
  TensorField term1 = codifferential(dual_poincare_k(p));
  TensorField sv = saint_venant(hodge_star_inverse({2, 2, n}, p));
  TensorField term2 = dual_obstruction_k(hodge_star({2, 4, n}, sv));
  return p - term1 - term2;
}

TensorField recover_potential(const TensorField& sigma) {
  const int n = sigma.dim();
  if (n < 2 || n > 3) throw invariant_error("potential recovery requires dimension 2 or 3");
  if (sigma.order() != 2 || !sigma.uniform_variance(Variance::contravariant))
    throw invariant_error("expected a contravariant order-2 stress field");
  if (!sigma.symmetric_pair(0, 1)) throw invariant_error("stress field must be symmetric");
  TensorField div = stress_divergence(sigma);
  if (!div.is_zero()) throw DivergenceError(std::move(div));

  if (n == 2) {
    // sigma = star2(Hess phi); K1 then the degree-one Poincare integrator
    // walk the two legs back.
    TensorField eps = hodge_star_inverse({2, 2, 2}, sigma);
    TensorField xi = cesaro_volterra(eps);
    TensorField phi = poincare_k(xi);
    if (!(airy_stress(phi[0]) == sigma))
      throw math_error("recovered scalar potential failed the forward check");
    return phi;
  }

  // sigma = (1/4) star4(W) with W in the image of the Saint-Venant map, and
  // K2 integrates that image exactly.
  TensorField w = hodge_star_inverse({2, 4, 3}, sigma).scaled(Rational(4));
  TensorField phi = obstruction_k2(w);
  if (!(beltrami_stress(phi) == sigma))
    throw math_error("stress is divergence-free but outside the Beltrami image");
  return phi;
}

} // namespace elc
