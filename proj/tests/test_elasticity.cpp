#include <doctest.h>

#include <random>

#include "elc/complex.hpp"
#include "elc/elasticity.hpp"
#include "elc/error.hpp"
#include "elc/verify.hpp"
#include "support/testutil.hpp"

using namespace elc;
using elctest::poly;
using elctest::random_member;

namespace {

// The worked incompatible strain: eps_11 = (x2)^2, everything else zero.
TensorField worked_strain() {
  TensorField eps = TensorField::zero(3, 2);
  eps.set({0, 0}, poly(3, "1 x2^2"));
  return eps;
}

TensorField random_displacement(std::mt19937_64& rng, int n, int degree) {
  return random_tensor(rng, n, 1, degree);
}

// Independent expansion of the double Levi-Civita contraction
// (Inc eps)_kl = eps_kpi eps_lrj dp dr eps_ij.
TensorField inc_by_double_epsilon(const TensorField& eps) {
  TensorField lev = TensorField::levi_civita(3);
  TensorField out = TensorField::zero(3, 2);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      Polynomial acc(3);
      for (int p = 0; p < 3; ++p)
        for (int i = 0; i < 3; ++i) {
          const Polynomial& a = lev.at({k, p, i});
          if (a.is_zero()) continue;
          for (int r = 0; r < 3; ++r)
            for (int j = 0; j < 3; ++j) {
              const Polynomial& b = lev.at({l, r, j});
              if (b.is_zero()) continue;
              acc += a * b * eps.at({i, j}).derivative(p).derivative(r);
            }
        }
      out.set({k, l}, std::move(acc));
    }
  return out;
}

} // namespace

TEST_CASE("symmetric gradient basics") {
  // rigid displacement: xi = c + omega x x
  TensorField xi = TensorField::zero(3, 1);
  xi.set({0}, poly(3, "5 - 2 x2"));
  xi.set({1}, poly(3, "2 x1 - 3 x3"));
  xi.set({2}, poly(3, "3 x2 + 1"));
  CHECK(sym_gradient(xi).is_zero());

  TensorField sq = TensorField::zero(3, 1);
  sq.set({0}, poly(3, "1 x1^2"));
  TensorField eps = sym_gradient(sq);
  CHECK(eps.at({0, 0}) == poly(3, "2 x1"));

  TensorField sh = TensorField::zero(3, 1);
  sh.set({0}, poly(3, "1 x2"));
  sh.set({1}, poly(3, "1 x1"));
  TensorField eps2 = sym_gradient(sh);
  CHECK(eps2.at({0, 1}) == poly(3, "1"));
  CHECK(eps2.at({0, 0}).is_zero());
  CHECK(eps2.at({1, 1}).is_zero());
}

TEST_CASE("the displacement gradient splits into strain plus spin") {
  std::mt19937_64 rng(49);
  TensorField xi = random_tensor(rng, 3, 1, 3);
  TensorField eps = sym_gradient(xi);
  TensorField spin = spin_tensor(xi);
  CHECK(eps.symmetric_pair(0, 1));
  CHECK(spin.antisymmetric_pair(0, 1));
  CHECK(eps + spin == xi.gradient());
}

TEST_CASE("saint-venant kills gradients and flags the worked example") {
  std::mt19937_64 rng(51);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 5; ++trial)
      CHECK(saint_venant(sym_gradient(random_displacement(rng, n, 4))).is_zero());

  TensorField w = saint_venant(worked_strain());
  CHECK(w.at({0, 0, 1, 1}) == poly(3, "2"));
  CHECK(w.at({1, 1, 0, 0}) == poly(3, "2"));
  CHECK(w.at({0, 1, 1, 0}) == poly(3, "-2"));
  CHECK(w.at({1, 0, 0, 1}) == poly(3, "-2"));
  int nonzero = 0;
  for (std::size_t i = 0; i < w.component_count(); ++i)
    if (!w[i].is_zero()) ++nonzero;
  CHECK(nonzero == 4);

  CHECK(saint_venant(TensorField::euclid_metric(3)).is_zero());
}

TEST_CASE("saint-venant output carries the tableau symmetries") {
  std::mt19937_64 rng(53);
  TensorField eps = random_member(rng, {2, 2, 3}, 3);
  TensorField w = saint_venant(eps);
  CHECK(is_member({2, 4, 3}, w));
  CHECK(w.antisymmetric_pair(0, 2));
  CHECK(w.antisymmetric_pair(1, 3));
  // pair-exchange symmetry W_klij = W_ijkl
  CHECK(w.permute_slots(Permutation({2, 3, 0, 1})) == w);
  // first-Bianchi-type sums vanish
  CHECK(elctest::alternation_over(w, {0, 1, 2}).is_zero());
  CHECK(elctest::alternation_over(w, {1, 2, 3}).is_zero());
}

TEST_CASE("bridge to the generic complex: W = 3 (d3 d2) eps") {
  std::mt19937_64 rng(59);
  for (int n = 2; n <= 3; ++n) {
    TensorField eps = random_member(rng, {2, 2, n}, 3);
    TensorField via_complex = dv_differential({2, 3, n}, dv_differential({2, 2, n}, eps));
    CHECK(saint_venant(eps) == via_complex.scaled(Rational(3)));
  }
}

TEST_CASE("curls") {
  CHECK(column_curl(TensorField::euclid_metric(3)).is_zero());
  CHECK(row_curl(TensorField::euclid_metric(3)).is_zero());

  std::mt19937_64 rng(61);
  TensorField l = random_tensor(rng, 3, 2, 3);
  CHECK(row_curl(l) == column_curl(l.transposed()).transposed());

  // constant spin from the axial map has zero curls
  TensorField omega = TensorField::zero(3, 1);
  omega.set({0}, poly(3, "1/2"));
  TensorField spin = spin_from_axial(omega);
  CHECK(column_curl(spin).is_zero());

  TensorField two_d = TensorField::zero(2, 2);
  CHECK_THROWS_AS(column_curl(two_d), Error);
}

TEST_CASE("axial vector isomorphism round trip") {
  std::mt19937_64 rng(67);
  TensorField omega = random_tensor(rng, 3, 1, 2, Variance::contravariant);
  TensorField spin = spin_from_axial(omega);
  CHECK(spin.antisymmetric_pair(0, 1));
  CHECK(axial_from_spin(spin) == omega);
}

TEST_CASE("incompatibility of the worked strain") {
  TensorField inc = incompatibility(worked_strain());
  CHECK(inc.at({2, 2}) == poly(3, "2"));
  int nonzero = 0;
  for (std::size_t i = 0; i < inc.component_count(); ++i)
    if (!inc[i].is_zero()) ++nonzero;
  CHECK(nonzero == 1);

  CHECK(incompatibility(TensorField::euclid_metric(3)).is_zero());

  std::mt19937_64 rng(71);
  CHECK(incompatibility(sym_gradient(random_displacement(rng, 3, 4))).is_zero());
}

TEST_CASE("incompatibility equals the double-epsilon expansion") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 4; ++trial) {
    TensorField eps = random_member(rng, {2, 2, 3}, 3);
    TensorField inc = incompatibility(eps);
    CHECK(inc == inc_by_double_epsilon(eps));
    CHECK(inc.symmetric_pair(0, 1));
  }
}

TEST_CASE("trace route matches the curl route") {
  TensorField w = saint_venant(worked_strain());
  auto [inc, scal] = inc_from_w(w);
  CHECK(inc.at({2, 2}) == poly(3, "2"));
  CHECK(scal == poly(3, "2"));

  auto [zinc, zscal] = inc_from_w(TensorField::zero(3, 4));
  CHECK(zinc.is_zero());
  CHECK(zscal.is_zero());

  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 4; ++trial) {
    TensorField eps = random_member(rng, {2, 2, 3}, 3);
    auto [inc2, scal2] = inc_from_w(saint_venant(eps));
    CHECK(inc2 == incompatibility(eps));
    (void)scal2;
  }
  // both routes annihilate compatible strains
  TensorField eps = sym_gradient(random_displacement(rng, 3, 3));
  CHECK(incompatibility(eps).is_zero());
  CHECK(inc_from_w(saint_venant(eps)).first.is_zero());
}

TEST_CASE("kulkarni-nomizu product") {
  TensorField q = TensorField::euclid_metric(3);
  TensorField qq = kulkarni_nomizu(q, q);
  // (q^q)_ijkl = 2(delta_ij delta_kl - delta_jk delta_il); slot (1,2,2,1) -> -2
  CHECK(qq.at({0, 1, 1, 0}) == poly(3, "-2"));
  CHECK(qq.at({0, 0, 1, 1}) == poly(3, "2"));

  std::mt19937_64 rng(83);
  TensorField a = random_member(rng, {2, 2, 3}, 2);
  TensorField b = random_member(rng, {2, 2, 3}, 2);
  CHECK(kulkarni_nomizu(a, b) == kulkarni_nomizu(b, a));
  CHECK(is_member({2, 4, 3}, kulkarni_nomizu(a, b)));

  // a ^ q = 0 implies a = 0: the map is injective on symmetric tensors
  TensorField aq = kulkarni_nomizu(a, q);
  CHECK_FALSE(aq.is_zero());
  // reconstruct a from tr12(a^q) = a + (tr a) q and verify consistency
  Polynomial tra(3);
  for (int i = 0; i < 3; ++i) tra += a.at({i, i});
  TensorField lhs = TensorField::zero(3, 2);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      Polynomial v = a.at({k, l});
      if (k == l) v += tra;
      lhs.set({k, l}, std::move(v));
    }
  TensorField tr12 = TensorField::zero(3, 2);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      Polynomial acc(3);
      for (int i = 0; i < 3; ++i) acc += aq.at({i, i, k, l});
      tr12.set({k, l}, std::move(acc));
    }
  CHECK(tr12 == lhs);

  CHECK_THROWS_AS(kulkarni_nomizu(a, TensorField::levi_civita(3).contract(0, 1)), Error);
}

TEST_CASE("reconstruction from the incompatibility tensor") {
  std::mt19937_64 rng(89);
  // algebraic roundtrip on arbitrary symmetric fields
  for (int trial = 0; trial < 4; ++trial) {
    TensorField i0 = random_member(rng, {2, 2, 3}, 2);
    auto [back, scal] = inc_from_w(reconstruct_w(i0));
    CHECK(back == i0);
    (void)scal;
  }
  CHECK(reconstruct_w(TensorField::zero(3, 2)).is_zero());

  // roundtrip through the Saint-Venant image
  for (int trial = 0; trial < 3; ++trial) {
    TensorField eps = random_member(rng, {2, 2, 3}, 3);
    TensorField w = saint_venant(eps);
    auto [inc, scal] = inc_from_w(w);
    CHECK(reconstruct_w(inc) == w);
    (void)scal;
    CHECK(is_member({2, 4, 3}, reconstruct_w(inc)));
  }
}

TEST_CASE("equivalence of the two vanishing conditions in dimension 3") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 3; ++trial) {
    TensorField eps = random_member(rng, {2, 2, 3}, 3);
    TensorField w = saint_venant(eps);
    auto [inc, scal] = inc_from_w(w);
    (void)scal;
    CHECK(w.is_zero() == inc.is_zero());
  }
}

TEST_CASE("dimension-2 scalar reduction") {
  std::mt19937_64 rng(101);
  TensorField eps = random_member(rng, {2, 2, 2}, 3);
  TensorField w = saint_venant(eps);
  Polynomial scal = scal_2d(w);
  // W is determined by Scal in 2D: it vanishes iff Scal does
  CHECK(w.is_zero() == scal.is_zero());
  TensorField grad_eps = sym_gradient(random_displacement(rng, 2, 4));
  CHECK(scal_2d(saint_venant(grad_eps)).is_zero());
}

TEST_CASE("strain validation") {
  TensorField anti = TensorField::zero(3, 2);
  anti.set({0, 1}, poly(3, "1 x1"));
  anti.set({1, 0}, poly(3, "-1 x1"));
  CHECK_THROWS_AS(saint_venant(anti), Error);
  CHECK_THROWS_AS(incompatibility(anti), Error);
}
