#include <doctest.h>

#include <random>

#include "elc/complex.hpp"
#include "elc/elasticity.hpp"
#include "elc/error.hpp"
#include "elc/homotopy.hpp"
#include "elc/verify.hpp"
#include "support/testutil.hpp"

using namespace elc;
using elctest::poly;
using elctest::random_member;

TEST_CASE("poincare integrator on explicit one-forms") {
  // alpha = dx  ->  f = x, and grad f = alpha
  TensorField alpha = TensorField::zero(3, 1);
  alpha.set({0}, poly(3, "1"));
  TensorField f = poincare_k(alpha);
  CHECK(f.order() == 0);
  CHECK(f[0] == poly(3, "1 x1"));
  CHECK(exterior_derivative(f) == alpha);

  // alpha = y dx + x dy  ->  f = xy
  TensorField closed = TensorField::zero(2, 1);
  closed.set({0}, poly(2, "1 x2"));
  closed.set({1}, poly(2, "1 x1"));
  CHECK(poincare_k(closed)[0] == poly(2, "1 x1 x2"));
}

TEST_CASE("poincare homotopy identity, exact") {
  std::mt19937_64 rng(103);
  for (int k : {1, 2}) {
    for (int trial = 0; trial < 6; ++trial) {
      TensorField alpha = random_member(rng, {1, k, 3}, 3);
      TensorField lhs = poincare_k(exterior_derivative(alpha)) +
                        exterior_derivative(poincare_k(alpha));
      CHECK(lhs == alpha);
    }
  }
}

TEST_CASE("poincare integrator rejects non-alternating input") {
  TensorField sym = TensorField::euclid_metric(3);
  CHECK_THROWS_AS(poincare_k(sym), Error);
  CHECK_THROWS_AS(poincare_k(TensorField::scalar(poly(3, "1 x1"))), Error);
}

TEST_CASE("obstruction integrator on the worked tensor") {
  // constant W with W_1122 = W_2211 = 2 and W_1221 = W_2112 = -2
  TensorField w = TensorField::zero(3, 4);
  w.set({0, 0, 1, 1}, poly(3, "2"));
  w.set({1, 1, 0, 0}, poly(3, "2"));
  w.set({0, 1, 1, 0}, poly(3, "-2"));
  w.set({1, 0, 0, 1}, poly(3, "-2"));
  REQUIRE(is_member({2, 4, 3}, w));

  TensorField k2 = obstruction_k2(w);
  CHECK(k2.at({0, 0}) == poly(3, "1/3 x2^2"));
  CHECK(k2.at({0, 1}) == poly(3, "-1/3 x1 x2"));
  CHECK(k2.at({1, 0}) == poly(3, "-1/3 x1 x2"));
  CHECK(k2.at({1, 1}) == poly(3, "1/3 x1^2"));
  for (int i = 0; i < 3; ++i) {
    CHECK(k2.at({i, 2}).is_zero());
    CHECK(k2.at({2, i}).is_zero());
  }

  CHECK(obstruction_k2(TensorField::zero(3, 4)).is_zero());
}

TEST_CASE("obstruction output is symmetric and respects homogeneity") {
  std::mt19937_64 rng(107);
  TensorField w = random_member(rng, {2, 4, 3}, 2);
  TensorField k2 = obstruction_k2(w);
  CHECK(k2.symmetric_pair(0, 1));

  // homogeneous degree d inputs gain exactly two degrees
  TensorField wh = TensorField::zero(3, 4);
  wh.set({0, 0, 1, 1}, poly(3, "1 x3"));
  wh.set({1, 1, 0, 0}, poly(3, "1 x3"));
  wh.set({0, 1, 1, 0}, poly(3, "-1 x3"));
  wh.set({1, 0, 0, 1}, poly(3, "-1 x3"));
  REQUIRE(is_member({2, 4, 3}, wh));
  TensorField k2h = obstruction_k2(wh);
  CHECK_FALSE(k2h.is_zero());
  for (std::size_t i = 0; i < k2h.component_count(); ++i)
    if (!k2h[i].is_zero()) CHECK(k2h[i].coordinate_degree() == 3);
}

TEST_CASE("displacement recovery: constant strain") {
  std::mt19937_64 rng(109);
  TensorField eps = random_member(rng, {2, 2, 3}, 0);
  TensorField xi = cesaro_volterra(eps);
  for (int i = 0; i < 3; ++i) {
    Polynomial want(3);
    for (int k = 0; k < 3; ++k) want += eps.at({i, k}) * Polynomial::coordinate(3, k);
    CHECK(xi.at({i}) == want);
  }
  CHECK(sym_gradient(xi) == eps);
}

TEST_CASE("displacement recovery: worked incompatible strain") {
  TensorField eps = TensorField::zero(3, 2);
  eps.set({0, 0}, poly(3, "1 x2^2"));
  TensorField xi = cesaro_volterra(eps);
  CHECK(xi.at({0}) == poly(3, "2/3 x1 x2^2"));
  CHECK(xi.at({1}) == poly(3, "-1/3 x1^2 x2"));
  CHECK(xi.at({2}).is_zero());
  // incompatible input: recovery is partial by construction
  CHECK_FALSE(sym_gradient(xi) == eps);
}

TEST_CASE("displacement recovery: rigid part only") {
  TensorField zero_eps = TensorField::zero(3, 2);
  TensorField xi0 = TensorField::zero(3, 1);
  xi0.set({0}, poly(3, "1"));
  xi0.set({2}, poly(3, "-5/2"));
  TensorField omega0 = TensorField::zero(3, 2);
  omega0.set({0, 1}, poly(3, "2"));
  omega0.set({1, 0}, poly(3, "-2"));
  TensorField xi = cesaro_volterra(zero_eps, &xi0, &omega0);
  CHECK(xi.at({0}) == poly(3, "2 x2 + 1"));
  CHECK(xi.at({1}) == poly(3, "-2 x1"));
  CHECK(xi.at({2}) == poly(3, "-5/2"));
  CHECK(sym_gradient(xi).is_zero());
}

TEST_CASE("recovered displacement is unique up to the rigid part") {
  std::mt19937_64 rng(113);
  TensorField eps = sym_gradient(random_tensor(rng, 3, 1, 4));
  REQUIRE(saint_venant(eps).is_zero());
  CHECK(sym_gradient(cesaro_volterra(eps)) == eps);

  TensorField xi0 = TensorField::zero(3, 1);
  xi0.set({1}, poly(3, "7"));
  TensorField omega0 = TensorField::zero(3, 2);
  omega0.set({1, 2}, poly(3, "1/2"));
  omega0.set({2, 1}, poly(3, "-1/2"));
  TensorField with_rigid = cesaro_volterra(eps, &xi0, &omega0);
  CHECK(sym_gradient(with_rigid) == eps);
  TensorField diff = with_rigid - cesaro_volterra(eps);
  CHECK(diff.at({1}) == poly(3, "1/2 x3 + 7"));
  CHECK(diff.at({2}) == poly(3, "-1/2 x2"));
}

TEST_CASE("rigid-part arguments are validated") {
  TensorField eps = TensorField::zero(3, 2);
  TensorField bad = TensorField::euclid_metric(3);
  CHECK_THROWS_AS(cesaro_volterra(eps, nullptr, &bad), Error); // not antisymmetric
  TensorField varying = TensorField::zero(3, 1);
  varying.set({0}, poly(3, "1 x1"));
  CHECK_THROWS_AS(cesaro_volterra(eps, &varying, nullptr), Error); // not constant
}

TEST_CASE("elasticity homotopy identity, exact") {
  std::mt19937_64 rng(127);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      TensorField eps = random_member(rng, {2, 2, n}, 4);
      CHECK(homotopy_residual(eps).is_zero());
    }
  CHECK(homotopy_residual(TensorField::zero(3, 2)).is_zero());
}

TEST_CASE("worked split of the homotopy identity") {
  TensorField eps = TensorField::zero(3, 2);
  eps.set({0, 0}, poly(3, "1 x2^2"));

  TensorField sg = sym_gradient(cesaro_volterra(eps));
  CHECK(sg.at({0, 0}) == poly(3, "2/3 x2^2"));
  CHECK(sg.at({0, 1}) == poly(3, "1/3 x1 x2"));
  CHECK(sg.at({1, 1}) == poly(3, "-1/3 x1^2"));

  TensorField k2w = obstruction_k2(saint_venant(eps));
  CHECK(k2w.at({0, 0}) == poly(3, "1/3 x2^2"));
  CHECK(k2w.at({0, 1}) == poly(3, "-1/3 x1 x2"));
  CHECK(k2w.at({1, 1}) == poly(3, "1/3 x1^2"));
  // the obstruction is genuinely nonzero for this strain
  CHECK_FALSE(k2w.is_zero());

  CHECK(sg + k2w == eps);
}

TEST_CASE("compatible strains have vanishing obstruction term") {
  std::mt19937_64 rng(131);
  TensorField eps = sym_gradient(random_tensor(rng, 3, 1, 3));
  CHECK(obstruction_k2(saint_venant(eps)).is_zero());
}
