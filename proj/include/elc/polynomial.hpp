#ifndef ELC_POLYNOMIAL_HPP
#define ELC_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "elc/rational.hpp"

namespace elc {

// Multivariate polynomial over Rational in the coordinates x1..xn plus two
// auxiliary integration variables t and s. The variable universe is fixed by
// the ambient dimension: exponent vectors have length dim+2, slots 0..dim-1
// being the coordinates, slot dim the variable t and slot dim+1 the
// variable s. The auxiliaries exist for homotopy integrators; they must be
// integrated out before a polynomial is printed or serialized.
class Polynomial {
public:
  using Expo = std::vector<unsigned>;

  explicit Polynomial(int dim);

  static Polynomial constant(int dim, const Rational& c);
  static Polynomial coordinate(int dim, int i); // x_{i+1}, 0-based i
  static Polynomial variable(int dim, int var); // any slot, including t/s
  // Accepts the signed-term grammar, e.g. "3/2 x1^2 x2 - 1 x3".
  static Polynomial parse(int dim, std::string_view text);

  int dim() const { return dim_; }
  int var_t() const { return dim_; }
  int var_s() const { return dim_ + 1; }
  int num_vars() const { return dim_ + 2; }

  bool is_zero() const { return terms_.empty(); }
  bool depends_on(int var) const;
  int degree_in(int var) const;
  // Total degree in the coordinate variables only.
  int coordinate_degree() const;
  Rational coefficient(const Expo& e) const;
  Rational constant_term() const;
  const std::map<Expo, Rational>& terms() const { return terms_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(int var) const;
  Polynomial antiderivative(int var) const;
  // Substitutes `value` for `var`; `value` must not depend on `var`.
  Polynomial substitute(int var, const Polynomial& value) const;
  // Exact integral over var between polynomial bounds free of var.
  Polynomial definite_integral(int var, const Polynomial& lower, const Polynomial& upper) const;
  // Replaces every coordinate x_i by factor*x_i; `factor` must be an
  // auxiliary variable the polynomial does not already use.
  Polynomial scale_substitute(int factor) const;
  // Evaluates at the origin of the coordinates (auxiliaries must be absent).
  Rational eval_origin() const;

  // Canonical text form; requires the auxiliaries to be integrated out.
  std::string str() const;

private:
  void insert(const Expo& e, const Rational& c);

  int dim_;
  std::map<Expo, Rational> terms_; // no zero coefficients stored
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace elc

#endif
