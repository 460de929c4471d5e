#ifndef ELC_TENSOR_HPP
#define ELC_TENSOR_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "elc/polynomial.hpp"

namespace elc {

class Permutation;

enum class Variance : std::uint8_t { covariant, contravariant };

// Dense polynomial-valued tensor field on R^n: order-k array of Polynomials
// with a per-slot variance flag. Components are stored row-major over the
// multi-index (values 0..n-1 internally, 1..n in serialized documents). The
// metric is the Euclidean one throughout, so raising or lowering a slot only
// flips its flag.
class TensorField {
public:
  TensorField(int dim, std::vector<Variance> variance);
  static TensorField zero(int dim, int order, Variance v = Variance::covariant);
  static TensorField scalar(Polynomial p);
  static TensorField scalar(int dim, const Rational& c);
  // Kronecker delta as an order-2 field.
  static TensorField euclid_metric(int dim, Variance v = Variance::covariant);
  // Levi-Civita symbol as an order-n field.
  static TensorField levi_civita(int dim, Variance v = Variance::covariant);
  // Radial field x^i.
  static TensorField position(int dim);

  int dim() const { return dim_; }
  int order() const { return static_cast<int>(variance_.size()); }
  const std::vector<Variance>& variance() const { return variance_; }
  bool uniform_variance(Variance v) const;

  std::size_t component_count() const { return comps_.size(); }
  const Polynomial& operator[](std::size_t flat) const { return comps_[flat]; }
  Polynomial& operator[](std::size_t flat) { return comps_[flat]; }
  const Polynomial& at(std::span<const int> idx) const { return comps_[flatten(idx)]; }
  const Polynomial& at(std::initializer_list<int> idx) const;
  void set(std::initializer_list<int> idx, Polynomial p);
  std::size_t flatten(std::span<const int> idx) const;
  void unflatten(std::size_t flat, std::span<int> idx) const;

  bool is_zero() const;
  friend bool operator==(const TensorField& a, const TensorField& b);

  TensorField operator-() const;
  TensorField& operator+=(const TensorField& o);
  TensorField& operator-=(const TensorField& o);
  friend TensorField operator+(TensorField a, const TensorField& b) { return a += b; }
  friend TensorField operator-(TensorField a, const TensorField& b) { return a -= b; }
  TensorField scaled(const Rational& c) const;
  TensorField scaled(const Polynomial& p) const;

  // Covariant derivative; the new covariant slot is appended LAST:
  // (grad T)_{i1..ik,j} = d_j T_{i1..ik}.
  TensorField gradient() const;

  // (sigma * T)_{i_1..i_k} = T_{i_{sigma^{-1}(1)} .. i_{sigma^{-1}(k)}},
  // the slot action of the symmetric group. Composes as a right action.
  TensorField permute_slots(const Permutation& sigma) const;
  TensorField tensor_product(const TensorField& o) const;
  // Contracts slots a and b (0-based). Opposite variances contract
  // naturally; equal variances are allowed as the flat-metric convenience
  // (a Kronecker-delta pairing), which is what all curls and stars use here.
  TensorField contract(int a, int b) const;
  TensorField with_variance(std::vector<Variance> v) const;
  TensorField transposed() const; // order 2

  bool symmetric_pair(int a, int b) const;
  bool antisymmetric_pair(int a, int b) const;

  // x -> factor*x in every component.
  TensorField scale_substitute(int factor) const;
  TensorField definite_integral(int var, const Polynomial& lower, const Polynomial& upper) const;
  TensorField derivative(int var) const;

private:
  int dim_;
  std::vector<Variance> variance_;
  std::vector<Polynomial> comps_;
};

// Iterates all multi-indices of the given order over 0..dim-1.
class MultiIndex {
public:
  MultiIndex(int dim, int order) : dim_(dim), idx_(order, 0), done_(false) {}
  bool done() const { return done_; }
  void next();
  std::span<const int> get() const { return idx_; }

private:
  int dim_;
  std::vector<int> idx_;
  bool done_;
};

} // namespace elc

#endif
