#include "elc/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "elc/error.hpp"
#include "elc/young.hpp"

namespace elc {

namespace {

std::size_t pow_size(int dim, int order) {
  std::size_t s = 1;
  for (int i = 0; i < order; ++i) s *= static_cast<std::size_t>(dim);
  return s;
}

} // namespace

void MultiIndex::next() {
  for (int i = static_cast<int>(idx_.size()) - 1; i >= 0; --i) {
    if (++idx_[i] < dim_) return;
    idx_[i] = 0;
  }
  done_ = true;
}

TensorField::TensorField(int dim, std::vector<Variance> variance)
    : dim_(dim), variance_(std::move(variance)) {
  if (dim < 1 || dim > 9) throw invariant_error("tensor dimension out of range");
  comps_.assign(pow_size(dim_, order()), Polynomial(dim_));
}

TensorField TensorField::zero(int dim, int order, Variance v) {
  return TensorField(dim, std::vector<Variance>(order, v));
}

TensorField TensorField::scalar(Polynomial p) {
  TensorField t(p.dim(), {});
  t.comps_[0] = std::move(p);
  return t;
}

TensorField TensorField::scalar(int dim, const Rational& c) {
  return scalar(Polynomial::constant(dim, c));
}

TensorField TensorField::euclid_metric(int dim, Variance v) {
  TensorField t = zero(dim, 2, v);
  for (int i = 0; i < dim; ++i) t.set({i, i}, Polynomial::constant(dim, Rational(1)));
  return t;
}

TensorField TensorField::levi_civita(int dim, Variance v) {
  TensorField t = zero(dim, dim, v);
  std::vector<int> idx(dim);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    Permutation p(idx);
    t.comps_[t.flatten(idx)] = Polynomial::constant(dim, Rational(p.signature()));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return t;
}

TensorField TensorField::position(int dim) {
  TensorField t = zero(dim, 1, Variance::contravariant);
  for (int i = 0; i < dim; ++i) t.set({i}, Polynomial::coordinate(dim, i));
  return t;
}

bool TensorField::uniform_variance(Variance v) const {
  return std::all_of(variance_.begin(), variance_.end(), [v](Variance w) { return w == v; });
}

const Polynomial& TensorField::at(std::initializer_list<int> idx) const {
  std::vector<int> v(idx);
  return comps_[flatten(v)];
}

void TensorField::set(std::initializer_list<int> idx, Polynomial p) {
  std::vector<int> v(idx);
  comps_[flatten(v)] = std::move(p);
}

std::size_t TensorField::flatten(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != order()) throw invariant_error("multi-index order mismatch");
  std::size_t f = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw invariant_error("multi-index entry out of range");
    f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return f;
}

void TensorField::unflatten(std::size_t flat, std::span<int> idx) const {
  for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
    flat /= static_cast<std::size_t>(dim_);
  }
}

bool TensorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool operator==(const TensorField& a, const TensorField& b) {
  return a.dim_ == b.dim_ && a.variance_ == b.variance_ && a.comps_ == b.comps_;
}

TensorField TensorField::operator-() const {
  TensorField r = *this;
  for (auto& p : r.comps_) p = -p;
  return r;
}

TensorField& TensorField::operator+=(const TensorField& o) {
  if (dim_ != o.dim_ || variance_ != o.variance_)
    throw invariant_error("tensor shape mismatch in addition");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

TensorField& TensorField::operator-=(const TensorField& o) {
  if (dim_ != o.dim_ || variance_ != o.variance_)
    throw invariant_error("tensor shape mismatch in subtraction");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

TensorField TensorField::scaled(const Rational& c) const {
  TensorField r = *this;
  for (auto& p : r.comps_) p = p * c;
  return r;
}

TensorField TensorField::scaled(const Polynomial& p) const {
  TensorField r = *this;
  for (auto& q : r.comps_) q = q * p;
  return r;
}

TensorField TensorField::gradient() const {
  std::vector<Variance> v = variance_;
  v.push_back(Variance::covariant);
  TensorField r(dim_, std::move(v));
  for (std::size_t base = 0; base < comps_.size(); ++base)
    for (int j = 0; j < dim_; ++j)
      r.comps_[base * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j)] =
          comps_[base].derivative(j);
  return r;
}

TensorField TensorField::permute_slots(const Permutation& sigma) const {
  const int k = order();
  if (sigma.size() != k) throw invariant_error("permutation size mismatch");
  Permutation inv = sigma.inverse();
  std::vector<Variance> v(variance_.size());
  for (int l = 0; l < k; ++l) v[l] = variance_[inv(l)];
  TensorField r(dim_, std::move(v));
  std::vector<int> src(k);
  for (MultiIndex mi(dim_, k); !mi.done(); mi.next()) {
    auto out = mi.get();
    for (int l = 0; l < k; ++l) src[l] = out[inv(l)];
    r.comps_[r.flatten(out)] = comps_[flatten(src)];
  }
  return r;
}

TensorField TensorField::tensor_product(const TensorField& o) const {
  if (dim_ != o.dim_) throw invariant_error("tensor dimension mismatch in product");
  std::vector<Variance> v = variance_;
  v.insert(v.end(), o.variance_.begin(), o.variance_.end());
  TensorField r(dim_, std::move(v));
  for (std::size_t a = 0; a < comps_.size(); ++a)
    for (std::size_t b = 0; b < o.comps_.size(); ++b)
      r.comps_[a * o.comps_.size() + b] = comps_[a] * o.comps_[b];
  return r;
}

TensorField TensorField::contract(int a, int b) const {
  const int k = order();
  if (a < 0 || b < 0 || a >= k || b >= k || a == b) throw invariant_error("contraction slot out of range");
  if (a > b) std::swap(a, b);
  std::vector<Variance> v;
  for (int i = 0; i < k; ++i)
    if (i != a && i != b) v.push_back(variance_[i]);
  TensorField r(dim_, std::move(v));
  std::vector<int> full(k);
  for (MultiIndex mi(dim_, k - 2); !mi.done(); mi.next()) {
    auto rest = mi.get();
    Polynomial acc(dim_);
    for (int c = 0; c < dim_; ++c) {
      int j = 0;
      for (int i = 0; i < k; ++i) {
        if (i == a || i == b)
          full[i] = c;
        else
          full[i] = rest[j++];
      }
      acc += comps_[flatten(full)];
    }
    r.comps_[r.flatten(rest)] = std::move(acc);
  }
  return r;
}

TensorField TensorField::with_variance(std::vector<Variance> v) const {
  if (static_cast<int>(v.size()) != order()) throw invariant_error("variance size mismatch");
  TensorField r = *this;
  r.variance_ = std::move(v);
  return r;
}

TensorField TensorField::transposed() const {
  if (order() != 2) throw invariant_error("transpose requires an order-2 field");
  std::vector<int> images{1, 0};
  return permute_slots(Permutation(images));
}

bool TensorField::symmetric_pair(int a, int b) const {
  std::vector<int> images(order());
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[a], images[b]);
  return permute_slots(Permutation(images)).with_variance(variance_) == *this;
}

bool TensorField::antisymmetric_pair(int a, int b) const {
  std::vector<int> images(order());
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[a], images[b]);
  return permute_slots(Permutation(images)).with_variance(variance_) == -*this;
}

TensorField TensorField::scale_substitute(int factor) const {
  TensorField r = *this;
  for (auto& p : r.comps_) p = p.scale_substitute(factor);
  return r;
}

TensorField TensorField::definite_integral(int var, const Polynomial& lower,
                                           const Polynomial& upper) const {
  TensorField r = *this;
  for (auto& p : r.comps_) p = p.definite_integral(var, lower, upper);
  return r;
}

TensorField TensorField::derivative(int var) const {
  TensorField r = *this;
  for (auto& p : r.comps_) p = p.derivative(var);
  return r;
}

} // namespace elc
