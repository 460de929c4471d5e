#ifndef ELC_TESTS_TESTUTIL_HPP
#define ELC_TESTS_TESTUTIL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "elc/complex.hpp"
#include "elc/tensor.hpp"
#include "elc/verify.hpp"
#include "elc/young.hpp"

namespace elctest {

using elc::Polynomial;
using elc::Rational;
using elc::TensorField;
using elc::Variance;

inline Polynomial poly(int dim, const char* text) { return Polynomial::parse(dim, text); }

inline TensorField random_member(std::mt19937_64& rng, const elc::ComplexPosition& pos, int degree) {
  return elc::project_member(pos, elc::random_tensor(rng, pos.dim, pos.k, degree));
}

// Exact rank of the tableau projector as a linear map on the full tensor
// power, by incremental Gaussian elimination over sparse rational columns.
// The columns are generated combinatorially from the row/column groups, an
// independent re-derivation of the projector's action on basis tensors.
inline std::int64_t projector_rank(const elc::YoungTableau& tableau, int n) {
  const int k = tableau.size();
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::size_t>(n);

  const auto rows = tableau.row_group();
  const auto cols = tableau.column_group();
  std::vector<int> col_signs;
  col_signs.reserve(cols.size());
  for (const auto& g : cols) col_signs.push_back(g.signature());
  const Rational mu(static_cast<long>(elc::hook_product(tableau.diagram())));

  using Sparse = std::map<std::size_t, Rational>;
  std::map<std::size_t, Sparse> pivots; // leading position -> reduced row

  std::vector<int> idx(k), image(k);
  std::int64_t rank = 0;
  for (std::size_t flat = 0; flat < total; ++flat) {
    // unflatten
    std::size_t rest = flat;
    for (int i = k - 1; i >= 0; --i) {
      idx[i] = static_cast<int>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    // column F(e_I) = (1/mu) sum_{rho,gamma} sgn(gamma) e_{I o rho o gamma}
    Sparse col;
    for (const auto& rho : rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        for (int m = 0; m < k; ++m) image[m] = idx[rho(cols[c](m))];
        std::size_t f = 0;
        for (int m = 0; m < k; ++m)
          f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(image[m]);
        Rational& cell = col[f];
        cell += Rational(col_signs[c]) / mu;
        if (cell.is_zero()) col.erase(f);
      }
    }
    // reduce against the pivots
    while (!col.empty()) {
      auto lead = col.begin();
      auto hit = pivots.find(lead->first);
      if (hit == pivots.end()) {
        pivots.emplace(lead->first, col);
        ++rank;
        break;
      }
      const Sparse& row = hit->second;
      Rational factor = lead->second / row.at(lead->first);
      for (const auto& [pos, val] : row) {
        Rational& cell = col[pos];
        cell -= factor * val;
        if (cell.is_zero()) col.erase(pos);
      }
    }
  }
  return rank;
}

// Signed alternation of the tensor slots listed in `slots` (0-based); zero
// output certifies the vanishing-total-alternation membership condition.
inline TensorField alternation_over(const TensorField& t, const std::vector<int>& slots) {
  std::vector<int> arrangement = slots;
  std::sort(arrangement.begin(), arrangement.end());
  std::vector<int> sorted = arrangement;
  TensorField acc(t.dim(), t.variance());
  do {
    std::vector<int> images(t.order());
    for (int i = 0; i < t.order(); ++i) images[i] = i;
    for (std::size_t i = 0; i < sorted.size(); ++i) images[sorted[i]] = arrangement[i];
    elc::Permutation g(images);
    TensorField term = t.permute_slots(g).with_variance(t.variance());
    if (g.signature() < 0)
      acc -= term;
    else
      acc += term;
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return acc;
}

} // namespace elctest

#endif
