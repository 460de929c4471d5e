#ifndef ELC_YOUNG_HPP
#define ELC_YOUNG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "elc/tensor.hpp"

namespace elc {

class Permutation {
public:
  explicit Permutation(std::vector<int> images); // 0-based, images[i] = sigma(i)
  static Permutation identity(int k);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  Permutation inverse() const;
  // (a.compose(b))(i) = a(b(i))
  Permutation compose(const Permutation& b) const;
  int signature() const;
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

private:
  std::vector<int> images_;
};

// Partition shape: weakly decreasing positive row lengths.
struct YoungDiagram {
  std::vector<int> rows;

  explicit YoungDiagram(std::vector<int> r);
  int size() const;
};

// Grid of hook lengths h(i,j) = 1 + cells right + cells below.
std::vector<std::vector<int>> hook_lengths(const YoungDiagram& y);
// Product of all hook lengths; the projector normalization.
std::int64_t hook_product(const YoungDiagram& y);
// Hook-content formula: dim of the symmetry class inside (R^n)^{(x)k}.
std::int64_t schur_dimension(const YoungDiagram& y, int n);

// A filling of a diagram by the labels 1..k, one per cell, stored by rows.
class YoungTableau {
public:
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  int size() const { return size_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  YoungDiagram diagram() const;
  std::vector<std::vector<int>> columns() const;

  // All slot permutations preserving each row (resp. column) label set.
  std::vector<Permutation> row_group() const;
  std::vector<Permutation> column_group() const;

  std::string str() const;

private:
  std::vector<std::vector<int>> rows_;
  int size_;
};

// k-th tableau of the width-N sequence: each new cell goes to the topmost
// row shorter than N, else starts a new row. k = 0 is the empty tableau.
YoungTableau dv_tableau(int N, int k);

// Row-symmetrization sum over the row group.
TensorField young_symmetrize(const YoungTableau& d, const TensorField& t);
// Signed sum over the column group.
TensorField young_antisymmetrize(const YoungTableau& d, const TensorField& t);
// Normalized projector F = (1/mu) A (S (.)) onto the symmetry class of d.
TensorField young_project(const YoungTableau& d, const TensorField& t);

} // namespace elc

#endif
