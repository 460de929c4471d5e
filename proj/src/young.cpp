#include "elc/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "elc/error.hpp"

namespace elc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw invariant_error("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> im(k);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& b) const {
  if (size() != b.size()) throw invariant_error("permutation size mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[i] = images_[b.images_[i]];
  return Permutation(std::move(im));
}

int Permutation::signature() const {
  std::vector<bool> seen(images_.size(), false);
  int sign = 1;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

YoungDiagram::YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1) throw invariant_error("diagram rows must be positive");
    if (i > 0 && rows[i] > rows[i - 1]) throw invariant_error("diagram rows must be weakly decreasing");
  }
}

int YoungDiagram::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::vector<std::vector<int>> hook_lengths(const YoungDiagram& y) {
  std::vector<std::vector<int>> h(y.rows.size());
  for (std::size_t i = 0; i < y.rows.size(); ++i) {
    h[i].resize(y.rows[i]);
    for (int j = 0; j < y.rows[i]; ++j) {
      int right = y.rows[i] - j - 1;
      int below = 0;
      for (std::size_t r = i + 1; r < y.rows.size(); ++r)
        if (y.rows[r] > j) ++below;
      h[i][j] = 1 + right + below;
    }
  }
  return h;
}

std::int64_t hook_product(const YoungDiagram& y) {
  std::int64_t p = 1;
  for (const auto& row : hook_lengths(y))
    for (int h : row) p *= h;
  return p;
}

std::int64_t schur_dimension(const YoungDiagram& y, int n) {
  if (n < 1) throw invariant_error("ambient dimension must be positive");
  std::int64_t num = 1;
  for (std::size_t i = 0; i < y.rows.size(); ++i)
    for (int j = 0; j < y.rows[i]; ++j) num *= n + j - static_cast<int>(i);
  if (num == 0) return 0; // a column longer than n kills the class
  std::int64_t den = hook_product(y);
  return num / den;
}

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  size_ = 0;
  for (const auto& r : rows_) size_ += static_cast<int>(r.size());
  std::vector<bool> seen(size_, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw invariant_error("tableau rows must be non-empty");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size())
      throw invariant_error("tableau rows must be weakly decreasing");
    for (int label : rows_[i]) {
      if (label < 1 || label > size_ || seen[label - 1])
        throw invariant_error("tableau filling must be a bijection onto 1..k");
      seen[label - 1] = true;
    }
  }
}

YoungDiagram YoungTableau::diagram() const {
  std::vector<int> r;
  for (const auto& row : rows_) r.push_back(static_cast<int>(row.size()));
  return YoungDiagram(std::move(r));
}

std::vector<std::vector<int>> YoungTableau::columns() const {
  std::vector<std::vector<int>> cols;
  std::size_t width = rows_.empty() ? 0 : rows_[0].size();
  for (std::size_t j = 0; j < width; ++j) {
    std::vector<int> col;
    for (const auto& row : rows_)
      if (j < row.size()) col.push_back(row[j]);
    cols.push_back(std::move(col));
  }
  return cols;
}

namespace {

// All permutations of {0..k-1} moving only the given labels (1-based) among
// themselves, as the direct product over the blocks.
std::vector<Permutation> block_group(const std::vector<std::vector<int>>& blocks, int k) {
  std::vector<Permutation> group{Permutation::identity(k)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> arrangement = sorted;
    std::vector<Permutation> local;
    do {
      std::vector<int> im(k);
      std::iota(im.begin(), im.end(), 0);
      for (std::size_t i = 0; i < sorted.size(); ++i) im[sorted[i] - 1] = arrangement[i] - 1;
      local.emplace_back(std::move(im));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    std::vector<Permutation> next;
    next.reserve(group.size() * local.size());
    for (const auto& g : group)
      for (const auto& l : local) next.push_back(g.compose(l));
    group = std::move(next);
  }
  return group;
}

} // namespace

std::vector<Permutation> YoungTableau::row_group() const { return block_group(rows_, size_); }

std::vector<Permutation> YoungTableau::column_group() const { return block_group(columns(), size_); }

std::string YoungTableau::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << " | ";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) os << " ";
      os << rows_[i][j];
    }
  }
  os << "]";
  return os.str();
}

YoungTableau dv_tableau(int N, int k) {
  if (N < 1) throw invariant_error("sequence width must be >= 1");
  if (k < 0) throw invariant_error("degree must be >= 0");
  std::vector<std::vector<int>> rows;
  for (int label = 1; label <= k; ++label) {
    bool placed = false;
    for (auto& row : rows) {
      if (static_cast<int>(row.size()) < N) {
        row.push_back(label);
        placed = true;
        break;
      }
    }
    if (!placed) rows.push_back({label});
  }
  return YoungTableau(std::move(rows));
}

namespace {

void check_shape(const YoungTableau& d, const TensorField& t) {
  if (t.order() != d.size()) throw invariant_error("tableau size does not match tensor order");
  if (!t.uniform_variance(Variance::covariant) && !t.uniform_variance(Variance::contravariant))
    throw invariant_error("projector requires uniform variance");
}

TensorField group_sum(const std::vector<Permutation>& group, const TensorField& t, bool signed_sum) {
  TensorField acc(t.dim(), t.variance());
  for (const auto& g : group) {
    TensorField term = t.permute_slots(g).with_variance(t.variance());
    if (signed_sum && g.signature() < 0)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

} // namespace

TensorField young_symmetrize(const YoungTableau& d, const TensorField& t) {
  check_shape(d, t);
  return group_sum(d.row_group(), t, false);
}

TensorField young_antisymmetrize(const YoungTableau& d, const TensorField& t) {
  check_shape(d, t);
  return group_sum(d.column_group(), t, true);
}

TensorField young_project(const YoungTableau& d, const TensorField& t) {
  check_shape(d, t);
  if (d.size() == 0) return t;
  TensorField st = young_antisymmetrize(d, young_symmetrize(d, t));
  return st.scaled(Rational(1, hook_product(d.diagram())));
}

} // namespace elc
