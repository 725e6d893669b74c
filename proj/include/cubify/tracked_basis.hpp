#pragma once

#include <cstddef>
#include <vector>

#include "cubify/core_algebra.hpp"

namespace cubify {

/// Ordered list of lattice vectors under reduction.
///
/// Every row carries its coefficients over the rows of the original input, so
/// row(i) == sum_k coeffs(i)[k] * input[k] holds after any sequence of
/// operations. The Gram matrix is kept up to date incrementally. Rows live in
/// fixed slots; reordering only permutes the position -> slot map.
class TrackedBasis {
 public:
  TrackedBasis() = default;
  explicit TrackedBasis(const Basis& b);
  TrackedBasis(IntMatrix rows, IntMatrix coeffs);

  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }

  const IntVector& row(std::size_t pos) const { return rows_[order_[pos]]; }
  const IntVector& coeffs(std::size_t pos) const { return coeffs_[order_[pos]]; }
  const Integer& gram(std::size_t a, std::size_t b) const { return gram_[order_[a]][order_[b]]; }
  const Integer& norm(std::size_t pos) const { return gram(pos, pos); }

  Integer rhombicity() const;
  Integer norm_sum() const;

  /// row(dst) += k * row(src), dst != src.
  void add_multiple(std::size_t dst, const Integer& k, std::size_t src);
  void negate(std::size_t pos);
  void swap_positions(std::size_t a, std::size_t b);
  /// Removes the row at `pos` and re-inserts it at the end of the list.
  void move_to_end(std::size_t pos);
  void push_back(IntVector row, IntVector coeffs);
  void stable_sort_by_norm();

  Basis basis() const;
  IntMatrix rows() const;
  IntMatrix transform() const;
  /// Rows at every position except `skip`, with their coefficients.
  TrackedBasis without(std::size_t skip) const;

  /// Recomputes the Gram matrix from scratch and compares.
  bool gram_consistent() const;

 private:
  IntMatrix rows_;
  IntMatrix coeffs_;
  std::vector<IntVector> gram_;  // indexed by slot
  std::vector<std::size_t> order_;
};

}  // namespace cubify
