#include "cubify/tracked_basis.hpp"

#include <algorithm>

namespace cubify {

TrackedBasis::TrackedBasis(const Basis& b) : TrackedBasis(b.rows(), identity_matrix(b.dim())) {}

TrackedBasis::TrackedBasis(IntMatrix rows, IntMatrix coeffs) : rows_(std::move(rows)), coeffs_(std::move(coeffs)) {
  if (rows_.size() != coeffs_.size()) throw DimensionError("TrackedBasis: rows/coefficients count mismatch");
  const std::size_t n = rows_.size();
  gram_.assign(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      gram_[i][j] = dot(rows_[i], rows_[j]);
      gram_[j][i] = gram_[i][j];
    }
  }
  order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) order_[i] = i;
}

Integer TrackedBasis::rhombicity() const {
  Integer r = 0;
  for (const auto& row : gram_) {
    for (const auto& x : row) r += abs(x);
  }
  return r;
}

Integer TrackedBasis::norm_sum() const {
  Integer s = 0;
  for (std::size_t i = 0; i < gram_.size(); ++i) s += gram_[i][i];
  return s;
}

void TrackedBasis::add_multiple(std::size_t dst, const Integer& k, std::size_t src) {
  if (k == 0) return;
  const std::size_t d = order_[dst];
  const std::size_t s = order_[src];
  for (std::size_t c = 0; c < rows_[d].size(); ++c) {
    mpz_addmul(rows_[d][c].get_mpz_t(), k.get_mpz_t(), rows_[s][c].get_mpz_t());
  }
  for (std::size_t c = 0; c < coeffs_[d].size(); ++c) {
    mpz_addmul(coeffs_[d][c].get_mpz_t(), k.get_mpz_t(), coeffs_[s][c].get_mpz_t());
  }
  // |d + k s|^2 = |d|^2 + 2k d.s + k^2 |s|^2, using d.s before the update.
  Integer diag = gram_[d][d] + 2 * k * gram_[d][s] + k * k * gram_[s][s];
  for (std::size_t l = 0; l < gram_.size(); ++l) {
    if (l == d) continue;
    mpz_addmul(gram_[d][l].get_mpz_t(), k.get_mpz_t(), gram_[s][l].get_mpz_t());
    gram_[l][d] = gram_[d][l];
  }
  gram_[d][d] = std::move(diag);
}

void TrackedBasis::negate(std::size_t pos) {
  const std::size_t d = order_[pos];
  for (auto& x : rows_[d]) x = -x;
  for (auto& x : coeffs_[d]) x = -x;
  for (std::size_t l = 0; l < gram_.size(); ++l) {
    if (l == d) continue;
    gram_[d][l] = -gram_[d][l];
    gram_[l][d] = gram_[d][l];
  }
}

void TrackedBasis::swap_positions(std::size_t a, std::size_t b) { std::swap(order_[a], order_[b]); }

void TrackedBasis::move_to_end(std::size_t pos) {
  std::rotate(order_.begin() + static_cast<std::ptrdiff_t>(pos), order_.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
              order_.end());
}

void TrackedBasis::push_back(IntVector row, IntVector coeffs) {
  const std::size_t slot = rows_.size();
  IntVector products(slot + 1);
  for (std::size_t l = 0; l < slot; ++l) products[l] = dot(row, rows_[l]);
  products[slot] = dot(row, row);
  for (std::size_t l = 0; l < slot; ++l) gram_[l].push_back(products[l]);
  gram_.push_back(std::move(products));
  rows_.push_back(std::move(row));
  coeffs_.push_back(std::move(coeffs));
  order_.push_back(slot);
}

void TrackedBasis::stable_sort_by_norm() {
  std::stable_sort(order_.begin(), order_.end(),
                   [this](std::size_t x, std::size_t y) { return gram_[x][x] < gram_[y][y]; });
}

Basis TrackedBasis::basis() const { return Basis(rows()); }

IntMatrix TrackedBasis::rows() const {
  IntMatrix out;
  out.reserve(size());
  for (std::size_t slot : order_) out.push_back(rows_[slot]);
  return out;
}

IntMatrix TrackedBasis::transform() const {
  IntMatrix out;
  out.reserve(size());
  for (std::size_t slot : order_) out.push_back(coeffs_[slot]);
  return out;
}

TrackedBasis TrackedBasis::without(std::size_t skip) const {
  TrackedBasis out;
  const std::size_t n = size();
  out.rows_.reserve(n - 1);
  out.coeffs_.reserve(n - 1);
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (pos == skip) continue;
    out.rows_.push_back(row(pos));
    out.coeffs_.push_back(coeffs(pos));
  }
  out.gram_.assign(n - 1, IntVector(n - 1));
  for (std::size_t a = 0, oa = 0; a < n; ++a) {
    if (a == skip) continue;
    for (std::size_t b = 0, ob = 0; b < n; ++b) {
      if (b == skip) continue;
      out.gram_[oa][ob++] = gram(a, b);
    }
    ++oa;
  }
  out.order_.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) out.order_[i] = i;
  return out;
}

bool TrackedBasis::gram_consistent() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (gram(a, b) != dot(row(a), row(b))) return false;
    }
  }
  return true;
}

}  // namespace cubify
