#pragma once

// Exact integer / rational linear algebra shared by every reduction stage.
// Vectors are rows; nothing in here touches floating point.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cubify {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;
/// Row-major integer matrix, one IntVector per row.
using IntMatrix = std::vector<IntVector>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when N-1 vectors do not span a hyperplane (zero normal, singular Gram).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square list of N integer rows of dimension N.
///
/// Construction checks the shape only; linear independence is checked by the
/// entry points that need it (see require_independent).
class Basis {
 public:
  Basis() = default;
  explicit Basis(IntMatrix rows);

  static Basis identity(std::size_t n);

  std::size_t dim() const { return rows_.size(); }
  const IntVector& operator[](std::size_t i) const { return rows_[i]; }
  const IntMatrix& rows() const { return rows_; }

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  IntMatrix rows_;
};

/// Gram matrix of a list of rows: entries(i, j) = b_i . b_j.
class MetricTensor {
 public:
  MetricTensor() = default;
  explicit MetricTensor(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t dim() const { return n_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  friend bool operator==(const MetricTensor&, const MetricTensor&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

Integer dot(const IntVector& u, const IntVector& v);

MetricTensor metric_tensor(std::span<const IntVector> rows);
inline MetricTensor metric_tensor(const Basis& b) { return metric_tensor(std::span(b.rows())); }

/// Lattice rhombicity: sum of |M_ij| over all N^2 entries.
Integer rhombicity(const MetricTensor& m);
/// Sum of squared norms, i.e. the trace of the metric tensor.
Integer norm_sum(const MetricTensor& m);

inline Integer rhombicity(const Basis& b) { return rhombicity(metric_tensor(b)); }
inline Integer norm_sum(const Basis& b) { return norm_sum(metric_tensor(b)); }

/// Stable sort by squared norm, shortest first.
Basis sort_by_norm(const Basis& b);

/// Closest integer to q; exact half-integers round to the even neighbour.
Integer nearest_int(const Rational& q);
/// nearest_int(num / den) for den > 0, without building a Rational.
Integer nearest_int(const Integer& num, const Integer& den);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);

/// Solution of A * Y = D * rhs with integer Y and D = +-det(A).
struct FractionFreeSolution {
  IntMatrix numerators;  // n x m
  Integer denominator;   // nonzero
};

/// Solves A X = rhs for a square nonsingular A and an n x m right-hand side.
/// Throws SingularBasisError when A is singular.
FractionFreeSolution solve_fraction_free(const IntMatrix& a, const IntMatrix& rhs);

/// Integer normal of the hyperplane spanned by N-1 vectors of dimension N,
/// built from signed minors (cofactor expansion) then divided by the gcd of
/// its entries, first nonzero entry positive.
IntVector hyperplane_normal(std::span<const IntVector> sub);

/// Coordinates x of target in the basis formed by `cols` (the N-1 column
/// vectors of an N x (N-1) matrix), via the left inverse (C^t C)^-1 C^t.
RationalVector solve_in_sublattice(std::span<const IntVector> cols, const RationalVector& target);

/// Unimodular Z with a = Z * b, if a and b generate the same lattice.
std::optional<IntMatrix> lattice_equal(const Basis& a, const Basis& b);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);

/// Throws SingularBasisError when det(b) == 0.
void require_independent(const Basis& b);

std::string to_string(const IntVector& v);

}  // namespace cubify
