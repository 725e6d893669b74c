#pragma once

// Exact LLL baseline (size reduction + Lovasz swaps).

#include <cstddef>
#include <vector>

#include "cubify/core_algebra.hpp"

namespace cubify {

/// Rational Gram-Schmidt data: b*_k = b_k - sum_{i<k} mu[k][i] b*_i.
struct GramSchmidtState {
  std::vector<RationalVector> orthogonal;
  std::vector<std::vector<Rational>> mu;  // mu[k][i] for i < k
  std::vector<Rational> squared_norms;    // |b*_k|^2
};

GramSchmidtState gram_schmidt(const Basis& b);

struct LllResult {
  Basis basis;
  IntMatrix transform;  // basis = transform * input
  std::size_t swaps = 0;
};

/// Integral LLL working on the Gram determinants d_k and the scaled
/// coefficients lambda_{k,j} = d_{j+1} mu_{k,j}, so no rational ever appears.
/// alpha must satisfy 1/4 < alpha <= 1.
LllResult lll_reduce_tracked(const Basis& b, const Rational& alpha = Rational(3, 4));

inline Basis lll_reduce(const Basis& b, const Rational& alpha = Rational(3, 4)) {
  return lll_reduce_tracked(b, alpha).basis;
}

}  // namespace cubify
