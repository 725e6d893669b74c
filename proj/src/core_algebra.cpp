#include "cubify/core_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cubify {

Basis::Basis(IntMatrix rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != rows_.size()) {
      throw DimensionError("basis must be square: " + std::to_string(rows_.size()) + " rows, found a row of length " +
                           std::to_string(row.size()));
    }
  }
}

Basis Basis::identity(std::size_t n) { return Basis(identity_matrix(n)); }

Integer dot(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) {
    throw DimensionError("dot: dimension mismatch (" + std::to_string(u.size()) + " vs " + std::to_string(v.size()) +
                         ")");
  }
  Integer sum = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    mpz_addmul(sum.get_mpz_t(), u[k].get_mpz_t(), v[k].get_mpz_t());
  }
  return sum;
}

MetricTensor metric_tensor(std::span<const IntVector> rows) {
  MetricTensor m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      m(i, j) = dot(rows[i], rows[j]);
      if (j != i) m(j, i) = m(i, j);
    }
  }
  return m;
}

Integer rhombicity(const MetricTensor& m) {
  Integer r = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) r += abs(m(i, j));
  }
  return r;
}

Integer norm_sum(const MetricTensor& m) {
  Integer s = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) s += m(i, i);
  return s;
}

Basis sort_by_norm(const Basis& b) {
  std::vector<std::pair<Integer, std::size_t>> keyed;
  keyed.reserve(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) keyed.emplace_back(dot(b[i], b[i]), i);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  IntMatrix rows;
  rows.reserve(b.dim());
  for (const auto& [norm, i] : keyed) rows.push_back(b[i]);
  return Basis(std::move(rows));
}

Integer nearest_int(const Rational& q) { return nearest_int(q.get_num(), q.get_den()); }

Integer nearest_int(const Integer& num, const Integer& den) {
  if (den <= 0) throw std::domain_error("nearest_int: denominator must be positive");
  Integer floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // 0 <= rem < den
  Integer twice_rem = 2 * (num - floor_q * den);
  int c = cmp(twice_rem, den);
  if (c < 0) return floor_q;
  if (c > 0) return floor_q + 1;
  return mpz_even_p(floor_q.get_mpz_t()) ? floor_q : Integer(floor_q + 1);
}

namespace {

void check_square(const IntMatrix& m, const char* what) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw DimensionError(std::string(what) + ": matrix is not square");
  }
}

// Forward Bareiss elimination on an n x (n + extra) augmented matrix. Returns
// false when the leading n x n block is singular.
bool bareiss_forward(IntMatrix& a, std::size_t n, int& sign) {
  Integer prev = 1;
  sign = 1;
  const std::size_t width = n == 0 ? 0 : a[0].size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return false;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

}  // namespace

Integer det(const IntMatrix& m) {
  check_square(m, "det");
  if (m.empty()) return 1;
  IntMatrix a = m;
  int sign = 1;
  if (!bareiss_forward(a, a.size(), sign)) return 0;
  return sign * a.back().back();
}

FractionFreeSolution solve_fraction_free(const IntMatrix& a, const IntMatrix& rhs) {
  check_square(a, "solve");
  const std::size_t n = a.size();
  if (rhs.size() != n) throw DimensionError("solve: right-hand side has wrong number of rows");
  const std::size_t m = n == 0 ? 0 : rhs[0].size();

  IntMatrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rhs[i].size() != m) throw DimensionError("solve: ragged right-hand side");
    aug[i] = a[i];
    aug[i].insert(aug[i].end(), rhs[i].begin(), rhs[i].end());
  }
  int sign = 1;
  if (!bareiss_forward(aug, n, sign)) throw SingularBasisError("solve: singular matrix");

  FractionFreeSolution sol;
  sol.denominator = n == 0 ? Integer(1) : aug[n - 1][n - 1];
  sol.numerators.assign(n, IntVector(m));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      Integer acc = sol.denominator * aug[ii][n + c];
      for (std::size_t j = ii + 1; j < n; ++j) acc -= aug[ii][j] * sol.numerators[j][c];
      mpz_divexact(sol.numerators[ii][c].get_mpz_t(), acc.get_mpz_t(), aug[ii][ii].get_mpz_t());
    }
  }
  return sol;
}

IntVector hyperplane_normal(std::span<const IntVector> sub) {
  if (sub.empty()) throw DimensionError("hyperplane_normal: need at least one vector");
  const std::size_t n = sub.size() + 1;
  for (const auto& v : sub) {
    if (v.size() != n) throw DimensionError("hyperplane_normal: expected N-1 vectors of dimension N");
  }

  IntVector p(n);
  IntMatrix minor(n - 1, IntVector(n - 1));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n - 1; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != k) minor[r][cc++] = sub[r][c];
      }
    }
    p[k] = det(minor);
    if (k % 2 == 1) p[k] = -p[k];
  }

  Integer g = 0;
  for (const auto& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw DegenerateError("degenerate hyperplane: input vectors are linearly dependent");
  auto first = std::find_if(p.begin(), p.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return p;
}

RationalVector solve_in_sublattice(std::span<const IntVector> cols, const RationalVector& target) {
  const std::size_t m = cols.size();
  const std::size_t n = target.size();
  for (const auto& c : cols) {
    if (c.size() != n) throw DimensionError("solve_in_sublattice: column/target dimension mismatch");
  }
  if (m == 0) return {};

  // C^t target, brought onto a common denominator.
  RationalVector projected(m);
  Integer common = 1;
  for (std::size_t i = 0; i < m; ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (cols[i][k] != 0 && target[k] != 0) s += Rational(cols[i][k]) * target[k];
    }
    projected[i] = s;
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), s.get_den_mpz_t());
  }
  IntMatrix rhs(m, IntVector(1));
  for (std::size_t i = 0; i < m; ++i) {
    rhs[i][0] = projected[i].get_num() * (common / projected[i].get_den());
  }

  MetricTensor gram = metric_tensor(cols);
  IntMatrix g(m, IntVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g[i][j] = gram(i, j);
  }

  FractionFreeSolution sol;
  try {
    sol = solve_fraction_free(g, rhs);
  } catch (const SingularBasisError&) {
    throw DegenerateError("degenerate sublattice: singular Gram matrix");
  }
  RationalVector x(m);
  const Integer scale = sol.denominator * common;
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = Rational(sol.numerators[i][0], scale);
    x[i].canonicalize();
  }
  return x;
}

std::optional<IntMatrix> lattice_equal(const Basis& a, const Basis& b) {
  const std::size_t n = b.dim();
  if (a.dim() != n) throw DimensionError("lattice_equal: dimension mismatch");
  // Z b = a  <=>  b^t Z^t = a^t
  IntMatrix bt(n, IntVector(n)), at(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bt[i][j] = b[j][i];
      at[i][j] = a[j][i];
    }
  }
  FractionFreeSolution sol = solve_fraction_free(bt, at);
  IntMatrix z(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& num = sol.numerators[j][i];
      if (!mpz_divisible_p(num.get_mpz_t(), sol.denominator.get_mpz_t())) return std::nullopt;
      mpz_divexact(z[i][j].get_mpz_t(), num.get_mpz_t(), sol.denominator.get_mpz_t());
    }
  }
  if (abs(det(z)) != 1) return std::nullopt;
  return z;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  IntMatrix out(a.size(), IntVector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw DimensionError("multiply: inner dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        mpz_addmul(out[i][j].get_mpz_t(), a[i][k].get_mpz_t(), b[k][j].get_mpz_t());
      }
    }
  }
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void require_independent(const Basis& b) {
  if (det(b.rows()) == 0) throw SingularBasisError("singular basis: rows are linearly dependent");
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace cubify
