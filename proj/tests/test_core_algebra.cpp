#include <doctest.h>

#include <random>

#include "cubify/core_algebra.hpp"
#include "oracles.hpp"

using namespace cubify;
using oracle::mat;
using oracle::vec;

namespace {

const IntMatrix kB = mat({{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}});
const IntMatrix kReduced = mat({{0, 1, 0}, {1, 0, 1}, {-1, 0, 2}});

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, IntVector(cols));
  for (auto& r : m) {
    for (auto& x : r) x = d(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("dot") {
  CHECK(dot(vec({1, 1, 1}), vec({-1, 0, 2})) == 1);
  CHECK(dot(vec({1, 0, 0}), vec({0, 1, 0})) == 0);
  CHECK(dot(vec({3, 5, 6}), vec({3, 5, 6})) == 70);
  CHECK_THROWS_AS(dot(vec({1, 2}), vec({1, 2, 3})), DimensionError);
}

TEST_CASE("metric tensor") {
  const MetricTensor id = metric_tensor(Basis::identity(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(id(i, j) == (i == j ? 1 : 0));
  }
  const MetricTensor m = metric_tensor(Basis(kB));
  const IntMatrix expected = mat({{3, 1, 14}, {1, 5, 9}, {14, 9, 70}});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(m(i, j) == expected[i][j]);
  }
  const MetricTensor r = metric_tensor(Basis(kReduced));
  const IntMatrix expected_r = mat({{1, 0, 0}, {0, 2, 1}, {0, 1, 5}});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(r(i, j) == expected_r[i][j]);
  }
}

TEST_CASE("rhombicity and norm sum") {
  for (std::size_t n : {1u, 4u, 9u}) {
    CHECK(rhombicity(Basis::identity(n)) == n);
    CHECK(norm_sum(Basis::identity(n)) == n);
  }
  CHECK(rhombicity(Basis(kB)) == 126);
  CHECK(norm_sum(Basis(kB)) == 78);
  CHECK(rhombicity(Basis(kReduced)) == 10);
  CHECK(norm_sum(Basis(kReduced)) == 8);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    IntMatrix m = random_matrix(rng, 5, 5, -20, 20);
    const Basis b(m);
    CHECK(rhombicity(b) == oracle::naive_rhombicity(m));
    CHECK(norm_sum(b) == oracle::naive_norm_sum(m));
    CHECK(rhombicity(b) >= norm_sum(b));
  }
}

TEST_CASE("rhombicity equals norm sum exactly for orthogonal bases") {
  const Basis ortho(mat({{2, 0, 0}, {0, 0, -3}, {0, 5, 0}}));
  CHECK(rhombicity(ortho) == norm_sum(ortho));
  const Basis skew(mat({{2, 0, 0}, {1, 0, -3}, {0, 5, 0}}));
  CHECK(rhombicity(skew) > norm_sum(skew));
}

TEST_CASE("sort_by_norm") {
  const Basis b(mat({{3, 5, 6}, {1, 1, 1}, {-1, 0, 2}}));
  CHECK(sort_by_norm(b) == Basis(kB));
  CHECK(sort_by_norm(Basis(kB)) == Basis(kB));
  // equal norms keep their relative order
  const Basis ties(mat({{0, 2, 0, 0}, {1, 0, 0, 0}, {2, 0, 0, 1}, {0, 0, 1, 0}}));
  CHECK(sort_by_norm(ties) == Basis(mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 2, 0, 0}, {2, 0, 0, 1}})));
}

TEST_CASE("nearest_int") {
  CHECK(nearest_int(Rational(7, 2)) == 4);
  CHECK(nearest_int(Rational(5, 2)) == 2);
  CHECK(nearest_int(Rational(-7, 2)) == -4);
  CHECK(nearest_int(Rational(-1, 2)) == 0);
  CHECK(nearest_int(Rational(0)) == 0);
  CHECK(nearest_int(Rational(-5, 3)) == -2);
  CHECK(nearest_int(Integer(14), Integer(3)) == 5);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 999);
  for (int t = 0; t < 2000; ++t) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    Rational diff = q - Rational(nearest_int(q));
    CHECK(abs(diff) <= Rational(1, 2));
  }
}

TEST_CASE("det") {
  CHECK(det(identity_matrix(6)) == 1);
  CHECK(det(kB) == oracle::laplace_det(kB));
  CHECK(det(kB) == -3);
  CHECK(det(mat({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})) == 0);
  CHECK(det(mat({{0, 1}, {1, 0}})) == -1);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 6;
    IntMatrix m = random_matrix(rng, n, n, -9, 9);
    CHECK(det(m) == oracle::laplace_det(m));
  }
  CHECK_THROWS_AS(det(mat({{1, 2}})), DimensionError);
}

TEST_CASE("hyperplane_normal") {
  CHECK(hyperplane_normal(mat({{1, 0, 0}, {0, 1, 0}})) == vec({0, 0, 1}));
  // raw cofactor vector (cross product) is [0,-3,0]
  CHECK(hyperplane_normal(mat({{1, 0, 1}, {-1, 0, 2}})) == vec({0, 1, 0}));
  CHECK_THROWS_AS(hyperplane_normal(mat({{1, 2, 3}, {2, 4, 6}})), DegenerateError);
  CHECK_THROWS_AS(hyperplane_normal(mat({{1, 2, 3}})), DimensionError);

  // two independent routes: signed minors vs. rational kernel
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + t % 6;
    IntMatrix sub = random_matrix(rng, n - 1, n, -15, 15);
    IntVector expected = oracle::kernel_normal(sub);
    if (std::all_of(expected.begin(), expected.end(), [](const Integer& x) { return x == 0; })) continue;
    IntVector p = hyperplane_normal(sub);
    CHECK(p == expected);
    for (const auto& v : sub) CHECK(dot(p, v) == 0);
  }
}

TEST_CASE("solve_in_sublattice") {
  auto as_rational = [](const IntVector& v) { return RationalVector(v.begin(), v.end()); };
  CHECK(solve_in_sublattice(mat({{1, 0, 0}, {0, 1, 0}}), as_rational(vec({3, -2, 0}))) ==
        RationalVector{Rational(3), Rational(-2)});
  CHECK(solve_in_sublattice(mat({{1, 0, 1}, {-1, 0, 2}}), as_rational(vec({0, 0, 3}))) ==
        RationalVector{Rational(1), Rational(1)});
  CHECK(solve_in_sublattice(mat({{1, 0, 1}, {-1, 0, 2}}), as_rational(vec({0, 0, 0}))) ==
        RationalVector{Rational(0), Rational(0)});
  CHECK_THROWS_AS(solve_in_sublattice(mat({{1, 1, 0}, {2, 2, 0}}), as_rational(vec({1, 1, 0}))), DegenerateError);

  // round trip cols * solve(cols, cols * x) == cols * x, including rational x
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 3 + t % 5;
    IntMatrix cols = random_matrix(rng, n - 1, n, -8, 8);
    if (oracle::kernel_normal(cols) == IntVector(n)) continue;
    RationalVector x(n - 1);
    for (auto& xi : x) {
      xi = Rational(d(rng), 1 + t % 3);
      xi.canonicalize();
    }
    RationalVector target(n);
    for (std::size_t k = 0; k < n - 1; ++k) {
      for (std::size_t c = 0; c < n; ++c) target[c] += x[k] * cols[k][c];
    }
    CHECK(solve_in_sublattice(cols, target) == x);
  }
}

TEST_CASE("lattice_equal") {
  auto z = lattice_equal(Basis(kB), Basis(kReduced));
  REQUIRE(z);
  CHECK(*z == mat({{1, 1, 0}, {0, 0, 1}, {5, 4, 1}}));

  auto self = lattice_equal(Basis(kB), Basis(kB));
  REQUIRE(self);
  CHECK(*self == identity_matrix(3));

  const Basis i2 = Basis::identity(2);
  CHECK_FALSE(lattice_equal(i2, Basis(mat({{2, 0}, {0, 2}}))));
  CHECK_THROWS_AS(lattice_equal(i2, Basis(mat({{1, 1}, {2, 2}}))), SingularBasisError);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 3 + t % 5;
    IntMatrix a = random_matrix(rng, n, n, -10, 10);
    if (oracle::laplace_det(a) == 0) continue;
    IntMatrix u = oracle::random_unimodular(n, rng);
    const Basis ba(a), bb(oracle::product(u, a));
    auto forward = lattice_equal(bb, ba);
    auto backward = lattice_equal(ba, bb);
    REQUIRE(forward);
    REQUIRE(backward);
    CHECK(*forward == u);
    CHECK(oracle::product(*forward, *backward) == identity_matrix(n));
    IntMatrix permuted = a;
    std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
    CHECK(lattice_equal(ba, Basis(permuted)));
  }
}

TEST_CASE("basis shape is checked") {
  CHECK_THROWS_AS(Basis(mat({{1, 0, 0}, {0, 1, 0}})), DimensionError);
  CHECK_THROWS_AS(require_independent(Basis(mat({{1, 2}, {2, 4}}))), SingularBasisError);
}
