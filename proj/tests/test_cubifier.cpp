#include <doctest.h>

#include <random>

#include "cubify/bench.hpp"
#include "cubify/cubifier.hpp"
#include "cubify/matrix_io.hpp"
#include "oracles.hpp"

using namespace cubify;
using oracle::mat;

namespace {

const Basis kB(mat({{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}}));

Basis heterogeneous() { return read_matrix_file(CUBIFY_DATA_DIR "/heterogeneous_20x20.txt"); }

struct CycleLog : ReductionObserver {
  std::vector<Integer> r;
  void on_cycle(std::size_t, const Integer& value) override { r.push_back(value); }
};

}  // namespace

TEST_CASE("classify") {
  GeneratorSpec columnar{MatrixFamily::ColumnarRandom, 10, 0, 100, 5};
  CHECK(classify(generate(columnar)) == MatrixClass::Random);
  GeneratorSpec full{MatrixFamily::FullRandom, 10, 0, 100, 5};
  CHECK(classify(generate(full)) == MatrixClass::Random);
  CHECK(classify(heterogeneous()) == MatrixClass::LargeHeterogeneous);

  // identity with a large last column: columnar, small or large by dimension
  auto big_column = [](std::size_t n) {
    IntMatrix m = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i) m[i][n - 1] = 1000 + 37 * static_cast<long>(i);
    return Basis(m);
  };
  CHECK(classify(big_column(10)) == MatrixClass::SmallColumnar);
  CHECK(classify(big_column(15)) == MatrixClass::LargeColumnar);
  CHECK(classify(big_column(15), ClassifyThresholds{0.5, 100, 16}) == MatrixClass::SmallColumnar);

  // small heterogeneous matrices follow the small columnar path
  IntMatrix het = identity_matrix(8);
  for (std::size_t i = 0; i < 8; ++i) {
    het[i][7] = 500 + static_cast<long>(i);
    het[0][i] = 300 + static_cast<long>(i);
  }
  CHECK(classify(Basis(het)) == MatrixClass::SmallColumnar);
  CHECK(classify(Basis::identity(6)) == MatrixClass::Random);
}

TEST_CASE("options follow the method table") {
  auto o = options_for(MatrixClass::SmallColumnar);
  CHECK((o.method == Method::Method1 && o.lagrange == LagrangeVariant::Insert &&
         o.simplification == SimplificationVariant::Insert && !o.pre_hyperplanar));
  o = options_for(MatrixClass::LargeColumnar);
  CHECK((o.method == Method::Method1 && o.lagrange == LagrangeVariant::Append &&
         o.simplification == SimplificationVariant::Insert && !o.pre_hyperplanar));
  o = options_for(MatrixClass::LargeHeterogeneous);
  CHECK((o.method == Method::Method1 && o.lagrange == LagrangeVariant::Insert &&
         o.simplification == SimplificationVariant::Insert && o.pre_hyperplanar));
  o = options_for(MatrixClass::Random);
  CHECK((o.method == Method::Method2 && o.lagrange == LagrangeVariant::Append &&
         o.simplification == SimplificationVariant::Append && !o.pre_hyperplanar));
}

TEST_CASE("cubify on the identity stops after one cycle") {
  for (std::size_t n : {2u, 5u, 9u}) {
    for (Method m : {Method::Method1, Method::Method2}) {
      CubifyOptions o;
      o.method = m;
      auto res = cubify::cubify(Basis::identity(n), o);
      CHECK(res.basis == Basis::identity(n));
      CHECK(res.report.cycles == 1);
      CHECK(res.report.r_out == n);
      CHECK(res.report.s_out == n);
      CHECK(res.report.transform == identity_matrix(n));
    }
  }
}

TEST_CASE("cubify on the 3x3 example") {
  auto res = cubify::cubify(kB);
  REQUIRE(res.report.classification);
  CHECK(*res.report.classification == MatrixClass::Random);
  CHECK(res.report.r_in == 126);
  CHECK(res.report.s_in == 78);
  CHECK(res.report.r_out == 10);
  CHECK(res.report.s_out == 8);
  CHECK(lattice_equal(kB, res.basis));
  CHECK(verify(kB, res.basis, res.report));
}

TEST_CASE("cubify rejects dependent rows and zero cycle limits") {
  CHECK_THROWS_AS(cubify::cubify(Basis(mat({{1, 2}, {2, 4}}))), SingularBasisError);
  CubifyOptions o;
  o.max_cycles = 0;
  CHECK_THROWS_AS(cubify::cubify(kB, o), std::invalid_argument);
}

TEST_CASE("max_cycles stops early and flags the report") {
  const Basis b = generate({MatrixFamily::FullRandom, 8, 0, 100, 3});
  CubifyOptions o = options_for(MatrixClass::Random);
  o.max_cycles = 1;
  auto res = cubify::cubify(b, o);
  CHECK(res.report.cycles == 1);
  CHECK(res.report.max_cycles_reached);
  CHECK(verify(b, res.basis, res.report));
}

TEST_CASE("both methods give lattice-equal, verified outputs with decreasing R") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 24; ++t) {
    const std::size_t n = 3 + t % 6;
    const Basis b = generate({t % 2 ? MatrixFamily::FullRandom : MatrixFamily::ColumnarRandom, n, 0, 100,
                              static_cast<std::uint64_t>(100 + t)});
    for (Method m : {Method::Method1, Method::Method2}) {
      CubifyOptions o;
      o.method = m;
      o.check_each_cycle = true;
      CycleLog log;
      auto res = cubify::cubify(b, o, &log);
      CHECK(verify(b, res.basis, res.report));
      CHECK(res.report.r_out <= res.report.r_in);
      CHECK(log.r.size() == res.report.cycles);
      for (std::size_t k = 1; k < res.report.r_history.size(); ++k) {
        CHECK(res.report.r_history[k] < res.report.r_history[k - 1]);
      }
      CHECK(res.report.r_history.back() == res.report.r_out);
      if (!res.report.max_cycles_reached) CHECK(log.r.back() >= res.report.r_out);
    }
  }
}

TEST_CASE("verify flags tampering") {
  auto res = cubify::cubify(kB);
  CHECK(verify(kB, res.basis, res.report));

  ReductionReport bad = res.report;
  bad.transform[0][0] += 1;
  CHECK_FALSE(verify(kB, res.basis, bad));

  bad = res.report;
  bad.r_out += 1;
  auto v = verify(kB, res.basis, bad);
  CHECK_FALSE(v);
  CHECK(v.diagnostics.size() == 1);

  IntMatrix rows = res.basis.rows();
  rows[1][2] += 1;
  CHECK_FALSE(verify(kB, Basis(rows), res.report));

  // the transform stated for the hand-reduced 3x3 basis
  ReductionReport stated;
  const Basis reduced(mat({{0, 1, 0}, {1, 0, 1}, {-1, 0, 2}}));
  stated.transform = *lattice_equal(reduced, kB);
  stated.r_in = 126;
  stated.s_in = 78;
  stated.r_out = 10;
  stated.s_out = 8;
  CHECK(verify(kB, reduced, stated));
  // b = Z b' with the listed coefficients, so the forward transform is Z^-1
  CHECK(oracle::product(mat({{1, 1, 0}, {0, 0, 1}, {5, 4, 1}}), stated.transform) == identity_matrix(3));
}

TEST_CASE("heterogeneous 20x20 end to end") {
  const Basis b = heterogeneous();
  auto res = cubify::cubify(b);
  CHECK(res.report.r_in == 489734657);
  CHECK(res.report.s_in == 68191151);
  CHECK(res.report.options.pre_hyperplanar);
  CHECK(res.report.r_out <= 18000);
  CHECK(res.report.s_out <= 16000);
  CHECK(res.report.r_out * 1000 <= res.report.r_in);
  CHECK(verify(b, res.basis, res.report));
}
