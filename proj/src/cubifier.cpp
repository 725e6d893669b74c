#include "cubify/cubifier.hpp"

#include <stdexcept>

namespace cubify {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Line>
bool dense_high(std::size_t n, Line&& entry, unsigned long high) {
  std::size_t nonzero = 0, large = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& x = entry(k);
    if (x == 0) continue;
    ++nonzero;
    if (mpz_cmpabs_ui(x.get_mpz_t(), high) > 0) ++large;
  }
  return nonzero >= (n + 1) / 2 && large >= (n + 3) / 4;
}

class Stopwatch {
 public:
  explicit Stopwatch(PhaseTimings::Duration& sink) : sink_(sink), start_(Clock::now()) {}
  ~Stopwatch() { sink_ += Clock::now() - start_; }
  Stopwatch(const Stopwatch&) = delete;
  Stopwatch& operator=(const Stopwatch&) = delete;

 private:
  PhaseTimings::Duration& sink_;
  Clock::time_point start_;
};

}  // namespace

MatrixClass classify(const Basis& b, const ClassifyThresholds& thresholds) {
  const std::size_t n = b.dim();
  std::size_t zeros = 0;
  for (const auto& row : b.rows()) {
    for (const auto& x : row) zeros += x == 0;
  }
  const bool sparse = n > 0 && static_cast<double>(zeros) >= thresholds.zero_fraction * static_cast<double>(n * n);

  bool high_row = false, high_col = false;
  for (std::size_t i = 0; i < n; ++i) {
    high_row = high_row || dense_high(n, [&](std::size_t k) -> const Integer& { return b[i][k]; },
                                      thresholds.high_magnitude);
    high_col = high_col || dense_high(n, [&](std::size_t k) -> const Integer& { return b[k][i]; },
                                      thresholds.high_magnitude);
  }
  const bool large = n >= thresholds.large_dimension;

  if (sparse && high_col && !high_row) return large ? MatrixClass::LargeColumnar : MatrixClass::SmallColumnar;
  if (sparse && high_col && high_row) return large ? MatrixClass::LargeHeterogeneous : MatrixClass::SmallColumnar;
  return MatrixClass::Random;
}

CubifyOptions options_for(MatrixClass cls) {
  CubifyOptions o;
  switch (cls) {
    case MatrixClass::SmallColumnar:
      o.method = Method::Method1;
      o.lagrange = LagrangeVariant::Insert;
      o.simplification = SimplificationVariant::Insert;
      break;
    case MatrixClass::LargeColumnar:
      o.method = Method::Method1;
      o.lagrange = LagrangeVariant::Append;
      o.simplification = SimplificationVariant::Insert;
      break;
    case MatrixClass::LargeHeterogeneous:
      o.method = Method::Method1;
      o.lagrange = LagrangeVariant::Insert;
      o.simplification = SimplificationVariant::Insert;
      o.pre_hyperplanar = true;
      break;
    case MatrixClass::Random:
      o.method = Method::Method2;
      o.lagrange = LagrangeVariant::Append;
      o.simplification = SimplificationVariant::Append;
      break;
  }
  return o;
}

CubifyResult cubify(const Basis& b, std::optional<CubifyOptions> opts, ReductionObserver* observer) {
  const auto started = Clock::now();
  require_independent(b);

  ReductionReport report;
  if (!opts) {
    report.classification = classify(b);
    opts = options_for(*report.classification);
  }
  if (opts->max_cycles == 0) throw std::invalid_argument("cubify: max_cycles must be at least 1");
  report.options = *opts;

  TrackedBasis list(b);
  report.r_in = list.rhombicity();
  report.s_in = list.norm_sum();

  const HyperplanarOptions hyper{opts->lagrange, true};
  if (opts->pre_hyperplanar) {
    Stopwatch sw(report.timings.pre_hyperplanar);
    list.stable_sort_by_norm();
    hyperplanar_pass(list, HyperplanarOptions{opts->lagrange, false}, observer);
    if (observer) observer->on_stage("pre_hyperplanar", list);
  }

  auto run_hyperplanar = [&](TrackedBasis& l) {
    Stopwatch sw(report.timings.hyperplanar);
    hyperplanar_pass(l, hyper, observer);
    if (observer) observer->on_stage("hyperplanar", l);
  };
  auto run_directional = [&](TrackedBasis& l) {
    Stopwatch sw(report.timings.directional);
    directional_reduction(l, opts->lagrange, opts->simplification);
    if (observer) observer->on_stage("directional", l);
  };

  Integer list_r = list.rhombicity();
  report.r_history.push_back(list_r);
  while (true) {
    TrackedBasis next = list;
    {
      Stopwatch sw(report.timings.sort);
      next.stable_sort_by_norm();
    }
    if (opts->method == Method::Method1) {
      run_directional(next);
      run_hyperplanar(next);
    } else {
      run_hyperplanar(next);
      run_directional(next);
      run_hyperplanar(next);
    }
    ++report.cycles;
    Integer next_r = next.rhombicity();
    if (observer) observer->on_cycle(report.cycles, next_r);
    if (next_r >= list_r) break;

    list = std::move(next);
    list_r = std::move(next_r);
    report.r_history.push_back(list_r);
    if (opts->check_each_cycle && !lattice_equal(b, list.basis())) {
      throw std::logic_error("cubify: lattice changed during cycle " + std::to_string(report.cycles));
    }
    if (report.cycles >= opts->max_cycles) {
      report.max_cycles_reached = true;
      break;
    }
  }

  CubifyResult result{list.basis(), std::move(report)};
  ReductionReport& rep = result.report;
  rep.r_out = list_r;
  rep.s_out = list.norm_sum();
  rep.transform = list.transform();
  if (multiply(rep.transform, b.rows()) != result.basis.rows() || !lattice_equal(b, result.basis)) {
    throw std::logic_error("cubify: output is not lattice-equal to the input");
  }
  rep.timings.total = Clock::now() - started;
  return result;
}

Verification verify(const Basis& original, const Basis& reduced, const ReductionReport& report) {
  Verification v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.diagnostics.push_back(std::move(msg));
  };
  const std::size_t n = original.dim();
  if (reduced.dim() != n) {
    fail("dimension mismatch between original and reduced basis");
    return v;
  }
  bool shape_ok = report.transform.size() == n;
  for (const auto& row : report.transform) shape_ok = shape_ok && row.size() == n;
  if (!shape_ok) {
    fail("transform is not " + std::to_string(n) + "x" + std::to_string(n));
    return v;
  }

  const IntMatrix mapped = multiply(report.transform, original.rows());
  for (std::size_t i = 0; i < n; ++i) {
    if (mapped[i] != reduced[i]) fail("row " + std::to_string(i) + ": transform * original != reduced");
  }
  const Integer d = det(report.transform);
  if (abs(d) != 1) fail("transform determinant is " + d.get_str() + ", expected +-1");

  const MetricTensor m_in = metric_tensor(original);
  const MetricTensor m_out = metric_tensor(reduced);
  if (rhombicity(m_in) != report.r_in) fail("r_in does not match the original basis");
  if (norm_sum(m_in) != report.s_in) fail("s_in does not match the original basis");
  if (rhombicity(m_out) != report.r_out) fail("r_out does not match the reduced basis");
  if (norm_sum(m_out) != report.s_out) fail("s_out does not match the reduced basis");
  return v;
}

const char* to_string(MatrixClass cls) {
  switch (cls) {
    case MatrixClass::SmallColumnar: return "small_columnar";
    case MatrixClass::LargeColumnar: return "large_columnar";
    case MatrixClass::LargeHeterogeneous: return "large_heterogeneous";
    case MatrixClass::Random: return "random";
  }
  return "unknown";
}

const char* to_string(Method m) { return m == Method::Method1 ? "1" : "2"; }

}  // namespace cubify
