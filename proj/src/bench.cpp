#include "cubify/bench.hpp"

#include <chrono>
#include <limits>

#include "cubify/cubifier.hpp"
#include "cubify/lll.hpp"

namespace cubify {

std::int64_t UniformIntSource::operator()(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("UniformIntSource: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

Basis generate(const GeneratorSpec& spec) {
  if (spec.dim < 2) throw std::invalid_argument("generate: dimension must be at least 2");
  if (spec.entry_max < spec.entry_min) throw std::invalid_argument("generate: empty entry range");
  UniformIntSource draw(spec.seed);
  const std::size_t n = spec.dim;
  for (int attempt = 0; attempt < 100; ++attempt) {
    IntMatrix m;
    if (spec.family == MatrixFamily::FullRandom) {
      m.assign(n, IntVector(n));
      for (auto& row : m) {
        for (auto& x : row) x = static_cast<long>(draw(spec.entry_min, spec.entry_max));
      }
    } else {
      m = identity_matrix(n);
      for (auto& row : m) row[n - 1] = static_cast<long>(draw(spec.entry_min, spec.entry_max));
    }
    if (det(m) != 0) return Basis(std::move(m));
  }
  throw GenerationError("generate: persistent singularity after 100 draws (seed " + std::to_string(spec.seed) + ")");
}

namespace {

BatteryRecord reduce_one(const Basis& input, Algorithm algorithm) {
  using Clock = std::chrono::steady_clock;
  BatteryRecord rec;
  rec.algorithm = algorithm;
  const MetricTensor m_in = metric_tensor(input);
  rec.r_in = rhombicity(m_in);
  rec.s_in = norm_sum(m_in);

  Basis output;
  IntMatrix transform;
  const auto start = Clock::now();
  if (algorithm == Algorithm::Cubify) {
    CubifyResult res = cubify(input);
    output = std::move(res.basis);
    transform = std::move(res.report.transform);
    rec.cycles = res.report.cycles;
  } else {
    LllResult res = lll_reduce_tracked(input);
    output = std::move(res.basis);
    transform = std::move(res.transform);
  }
  rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();

  if (multiply(transform, input.rows()) != output.rows() || abs(det(transform)) != 1 || !lattice_equal(input, output)) {
    throw VerificationFailure(std::string("battery: ") + to_string(algorithm) + " output failed verification", 0);
  }
  const MetricTensor m_out = metric_tensor(output);
  rec.r_out = rhombicity(m_out);
  rec.s_out = norm_sum(m_out);
  rec.r_factor = Rational(rec.r_in, rec.r_out).get_d();
  rec.s_factor = Rational(rec.s_in, rec.s_out).get_d();
  return rec;
}

}  // namespace

std::vector<BatteryAggregate> aggregate(std::span<const BatteryRecord> records) {
  std::vector<BatteryAggregate> out;
  for (Algorithm a : {Algorithm::Cubify, Algorithm::Lll}) {
    BatteryAggregate agg;
    agg.algorithm = a;
    for (const auto& r : records) {
      if (r.algorithm != a) continue;
      ++agg.count;
      agg.mean_r_factor += r.r_factor;
      agg.mean_s_factor += r.s_factor;
      agg.mean_seconds += r.seconds;
    }
    if (agg.count == 0) continue;
    const double c = static_cast<double>(agg.count);
    agg.mean_r_factor /= c;
    agg.mean_s_factor /= c;
    agg.mean_seconds /= c;
    out.push_back(agg);
  }
  return out;
}

BatteryResult run_battery_on(std::span<const Basis> matrices, std::span<const std::uint64_t> seeds,
                             std::span<const Algorithm> algorithms) {
  if (seeds.size() != matrices.size()) throw std::invalid_argument("run_battery_on: one seed per matrix required");
  BatteryResult result;
  result.count = matrices.size();
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    for (Algorithm a : algorithms) {
      BatteryRecord rec;
      try {
        rec = reduce_one(matrices[i], a);
      } catch (const VerificationFailure& e) {
        throw VerificationFailure(std::string(e.what()) + " (seed " + std::to_string(seeds[i]) + ")", seeds[i]);
      }
      rec.index = i;
      rec.seed = seeds[i];
      result.records.push_back(std::move(rec));
    }
  }
  result.aggregates = aggregate(result.records);
  return result;
}

BatteryResult run_battery(const GeneratorSpec& spec, std::size_t count, std::span<const Algorithm> algorithms) {
  if (count == 0) throw std::invalid_argument("run_battery: count must be at least 1");
  std::vector<Basis> matrices;
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorSpec s = spec;
    s.seed = spec.seed + i;
    matrices.push_back(generate(s));
    seeds.push_back(s.seed);
  }
  BatteryResult result = run_battery_on(matrices, seeds, algorithms);
  result.spec = spec;
  return result;
}

const char* to_string(MatrixFamily f) { return f == MatrixFamily::FullRandom ? "full" : "columnar"; }
const char* to_string(Algorithm a) { return a == Algorithm::Cubify ? "cubify" : "lll"; }

}  // namespace cubify
