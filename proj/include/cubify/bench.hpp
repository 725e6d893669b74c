#pragma once

// Seeded random matrix families and reduction batteries.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "cubify/core_algebra.hpp"

namespace cubify {

enum class MatrixFamily { FullRandom, ColumnarRandom };
enum class Algorithm { Cubify, Lll };

struct GeneratorSpec {
  MatrixFamily family = MatrixFamily::FullRandom;
  std::size_t dim = 10;
  std::int64_t entry_min = 0;
  std::int64_t entry_max = 100;
  std::uint64_t seed = 1;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform integers in [lo, hi] from a 64-bit Mersenne Twister, mapped by
/// rejection sampling so the stream is identical on every platform.
class UniformIntSource {
 public:
  explicit UniformIntSource(std::uint64_t seed) : engine_(seed) {}
  std::int64_t operator()(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// FullRandom: every entry uniform in the range. ColumnarRandom: identity with
/// the last column uniform in the range. Singular draws are redrawn (at most
/// 100 times).
Basis generate(const GeneratorSpec& spec);

struct BatteryRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::Cubify;
  Integer r_in, r_out, s_in, s_out;
  double r_factor = 0;
  double s_factor = 0;
  double seconds = 0;
  std::size_t cycles = 0;  // cubify only
};

struct BatteryAggregate {
  Algorithm algorithm = Algorithm::Cubify;
  std::size_t count = 0;
  double mean_r_factor = 0;
  double mean_s_factor = 0;
  double mean_seconds = 0;
};

struct BatteryResult {
  GeneratorSpec spec;
  std::size_t count = 0;
  std::vector<BatteryRecord> records;
  std::vector<BatteryAggregate> aggregates;
};

class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(const std::string& what, std::uint64_t seed) : std::runtime_error(what), seed(seed) {}
  std::uint64_t seed;
};

/// Matrix i of a battery is generated with seed spec.seed + i.
BatteryResult run_battery(const GeneratorSpec& spec, std::size_t count, std::span<const Algorithm> algorithms);

/// Reduces the given matrices with every algorithm; seeds are recorded as given.
BatteryResult run_battery_on(std::span<const Basis> matrices, std::span<const std::uint64_t> seeds,
                             std::span<const Algorithm> algorithms);

/// Means of the per-matrix factors, one aggregate per algorithm present.
std::vector<BatteryAggregate> aggregate(std::span<const BatteryRecord> records);

const char* to_string(MatrixFamily f);
const char* to_string(Algorithm a);

}  // namespace cubify
