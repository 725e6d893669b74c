#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubify/core_algebra.hpp"
#include "cubify/directional.hpp"
#include "cubify/hyperplanar.hpp"

namespace cubify {

enum class MatrixClass { SmallColumnar, LargeColumnar, LargeHeterogeneous, Random };
enum class Method { Method1, Method2 };

/// Cut-offs used by classify(). A row or column is "dense-high" when at least
/// ceil(N/2) of its entries are nonzero and at least ceil(N/4) of them exceed
/// `high_magnitude` in absolute value.
struct ClassifyThresholds {
  double zero_fraction = 0.5;
  unsigned long high_magnitude = 100;
  std::size_t large_dimension = 15;
};

MatrixClass classify(const Basis& b, const ClassifyThresholds& thresholds = {});

struct CubifyOptions {
  Method method = Method::Method1;
  LagrangeVariant lagrange = LagrangeVariant::Insert;
  SimplificationVariant simplification = SimplificationVariant::Insert;
  /// One hyperplanar pass without sublattice reduction before cycling.
  bool pre_hyperplanar = false;
  std::size_t max_cycles = 1000;
  /// Check lattice equality with the input after every cycle.
  bool check_each_cycle = false;
};

/// Method and variants recommended for a matrix class.
CubifyOptions options_for(MatrixClass cls);

struct PhaseTimings {
  using Duration = std::chrono::duration<double>;
  Duration pre_hyperplanar{};
  Duration sort{};
  Duration directional{};
  Duration hyperplanar{};
  Duration total{};
};

struct ReductionReport {
  Integer r_in, r_out;
  Integer s_in, s_out;
  std::size_t cycles = 0;
  bool max_cycles_reached = false;
  CubifyOptions options;
  std::optional<MatrixClass> classification;  // set when options were auto-selected
  /// output = transform * input
  IntMatrix transform;
  PhaseTimings timings;
  /// Rhombicity of the input followed by that of every accepted cycle.
  std::vector<Integer> r_history;
};

struct CubifyResult {
  Basis basis;
  ReductionReport report;
};

/// Cycles directional and hyperplanar reductions while the rhombicity strictly
/// decreases. Without options the method is chosen from classify().
/// Throws SingularBasisError for dependent rows.
CubifyResult cubify(const Basis& b, std::optional<CubifyOptions> opts = std::nullopt,
                    ReductionObserver* observer = nullptr);

struct Verification {
  bool ok = true;
  std::vector<std::string> diagnostics;
  explicit operator bool() const { return ok; }
};

/// Checks reduced == transform * original, |det(transform)| == 1 and the
/// recorded rhombicity / norm sums.
Verification verify(const Basis& original, const Basis& reduced, const ReductionReport& report);

const char* to_string(MatrixClass cls);
const char* to_string(Method m);

}  // namespace cubify
