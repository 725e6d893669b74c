#pragma once

// Hyperplanar reduction: shear each vector inside its layer of the hyperplane
// spanned by the others, toward the orthogonal foot of the origin.

#include <cstddef>
#include <span>
#include <vector>

#include "cubify/core_algebra.hpp"
#include "cubify/directional.hpp"
#include "cubify/tracked_basis.hpp"

namespace cubify {

/// Hooks for instrumented runs. Default implementations do nothing.
class ReductionObserver {
 public:
  virtual ~ReductionObserver() = default;
  /// An accepted shear moved `before` to `after` inside the layer of `normal`.
  virtual void on_shear(const IntVector& normal, const IntVector& before, const IntVector& after) {
    (void)normal, (void)before, (void)after;
  }
  /// A cubification cycle finished with rhombicity `r` for its new list.
  virtual void on_cycle(std::size_t cycle, const Integer& r) { (void)cycle, (void)r; }
  /// A pipeline stage finished; `list` is the current state.
  virtual void on_stage(const char* stage, const TrackedBasis& list) { (void)stage, (void)list; }
};

/// Geometry of one shear: normal p of the hyperplane, foot H of the origin on
/// the layer of the isolated vector, and H - isolated in sublattice coordinates.
struct LayerProjection {
  IntVector normal;
  RationalVector foot;
  RationalVector local_coords;
};

LayerProjection project_on_layer(const IntVector& isolated, std::span<const IntVector> sub);

/// Integer shifts c with sheared = isolated + sum_k c_k sub_k.
std::vector<Integer> shear_shifts(const LayerProjection& projection);

IntVector shear_vector(const IntVector& isolated, std::span<const IntVector> sub);

/// Lagrange-reduces a sublattice (sorted by norm first). Same span as `sub`.
std::vector<IntVector> sublattice_reduce(std::span<const IntVector> sub, LagrangeVariant lv);

struct HyperplanarOptions {
  LagrangeVariant lagrange = LagrangeVariant::Insert;
  /// When false the N-1 vectors are used as they are, without Lagrange's division.
  bool reduce_sublattice = true;
};

/// Screens every position; an accepted candidate {reduced sublattice, sheared
/// vector} must strictly lower the rhombicity and restarts the screening.
/// Returns the number of accepted shears.
std::size_t hyperplanar_pass(TrackedBasis& list, const HyperplanarOptions& opts = {},
                             ReductionObserver* observer = nullptr);

Basis hyperplanar_pass(const Basis& b, const HyperplanarOptions& opts = {});

}  // namespace cubify
