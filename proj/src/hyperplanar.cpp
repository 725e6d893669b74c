#include "cubify/hyperplanar.hpp"

namespace cubify {

LayerProjection project_on_layer(const IntVector& isolated, std::span<const IntVector> sub) {
  LayerProjection proj;
  proj.normal = hyperplane_normal(sub);
  const std::size_t n = isolated.size();
  if (proj.normal.size() != n) throw DimensionError("project_on_layer: isolated vector has wrong dimension");

  // OH = (p.b / p.p) p ; ZH = OH - OZ
  Rational scale(dot(proj.normal, isolated), dot(proj.normal, proj.normal));
  scale.canonicalize();
  proj.foot.resize(n);
  RationalVector zh(n);
  for (std::size_t k = 0; k < n; ++k) {
    proj.foot[k] = scale * proj.normal[k];
    zh[k] = proj.foot[k] - isolated[k];
  }
  proj.local_coords = solve_in_sublattice(sub, zh);
  return proj;
}

std::vector<Integer> shear_shifts(const LayerProjection& projection) {
  std::vector<Integer> shifts;
  shifts.reserve(projection.local_coords.size());
  for (const auto& z : projection.local_coords) shifts.push_back(nearest_int(z));
  return shifts;
}

IntVector shear_vector(const IntVector& isolated, std::span<const IntVector> sub) {
  const auto shifts = shear_shifts(project_on_layer(isolated, sub));
  IntVector out = isolated;
  for (std::size_t k = 0; k < sub.size(); ++k) {
    for (std::size_t c = 0; c < out.size(); ++c) {
      mpz_addmul(out[c].get_mpz_t(), shifts[k].get_mpz_t(), sub[k][c].get_mpz_t());
    }
  }
  return out;
}

std::vector<IntVector> sublattice_reduce(std::span<const IntVector> sub, LagrangeVariant lv) {
  TrackedBasis list(IntMatrix(sub.begin(), sub.end()), identity_matrix(sub.size()));
  list.stable_sort_by_norm();
  lagrange_division(list, lv);
  return list.rows();
}

std::size_t hyperplanar_pass(TrackedBasis& list, const HyperplanarOptions& opts, ReductionObserver* observer) {
  const std::size_t n = list.size();
  if (n < 2) return 0;
  std::size_t accepted = 0;
  Integer current_r = list.rhombicity();

  std::size_t pos = 0;
  while (pos < n) {
    TrackedBasis candidate = list.without(pos);
    if (opts.reduce_sublattice) {
      candidate.stable_sort_by_norm();
      lagrange_division(candidate, opts.lagrange);
    }
    const IntMatrix sub = candidate.rows();
    const LayerProjection proj = project_on_layer(list.row(pos), sub);
    const std::vector<Integer> shifts = shear_shifts(proj);

    candidate.push_back(list.row(pos), list.coeffs(pos));
    const std::size_t last = n - 1;
    for (std::size_t k = 0; k < shifts.size(); ++k) candidate.add_multiple(last, shifts[k], k);

    Integer candidate_r = candidate.rhombicity();
    if (candidate_r < current_r) {
      if (observer) observer->on_shear(proj.normal, list.row(pos), candidate.row(last));
      list = std::move(candidate);
      current_r = std::move(candidate_r);
      ++accepted;
      pos = 0;
    } else {
      ++pos;
    }
  }
  return accepted;
}

Basis hyperplanar_pass(const Basis& b, const HyperplanarOptions& opts) {
  TrackedBasis list(b);
  hyperplanar_pass(list, opts);
  return list.basis();
}

}  // namespace cubify
