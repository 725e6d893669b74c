#include "cubify/directional.hpp"

#include <stdexcept>

namespace cubify {

namespace {

// Position of the shorter vector of the pair first; equal norms keep the
// lower position as b_i.
std::pair<std::size_t, std::size_t> assign_roles(const TrackedBasis& list, std::size_t x, std::size_t y) {
  int c = cmp(list.norm(x), list.norm(y));
  if (c < 0 || (c == 0 && x < y)) return {x, y};
  return {y, x};
}

}  // namespace

std::size_t lagrange_division(TrackedBasis& list, LagrangeVariant variant) {
  const std::size_t n = list.size();
  std::size_t changes = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        auto [i, j] = assign_roles(list, x, y);
        if (list.norm(i) == 0) throw std::logic_error("lagrange_division: zero vector in basis");
        Integer k = nearest_int(list.gram(i, j), list.norm(i));
        if (k == 0) continue;

        list.add_multiple(j, -k, i);  // b_j <- r
        if (variant == LagrangeVariant::Append) {
          // drop b_i and b_j, append r then b_i
          list.move_to_end(j);
          list.move_to_end(i > j ? i - 1 : i);
        } else if (cmp(list.norm(j), list.norm(i)) <= 0) {
          list.swap_positions(i, j);
        }
        ++changes;
        changed = true;
      }
    }
  }
  return changes;
}

std::size_t simplification(TrackedBasis& list, SimplificationVariant variant) {
  const std::size_t n = list.size();
  std::size_t changes = 0;
  Integer rr, delta_i, delta_j, t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        auto [i, j] = assign_roles(list, x, y);
        const Integer& gij = list.gram(i, j);
        const int s = sgn(gij);
        if (s == 0) continue;

        // r = b_j - s b_i ;  r.b_l = g_jl - s g_il
        rr = list.norm(i) + list.norm(j) - 2 * abs(gij);
        delta_i = rr - list.norm(i);
        delta_j = rr - list.norm(j);
        for (std::size_t l = 0; l < n; ++l) {
          t = s > 0 ? Integer(list.gram(j, l) - list.gram(i, l)) : Integer(list.gram(j, l) + list.gram(i, l));
          t = abs(t);
          if (l != i) delta_i += 2 * (t - abs(list.gram(i, l)));
          if (l != j) delta_j += 2 * (t - abs(list.gram(j, l)));
        }

        std::size_t replaced;
        if (delta_i < 0) {
          // b_i <- b_j - s b_i
          if (s > 0) list.negate(i);
          list.add_multiple(i, 1, j);
          replaced = i;
        } else if (delta_j < 0) {
          list.add_multiple(j, -s, i);
          replaced = j;
        } else {
          continue;
        }

        if (variant == SimplificationVariant::Append) {
          list.move_to_end(replaced);
        } else {
          list.stable_sort_by_norm();
        }
        ++changes;
        changed = true;
      }
    }
  }
  return changes;
}

std::size_t directional_reduction(TrackedBasis& list, LagrangeVariant lv, SimplificationVariant sv) {
  std::size_t changes = lagrange_division(list, lv);
  return changes + simplification(list, sv);
}

Basis lagrange_division(const Basis& b, LagrangeVariant variant) {
  TrackedBasis list(b);
  lagrange_division(list, variant);
  return list.basis();
}

Basis simplification(const Basis& b, SimplificationVariant variant) {
  TrackedBasis list(b);
  simplification(list, variant);
  return list.basis();
}

Basis directional_reduction(const Basis& b, LagrangeVariant lv, SimplificationVariant sv) {
  TrackedBasis list(b);
  directional_reduction(list, lv, sv);
  return list.basis();
}

const char* to_string(LagrangeVariant v) { return v == LagrangeVariant::Append ? "append" : "insert"; }
const char* to_string(SimplificationVariant v) { return v == SimplificationVariant::Append ? "append" : "insert"; }

}  // namespace cubify
