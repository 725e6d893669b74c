#pragma once

// Pairwise ("directional") reduction: Lagrange's division followed by
// rhombicity-driven simplification.

#include <cstddef>

#include "cubify/core_algebra.hpp"
#include "cubify/tracked_basis.hpp"

namespace cubify {

enum class LagrangeVariant { Append, Insert };
enum class SimplificationVariant { Append, Insert };

/// Replaces b_j by b_j - [q] b_i for pairs with |b_i| <= |b_j| and
/// q = b_i.b_j / b_i.b_i until every [q] is zero. The list is not re-sorted;
/// callers sort first. Returns the number of replacements made.
std::size_t lagrange_division(TrackedBasis& list, LagrangeVariant variant);

/// Replaces b_i or b_j by b_j - sign(b_i.b_j) b_i whenever that strictly lowers
/// the rhombicity, until no single replacement does. Returns the number of
/// accepted replacements.
std::size_t simplification(TrackedBasis& list, SimplificationVariant variant);

std::size_t directional_reduction(TrackedBasis& list, LagrangeVariant lv, SimplificationVariant sv);

Basis lagrange_division(const Basis& b, LagrangeVariant variant);
Basis simplification(const Basis& b, SimplificationVariant variant);
Basis directional_reduction(const Basis& b, LagrangeVariant lv, SimplificationVariant sv);

const char* to_string(LagrangeVariant v);
const char* to_string(SimplificationVariant v);

}  // namespace cubify
