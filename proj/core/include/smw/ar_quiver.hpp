#pragma once

#include <map>
#include <utility>
#include <vector>

#include "smw/polygon.hpp"

namespace smw {

/// Auslander-Reiten quiver of C_{-w}(A_e) on admissible diagonals.
struct ArQuiver {
  CategoryParams params;
  std::vector<Diagonal> vertices;                     // lexicographic
  std::vector<std::pair<Diagonal, Diagonal>> arrows;  // lexicographic
  std::map<Diagonal, Diagonal> translate;
};

/// All admissible diagonals, lexicographic on (lo, hi).
std::vector<Diagonal> enumerate_indecomposables(const CategoryParams& p);

/// Targets of irreducible maps out of `d`: one endpoint moves clockwise by
/// w + 1 while the other stays, provided it does not pass the fixed endpoint.
std::vector<Diagonal> irreducible_targets(Diagonal d, const CategoryParams& p);

ArQuiver build_ar_quiver(const CategoryParams& p);

}  // namespace smw
