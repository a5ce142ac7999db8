#pragma once

#include <array>
#include <utility>
#include <vector>

#include "smw/polygon.hpp"

namespace smw {

enum class ExtKind { none, adjacent, crossing, shift };

const char* to_string(ExtKind kind);

/// Which of the three configurations makes C(Sigma^{-1} s', s) nonzero.
struct ExtCase {
  ExtKind kind = ExtKind::none;
  /// adjacent: endpoint x of s' such that x - 1 is an endpoint of s.
  int target_endpoint = -1;
  /// adjacent: the endpoint x - 1 of s.
  int through_endpoint = -1;
  /// crossing: pairs (endpoint of s', endpoint of s) that differ by a
  /// multiple of w + 1.
  std::array<std::pair<int, int>, 2> matching{};
};

/// Triangle Sigma^{-1} s' -> s -> middle -> s' with nonzero first map.
struct ExtTriangle {
  Diagonal shifted_source;
  Diagonal through;
  std::vector<Diagonal> middle;
  Diagonal target;
  ExtKind kind = ExtKind::none;
};

/// Classifies the pair; precedence shift > crossing > adjacent > none.
ExtCase ext_case(Diagonal s_prime, Diagonal s, const CategoryParams& p);

/// dim C(Sigma^{-1} s', s), which is 0 or 1.
int hom_dim_neg1(Diagonal s_prime, Diagonal s, const CategoryParams& p);

/// dim C(x, Sigma^shift y).
int hom_dim(Diagonal x, int shift, Diagonal y, const CategoryParams& p);

/// Indecomposable summands of the middle term (sorted). Throws
/// parameter_error when there is no nonzero morphism Sigma^{-1} s' -> s.
std::vector<Diagonal> middle_term(Diagonal s_prime, Diagonal s, const CategoryParams& p);

ExtTriangle ext_triangle(Diagonal s_prime, Diagonal s, const CategoryParams& p);

/// (dim C(x, Sigma^{-w} y), dim C(y, x)); equal in a (-w)-Calabi-Yau category.
std::pair<int, int> cy_pairing_dims(Diagonal x, Diagonal y, const CategoryParams& p);

}  // namespace smw
