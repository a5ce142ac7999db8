#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace smw {

/// The ambient category C_{-w}(A_e): rank e, weight w and the size N of the
/// polygon that models it.
struct CategoryParams {
  int rank = 1;
  int weight = 1;
  int polygon_size = 2;

  friend bool operator==(const CategoryParams&, const CategoryParams&) = default;
};

/// Throws parameter_error unless rank >= 1 and weight >= 1.
CategoryParams make_category(int rank, int weight);

/// Theorem-level operations need weight >= 2; throws unsupported_weight otherwise.
void require_theorem_weight(const CategoryParams& params);

/// Unordered pair of distinct polygon vertices, stored with lo < hi.
struct Diagonal {
  int lo = 0;
  int hi = 1;

  bool has_endpoint(int v) const { return lo == v || hi == v; }
  /// The endpoint that is not `v`; `v` must be an endpoint.
  int other(int v) const { return v == lo ? hi : lo; }

  auto operator<=>(const Diagonal&) const = default;
};

/// Reduces `v` into [0, n).
int wrap(int v, int n);

Diagonal normalize(int a, int b, int polygon_size);
inline Diagonal normalize(int a, int b, const CategoryParams& p) {
  return normalize(a, b, p.polygon_size);
}

bool is_admissible(Diagonal d, const CategoryParams& p);
/// Throws not_admissible when `d` is not admissible (or not normalized for p).
void require_admissible(Diagonal d, const CategoryParams& p);

bool crosses(Diagonal a, Diagonal b);
bool shares_endpoint(Diagonal a, Diagonal b);

/// Rotates both endpoints by `steps` (the suspension is steps = 1).
Diagonal suspend(Diagonal d, int steps, const CategoryParams& p);

/// tau = Sigma^{-(w+1)} in the orbit category.
Diagonal ar_translate(Diagonal d, const CategoryParams& p);

/// Length of the clockwise arc from vertex `from` to vertex `to`.
inline int arc(int from, int to, int n) { return ((to - from) % n + n) % n; }

/// "{lo,hi}"
std::string to_string(Diagonal d);

}  // namespace smw

template <>
struct std::hash<smw::Diagonal> {
  std::size_t operator()(const smw::Diagonal& d) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(d.lo) << 32) ^ d.hi);
  }
};
