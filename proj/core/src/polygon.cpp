#include "smw/polygon.hpp"

#include <sstream>
#include <utility>

#include "smw/error.hpp"

namespace smw {

CategoryParams make_category(int rank, int weight) {
  if (rank < 1 || weight < 1) {
    std::ostringstream msg;
    msg << "rank and weight must be >= 1 (got rank=" << rank << ", weight=" << weight << ")";
    throw Error(ErrorCode::parameter_error, msg.str());
  }
  return CategoryParams{rank, weight, (weight + 1) * (rank + 1) - 2};
}

void require_theorem_weight(const CategoryParams& params) {
  if (params.weight < 2) {
    throw Error(ErrorCode::unsupported_weight,
                "operation requires weight >= 2 (w = 1 is a model-only parameter)");
  }
}

int wrap(int v, int n) { return ((v % n) + n) % n; }

Diagonal normalize(int a, int b, int polygon_size) {
  if (polygon_size < 2) {
    throw Error(ErrorCode::parameter_error, "polygon needs at least two vertices");
  }
  a = wrap(a, polygon_size);
  b = wrap(b, polygon_size);
  if (a == b) {
    throw Error(ErrorCode::parameter_error,
                "degenerate diagonal: both endpoints are vertex " + std::to_string(a));
  }
  if (a > b) std::swap(a, b);
  return Diagonal{a, b};
}

bool is_admissible(Diagonal d, const CategoryParams& p) {
  if (d.lo < 0 || d.lo >= d.hi || d.hi >= p.polygon_size) return false;
  return (d.hi - d.lo) % (p.weight + 1) == p.weight;
}

void require_admissible(Diagonal d, const CategoryParams& p) {
  if (!is_admissible(d, p)) {
    throw Error(ErrorCode::not_admissible,
                "diagonal " + to_string(d) + " is not admissible for N=" +
                    std::to_string(p.polygon_size) + ", w=" + std::to_string(p.weight));
  }
}

bool crosses(Diagonal a, Diagonal b) {
  if (shares_endpoint(a, b)) return false;
  const bool lo_inside = a.lo < b.lo && b.lo < a.hi;
  const bool hi_inside = a.lo < b.hi && b.hi < a.hi;
  return lo_inside != hi_inside;
}

bool shares_endpoint(Diagonal a, Diagonal b) {
  return a.has_endpoint(b.lo) || a.has_endpoint(b.hi);
}

Diagonal suspend(Diagonal d, int steps, const CategoryParams& p) {
  return normalize(d.lo + steps, d.hi + steps, p);
}

Diagonal ar_translate(Diagonal d, const CategoryParams& p) {
  return suspend(d, -(p.weight + 1), p);
}

std::string to_string(Diagonal d) {
  return "{" + std::to_string(d.lo) + "," + std::to_string(d.hi) + "}";
}

}  // namespace smw
