#include "smw/ar_quiver.hpp"

#include <algorithm>

namespace smw {

std::vector<Diagonal> enumerate_indecomposables(const CategoryParams& p) {
  std::vector<Diagonal> out;
  for (int lo = 0; lo < p.polygon_size; ++lo) {
    for (int hi = lo + 1; hi < p.polygon_size; ++hi) {
      if (is_admissible(Diagonal{lo, hi}, p)) out.push_back(Diagonal{lo, hi});
    }
  }
  return out;
}

std::vector<Diagonal> irreducible_targets(Diagonal d, const CategoryParams& p) {
  require_admissible(d, p);
  const int n = p.polygon_size;
  const int step = p.weight + 1;
  std::vector<Diagonal> out;
  for (const auto& [fixed, moving] : {std::pair{d.lo, d.hi}, std::pair{d.hi, d.lo}}) {
    // A move onto or past the fixed endpoint is no diagonal at all.
    if (arc(fixed, moving, n) + step >= n) continue;
    out.push_back(normalize(fixed, moving + step, p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ArQuiver build_ar_quiver(const CategoryParams& p) {
  ArQuiver q;
  q.params = p;
  q.vertices = enumerate_indecomposables(p);
  for (const auto& v : q.vertices) {
    for (const auto& t : irreducible_targets(v, p)) q.arrows.emplace_back(v, t);
    q.translate[v] = ar_translate(v, p);
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

}  // namespace smw
