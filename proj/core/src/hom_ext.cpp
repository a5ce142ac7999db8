#include "smw/hom_ext.hpp"

#include <algorithm>

#include "smw/error.hpp"

namespace smw {

namespace {

// The endpoint of `s` met first when walking counterclockwise from vertex x.
int first_counterclockwise(int x, Diagonal s, int n) {
  return arc(s.lo, x, n) < arc(s.hi, x, n) ? s.lo : s.hi;
}

}  // namespace

const char* to_string(ExtKind kind) {
  switch (kind) {
    case ExtKind::none:
      return "none";
    case ExtKind::adjacent:
      return "adjacent";
    case ExtKind::crossing:
      return "crossing";
    case ExtKind::shift:
      return "shift";
  }
  return "none";
}

ExtCase ext_case(Diagonal s_prime, Diagonal s, const CategoryParams& p) {
  require_admissible(s_prime, p);
  require_admissible(s, p);
  const int n = p.polygon_size;
  ExtCase out;

  if (suspend(s_prime, -1, p) == s) {
    out.kind = ExtKind::shift;
    return out;
  }
  if (crosses(s_prime, s)) {
    // Each endpoint of s' must reach an endpoint of s by moving counterclockwise
    // a multiple of w + 1 steps; the two walks end at different endpoints.
    const int step = p.weight + 1;
    const int from_lo = first_counterclockwise(s_prime.lo, s, n);
    const int from_hi = first_counterclockwise(s_prime.hi, s, n);
    if (from_lo != from_hi && arc(from_lo, s_prime.lo, n) % step == 0 &&
        arc(from_hi, s_prime.hi, n) % step == 0) {
      out.kind = ExtKind::crossing;
      out.matching = {{{s_prime.lo, from_lo}, {s_prime.hi, from_hi}}};
    }
    return out;
  }
  if (shares_endpoint(s_prime, s)) return out;
  for (int x : {s_prime.lo, s_prime.hi}) {
    const int before = wrap(x - 1, n);
    if (s.has_endpoint(before)) {
      out.kind = ExtKind::adjacent;
      out.target_endpoint = x;
      out.through_endpoint = before;
      return out;
    }
  }
  return out;
}

int hom_dim_neg1(Diagonal s_prime, Diagonal s, const CategoryParams& p) {
  return ext_case(s_prime, s, p).kind == ExtKind::none ? 0 : 1;
}

int hom_dim(Diagonal x, int shift, Diagonal y, const CategoryParams& p) {
  // C(x, S^l y) = C(S^{-1}(S x), S^l y)
  require_admissible(x, p);
  require_admissible(y, p);
  return hom_dim_neg1(suspend(x, 1, p), suspend(y, shift, p), p);
}

std::vector<Diagonal> middle_term(Diagonal s_prime, Diagonal s, const CategoryParams& p) {
  const ExtCase c = ext_case(s_prime, s, p);
  switch (c.kind) {
    case ExtKind::none:
      throw Error(ErrorCode::parameter_error, "no nonzero morphism S^-1 " + to_string(s_prime) +
                                                  " -> " + to_string(s));
    case ExtKind::shift:
      return {};
    case ExtKind::adjacent:
      return {normalize(s.other(c.through_endpoint), s_prime.other(c.target_endpoint), p)};
    case ExtKind::crossing: {
      const std::array<std::array<Diagonal, 2>, 2> resolutions{{
          {normalize(s_prime.lo, s.lo, p), normalize(s_prime.hi, s.hi, p)},
          {normalize(s_prime.lo, s.hi, p), normalize(s_prime.hi, s.lo, p)},
      }};
      for (const auto& r : resolutions) {
        if (is_admissible(r[0], p) && is_admissible(r[1], p)) {
          std::vector<Diagonal> out{r[0], r[1]};
          std::sort(out.begin(), out.end());
          return out;
        }
      }
      throw Error(ErrorCode::not_admissible, "crossing of " + to_string(s_prime) + " and " +
                                                 to_string(s) + " has no admissible resolution");
    }
  }
  return {};
}

ExtTriangle ext_triangle(Diagonal s_prime, Diagonal s, const CategoryParams& p) {
  ExtTriangle t;
  t.shifted_source = suspend(s_prime, -1, p);
  t.through = s;
  t.target = s_prime;
  t.kind = ext_case(s_prime, s, p).kind;
  t.middle = middle_term(s_prime, s, p);
  return t;
}

std::pair<int, int> cy_pairing_dims(Diagonal x, Diagonal y, const CategoryParams& p) {
  return {hom_dim(x, -p.weight, y, p), hom_dim(y, 0, x, p)};
}

}  // namespace smw
