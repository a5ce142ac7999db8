#include <gtest/gtest.h>

#include "smw/error.hpp"
#include "smw/hom_ext.hpp"
#include "smw/tilting.hpp"

using namespace smw;

namespace {

const CategoryParams p32 = make_category(3, 2);
const SimpleMindedSystem base_sms = make_sms({{3, 5}, {1, 6}, {7, 9}}, p32);

std::vector<Diagonal> one(Diagonal d) { return {d}; }

std::vector<Diagonal> shifted(const std::vector<Diagonal>& ds, int k, const CategoryParams& p) {
  std::vector<Diagonal> out;
  for (const auto& d : ds) out.push_back(suspend(d, k, p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(LeftTilt, Examples) {
  EXPECT_EQ(left_tilt(base_sms, one({3, 5})).result.simples,
            (std::vector<Diagonal>{{1, 6}, {2, 4}, {7, 9}}));
  EXPECT_EQ(left_tilt(base_sms, one({1, 6})).result.simples,
            (std::vector<Diagonal>{{0, 5}, {1, 3}, {7, 9}}));
  EXPECT_EQ(left_tilt(base_sms, base_sms.simples).result.simples, shifted(base_sms.simples, -1, p32));
}

TEST(RightTilt, Examples) {
  const auto a = make_sms({{1, 3}, {0, 5}, {7, 9}}, p32);
  EXPECT_EQ(right_tilt(a, one({0, 5})).result, base_sms);
  const auto b = make_sms({{2, 4}, {1, 6}, {7, 9}}, p32);
  EXPECT_EQ(right_tilt(b, one({2, 4})).result, base_sms);
  EXPECT_EQ(right_tilt(base_sms, base_sms.simples).result.simples, shifted(base_sms.simples, 1, p32));
}

TEST(Tilt, Log) {
  const TiltMove m = left_tilt(base_sms, one({1, 6}));
  ASSERT_EQ(m.log.size(), 3u);
  EXPECT_EQ(m.log[0].before, (Diagonal{1, 6}));
  EXPECT_EQ(m.log[0].action, SimpleAction::shifted);
  EXPECT_EQ(m.log[1].before, (Diagonal{3, 5}));
  EXPECT_EQ(m.log[1].action, SimpleAction::replaced);
  ASSERT_EQ(m.log[1].replacements.size(), 1u);
  EXPECT_EQ(m.log[1].replacements[0].old_endpoint, 5);
  EXPECT_EQ(m.log[1].replacements[0].new_endpoint, 1);
  EXPECT_EQ(m.log[1].replacements[0].via, (Diagonal{1, 6}));
  EXPECT_EQ(m.log[2].action, SimpleAction::unchanged);
  EXPECT_EQ(m.pivot, one({1, 6}));
  EXPECT_EQ(m.direction, TiltDirection::left);
}

TEST(Tilt, Errors) {
  try {
    left_tilt(base_sms, one({2, 4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parameter_error);
  }
  const auto p31 = make_category(3, 1);
  const SimpleMindedSystem w1{{{0, 1}, {2, 3}, {4, 5}}, p31};
  try {
    left_tilt(w1, one({0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported_weight);
  }
  const SimpleMindedSystem broken{{{1, 6}, {3, 5}, {3, 8}}, p32};
  try {
    left_tilt(broken, one({1, 6}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_sms);
  }
}

TEST(Tilt, SubsetUsesExtensionsOfThePivot) {
  // <{3,5},{6,8}> contains {3,8}; {0,2} trades 2 for 8, not for 5
  const auto s = make_sms({{0, 2}, {3, 5}, {6, 8}}, p32);
  const TiltMove m = left_tilt(s, std::vector<Diagonal>{{3, 5}, {6, 8}});
  EXPECT_EQ(m.result.simples, (std::vector<Diagonal>{{0, 8}, {2, 4}, {5, 7}}));
  EXPECT_EQ(m.log[0].replacements[0].via, (Diagonal{3, 8}));
}

TEST(TiltTorsion, BaseSystemLeftAtOneSimple) {
  const TiltTheoremReport r = verify_tilt_theorem(base_sms, one({3, 5}), TiltDirection::left);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_EQ(r.split.torsion, one({3, 5}));
  EXPECT_EQ(r.split.torsion_free, (std::vector<Diagonal>{{1, 6}, {1, 9}, {7, 9}}));
  EXPECT_EQ(r.torsion_free, one({2, 4}));
  EXPECT_EQ(r.tilted_closure.members,
            (std::vector<Diagonal>{{1, 6}, {1, 9}, {2, 4}, {4, 6}, {4, 9}, {7, 9}}));
  EXPECT_EQ(r.extensions.at({4, 6}), (Filtration{{1, 6}, {2, 4}}));
  EXPECT_TRUE(r.unaccounted.empty());
}

TEST(TiltTorsion, PivotEqualsSystem) {
  const TiltTheoremReport r = verify_tilt_theorem(base_sms, base_sms.simples, TiltDirection::left);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.tilted_closure.members, shifted(r.source_closure.members, -1, p32));
}

TEST(TiltTorsion, ExhaustiveBothDirections) {
  for (const auto& p : {make_category(2, 2), make_category(3, 2), make_category(2, 3)}) {
    for (const auto& s : enumerate_sms(p)) {
      for (int mask = 1; mask < (1 << p.rank); ++mask) {
        std::vector<Diagonal> pivot;
        for (int i = 0; i < p.rank; ++i) {
          if (mask >> i & 1) pivot.push_back(s.simples[i]);
        }
        for (auto dir : {TiltDirection::left, TiltDirection::right}) {
          const auto r = verify_tilt_theorem(s, pivot, dir);
          EXPECT_TRUE(r.ok()) << to_string(dir) << " " << r.failures.front();
        }
      }
    }
  }
}

TEST(Gabriel, BaseSystemIsLinearPath) {
  const auto a = gabriel_quiver(base_sms);
  // sorted simples: {1,6}, {3,5}, {7,9}
  const std::vector<std::vector<int>> expected = {{0, 0, 1}, {1, 0, 0}, {0, 0, 0}};
  EXPECT_EQ(a, expected);
}

TEST(Gabriel, SingleSimple) {
  const auto p = make_category(1, 2);
  const auto s = make_sms({{0, 2}}, p);
  EXPECT_EQ(gabriel_quiver(s), (std::vector<std::vector<int>>{{hom_dim({0, 2}, 1, {0, 2}, p)}}));
}

TEST(Gabriel, SuspensionInvariant) {
  for (const auto& s : enumerate_sms(p32)) {
    const auto moved = make_sms(shifted(s.simples, 1, p32), p32);
    const auto a = gabriel_quiver(s);
    const auto b = gabriel_quiver(moved);
    auto at = [&](Diagonal d) {
      return std::find(moved.simples.begin(), moved.simples.end(), d) - moved.simples.begin();
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        EXPECT_EQ(a[i][j], b[at(suspend(s.simples[i], 1, p32))][at(suspend(s.simples[j], 1, p32))]);
      }
    }
  }
}

TEST(TiltingGraph, RankTwoWeightThree) {
  const TiltingGraph g = tilting_graph(make_category(2, 3));
  EXPECT_EQ(g.nodes.size(), 15u);
  EXPECT_EQ(g.edges.size(), 30u);
  EXPECT_EQ(weakly_connected_components(g).size(), 1u);
  for (const auto& e : g.edges) {
    // every left edge is undone by a right tilt at the shifted pivot
    const Diagonal back = suspend(e.pivot, -1, g.params);
    EXPECT_EQ(right_tilt(g.nodes[e.target], one(back)).result, g.nodes[e.source]);
  }
  EXPECT_EQ(g.index_of(g.nodes[7]), 7);
}

TEST(TiltingGraph, OutDegree) {
  const TiltingGraph g = tilting_graph(p32);
  std::vector<int> out(g.nodes.size());
  for (const auto& e : g.edges) ++out[e.source];
  for (int d : out) EXPECT_EQ(d, 3);
}
