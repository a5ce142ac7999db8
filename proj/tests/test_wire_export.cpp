#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "smw/ar_quiver.hpp"
#include "smw/hom_ext.hpp"
#include "smw/workbench/export.hpp"
#include "smw/workbench/wire.hpp"

using namespace smw;
using wire::Json;

namespace {

const CategoryParams p32 = make_category(3, 2);

std::size_t count(const std::string& text, const std::regex& re) {
  return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
}

}  // namespace

TEST(Wire, DiagonalRoundTrip) {
  std::mt19937 rng(21);
  for (int i = 0; i < 500; ++i) {
    const int a = rng() % 10, b = rng() % 10;
    if (a == b) continue;
    const Diagonal d = normalize(a, b, p32);
    EXPECT_EQ(wire::diagonal_from_json(Json::parse(wire::canonical(wire::to_json(d))), p32), d);
  }
}

TEST(Wire, DiagonalListsAreSorted) {
  const std::vector<Diagonal> ds = {{7, 9}, {1, 6}, {3, 5}};
  EXPECT_EQ(wire::canonical(wire::to_json(ds)), "[[1,6],[3,5],[7,9]]");
  EXPECT_EQ(wire::parse_diagonal_list("[[9,7],[3,5],[6,1]]", p32),
            (std::vector<Diagonal>{{1, 6}, {3, 5}, {7, 9}}));
}

TEST(Wire, DiagonalParseErrors) {
  for (const char* bad : {"[[1,2,3]]", "[[1,1]]", "[[0,10]]", "[[-1,3]]", "[[1,\"a\"]]", "[1,2]",
                          "{\"a\":1}", "not json"}) {
    try {
      wire::parse_diagonal_list(bad, p32);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::parameter_error) << bad;
    }
  }
}

TEST(Wire, ApiErrorRoundTrip) {
  for (auto code : {ErrorCode::parameter_error, ErrorCode::not_admissible, ErrorCode::not_sms,
                    ErrorCode::tilt_rule_incomplete, ErrorCode::unsupported_weight}) {
    const wire::ApiError e{code, "message", Json{{"where", Json::array({1, 2})}}};
    EXPECT_EQ(wire::api_error_from_json(Json::parse(wire::canonical(wire::to_json(e)))), e);
  }
  EXPECT_THROW(wire::api_error_from_json(Json{{"code", "nope"}, {"message", "x"}}), Error);
}

TEST(Wire, CanonicalKeysSorted) {
  EXPECT_EQ(wire::canonical(wire::category_json(p32)),
            R"({"indecomposables":15,"polygon_size":10,"rank":3,"weight":2})");
}

TEST(Wire, ClosureDocument) {
  const std::vector<Diagonal> seed = {{1, 6}, {3, 5}, {7, 9}};
  const Json j = wire::closure_json(extension_closure(seed, p32));
  EXPECT_EQ(j["members"], Json::parse("[[1,3],[1,6],[1,9],[3,5],[7,9]]"));
  EXPECT_EQ(j["simples"], Json::parse("[[1,6],[3,5],[7,9]]"));
  EXPECT_EQ(j["extensions"].size(), 2u);
  EXPECT_EQ(j["detail"].size(), 5u);
}

TEST(Wire, TiltDocument) {
  const auto s = make_sms({{3, 5}, {1, 6}, {7, 9}}, p32);
  const Json j = wire::tilt_json(left_tilt(s, std::vector<Diagonal>{{1, 6}}));
  EXPECT_EQ(j["system"], Json::parse("[[0,5],[1,3],[7,9]]"));
  EXPECT_EQ(j["direction"], "left");
  EXPECT_EQ(j["log"].size(), 3u);
}

TEST(Dot, StableIds) {
  EXPECT_EQ(dot_id(Diagonal{3, 5}), "d_3_5");
  const auto s = make_sms({{3, 5}, {1, 6}, {7, 9}}, p32);
  const std::string id = dot_id(s);
  EXPECT_EQ(id.size(), 4u + 16u);
  EXPECT_EQ(id.rfind("sms_", 0), 0u);
  EXPECT_EQ(dot_id(make_sms({{7, 9}, {1, 6}, {3, 5}}, p32)), id);
}

TEST(Dot, TiltingGraphRankTwoWeightThree) {
  const std::string text = export_dot(dot_graph(tilting_graph(make_category(2, 3))));
  EXPECT_EQ(count(text, std::regex(R"(\n  sms_[0-9a-f]{16} \[label=)")), 15u);
  EXPECT_EQ(count(text, std::regex(R"(\n  sms_[0-9a-f]{16} -> sms_[0-9a-f]{16})")), 30u);
}

TEST(Dot, ArQuiver) {
  const std::string text = export_dot(dot_graph(build_ar_quiver(p32)));
  EXPECT_NE(text.find("d_0_5 -> d_0_8;"), std::string::npos);
  EXPECT_EQ(count(text, std::regex("->")), 20u);
}

TEST(Dot, EmptyGraph) { EXPECT_EQ(export_dot(DotGraph{}), "digraph G {\n}\n"); }

TEST(Svg, BaseSystem) {
  const auto s = make_sms({{3, 5}, {1, 6}, {7, 9}}, p32);
  const std::string svg = export_svg_polygon(picture_of(s));
  EXPECT_EQ(count(svg, std::regex("<circle class=\"vertex\"")), 10u);
  EXPECT_EQ(count(svg, std::regex("<line class=\"solid\"")), 3u);
  EXPECT_EQ(count(svg, std::regex("<line class=\"dashed\"")), 0u);
  for (const char* d : {"3-5", "1-6", "7-9"}) {
    EXPECT_NE(svg.find(std::string("data-diagonal=\"") + d + "\""), std::string::npos);
  }
  // vertex 0 at the top, vertex 1 clockwise from it
  EXPECT_NE(svg.find("cx=\"200.00\" cy=\"50.00\""), std::string::npos);
  EXPECT_NE(svg.find(">9</text>"), std::string::npos);
}

TEST(Svg, ClosureAndTriangle) {
  const std::vector<Diagonal> seed = {{1, 6}, {3, 5}, {7, 9}};
  const std::string closure = export_svg_polygon(picture_of(extension_closure(seed, p32)));
  EXPECT_EQ(count(closure, std::regex("<line class=\"solid\"")), 3u);
  EXPECT_EQ(count(closure, std::regex("<line class=\"dashed\"")), 2u);
  const std::string tri = export_svg_polygon(picture_of(ext_triangle({1, 6}, {3, 5}, p32), p32));
  EXPECT_EQ(count(tri, std::regex("<line class=\"dashed\"")), 1u);
  EXPECT_NE(tri.find("data-diagonal=\"1-3\""), std::string::npos);
}
