#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "smw/workbench/cli.hpp"

using namespace smw;
using Json = nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Info) {
  const auto r = run({"info", "-e", "3", "-w", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"indecomposables\":15,\"polygon_size\":10,\"rank\":3,\"weight\":2}\n");
}

TEST(Cli, SmsList) {
  const auto r = run({"sms", "list", "-e", "2", "-w", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["count"], 15);
  EXPECT_EQ(Json::parse(r.out)["systems"].size(), 15u);
  EXPECT_EQ(run({"sms", "--rank", "2", "--weight", "3"}).out, r.out);
}

TEST(Cli, SmsCheck) {
  EXPECT_EQ(run({"sms", "check", "-e", "3", "-w", "2", "--system", "[[3,5],[1,6],[7,9]]"}).code, 0);
  const auto bad = run({"sms", "check", "-e", "3", "-w", "2", "--system", "[[3,5],[3,8],[7,9]]"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(Json::parse(bad.err)["code"], "not_sms");
}

TEST(Cli, Tilt) {
  const auto r = run({"tilt", "-e", "3", "-w", "2", "--left", "--system", "[[3,5],[1,6],[7,9]]",
                     "--at", "[[3,5]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["system"], Json::parse("[[1,6],[2,4],[7,9]]"));
  const auto right = run({"tilt", "-e", "3", "-w", "2", "--right", "--system",
                         "[[1,6],[2,4],[7,9]]", "--at", "[[2,4]]"});
  EXPECT_EQ(Json::parse(right.out)["system"], Json::parse("[[1,6],[3,5],[7,9]]"));
}

TEST(Cli, ClosureAndFormats) {
  const auto r = run({"closure", "-e", "3", "-w", "2", "--system", "[[3,5],[1,6],[7,9]]"});
  EXPECT_EQ(Json::parse(r.out)["members"], Json::parse("[[1,3],[1,6],[1,9],[3,5],[7,9]]"));
  const auto svg = run({"closure", "-e", "3", "-w", "2", "--system", "[[3,5],[1,6],[7,9]]",
                       "--format", "svg"});
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
  const auto dot = run({"tilt-graph", "-e", "2", "-w", "3", "--format", "dot"});
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  const auto ar = run({"ar-quiver", "-e", "3", "-w", "2", "--format", "dot"});
  EXPECT_NE(ar.out.find("d_3_5 -> d_3_8;"), std::string::npos);
  EXPECT_EQ(run({"diagonals", "-e", "2", "-w", "3", "--format", "svg"}).code, 0);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--suite", "all", "-e", "3", "-w", "2"});
  EXPECT_EQ(r.code, 0);
  for (const char* name :
       {"orthogonality", "cy-duality", "closure-golden", "tilt-round-trip", "oracle-agreement"}) {
    EXPECT_NE(r.out.find(std::string("PASS ") + name), std::string::npos) << name;
  }
  const auto j = run({"verify", "-e", "2", "-w", "2", "--format", "json"});
  EXPECT_EQ(Json::parse(j.out)["passed"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"info", "-e", "3"}).code, 2);
  EXPECT_EQ(run({"info", "-e", "3", "-w", "2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"info", "-e", "3", "-w", "2", "--format", "png"}).code, 2);
  EXPECT_EQ(run({"info", "-e", "3", "-w", "2", "--format", "dot"}).code, 2);
  EXPECT_EQ(run({"tilt", "-e", "3", "-w", "2", "--system", "[[3,5],[1,6],[7,9]]", "--at",
                 "[[3,5]]"})
                .code,
            2);
  EXPECT_EQ(run({"tilt", "-e", "3", "-w", "2", "--left", "--right", "--system",
                 "[[3,5],[1,6],[7,9]]", "--at", "[[3,5]]"})
                .code,
            2);
  EXPECT_EQ(run({"verify", "-e", "3", "-w", "2", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DomainErrors) {
  const auto r = run({"info", "-e", "0", "-w", "2"});
  EXPECT_EQ(r.code, 1);
  const Json err = Json::parse(r.err);
  EXPECT_EQ(err["code"], "parameter_error");
  EXPECT_TRUE(err.contains("message"));
  EXPECT_TRUE(err.contains("details"));
  EXPECT_EQ(Json::parse(run({"tilt-graph", "-e", "3", "-w", "1"}).err)["code"], "unsupported_weight");
  EXPECT_EQ(Json::parse(run({"closure", "-e", "3", "-w", "2", "--system", "[[0,4]]"}).err)["code"],
            "not_sms");
}

TEST(Cli, ByteStable) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"tilt-graph", "-e", "3", "-w", "2"},
           {"ar-quiver", "-e", "2", "-w", "3"},
           {"closure", "-e", "3", "-w", "2", "--system", "[[3,5],[1,6],[7,9]]"},
           {"verify", "-e", "2", "-w", "3", "--format", "json"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}
