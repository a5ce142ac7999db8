#include "smw/workbench/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "smw/ar_quiver.hpp"
#include "smw/error.hpp"
#include "smw/sms.hpp"
#include "smw/tilting.hpp"
#include "smw/workbench/export.hpp"
#include "smw/workbench/service.hpp"
#include "smw/workbench/verify.hpp"
#include "smw/workbench/wire.hpp"

namespace smw {

namespace {

struct UsageError {
  std::string message;
};

struct Options {
  int rank = 0;
  int weight = 0;
  std::string format = "json";
  std::string system;
  std::string at;
  std::string action = "list";
  std::string suite = "all";
  std::string host = "127.0.0.1";
  int port = 8080;
  bool left = false;
  bool right = false;
};

void need_format(const Options& o, std::initializer_list<const char*> allowed,
                 const std::string& command) {
  for (const char* a : allowed) {
    if (o.format == a) return;
  }
  throw UsageError{"--format " + o.format + " is not available for " + command};
}

void emit(std::ostream& out, const wire::Json& j) { out << wire::canonical(j) << '\n'; }

int run_verify(const Options& o, const CategoryParams& p, CLI::App* sub, std::ostream& out) {
  const auto results = run_suites(o.suite, p);
  bool passed = true;
  for (const auto& r : results) passed = passed && r.passed;
  if (sub->count("--format") > 0) {
    need_format(o, {"json"}, "verify");
    wire::Json list = wire::Json::array();
    for (const auto& r : results) list.push_back(to_json(r));
    emit(out, wire::Json{{"params", wire::params_json(p)}, {"passed", passed}, {"results", list}});
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " checked=" << r.checked
          << " failures=" << r.failures << '\n';
      for (const auto& s : r.samples) out << "    " << s << '\n';
    }
  }
  return passed ? 0 : 1;
}

int run_serve(const Options& o, std::ostream& err) {
  HttpService service;
  const int port = service.bind(o.host, o.port);
  if (port < 0) {
    err << "cannot bind " << o.host << ":" << o.port << '\n';
    return 1;
  }
  err << "listening on http://" << o.host << ":" << port << '\n';
  return service.listen() ? 0 : 1;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for simple minded systems in negative cluster categories", "smw"};
  app.require_subcommand(1);
  Options o;

  auto with_params = [&](CLI::App* sub) {
    sub->add_option("-e,--rank", o.rank, "rank e of A_e")->required();
    sub->add_option("-w,--weight", o.weight, "weight w")->required();
    sub->add_option("--format", o.format, "json, dot or svg")
        ->check(CLI::IsMember({"json", "dot", "svg"}));
    return sub;
  };
  auto* info = with_params(app.add_subcommand("info", "category summary"));
  auto* diagonals = with_params(app.add_subcommand("diagonals", "admissible diagonals"));
  auto* ar = with_params(app.add_subcommand("ar-quiver", "Auslander-Reiten quiver"));
  auto* sms = with_params(app.add_subcommand("sms", "list or check simple minded systems"));
  sms->add_option("action", o.action, "list (default) or check")
      ->check(CLI::IsMember({"list", "check"}));
  sms->add_option("--system", o.system, "system to check, e.g. [[3,5],[1,6],[7,9]]");
  auto* closure = with_params(app.add_subcommand("closure", "extension closure of a system"));
  closure->add_option("--system", o.system, "orthogonal collection")->required();
  auto* tilt_cmd = with_params(app.add_subcommand("tilt", "left or right tilt at a subset"));
  tilt_cmd->add_option("--system", o.system, "simple minded system")->required();
  tilt_cmd->add_option("--at", o.at, "pivot subset")->required();
  auto* left = tilt_cmd->add_flag("--left", o.left, "left tilt");
  auto* right = tilt_cmd->add_flag("--right", o.right, "right tilt");
  left->excludes(right);
  auto* graph = with_params(app.add_subcommand("tilt-graph", "left-tilting graph"));
  auto* verify = with_params(app.add_subcommand("verify", "run verification suites"));
  std::vector<std::string> suites = suite_names();
  suites.insert(suites.begin(), "all");
  verify->add_option("--suite", o.suite, "suite name or all")->check(CLI::IsMember(suites));
  auto* serve = app.add_subcommand("serve", "HTTP JSON service");
  serve->add_option("--port", o.port, "port (0 picks a free one)");
  serve->add_option("--host", o.host, "interface to bind");

  std::vector<const char*> argv = {"smw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (serve->parsed()) return run_serve(o, err);
    const CategoryParams p = make_category(o.rank, o.weight);
    if (info->parsed()) {
      need_format(o, {"json"}, "info");
      emit(out, wire::category_json(p));
    } else if (diagonals->parsed()) {
      need_format(o, {"json", "svg"}, "diagonals");
      if (o.format == "svg") {
        out << export_svg_polygon({p, "admissible diagonals", enumerate_indecomposables(p), {}});
      } else {
        emit(out, wire::diagonals_json(p));
      }
    } else if (ar->parsed()) {
      need_format(o, {"json", "dot"}, "ar-quiver");
      const ArQuiver q = build_ar_quiver(p);
      if (o.format == "dot") out << export_dot(dot_graph(q));
      else emit(out, wire::ar_quiver_json(q));
    } else if (sms->parsed()) {
      if (o.action == "check") {
        if (o.system.empty()) throw UsageError{"sms check needs --system"};
        const SimpleMindedSystem s = make_sms(wire::parse_diagonal_list(o.system, p), p);
        need_format(o, {"json", "svg"}, "sms check");
        if (o.format == "svg") {
          out << export_svg_polygon(picture_of(s));
        } else {
          emit(out, wire::Json{{"params", wire::params_json(p)},
                               {"system", wire::to_json(s.simples)},
                               {"is_sms", true},
                               {"orthogonal", check_orthogonality(s.simples, p)}});
        }
      } else {
        need_format(o, {"json"}, "sms list");
        emit(out, wire::sms_list_json(p, enumerate_sms(p)));
      }
    } else if (closure->parsed()) {
      need_format(o, {"json", "svg"}, "closure");
      const ClosureResult c = extension_closure(wire::parse_diagonal_list(o.system, p), p);
      if (o.format == "svg") out << export_svg_polygon(picture_of(c));
      else emit(out, wire::closure_json(c));
    } else if (tilt_cmd->parsed()) {
      if (!o.left && !o.right) throw UsageError{"tilt needs --left or --right"};
      need_format(o, {"json", "svg"}, "tilt");
      const SimpleMindedSystem s = make_sms(wire::parse_diagonal_list(o.system, p), p);
      const TiltMove move = tilt(s, wire::parse_diagonal_list(o.at, p),
                                 o.left ? TiltDirection::left : TiltDirection::right);
      if (o.format == "svg") out << export_svg_polygon(picture_of(move.result));
      else emit(out, wire::tilt_json(move));
    } else if (graph->parsed()) {
      need_format(o, {"json", "dot"}, "tilt-graph");
      const TiltingGraph g = tilting_graph(p);
      if (o.format == "dot") out << export_dot(dot_graph(g));
      else emit(out, wire::tilting_graph_json(g));
    } else if (verify->parsed()) {
      return run_verify(o, p, verify, out);
    }
    return 0;
  } catch (const UsageError& e) {
    err << e.message << '\n';
    return 2;
  } catch (const Error& e) {
    err << wire::canonical(wire::to_json(wire::from_exception(e))) << '\n';
    return 1;
  }
}

}  // namespace smw
