#include "smw/workbench/wire.hpp"

#include <algorithm>
#include <array>

#include "smw/workbench/export.hpp"

namespace smw::wire {

namespace {

constexpr std::array kCodes = {ErrorCode::parameter_error, ErrorCode::not_admissible,
                               ErrorCode::not_sms, ErrorCode::tilt_rule_incomplete,
                               ErrorCode::unsupported_weight};

[[noreturn]] void bad_input(const std::string& what) {
  throw Error(ErrorCode::parameter_error, what);
}

Json filtration_json(const Filtration& f) {
  return Json{{"sub", to_json(f.sub)}, {"quotient", to_json(f.quotient)}};
}

}  // namespace

ApiError from_exception(const Error& error, Json details) {
  return ApiError{error.code(), error.what(), std::move(details)};
}

Json to_json(const ApiError& error) {
  return Json{{"code", std::string(to_string(error.code))},
              {"message", error.message},
              {"details", error.details}};
}

ErrorCode error_code_from_string(std::string_view name) {
  for (ErrorCode code : kCodes) {
    if (to_string(code) == name) return code;
  }
  bad_input("unknown error code '" + std::string(name) + "'");
}

ApiError api_error_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("code") || !j.contains("message") ||
      !j["code"].is_string() || !j["message"].is_string()) {
    bad_input("an error needs string fields code and message");
  }
  ApiError out;
  out.code = error_code_from_string(j["code"].get<std::string>());
  out.message = j["message"].get<std::string>();
  out.details = j.value("details", Json::object());
  return out;
}

Json to_json(Diagonal d) { return Json::array({d.lo, d.hi}); }

Json to_json(std::span<const Diagonal> ds) {
  std::vector<Diagonal> sorted(ds.begin(), ds.end());
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (const auto& d : sorted) out.push_back(to_json(d));
  return out;
}

Diagonal diagonal_from_json(const Json& j, const CategoryParams& p) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    bad_input("a diagonal is a two-element integer array, got " + j.dump());
  }
  const long a = j[0].get<long>();
  const long b = j[1].get<long>();
  const long n = p.polygon_size;
  if (a < 0 || b < 0 || a >= n || b >= n) {
    bad_input("diagonal " + j.dump() + " has a vertex outside [0, " + std::to_string(n) + ")");
  }
  if (a == b) bad_input("diagonal " + j.dump() + " has equal endpoints");
  return normalize(static_cast<int>(a), static_cast<int>(b), p);
}

std::vector<Diagonal> diagonals_from_json(const Json& j, const CategoryParams& p) {
  if (!j.is_array()) bad_input("expected an array of diagonals, got " + j.dump());
  std::vector<Diagonal> out;
  for (const auto& item : j) out.push_back(diagonal_from_json(item, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagonal> parse_diagonal_list(const std::string& text, const CategoryParams& p) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad_input("cannot parse diagonal list '" + text + "'");
  return diagonals_from_json(j, p);
}

Json params_json(const CategoryParams& p) {
  return Json{{"rank", p.rank}, {"weight", p.weight}, {"polygon_size", p.polygon_size}};
}

Json category_json(const CategoryParams& p) {
  Json out = params_json(p);
  out["indecomposables"] = enumerate_indecomposables(p).size();
  return out;
}

Json diagonals_json(const CategoryParams& p) {
  const auto all = enumerate_indecomposables(p);
  return Json{{"params", params_json(p)}, {"count", all.size()}, {"diagonals", to_json(all)}};
}

Json ar_quiver_json(const ArQuiver& q) {
  Json arrows = Json::array();
  for (const auto& [a, b] : q.arrows) arrows.push_back(Json::array({to_json(a), to_json(b)}));
  Json translate = Json::array();
  for (const auto& [d, t] : q.translate) translate.push_back(Json::array({to_json(d), to_json(t)}));
  return Json{{"params", params_json(q.params)},
              {"vertices", to_json(q.vertices)},
              {"arrows", arrows},
              {"translate", translate}};
}

Json sms_list_json(const CategoryParams& p, std::span<const SimpleMindedSystem> systems) {
  Json list = Json::array();
  for (const auto& s : systems) list.push_back(to_json(s.simples));
  return Json{{"params", params_json(p)}, {"count", systems.size()}, {"systems", list}};
}

Json closure_json(const ClosureResult& closure) {
  Json detail = Json::array();
  Json extensions = Json::array();
  for (const auto& m : closure.members) {
    Json factors = Json::array();
    for (const auto& [simple, count] : closure.factors.at(m)) {
      factors.push_back(Json{{"simple", to_json(simple)}, {"count", count}});
    }
    const auto& record = closure.records.at(m);
    detail.push_back(Json{{"diagonal", to_json(m)},
                          {"depth", closure.depth.at(m)},
                          {"factors", factors},
                          {"filtration", record ? filtration_json(*record) : Json(nullptr)}});
    if (record) {
      Json e = filtration_json(*record);
      e["member"] = to_json(m);
      extensions.push_back(e);
    }
  }
  return Json{{"params", params_json(closure.params)},
              {"system", to_json(closure.seed)},
              {"members", to_json(closure.members)},
              {"simples", to_json(simples_of_closure(closure))},
              {"extensions", extensions},
              {"detail", detail}};
}

Json tilt_json(const TiltMove& move) {
  Json log = Json::array();
  for (const auto& step : move.log) {
    Json replacements = Json::array();
    for (const auto& r : step.replacements) {
      replacements.push_back(Json{{"old_endpoint", r.old_endpoint},
                                  {"new_endpoint", r.new_endpoint},
                                  {"via", to_json(r.via)}});
    }
    log.push_back(Json{{"before", to_json(step.before)},
                       {"after", to_json(step.after)},
                       {"action", to_string(step.action)},
                       {"replacements", replacements}});
  }
  return Json{{"params", params_json(move.source.params)},
              {"direction", to_string(move.direction)},
              {"pivot", to_json(move.pivot)},
              {"source", to_json(move.source.simples)},
              {"system", to_json(move.result.simples)},
              {"log", log}};
}

Json tilting_graph_json(const TiltingGraph& graph) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    nodes.push_back(Json{{"index", i},
                         {"id", dot_id(graph.nodes[i])},
                         {"system", to_json(graph.nodes[i].simples)}});
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    edges.push_back(Json{{"source", e.source},
                         {"target", e.target},
                         {"direction", to_string(e.direction)},
                         {"pivot", to_json(e.pivot)}});
  }
  const auto components = weakly_connected_components(graph);
  return Json{{"params", params_json(graph.params)},
              {"node_count", graph.nodes.size()},
              {"edge_count", graph.edges.size()},
              {"components", components.size()},
              {"weakly_connected", components.size() <= 1},
              {"nodes", nodes},
              {"edges", edges}};
}

std::string canonical(const Json& j) { return j.dump(); }

std::string pretty(const Json& j) { return j.dump(2); }

}  // namespace smw::wire
