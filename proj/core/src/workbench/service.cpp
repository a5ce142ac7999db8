#include "smw/workbench/service.hpp"

#include <httplib.h>

#include <charconv>
#include <optional>

#include "smw/ar_quiver.hpp"
#include "smw/error.hpp"
#include "smw/hom_ext.hpp"
#include "smw/sms.hpp"
#include "smw/tilting.hpp"
#include "smw/workbench/export.hpp"
#include "smw/workbench/verify.hpp"
#include "smw/workbench/wire.hpp"

namespace smw {

namespace {

using wire::Json;

// Raised for bodies that are not the documented shape (HTTP 422).
struct MalformedBody {
  std::string message;
};

// Raised for unknown routes (HTTP 404).
struct NoRoute {
  std::string message;
};

HttpResponse json_response(int status, const Json& body) {
  return HttpResponse{status, "application/json", wire::canonical(body) + "\n"};
}

HttpResponse error_response(int status, ErrorCode code, const std::string& message,
                            Json details) {
  return json_response(status, wire::to_json(wire::ApiError{code, message, std::move(details)}));
}

std::optional<int> to_int(const std::string& text) {
  int v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  return v;
}

class Call {
 public:
  explicit Call(const HttpRequest& r) : req_(r) {
    echo_ = Json{{"method", r.method}, {"path", r.path}, {"query", Json::object()}};
    for (const auto& [k, v] : r.query) echo_["query"][k] = v;
    if (r.method == "POST") {
      body_ = Json::parse(r.body, nullptr, false);
      if (body_.is_discarded() || !body_.is_object()) {
        throw MalformedBody{"request body is not a JSON object"};
      }
      echo_["body"] = body_;
    }
  }

  const Json& echo() const { return echo_; }

  std::string query(const std::string& key, const std::string& fallback) const {
    auto it = req_.query.find(key);
    return it == req_.query.end() ? fallback : it->second;
  }

  CategoryParams params() const { return make_category(integer("e"), integer("w")); }

  const Json& field(const std::string& key) const {
    if (!body_.contains(key)) throw MalformedBody{"request body lacks \"" + key + "\""};
    return body_[key];
  }

  std::vector<Diagonal> diagonals(const std::string& key, const CategoryParams& p) const {
    const Json& j = field(key);
    bool shaped = j.is_array();
    for (const auto& d : j) {
      shaped = shaped && d.is_array() && d.size() == 2 && d[0].is_number_integer() &&
               d[1].is_number_integer();
    }
    if (!shaped) throw MalformedBody{"\"" + key + "\" must be a list of [lo, hi] integer pairs"};
    return wire::diagonals_from_json(j, p);
  }

 private:
  int integer(const std::string& key) const {
    if (!body_.is_discarded() && body_.is_object() && body_.contains(key)) {
      if (!body_[key].is_number_integer()) throw MalformedBody{"\"" + key + "\" must be an integer"};
      return body_[key].get<int>();
    }
    auto it = req_.query.find(key);
    if (it == req_.query.end()) {
      throw Error(ErrorCode::parameter_error, "missing category parameter '" + key + "'");
    }
    if (auto v = to_int(it->second)) return *v;
    throw Error(ErrorCode::parameter_error, "parameter '" + key + "' is not an integer");
  }

  const HttpRequest& req_;
  Json echo_;
  Json body_ = Json(nullptr);
};

HttpResponse respond(const Call& call, Json body) {
  body["request"] = call.echo();
  return json_response(200, body);
}

HttpResponse svg(const PolygonPicture& pic) {
  return HttpResponse{200, "image/svg+xml", export_svg_polygon(pic)};
}

HttpResponse dot(const DotGraph& g) { return HttpResponse{200, "text/vnd.graphviz", export_dot(g)}; }

std::string format_of(const Call& call, std::initializer_list<const char*> allowed) {
  const std::string format = call.query("format", "json");
  for (const char* a : allowed) {
    if (format == a) return format;
  }
  throw Error(ErrorCode::parameter_error, "format '" + format + "' is not offered here");
}

HttpResponse route(const HttpRequest& req, const Call& call) {
  const std::string& path = req.path;
  if (req.method == "GET") {
    if (path == "/category") {
      const CategoryParams p = call.params();
      if (format_of(call, {"json", "svg"}) == "svg") return svg({p, "polygon", {}, {}});
      return respond(call, wire::category_json(p));
    }
    if (path == "/diagonals") {
      const CategoryParams p = call.params();
      if (format_of(call, {"json", "svg"}) == "svg") {
        return svg({p, "admissible diagonals", enumerate_indecomposables(p), {}});
      }
      return respond(call, wire::diagonals_json(p));
    }
    if (path == "/ar-quiver") {
      const ArQuiver q = build_ar_quiver(call.params());
      if (format_of(call, {"json", "dot"}) == "dot") return dot(dot_graph(q));
      return respond(call, wire::ar_quiver_json(q));
    }
    if (path == "/sms") {
      const CategoryParams p = call.params();
      const auto systems = enumerate_sms(p);
      if (format_of(call, {"json", "svg"}) == "svg") {
        const auto index = to_int(call.query("index", "0"));
        if (!index || *index < 0 || *index >= static_cast<int>(systems.size())) {
          throw Error(ErrorCode::parameter_error, "index out of range");
        }
        return svg(picture_of(systems[*index]));
      }
      return respond(call, wire::sms_list_json(p, systems));
    }
    if (path == "/tilting-graph") {
      const TiltingGraph g = tilting_graph(call.params());
      if (format_of(call, {"json", "dot"}) == "dot") return dot(dot_graph(g));
      return respond(call, wire::tilting_graph_json(g));
    }
    if (path == "/verify") {
      const CategoryParams p = call.params();
      const std::string suite = call.query("suite", "all");
      if (suite != "all" && !is_suite_name(suite)) {
        throw Error(ErrorCode::parameter_error, "unknown suite '" + suite + "'");
      }
      Json results = Json::array();
      bool passed = true;
      for (const auto& r : run_suites(suite, p)) {
        results.push_back(to_json(r));
        passed = passed && r.passed;
      }
      return respond(call, Json{{"params", wire::params_json(p)},
                                {"passed", passed},
                                {"results", results}});
    }
  } else if (req.method == "POST") {
    if (path == "/closure") {
      const CategoryParams p = call.params();
      const ClosureResult closure = extension_closure(call.diagonals("system", p), p);
      if (format_of(call, {"json", "svg"}) == "svg") return svg(picture_of(closure));
      return respond(call, wire::closure_json(closure));
    }
    if (path == "/tilt") {
      const CategoryParams p = call.params();
      const SimpleMindedSystem system = make_sms(call.diagonals("system", p), p);
      const auto pivot = call.diagonals("pivot", p);
      const Json& dir = call.field("direction");
      if (!dir.is_string() || (dir != "left" && dir != "right")) {
        throw MalformedBody{"\"direction\" must be \"left\" or \"right\""};
      }
      const TiltMove move =
          tilt(system, pivot, dir == "left" ? TiltDirection::left : TiltDirection::right);
      if (format_of(call, {"json", "svg"}) == "svg") return svg(picture_of(move.result));
      return respond(call, wire::tilt_json(move));
    }
    if (path == "/torsion") {
      const CategoryParams p = call.params();
      const SimpleMindedSystem system = make_sms(call.diagonals("system", p), p);
      const ClosureResult closure = extension_closure(system);
      const TorsionSplit split = torsion_pair(closure, call.diagonals("pivot", p));
      Json mixed = Json::array();
      for (const auto& m : split.mixed) {
        Json entry{{"member", wire::to_json(m.member)}, {"sequence", nullptr}};
        if (m.sequence) {
          entry["sequence"] = Json{{"sub", wire::to_json(m.sequence->sub)},
                                   {"quotient", wire::to_json(m.sequence->quotient)}};
        }
        mixed.push_back(entry);
      }
      return respond(call, Json{{"params", wire::params_json(p)},
                                {"torsion", wire::to_json(split.torsion)},
                                {"torsion_free", wire::to_json(split.torsion_free)},
                                {"mixed", mixed}});
    }
  }
  throw NoRoute{"no route for " + req.method + " " + path};
}

}  // namespace

HttpResponse handle_request(const HttpRequest& request) {
  Json echo{{"method", request.method}, {"path", request.path}};
  try {
    const Call call(request);
    echo = call.echo();
    return route(request, call);
  } catch (const Error& err) {
    return error_response(400, err.code(), err.what(), Json{{"request", echo}});
  } catch (const MalformedBody& err) {
    return error_response(422, ErrorCode::parameter_error, err.message, Json{{"request", echo}});
  } catch (const NoRoute& err) {
    return error_response(404, ErrorCode::parameter_error, err.message, Json{{"request", echo}});
  }
}

struct HttpService::Impl {
  httplib::Server server;
};

HttpService::HttpService() : impl_(std::make_unique<Impl>()) {
  auto forward = [](const httplib::Request& req, httplib::Response& res) {
    HttpRequest r{req.method, req.path, {}, req.body};
    for (const auto& [k, v] : req.params) r.query.emplace(k, v);
    const HttpResponse out = handle_request(r);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  impl_->server.Get(".*", forward);
  impl_->server.Post(".*", forward);
}

HttpService::~HttpService() = default;

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpService::listen() { return impl_->server.listen_after_bind(); }

void HttpService::stop() { impl_->server.stop(); }

}  // namespace smw
