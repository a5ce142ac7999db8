#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "smw/ar_quiver.hpp"
#include "smw/error.hpp"
#include "smw/polygon.hpp"
#include "smw/sms.hpp"
#include "smw/tilting.hpp"

namespace smw::wire {

// std::map-backed objects keep keys sorted, which is what makes output canonical.
using Json = nlohmann::json;

/// Closed-set error record carried on stderr (CLI) and in HTTP bodies.
struct ApiError {
  ErrorCode code = ErrorCode::parameter_error;
  std::string message;
  Json details = Json::object();

  friend bool operator==(const ApiError&, const ApiError&) = default;
};

ApiError from_exception(const Error& error, Json details = Json::object());
Json to_json(const ApiError& error);
/// Throws parameter_error on anything but {code, message, details}.
ApiError api_error_from_json(const Json& j);
ErrorCode error_code_from_string(std::string_view name);

Json to_json(Diagonal d);
/// Diagonal lists are emitted sorted.
Json to_json(std::span<const Diagonal> ds);
/// Accepts [a, b] with distinct vertices in [0, N); normalizes. Shape and
/// range problems are parameter_error.
Diagonal diagonal_from_json(const Json& j, const CategoryParams& p);
std::vector<Diagonal> diagonals_from_json(const Json& j, const CategoryParams& p);
/// Parses text such as "[[3,5],[1,6]]" (the CLI's --system / --at).
std::vector<Diagonal> parse_diagonal_list(const std::string& text, const CategoryParams& p);

Json params_json(const CategoryParams& p);
Json category_json(const CategoryParams& p);
Json diagonals_json(const CategoryParams& p);
Json ar_quiver_json(const ArQuiver& q);
Json sms_list_json(const CategoryParams& p, std::span<const SimpleMindedSystem> systems);
Json closure_json(const ClosureResult& closure);
Json tilt_json(const TiltMove& move);
Json tilting_graph_json(const TiltingGraph& graph);

/// Compact, sorted-key serialization used for every machine output.
std::string canonical(const Json& j);
/// Same content, indented for terminals; still byte-stable.
std::string pretty(const Json& j);

}  // namespace smw::wire
