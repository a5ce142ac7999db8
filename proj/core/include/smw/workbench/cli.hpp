#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smw {

/// Exit codes: 0 success, 1 domain error (ApiError JSON on `err`) or failed
/// verification, 2 usage error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smw
