#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wlab::cli {

// Entry point behind the wlab binary; split out so tests can drive it.
// Returns 0 on success, 2 when --assert finds a verdict outside tolerance
// (or an exact certification fails), 1 on usage or runtime errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wlab::cli
