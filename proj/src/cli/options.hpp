#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qaw/cli.hpp"

namespace qaw::cli {

/// Fills cfg from args.  Returns an exit code when the program should stop
/// (help was printed or parsing failed), std::nullopt otherwise.
std::optional<int> parse_args(const std::vector<std::string>& args, RunConfig& cfg, std::ostream& out,
                              std::ostream& err);

}  // namespace qaw::cli
