#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey {

/// Batch front door. Parses the argument vector (without argv[0]),
/// dispatches to the library and writes a JSON certificate to `out`.
/// Returns 0 on success, 1 on a verified mathematical negative, 2 on
/// input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace ramsey
