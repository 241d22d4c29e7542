#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqpart::cli {

/// Runs one eqpart command. args excludes the program name. The JSON
/// result goes to out, diagnostics to err. Returns 0 on success, 1 on a
/// domain failure (including oracle mismatches) and 2 on malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqpart::cli
