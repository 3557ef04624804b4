#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invmaps {

/// Runs one CLI invocation. args excludes the program name. Results go to
/// out, diagnostics to err. Returns 0 on success, 1 on domain errors (bad
/// group, unreachable rank, missing monomial), 2 on usage or parse errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invmaps
