#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grassdt {

/// Exit codes: 0 success, 1 validation mismatch, 2 usage or size-limit error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grassdt
