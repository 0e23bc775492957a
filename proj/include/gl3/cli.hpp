#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gl3 {

// Batch front end.  Exit codes: 0 success, 1 validation error,
// 2 verification mismatch.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace gl3
