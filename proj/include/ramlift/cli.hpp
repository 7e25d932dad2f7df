#pragma once

#include <string>
#include <vector>

namespace ramlift {

// Entry point behind the ramlift binary; exits 0 on verdict-pass, 1 on
// verdict-fail, 2 on usage errors.
int run_cli(const std::vector<std::string>& args);

} // namespace ramlift
