#pragma once

#include <string>
#include <vector>

namespace euchar {

// Scenario batches compiled into the library so the CLI and the test suite
// can run them from any working directory. Byte-identical copies live under
// scenarios/ for direct use with `run`.
std::vector<std::string> bundled_names();
const std::string& bundled_text(const std::string& name);

}  // namespace euchar
