#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "schurlab/matrix.hpp"

namespace schurlab {

/// Exit codes: 0 clean, 1 assertion or validation failure or inadmissible
/// point, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.3", "-0.2i", "0.3+0.2i", "1e-3-4e-2i" (j is accepted for i).
cd parse_complex(const std::string& text);
/// Comma-separated complex coordinates.
Point parse_point(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

std::string format_complex(cd v);

}  // namespace schurlab
