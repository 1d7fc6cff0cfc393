#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "latvis/types.hpp"

namespace latvis {

// Text format: one point per line as `u v`; `#` starts a comment; blank lines
// are ignored. Throws ParseError with the offending line number.
std::vector<LatticePoint> parse_base_set(std::istream& in);
std::vector<LatticePoint> read_base_set_file(const std::string& path);

// Inline form `(u,v);(u,v);...`, whitespace-insensitive.
std::vector<LatticePoint> parse_inline_base_set(std::string_view text);

// Inline when the argument contains '(', otherwise a file path.
std::vector<LatticePoint> load_base_set(const std::string& arg);

}  // namespace latvis
