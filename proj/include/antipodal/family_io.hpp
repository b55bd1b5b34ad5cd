#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "antipodal/core.hpp"

namespace antipodal {

// Family file:
//   # comment
//   V n k l          (optional header)
//   ++-0             (one vector per line)
// Without a header, Params are inferred from the first vector.
VectorFamily parse_family_text(std::string_view text);
std::string format_family_text(const VectorFamily &f);

// {"n":..,"k":..,"l":..,"vectors":["++-0",...]}
VectorFamily parse_family_json(std::string_view text);
std::string format_family_json(const VectorFamily &f);

// Accepts either format; JSON is recognized by a leading '{'.
VectorFamily parse_family(std::string_view text);

VectorFamily load_family(const std::string &path);
void save_family(const VectorFamily &f, const std::string &path, bool json);

} // namespace antipodal
