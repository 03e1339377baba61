#pragma once

#include <string>

#include "pecr/mass.hpp"

namespace pecr {

// JSON document format:
//   { "frame": ["a","b","c"],
//     "masses": { "": 0.02, "a": 0.1, "a|b": 0.25, ... } }
// Keys are labels joined by '|'; "" is the empty set; omitted subsets are 0.
MassFunction bpa_from_json_string(const std::string& text);
MassFunction bpa_from_json_file(const std::string& path);
// Numbers are emitted with 12 significant digits; zero masses are skipped.
std::string bpa_to_json_string(const MassFunction& m);

}  // namespace pecr
