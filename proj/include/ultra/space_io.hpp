#ifndef ULTRA_SPACE_IO_HPP
#define ULTRA_SPACE_IO_HPP

#include "ultra/space.hpp"

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

namespace ultra {

// Space files are JSON objects:
//   {"points": ["a","b","c"], "distances": [["a","b","1/2"], ["a","c","1"], ["b","c","1"]]}
// Distances are "p/q" or "p" strings, never JSON numbers; each unordered pair
// appears exactly once.

Space parse_space(std::string_view text);
Space load_space(const std::filesystem::path& path);

nlohmann::ordered_json space_to_json(const Space& space);
/// Compact one-line document followed by a newline; pairs in point order.
std::string serialize_space(const Space& space);

}  // namespace ultra

#endif  // ULTRA_SPACE_IO_HPP
