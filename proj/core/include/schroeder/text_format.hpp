#ifndef SCHROEDER_TEXT_FORMAT_HPP_
#define SCHROEDER_TEXT_FORMAT_HPP_

#include <string>
#include <string_view>

#include "schroeder/partial_map.hpp"

namespace schroeder {

/// Element text format, stable across the CLI and the file formats:
///   - nonempty map: kernel classes joined by `;`, each written
///     `p1,p2,...->a` with points ascending and classes ordered by their
///     smallest point, e.g. `1,2->1;3->2`;
///   - empty map: the single character `-`.
std::string to_text(const PartialMap& map);

/// Parses the element text format. The input must be canonical: points
/// ascending within a class, classes ascending by smallest point, one
/// class per image value. Throws std::invalid_argument otherwise. Accepts
/// any partial map, not only Schroeder-family members; membership is a
/// separate question.
PartialMap parse_element_text(int n, std::string_view text);

}  // namespace schroeder

#endif  // SCHROEDER_TEXT_FORMAT_HPP_
