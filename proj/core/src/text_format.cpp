#include "schroeder/text_format.hpp"

#include <charconv>
#include <stdexcept>

#include "schroeder/block_form.hpp"

namespace schroeder {

std::string to_text(const PartialMap& map) {
  if (map.is_empty_map()) {
    return "-";
  }
  const KernelClasses classes = kernel_classes(map);
  std::string out;
  for (std::size_t i = 0; i < classes.blocks.size(); ++i) {
    if (i > 0) {
      out += ';';
    }
    for (std::size_t j = 0; j < classes.blocks[i].size(); ++j) {
      if (j > 0) {
        out += ',';
      }
      out += std::to_string(classes.blocks[i][j]);
    }
    out += "->";
    out += std::to_string(classes.images[i]);
  }
  return out;
}

namespace {

int parse_point(std::string_view& rest) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc{} || ptr == rest.data()) {
    throw std::invalid_argument("element text: expected a number at '" +
                                std::string(rest) + "'");
  }
  rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  return value;
}

void expect(std::string_view& rest, std::string_view token) {
  if (!rest.starts_with(token)) {
    throw std::invalid_argument("element text: expected '" +
                                std::string(token) + "' at '" +
                                std::string(rest) + "'");
  }
  rest.remove_prefix(token.size());
}

}  // namespace

PartialMap parse_element_text(int n, std::string_view text) {
  if (text == "-") {
    return PartialMap(n);
  }
  if (text.empty()) {
    throw std::invalid_argument("element text: empty input (use '-')");
  }
  PartialMap map(n);
  PointSet images_seen;
  int previous_block_min = 0;
  std::string_view rest = text;
  while (true) {
    int block_min = 0;
    int previous_point = 0;
    std::vector<int> block;
    while (true) {
      const int point = parse_point(rest);
      if (point < 1 || point > n) {
        throw std::invalid_argument("element text: point " +
                                    std::to_string(point) +
                                    " out of range 1.." + std::to_string(n));
      }
      if (point <= previous_point) {
        throw std::invalid_argument(
            "element text: points must strictly increase within a class");
      }
      if (map.contains(point)) {
        throw std::invalid_argument("element text: duplicate point " +
                                    std::to_string(point));
      }
      previous_point = point;
      if (block.empty()) {
        block_min = point;
      }
      block.push_back(point);
      if (rest.starts_with(",")) {
        rest.remove_prefix(1);
        continue;
      }
      break;
    }
    expect(rest, "->");
    const int image = parse_point(rest);
    if (image < 1 || image > n) {
      throw std::invalid_argument("element text: image " +
                                  std::to_string(image) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (images_seen.contains(image)) {
      throw std::invalid_argument(
          "element text: one class per image value; merge classes sharing " +
          std::to_string(image));
    }
    if (block_min <= previous_block_min) {
      throw std::invalid_argument(
          "element text: classes must ascend by their smallest point");
    }
    images_seen.insert(image);
    previous_block_min = block_min;
    for (int point : block) {
      map = map.with(point, image);
    }
    if (rest.empty()) {
      break;
    }
    expect(rest, ";");
  }
  return map;
}

}  // namespace schroeder
