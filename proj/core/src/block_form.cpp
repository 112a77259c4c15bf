#include "schroeder/block_form.hpp"

#include <map>
#include <stdexcept>

namespace schroeder {

void BlockForm::validate() const {
  if (n < 0 || n > kMaxChainSize) {
    throw std::invalid_argument("block form: bad chain size");
  }
  if (blocks.size() != images.size()) {
    throw std::invalid_argument("block form: block/image count mismatch");
  }
  int previous_image = 0;
  int previous_point = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& block = blocks[i];
    if (block.empty()) {
      throw std::invalid_argument("block form: empty block");
    }
    for (std::size_t j = 0; j < block.size(); ++j) {
      const int point = block[j];
      if (point < 1 || point > n) {
        throw std::invalid_argument("block form: point out of range");
      }
      if (point <= previous_point) {
        throw std::invalid_argument(
            "block form: points must strictly increase across blocks");
      }
      previous_point = point;
    }
    const int image = images[i];
    if (image < 1 || image > n) {
      throw std::invalid_argument("block form: image out of range");
    }
    if (image <= previous_image) {
      throw std::invalid_argument("block form: images must strictly increase");
    }
    if (image > block.front()) {
      throw std::invalid_argument(
          "block form: image exceeds the minimum of its block");
    }
    previous_image = image;
  }
}

BlockForm to_block_form(const PartialMap& map) {
  if (!is_isotone(map) || !is_decreasing(map)) {
    throw std::invalid_argument(
        "to_block_form: map is not isotone and order-decreasing");
  }
  BlockForm form;
  form.n = map.chain_size();
  int current_image = 0;
  for (int x = 1; x <= map.chain_size(); ++x) {
    const int y = map(x);
    if (y == 0) {
      continue;
    }
    if (y != current_image) {
      form.blocks.emplace_back();
      form.images.push_back(y);
      current_image = y;
    }
    form.blocks.back().push_back(x);
  }
  return form;
}

PartialMap from_block_form(const BlockForm& form) {
  form.validate();
  PartialMap map(form.n);
  for (std::size_t i = 0; i < form.blocks.size(); ++i) {
    for (int point : form.blocks[i]) {
      map = map.with(point, form.images[i]);
    }
  }
  return map;
}

KernelClasses kernel_classes(const PartialMap& map) {
  std::map<int, std::vector<int>> by_min;  // min point -> block
  std::map<int, int> image_of_min;
  std::map<int, int> min_of_image;
  for (int x = 1; x <= map.chain_size(); ++x) {
    const int y = map(x);
    if (y == 0) {
      continue;
    }
    auto [it, inserted] = min_of_image.try_emplace(y, x);
    const int anchor = it->second;
    by_min[anchor].push_back(x);
    image_of_min[anchor] = y;
  }
  KernelClasses classes;
  for (auto& [anchor, block] : by_min) {
    classes.blocks.push_back(std::move(block));
    classes.images.push_back(image_of_min[anchor]);
  }
  return classes;
}

}  // namespace schroeder
