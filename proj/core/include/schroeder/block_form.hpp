#ifndef SCHROEDER_BLOCK_FORM_HPP_
#define SCHROEDER_BLOCK_FORM_HPP_

#include <cstddef>
#include <vector>

#include "schroeder/partial_map.hpp"

namespace schroeder {

/// Canonical tabular form of an isotone, order-decreasing partial map:
/// the kernel classes A_1 < A_2 < ... < A_p listed in increasing order
/// together with their images a_1 < a_2 < ... < a_p.
///
/// Invariants (checked by validate / from_block_form):
///   - blocks are nonempty, disjoint, elementwise increasing, and convex
///     within the union of the blocks;
///   - images strictly increase;
///   - a_i <= min A_i for every i (the order-decreasing constraint);
///   - p = 0 encodes the empty map.
struct BlockForm {
  int n = 0;
  std::vector<std::vector<int>> blocks;  // each sorted ascending
  std::vector<int> images;

  std::size_t height() const { return images.size(); }

  /// min A_i for block i (0-based).
  int block_min(std::size_t i) const { return blocks[i].front(); }

  /// Throws std::invalid_argument if any invariant fails.
  void validate() const;
};

/// Kernel decomposition of an isotone, order-decreasing map. Refuses any
/// other map: the kernel classes of a non-isotone map need not be convex,
/// so the tabular form would not be canonical.
BlockForm to_block_form(const PartialMap& map);

/// Inverse of to_block_form; validates the invariants first.
PartialMap from_block_form(const BlockForm& form);

/// Kernel classes of an arbitrary partial map, grouped by image value and
/// ordered by smallest point, with the image of each class. No convexity
/// or monotonicity requirements; used by the element text format, which
/// must also print witnesses living outside the Schroeder families.
struct KernelClasses {
  std::vector<std::vector<int>> blocks;
  std::vector<int> images;
};
KernelClasses kernel_classes(const PartialMap& map);

}  // namespace schroeder

#endif  // SCHROEDER_BLOCK_FORM_HPP_
