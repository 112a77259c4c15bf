#ifndef SCHROEDER_ELEMENT_STORE_HPP_
#define SCHROEDER_ELEMENT_STORE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "schroeder/monoid_spec.hpp"
#include "schroeder/partial_map.hpp"

namespace schroeder {

using ElementIndex = std::int32_t;
inline constexpr ElementIndex kNoIndex = -1;

struct EnumerationLimits {
  int max_n = 7;                      // whole-monoid enumeration ceiling
  std::size_t max_elements = 500000;  // refuse rather than exhaust memory
};

/// An enumerated, indexed semigroup: the family's elements in a fixed
/// deterministic order, plus a total product on indices. For the Rees
/// quotients the absorbing zero is a distinguished extra index (it is an
/// abstract coset, not a partial map).
///
/// Enumeration always runs two independent generators and cross-checks
/// them: a structural generator (choose a domain, split it into convex
/// blocks, choose images below the block minima) and a filter oracle that
/// walks all (n+1)^n partial maps and keeps the members. Disagreement
/// throws std::logic_error.
///
/// A store is built single-threaded and immutable afterwards; `product`
/// is safe for concurrent readers. Full product tables are materialized
/// only for small stores, and products are otherwise computed on demand.
class ElementStore {
 public:
  static ElementStore enumerate(const MonoidSpec& spec,
                                const EnumerationLimits& limits = {});

  const MonoidSpec& spec() const { return spec_; }

  /// Number of elements including the zero, when present.
  std::size_t size() const { return elements_.size() + (has_zero_ ? 1 : 0); }
  std::size_t map_count() const { return elements_.size(); }

  bool has_zero() const { return has_zero_; }
  ElementIndex zero_index() const {
    return static_cast<ElementIndex>(elements_.size());
  }
  bool is_zero(ElementIndex i) const { return has_zero_ && i == zero_index(); }

  const PartialMap& map_at(ElementIndex i) const { return elements_[i]; }

  /// Height of the element; -1 for the zero (its height is below every
  /// nonzero height in its quotient).
  int height_of(ElementIndex i) const {
    return is_zero(i) ? -1 : elements_[i].height();
  }

  ElementIndex index_of(const PartialMap& map) const;

  /// Product of two elements by index. Plain families compose; the Rees
  /// quotients send any composition of height < p to the zero, and the
  /// zero is absorbing.
  ElementIndex product(ElementIndex i, ElementIndex j) const;

  std::optional<ElementIndex> identity_index() const { return identity_; }

  /// Element text; the zero prints as "0".
  std::string element_text(ElementIndex i) const;

  /// Indices of all self-squaring elements, ascending. The zero (itself
  /// an idempotent) is included only on request.
  std::vector<ElementIndex> idempotent_indices(bool include_zero = false) const;

  /// Indices of the elements of height exactly p, ascending. The zero is
  /// never included.
  std::vector<ElementIndex> height_slice(int p) const;

 private:
  MonoidSpec spec_;
  std::vector<PartialMap> elements_;
  std::unordered_map<PartialMap, ElementIndex, PartialMapHash> index_;
  bool has_zero_ = false;
  std::optional<ElementIndex> identity_;
  std::vector<ElementIndex> table_;  // full product table; empty if too large

  ElementIndex compute_product(ElementIndex i, ElementIndex j) const;
};

/// Smallest product-closed superset of `generators` inside the store,
/// by breadth-first saturation over indices. Generators must be valid
/// indices (the zero index is allowed in a quotient store).
std::vector<ElementIndex> closure_indices(const ElementStore& store,
                                          std::span<const ElementIndex> gens);

struct ClosureResult {
  std::vector<std::string> elements;  // element texts, store order
  bool reached_zero = false;          // quotients only
  bool equals_family = false;         // closure == enumerate(spec)?
};

/// Closure of a generating set of partial maps under the family's product.
/// Throws std::invalid_argument if a generator is not a member.
ClosureResult closure(std::span<const PartialMap> generators,
                      const MonoidSpec& spec,
                      const EnumerationLimits& limits = {});

/// All idempotents of the given height in LS_n (or, for Family::SS / M /
/// RSS, those whose domain contains 1), generated directly: an isotone
/// order-decreasing idempotent is exactly "each kernel class maps to its
/// minimum", so these are in bijection with convex domain splits.
/// Deterministic order matching store ordering.
std::vector<PartialMap> idempotents_of_height(int n, int height,
                                              Family family = Family::LS);

/// The store ordering as a comparator: height, then domain bitmask, then
/// image list, then pointwise values.
bool canonical_less(const PartialMap& a, const PartialMap& b);

}  // namespace schroeder

#endif  // SCHROEDER_ELEMENT_STORE_HPP_
