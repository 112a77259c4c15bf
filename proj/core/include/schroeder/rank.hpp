#ifndef SCHROEDER_RANK_HPP_
#define SCHROEDER_RANK_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schroeder/combinatorics.hpp"
#include "schroeder/element_store.hpp"
#include "schroeder/monoid_spec.hpp"

namespace schroeder {

/// Closed-form minimum generating set size.
///
///   LS_n          2n                                   (n >= 1)
///   SS_n          2n - 1                               (n >= 1)
///   K(n,p)        sum_{r=p..n} C(n,r) C(r-1,p-1)       (1 <= p <= n-1)
///   M(n,p)        C(n-1,p-1) 2^(n-p)                   (1 <= p <= n-1)
///   RLS_n(p)      as K(n,p)                            (1 <= p <= n-1)
///   RSS_n(p)      as M(n,p)                            (2 <= p <= n-1)
///
/// Boundary parameters are made total, consistently with brute-force
/// search: K(n,n) and M(n,n) are the full monoids (2n, 2n-1); K(n,0) is
/// the trivial semigroup (1); the height-n quotients are {identity, zero}
/// with an unreachable zero (2); RSS_n(1) is left-zero with an
/// unreachable zero (2^(n-1) + 1). Throws std::invalid_argument for
/// SS'_n, whose rank has no closed form here (use brute_min_rank).
std::uint64_t closed_rank(const MonoidSpec& spec);

/// True when closed_rank had to step outside the summation formulas
/// (the boundary parameters listed above).
bool closed_rank_is_boundary_case(const MonoidSpec& spec);

struct RankReport {
  MonoidSpec spec;
  std::optional<std::uint64_t> closed_form;
  /// The product-indecomposable elements (x with no factorization
  /// x = u v, u != x != v); they lie in every generating set.
  std::vector<std::string> generating_set;
  std::optional<bool> verified_generates;  // closure check ran and passed
  std::string lower_bound_certificate;
  std::optional<std::uint64_t> brute_force_rank;
  std::optional<bool> idempotents_only;  // generating set idempotent-only
  bool boundary_case = false;            // outside the summation formulas
};

/// Verifies the closed rank against the enumerated semigroup:
/// upper bound by closing the set of product-indecomposable elements
/// (for these families: the top-height idempotents, plus the identity in
/// the full monoids, plus the zero where no product reaches it), lower
/// bound because every product-indecomposable element belongs to every
/// generating set. When enumeration exceeds its cap the closed form is
/// still reported with verified_generates absent.
RankReport verify_rank(const MonoidSpec& spec,
                       const EnumerationLimits& limits = {});

struct BruteForceOptions {
  std::size_t max_size = 100;  // refuse larger stores
};

/// Exact minimum generating set size by search: the must-contain set of
/// product-indecomposable elements seeds the search, and extra generators
/// are drawn only from outside its closure.
std::uint64_t brute_min_rank(const MonoidSpec& spec,
                             const BruteForceOptions& options = {},
                             const EnumerationLimits& limits = {});

/// True when the verified minimum generating set consists of idempotents
/// only (so the idempotent rank equals the rank).
bool idrank_equals_rank_check(const MonoidSpec& spec,
                              const EnumerationLimits& limits = {});

struct IdempotentCountReport {
  int n = 0;
  /// Formula values per height p = 0..n.
  std::vector<std::uint64_t> ls_by_height;
  std::vector<std::uint64_t> ss_by_height;
  std::uint64_t ls_total = 0;
  std::uint64_t ss_total = 0;
  bool ss_total_is_power_of_three = false;  // ss_total == 3^(n-1)
  bool enumeration_checked = false;
  bool matches_enumeration = false;
};

/// Per-height idempotent counts of the large and small Schroeder monoids
/// from the closed formulas, cross-checked against enumeration when the
/// chain size is within the cap.
IdempotentCountReport idempotent_count_formulas(
    int n, const EnumerationLimits& limits = {});

/// Indices of the elements with no factorization x = u v, u != x != v.
/// Every generating set of the store contains all of them.
std::vector<ElementIndex> indecomposable_elements(const ElementStore& store);

}  // namespace schroeder

#endif  // SCHROEDER_RANK_HPP_
