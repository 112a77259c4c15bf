#ifndef SCHROEDER_FACTORIZE_HPP_
#define SCHROEDER_FACTORIZE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schroeder/element_store.hpp"
#include "schroeder/monoid_spec.hpp"
#include "schroeder/partial_map.hpp"

namespace schroeder {

enum class FactorizationCertificate { InverseWitness, SameHeight, HeightDescent };

std::string certificate_name(FactorizationCertificate c);

/// A verified product decomposition: the left-to-right product of
/// `factors` equals `target`, and every factor satisfies the side
/// conditions of its certificate (see the producing operation).
struct Factorization {
  PartialMap target;
  std::vector<PartialMap> factors;
  FactorizationCertificate certificate;

  /// Same-height factorizations: marks factors that only re-fix an
  /// already fixed point (a_i = t_i); they can be dropped from a minimal
  /// product but are kept for faithfulness.
  std::vector<bool> skippable;

  /// Height-descent decision-tree tag ("1.i", "2.ii.a", "3.ii", ...,
  /// "fallback"); empty for other certificates.
  std::string case_tag;

  /// False when the decision-tree template for this input produced an
  /// invalid decomposition (or no template applied) and the exhaustive
  /// idempotent-product search supplied the factors instead. `note`
  /// carries the details in that case.
  bool template_ok = true;
  int fallback_activations = 0;
  std::string note;

  /// Left-to-right product of the factors, recomputed.
  PartialMap product() const;
};

struct InverseWitnessResult {
  /// alpha' with dom alpha' = im alpha, sending each image point a_i to
  /// the minimum t_i of its block. Lives in the full partial
  /// transformation monoid, generally not in the Schroeder families, and
  /// satisfies alpha alpha' alpha = alpha.
  PartialMap witness;
  /// alpha alpha' = (A_i -> t_i), an isotone order-decreasing idempotent.
  PartialMap left_idempotent;
  /// alpha' alpha = the identity on im alpha.
  PartialMap image_identity;
  /// Set for the empty map, whose witness is the empty map itself.
  bool degenerate = false;
};

/// Witness construction showing the large (and small) Schroeder monoid is
/// an inverse ideal of the full partial transformation monoid. Requires
/// an isotone, order-decreasing input.
InverseWitnessResult inverse_witness(const PartialMap& alpha);

/// The witness laws packaged as a factorization: alpha alpha' alpha =
/// alpha, certificate InverseWitness.
Factorization inverse_witness_factorization(const PartialMap& alpha);

/// Writes an isotone, order-decreasing map of height p as a product
/// [eps, eps_1, ..., eps_p] of idempotents of height exactly p: eps sends
/// each block to its minimum, and eps_i moves the i-th block minimum down
/// to the i-th image point while fixing everything already settled.
/// Certificate SameHeight. The empty map factors as itself.
Factorization idempotent_factorization(const PartialMap& alpha);

/// Splits an idempotent of height p <= n-2 into two or three idempotents
/// of height exactly p+1 whose product restores it, following a fixed
/// decision tree over the shape of the map (full or partial, position of
/// a missing point, block sizes). The chosen case is recorded; whenever
/// the printed template fails to validate -- or no case covers the input
/// -- an exhaustive search over pairs and triples of height-(p+1)
/// idempotents supplies the factors and the discrepancy is logged in
/// `note`. Family::SS restricts factors to maps with 1 in the domain.
///
/// Throws std::invalid_argument for non-idempotents, heights above n-2,
/// and (for SS) the empty map.
Factorization height_descent(const PartialMap& eps,
                             Family family = Family::LS);

/// Chains idempotent_factorization with repeated height_descent until all
/// factors are idempotents of height exactly `target_height`, product
/// unchanged. Requires height(alpha) <= target_height, and
/// target_height <= n-1 when any ascent is needed.
Factorization decompose_to_idempotents(const PartialMap& alpha,
                                       int target_height,
                                       Family family = Family::LS);

struct RigidityReport {
  bool holds = true;
  /// First nonzero pair (i, j) with i.j a nonzero idempotent yet not
  /// "both idempotent with i.j = i", if any.
  std::optional<std::pair<ElementIndex, ElementIndex>> counterexample;
};

/// Verifies on a Rees quotient store that a product of nonzero elements
/// is a nonzero idempotent exactly when both factors are idempotent and
/// the product equals the left factor. Quotient stores only.
RigidityReport idempotent_product_rigidity_check(const ElementStore& store);

}  // namespace schroeder

#endif  // SCHROEDER_FACTORIZE_HPP_
