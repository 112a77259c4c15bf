#include "schroeder/factorize.hpp"

#include <algorithm>
#include <stdexcept>

#include "schroeder/block_form.hpp"
#include "schroeder/text_format.hpp"

namespace schroeder {

namespace {

void require_ls_member(const PartialMap& map, const char* who) {
  if (!is_isotone(map) || !is_decreasing(map)) {
    throw std::invalid_argument(std::string(who) + ": " + to_text(map) +
                                " is not isotone and order-decreasing");
  }
}

PartialMap map_of(int n, const std::vector<std::pair<int, int>>& pairs) {
  return PartialMap::from_pairs(
      n, std::span<const std::pair<int, int>>(pairs));
}

}  // namespace

std::string certificate_name(FactorizationCertificate c) {
  switch (c) {
    case FactorizationCertificate::InverseWitness:
      return "INVERSE_WITNESS";
    case FactorizationCertificate::SameHeight:
      return "SAME_HEIGHT";
    case FactorizationCertificate::HeightDescent:
      return "HEIGHT_DESCENT";
  }
  return "?";
}

PartialMap Factorization::product() const {
  PartialMap result = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    result = compose(result, factors[i]);
  }
  return result;
}

InverseWitnessResult inverse_witness(const PartialMap& alpha) {
  require_ls_member(alpha, "inverse_witness");
  InverseWitnessResult result{PartialMap(alpha.chain_size()),
                              PartialMap(alpha.chain_size()),
                              PartialMap(alpha.chain_size()), false};
  if (alpha.is_empty_map()) {
    result.degenerate = true;
    return result;
  }
  const BlockForm form = to_block_form(alpha);
  std::vector<std::pair<int, int>> witness_pairs;
  for (std::size_t i = 0; i < form.blocks.size(); ++i) {
    witness_pairs.emplace_back(form.images[i], form.block_min(i));
  }
  result.witness = map_of(alpha.chain_size(), witness_pairs);
  result.left_idempotent = compose(alpha, result.witness);
  result.image_identity = compose(result.witness, alpha);

  // Shape invariants of the construction: alpha alpha' sends each block
  // to its minimum, alpha' alpha is the identity on the image.
  if (compose(result.left_idempotent, alpha) != alpha ||
      result.image_identity !=
          partial_identity(alpha.chain_size(), alpha.image()) ||
      !is_idempotent(result.left_idempotent)) {
    throw std::logic_error("inverse_witness: construction laws violated");
  }
  return result;
}

Factorization inverse_witness_factorization(const PartialMap& alpha) {
  const InverseWitnessResult w = inverse_witness(alpha);
  Factorization f{alpha,
                  {alpha, w.witness, alpha},
                  FactorizationCertificate::InverseWitness,
                  {false, false, false},
                  "",
                  true,
                  0,
                  w.degenerate ? "degenerate: empty map" : ""};
  return f;
}

Factorization idempotent_factorization(const PartialMap& alpha) {
  require_ls_member(alpha, "idempotent_factorization");
  const int n = alpha.chain_size();
  Factorization f{alpha,
                  {},
                  FactorizationCertificate::SameHeight,
                  {},
                  "",
                  true,
                  0,
                  ""};
  if (alpha.is_empty_map()) {
    f.factors.emplace_back(n);
    f.skippable.push_back(false);
    return f;
  }
  const BlockForm form = to_block_form(alpha);
  const std::size_t p = form.height();

  // eps: every block to its own minimum.
  std::vector<std::pair<int, int>> eps_pairs;
  for (std::size_t i = 0; i < p; ++i) {
    for (int point : form.blocks[i]) {
      eps_pairs.emplace_back(point, form.block_min(i));
    }
  }
  f.factors.push_back(map_of(n, eps_pairs));
  f.skippable.push_back(false);

  // eps_i: collapse {a_i, t_i} onto a_i, fix the images already produced
  // on the left and the minima still pending on the right.
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k < i; ++k) {
      pairs.emplace_back(form.images[k], form.images[k]);
    }
    const int a_i = form.images[i];
    const int t_i = form.block_min(i);
    pairs.emplace_back(a_i, a_i);
    if (t_i != a_i) {
      pairs.emplace_back(t_i, a_i);
    }
    for (std::size_t k = i + 1; k < p; ++k) {
      pairs.emplace_back(form.block_min(k), form.block_min(k));
    }
    f.factors.push_back(map_of(n, pairs));
    f.skippable.push_back(t_i == a_i);
  }

  for (const PartialMap& factor : f.factors) {
    if (!is_idempotent(factor) ||
        factor.height() != static_cast<int>(p)) {
      throw std::logic_error("idempotent_factorization: bad factor " +
                             to_text(factor));
    }
  }
  if (f.product() != alpha) {
    throw std::logic_error("idempotent_factorization: product mismatch for " +
                           to_text(alpha));
  }
  return f;
}

namespace {

// --- height-descent templates -------------------------------------------
//
// eps is an idempotent of height p <= n-2 written with blocks A_1..A_p and
// minima t_1..t_p (the image of an order-decreasing idempotent is its
// fixed-point set, so each block maps onto its minimum). The decision
// tree below matches the shape of eps and emits 2 or 3 idempotents of
// height p+1 multiplying back to eps. Choices are made deterministic:
// smallest eligible missing point q first, then smallest eligible block.

struct DescentContext {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> minima;
  std::vector<int> gaps;  // points outside the domain, ascending
};

// eps with each block intact except block i, split as {t_i} plus the
// rest mapping to its second element.
PartialMap split_block_factor(const DescentContext& ctx, std::size_t i) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k < ctx.blocks.size(); ++k) {
    if (k != i) {
      for (int point : ctx.blocks[k]) {
        pairs.emplace_back(point, ctx.minima[k]);
      }
      continue;
    }
    const auto& block = ctx.blocks[i];
    pairs.emplace_back(block[0], block[0]);
    for (std::size_t j = 1; j < block.size(); ++j) {
      pairs.emplace_back(block[j], block[1]);
    }
  }
  return map_of(ctx.n, pairs);
}

// Identity on the minima plus the listed extra fixed points, with the
// points of `collapsed` (when nonempty) all sent to its first entry.
PartialMap minima_factor(const DescentContext& ctx,
                         const std::vector<int>& fixed_extras,
                         const std::vector<int>& collapsed) {
  std::vector<std::pair<int, int>> pairs;
  for (int t : ctx.minima) {
    if (collapsed.empty() ||
        std::find(collapsed.begin(), collapsed.end(), t) == collapsed.end()) {
      pairs.emplace_back(t, t);
    }
  }
  for (int x : fixed_extras) {
    pairs.emplace_back(x, x);
  }
  if (!collapsed.empty()) {
    for (int x : collapsed) {
      pairs.emplace_back(x, collapsed.front());
    }
  }
  return map_of(ctx.n, pairs);
}

struct TemplateResult {
  std::string case_tag;
  std::vector<PartialMap> factors;
};

// Case 1: eps is a full map, so some block has two or more points.
std::optional<TemplateResult> try_case_full(const DescentContext& ctx) {
  std::size_t i = ctx.blocks.size();
  for (std::size_t k = 0; k < ctx.blocks.size(); ++k) {
    if (ctx.blocks[k].size() >= 2) {
      i = k;
      break;
    }
  }
  if (i == ctx.blocks.size()) {
    return std::nullopt;
  }
  const auto& block = ctx.blocks[i];
  if (block.size() == 2) {
    // Need a second non-singleton block to refix after the collapse.
    std::size_t j = ctx.blocks.size();
    for (std::size_t k = 0; k < ctx.blocks.size(); ++k) {
      if (k != i && ctx.blocks[k].size() >= 2) {
        j = k;
        break;
      }
    }
    if (j == ctx.blocks.size()) {
      return std::nullopt;
    }
    const int x1 = block[1];
    const int y1 = ctx.blocks[j][1];
    TemplateResult result;
    result.case_tag = "1.i";
    result.factors = {split_block_factor(ctx, i),
                      minima_factor(ctx, {y1}, {ctx.minima[i], x1})};
    return result;
  }
  const int x1 = block[1];
  const int x2 = block[2];
  TemplateResult result;
  result.case_tag = "1.ii";
  result.factors = {split_block_factor(ctx, i),
                    minima_factor(ctx, {x2}, {ctx.minima[i], x1})};
  return result;
}

// Case 2.i: q sits strictly between two consecutive points of block i.
std::optional<TemplateResult> try_case_inside_block(const DescentContext& ctx,
                                                    int q) {
  for (std::size_t i = 0; i < ctx.blocks.size(); ++i) {
    const auto& block = ctx.blocks[i];
    for (std::size_t k = 0; k + 1 < block.size(); ++k) {
      if (block[k] < q && q < block[k + 1]) {
        const int next = block[k + 1];
        std::vector<std::pair<int, int>> eps1_pairs;
        for (std::size_t kk = 0; kk < ctx.blocks.size(); ++kk) {
          if (kk != i) {
            for (int point : ctx.blocks[kk]) {
              eps1_pairs.emplace_back(point, ctx.minima[kk]);
            }
            continue;
          }
          for (int point : block) {
            eps1_pairs.emplace_back(point,
                                    point < q ? ctx.minima[i] : next);
          }
        }
        TemplateResult result;
        result.case_tag = "2.i";
        result.factors = {map_of(ctx.n, eps1_pairs),
                          minima_factor(ctx, {}, {q, next}),
                          minima_factor(ctx, {next}, {ctx.minima[i], q})};
        return result;
      }
    }
  }
  return std::nullopt;
}

// Case 2.ii: q lies strictly between block i and block i+1.
std::optional<TemplateResult> try_case_between_blocks(const DescentContext& ctx,
                                                      int q) {
  std::size_t i = ctx.blocks.size();
  for (std::size_t k = 0; k + 1 < ctx.blocks.size(); ++k) {
    if (ctx.blocks[k].back() < q && q < ctx.blocks[k + 1].front()) {
      i = k;
      break;
    }
  }
  if (i == ctx.blocks.size()) {
    return std::nullopt;
  }

  if (ctx.blocks[i].size() >= 2) {  // 2.ii.a
    const int x1 = ctx.blocks[i][1];
    TemplateResult result;
    result.case_tag = "2.ii.a";
    result.factors = {split_block_factor(ctx, i),
                      minima_factor(ctx, {}, {x1, q}),
                      minima_factor(ctx, {q}, {ctx.minima[i], x1})};
    return result;
  }
  if (ctx.blocks[i + 1].size() >= 2) {  // 2.ii.b
    const int w1 = ctx.blocks[i + 1][1];
    TemplateResult result;
    result.case_tag = "2.ii.b";
    result.factors = {split_block_factor(ctx, i + 1),
                      minima_factor(ctx, {q}, {ctx.minima[i + 1], w1})};
    return result;
  }
  // 2.ii.c: a non-singleton block elsewhere keeps the height up.
  for (std::size_t j = 0; j < ctx.blocks.size(); ++j) {
    if (ctx.blocks[j].size() >= 2) {
      const int y1 = ctx.blocks[j][1];
      std::vector<std::pair<int, int>> eps1_pairs;
      for (std::size_t k = 0; k < ctx.blocks.size(); ++k) {
        for (int point : ctx.blocks[k]) {
          eps1_pairs.emplace_back(point, ctx.minima[k]);
        }
      }
      eps1_pairs.emplace_back(q, q);
      TemplateResult result;
      result.case_tag = "2.ii.c";
      result.factors = {map_of(ctx.n, eps1_pairs),
                        minima_factor(ctx, {y1}, {})};
      return result;
    }
  }
  // 2.ii.d: every block is a singleton; a second missing point between
  // blocks pairs with q.
  std::optional<int> second;
  for (int g : ctx.gaps) {
    if (g == q) continue;
    for (std::size_t k = 0; k + 1 < ctx.blocks.size(); ++k) {
      if (ctx.blocks[k].back() < g && g < ctx.blocks[k + 1].front()) {
        second = g;
        break;
      }
    }
    if (second) break;
  }
  if (!second) {
    return std::nullopt;
  }
  const int d = *second;
  const int lo = std::min(q, d);
  const int hi = std::max(q, d);
  const auto region = [&](int point) {
    for (std::size_t k = 0; k + 1 < ctx.blocks.size(); ++k) {
      if (ctx.blocks[k].back() < point && point < ctx.blocks[k + 1].front()) {
        return k;
      }
    }
    return ctx.blocks.size();
  };
  std::vector<std::pair<int, int>> eps1_pairs;
  for (std::size_t k = 0; k < ctx.blocks.size(); ++k) {
    for (int point : ctx.blocks[k]) {
      eps1_pairs.emplace_back(point, ctx.minima[k]);
    }
  }
  TemplateResult result;
  result.case_tag = "2.ii.d";
  if (region(lo) == region(hi)) {
    eps1_pairs.emplace_back(hi, hi);
    result.factors = {map_of(ctx.n, eps1_pairs), minima_factor(ctx, {lo}, {})};
  } else {
    eps1_pairs.emplace_back(lo, lo);
    result.factors = {map_of(ctx.n, eps1_pairs), minima_factor(ctx, {hi}, {})};
  }
  return result;
}

// Case 3: q lies beyond the last block (or eps is the empty map).
std::optional<TemplateResult> try_case_after_blocks(const DescentContext& ctx,
                                                    int q) {
  const int last = ctx.blocks.empty() ? 0 : ctx.blocks.back().back();
  if (q <= last) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < ctx.blocks.size(); ++i) {
    if (ctx.blocks[i].size() >= 2) {  // 3.i
      const int x1 = ctx.blocks[i][1];
      TemplateResult result;
      result.case_tag = "3.i";
      result.factors = {split_block_factor(ctx, i),
                        minima_factor(ctx, {q}, {ctx.minima[i], x1})};
      return result;
    }
  }
  for (int d : ctx.gaps) {  // 3.ii
    if (d > q) {
      std::vector<std::pair<int, int>> eps1_pairs;
      for (std::size_t k = 0; k < ctx.blocks.size(); ++k) {
        for (int point : ctx.blocks[k]) {
          eps1_pairs.emplace_back(point, ctx.minima[k]);
        }
      }
      eps1_pairs.emplace_back(q, q);
      TemplateResult result;
      result.case_tag = "3.ii";
      result.factors = {map_of(ctx.n, eps1_pairs), minima_factor(ctx, {d}, {})};
      return result;
    }
  }
  return std::nullopt;
}

bool valid_descent_factors(const PartialMap& eps,
                           const std::vector<PartialMap>& factors, int p,
                           Family family) {
  const MonoidSpec member_spec = family == Family::SS
                                     ? MonoidSpec::ss(eps.chain_size())
                                     : MonoidSpec::ls(eps.chain_size());
  PartialMap product(eps.chain_size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const PartialMap& factor = factors[i];
    if (!is_member(factor, member_spec) || !is_idempotent(factor) ||
        factor.height() != p + 1) {
      return false;
    }
    product = i == 0 ? factor : compose(product, factor);
  }
  return product == eps;
}

}  // namespace

Factorization height_descent(const PartialMap& eps, Family family) {
  if (family != Family::LS && family != Family::SS) {
    throw std::invalid_argument("height_descent: family must be LS or SS");
  }
  require_ls_member(eps, "height_descent");
  if (!is_idempotent(eps)) {
    throw std::invalid_argument("height_descent: " + to_text(eps) +
                                " is not idempotent");
  }
  if (family == Family::SS && !eps.contains(1)) {
    throw std::invalid_argument(
        "height_descent: SS requires 1 in the domain");
  }
  const int n = eps.chain_size();
  const int p = eps.height();
  if (p > n - 2) {
    throw std::invalid_argument(
        "height_descent: height " + std::to_string(p) + " on [" +
        std::to_string(n) +
        "] cannot split into idempotents one level up");
  }

  DescentContext ctx;
  ctx.n = n;
  const BlockForm form = to_block_form(eps);
  ctx.blocks = form.blocks;
  ctx.minima = form.images;
  for (int x = 1; x <= n; ++x) {
    if (!eps.contains(x)) {
      ctx.gaps.push_back(x);
    }
  }

  Factorization f{eps,
                  {},
                  FactorizationCertificate::HeightDescent,
                  {},
                  "",
                  true,
                  0,
                  ""};

  std::optional<TemplateResult> chosen;
  std::string failure_note;
  const auto consider = [&](auto&& make_candidate) {
    if (chosen) {
      return;
    }
    std::optional<TemplateResult> candidate;
    try {
      candidate = make_candidate();
    } catch (const std::invalid_argument& e) {
      if (failure_note.empty()) {
        failure_note = std::string("template construction failed for ") +
                       to_text(eps) + ": " + e.what();
      }
      return;
    }
    if (!candidate) {
      return;
    }
    if (valid_descent_factors(eps, candidate->factors, p, family)) {
      chosen = std::move(candidate);
    } else if (failure_note.empty()) {
      failure_note = "case " + candidate->case_tag +
                     " template failed validation for " + to_text(eps);
    }
  };

  if (ctx.gaps.empty()) {
    consider([&] { return try_case_full(ctx); });
  } else {
    for (int q : ctx.gaps) {
      consider([&] { return try_case_inside_block(ctx, q); });
      consider([&] { return try_case_between_blocks(ctx, q); });
      consider([&] { return try_case_after_blocks(ctx, q); });
      if (chosen) {
        break;
      }
    }
  }

  if (chosen) {
    f.case_tag = chosen->case_tag;
    f.factors = std::move(chosen->factors);
    f.skippable.assign(f.factors.size(), false);
    if (!failure_note.empty()) {
      f.note = failure_note + "; a later case supplied the factors";
    }
    return f;
  }

  // Exhaustive search over short products of height-(p+1) idempotents.
  // Reached when no decision-tree case covers the input (for instance
  // when the only missing points precede the first block) or a template
  // failed to validate.
  f.template_ok = false;
  f.fallback_activations = 1;
  f.case_tag = "fallback";
  f.note = failure_note.empty()
               ? "no decision-tree case applies to " + to_text(eps)
               : failure_note;
  const std::vector<PartialMap> candidates =
      idempotents_of_height(n, p + 1, family);
  for (const PartialMap& e1 : candidates) {
    for (const PartialMap& e2 : candidates) {
      if (compose(e1, e2) == eps) {
        f.factors = {e1, e2};
        f.skippable = {false, false};
        return f;
      }
    }
  }
  for (const PartialMap& e1 : candidates) {
    for (const PartialMap& e2 : candidates) {
      const PartialMap e12 = compose(e1, e2);
      for (const PartialMap& e3 : candidates) {
        if (compose(e12, e3) == eps) {
          f.factors = {e1, e2, e3};
          f.skippable = {false, false, false};
          return f;
        }
      }
    }
  }
  throw std::logic_error("height_descent: no decomposition found for " +
                         to_text(eps));
}

Factorization decompose_to_idempotents(const PartialMap& alpha,
                                       int target_height, Family family) {
  if (family != Family::LS && family != Family::SS) {
    throw std::invalid_argument(
        "decompose_to_idempotents: family must be LS or SS");
  }
  require_ls_member(alpha, "decompose_to_idempotents");
  if (family == Family::SS && !alpha.contains(1)) {
    throw std::invalid_argument(
        "decompose_to_idempotents: SS requires 1 in the domain");
  }
  const int n = alpha.chain_size();
  const int h = alpha.height();
  if (target_height < h) {
    throw std::invalid_argument(
        "decompose_to_idempotents: target height below the map height");
  }
  if (target_height > h && target_height > n - 1) {
    throw std::invalid_argument(
        "decompose_to_idempotents: no idempotents above height n-1 can "
        "multiply down");
  }

  Factorization f = idempotent_factorization(alpha);
  if (target_height == h) {
    return f;
  }
  f.certificate = FactorizationCertificate::HeightDescent;
  f.case_tag = "";
  for (int level = h; level < target_height; ++level) {
    std::vector<PartialMap> raised;
    for (const PartialMap& factor : f.factors) {
      Factorization step = height_descent(factor, family);
      f.fallback_activations += step.fallback_activations;
      if (!step.template_ok) {
        f.template_ok = false;
        if (!f.note.empty()) {
          f.note += "; ";
        }
        f.note += step.note;
      }
      raised.insert(raised.end(), step.factors.begin(), step.factors.end());
    }
    f.factors = std::move(raised);
  }
  f.skippable.assign(f.factors.size(), false);
  if (f.product() != alpha) {
    throw std::logic_error("decompose_to_idempotents: product mismatch for " +
                           to_text(alpha));
  }
  return f;
}

RigidityReport idempotent_product_rigidity_check(const ElementStore& store) {
  if (!store.spec().is_rees()) {
    throw std::invalid_argument(
        "idempotent_product_rigidity_check: needs a Rees quotient store");
  }
  std::vector<char> idempotent(store.map_count(), 0);
  for (std::size_t i = 0; i < store.map_count(); ++i) {
    idempotent[i] = is_idempotent(store.map_at(static_cast<ElementIndex>(i)));
  }
  RigidityReport report;
  for (std::size_t i = 0; i < store.map_count(); ++i) {
    for (std::size_t j = 0; j < store.map_count(); ++j) {
      const ElementIndex prod = store.product(static_cast<ElementIndex>(i),
                                              static_cast<ElementIndex>(j));
      const bool nonzero_idempotent =
          !store.is_zero(prod) && idempotent[static_cast<std::size_t>(prod)];
      const bool rigid_form = idempotent[i] && idempotent[j] &&
                              prod == static_cast<ElementIndex>(i);
      if (nonzero_idempotent != rigid_form) {
        report.holds = false;
        report.counterexample = {static_cast<ElementIndex>(i),
                                 static_cast<ElementIndex>(j)};
        return report;
      }
    }
  }
  return report;
}

}  // namespace schroeder
