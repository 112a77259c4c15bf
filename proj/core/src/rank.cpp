#include "schroeder/rank.hpp"

#include <algorithm>
#include <stdexcept>

#include "schroeder/factorize.hpp"

namespace schroeder {

bool closed_rank_is_boundary_case(const MonoidSpec& spec) {
  switch (spec.family) {
    case Family::K:
      return spec.p == 0;
    case Family::RLS:
      return spec.p == spec.n;
    case Family::RSS:
      return spec.p == spec.n || spec.p == 1;
    default:
      return false;
  }
}

std::uint64_t closed_rank(const MonoidSpec& spec) {
  spec.validate();
  const unsigned n = static_cast<unsigned>(spec.n);
  const unsigned p = static_cast<unsigned>(spec.p);
  switch (spec.family) {
    case Family::LS:
      if (spec.n < 1) {
        throw std::invalid_argument("closed_rank: LS requires n >= 1");
      }
      return 2 * n;
    case Family::SS:
      return 2 * n - 1;
    case Family::SSPrime:
      throw std::invalid_argument(
          "closed_rank: no closed form for SS'_n; use brute_min_rank");
    case Family::K:
      if (spec.p == 0) return 1;
      if (spec.p == spec.n) return 2 * n;
      return idempotent_count_ls_slice(n, p);
    case Family::M:
      if (spec.p == 0) {
        throw std::invalid_argument("closed_rank: M(n,0) is empty");
      }
      if (spec.p == spec.n) return 2 * n - 1;
      return idempotent_count_ss_slice(n, p);
    case Family::RLS:
      if (spec.p == spec.n) return 2;  // {identity, unreachable zero}
      return idempotent_count_ls_slice(n, p);
    case Family::RSS:
      if (spec.p == spec.n) return 2;
      if (spec.p == 1) {
        // Left-zero: every element is needed, and no product reaches 0.
        return checked_pow(2, n - 1) + 1;
      }
      return idempotent_count_ss_slice(n, p);
  }
  throw std::invalid_argument("closed_rank: unknown family");
}

std::vector<ElementIndex> indecomposable_elements(const ElementStore& store) {
  const std::size_t m = store.size();
  std::vector<char> decomposable(m, 0);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      const ElementIndex x = store.product(static_cast<ElementIndex>(u),
                                           static_cast<ElementIndex>(v));
      if (static_cast<std::size_t>(x) != u && static_cast<std::size_t>(x) != v) {
        decomposable[static_cast<std::size_t>(x)] = 1;
      }
    }
  }
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (!decomposable[i]) {
      out.push_back(static_cast<ElementIndex>(i));
    }
  }
  return out;
}

RankReport verify_rank(const MonoidSpec& spec, const EnumerationLimits& limits) {
  RankReport report;
  report.spec = spec;
  report.closed_form = closed_rank(spec);
  report.boundary_case = closed_rank_is_boundary_case(spec);

  ElementStore store;
  try {
    store = ElementStore::enumerate(spec, limits);
  } catch (const std::length_error&) {
    report.lower_bound_certificate =
        "not verified: enumeration exceeds the configured cap";
    return report;
  }

  const std::vector<ElementIndex> must = indecomposable_elements(store);
  for (ElementIndex i : must) {
    report.generating_set.push_back(store.element_text(i));
  }

  const std::vector<ElementIndex> generated = closure_indices(store, must);
  const bool generates = generated.size() == store.size();
  const bool count_matches = must.size() == *report.closed_form;
  report.verified_generates = generates && count_matches;

  bool idempotents_only = true;
  for (ElementIndex i : must) {
    if (!store.is_zero(i) && !is_idempotent(store.map_at(i))) {
      idempotents_only = false;
      break;
    }
  }
  report.idempotents_only = idempotents_only;

  if (generates && count_matches) {
    report.lower_bound_certificate =
        "the " + std::to_string(must.size()) +
        " product-indecomposable elements (no factorization x = uv with "
        "u != x != v) lie in every generating set, and their closure is "
        "the whole semigroup";
    if (spec.is_rees()) {
      // The indecomposability of the nonzero idempotents is exactly the
      // product rigidity of the quotient; record that it held.
      const RigidityReport rigidity = idempotent_product_rigidity_check(store);
      report.lower_bound_certificate +=
          rigidity.holds
              ? "; nonzero idempotent products are rigid (uv idempotent "
                "nonzero only when u, v idempotent and uv = u)"
              : "; WARNING: idempotent product rigidity failed";
    }
  } else if (!count_matches) {
    report.lower_bound_certificate =
        "mismatch: " + std::to_string(must.size()) +
        " product-indecomposable elements vs closed form " +
        std::to_string(*report.closed_form);
  } else {
    report.lower_bound_certificate =
        "mismatch: the product-indecomposable elements do not generate";
  }
  return report;
}

std::uint64_t brute_min_rank(const MonoidSpec& spec,
                             const BruteForceOptions& options,
                             const EnumerationLimits& limits) {
  if (spec.family == Family::M && spec.p == 0) {
    throw std::invalid_argument("brute_min_rank: M(n,0) is empty");
  }
  const ElementStore store = ElementStore::enumerate(spec, limits);
  if (store.size() > options.max_size) {
    throw std::length_error("brute_min_rank: store size " +
                            std::to_string(store.size()) +
                            " exceeds the cap " +
                            std::to_string(options.max_size));
  }

  const std::vector<ElementIndex> must = indecomposable_elements(store);
  std::vector<char> in_closure(store.size(), 0);
  for (ElementIndex i : closure_indices(store, must)) {
    in_closure[static_cast<std::size_t>(i)] = 1;
  }
  if (std::count(in_closure.begin(), in_closure.end(), 1) ==
      static_cast<std::ptrdiff_t>(store.size())) {
    return must.size();
  }

  // Extra generators only help outside the closure of the must-set.
  std::vector<ElementIndex> pool;
  for (std::size_t i = 0; i < store.size(); ++i) {
    if (!in_closure[i]) {
      pool.push_back(static_cast<ElementIndex>(i));
    }
  }
  const auto advance = [](std::vector<std::size_t>& c, std::size_t universe) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
      if (c[i] < universe - k + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) {
          c[j] = c[j - 1] + 1;
        }
        return true;
      }
    }
    return false;
  };

  for (std::size_t extra = 1; extra <= pool.size(); ++extra) {
    std::vector<std::size_t> choice(extra);
    for (std::size_t i = 0; i < extra; ++i) {
      choice[i] = i;
    }
    do {
      std::vector<ElementIndex> gens = must;
      for (std::size_t c : choice) {
        gens.push_back(pool[c]);
      }
      if (closure_indices(store, gens).size() == store.size()) {
        return gens.size();
      }
    } while (advance(choice, pool.size()));
  }
  throw std::logic_error("brute_min_rank: search exhausted without a "
                         "generating set");
}

bool idrank_equals_rank_check(const MonoidSpec& spec,
                              const EnumerationLimits& limits) {
  const RankReport report = verify_rank(spec, limits);
  return report.verified_generates.value_or(false) &&
         report.idempotents_only.value_or(false);
}

IdempotentCountReport idempotent_count_formulas(
    int n, const EnumerationLimits& limits) {
  if (n < 1) {
    throw std::invalid_argument("idempotent_count_formulas: requires n >= 1");
  }
  IdempotentCountReport report;
  report.n = n;
  const unsigned un = static_cast<unsigned>(n);
  for (unsigned p = 0; p <= un; ++p) {
    report.ls_by_height.push_back(idempotent_count_ls_slice(un, p));
    report.ss_by_height.push_back(idempotent_count_ss_slice(un, p));
    report.ls_total += report.ls_by_height.back();
    report.ss_total += report.ss_by_height.back();
  }
  report.ss_total_is_power_of_three =
      report.ss_total == checked_pow(3, un - 1);

  if (n <= limits.max_n) {
    report.enumeration_checked = true;
    report.matches_enumeration = true;
    const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(n), limits);
    const ElementStore ss = ElementStore::enumerate(MonoidSpec::ss(n), limits);
    const auto count_by_height = [n](const ElementStore& store) {
      std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
      for (ElementIndex e : store.idempotent_indices()) {
        ++counts[static_cast<std::size_t>(store.map_at(e).height())];
      }
      return counts;
    };
    if (count_by_height(ls) != report.ls_by_height ||
        count_by_height(ss) != report.ss_by_height) {
      report.matches_enumeration = false;
    }
  }
  return report;
}

}  // namespace schroeder
