#include "schroeder/element_store.hpp"

#include <algorithm>
#include <stdexcept>

#include "schroeder/text_format.hpp"

namespace schroeder {

namespace {

// Deterministic element order: height, then domain bitmask, then image
// list, then pointwise values as the final tiebreak (two maps can share
// height, domain and image while splitting the domain differently).
struct CanonicalKey {
  int height;
  std::uint64_t domain;
  std::vector<std::uint8_t> images;
  std::vector<std::uint8_t> values;

  explicit CanonicalKey(const PartialMap& map)
      : height(map.height()), domain(map.domain().mask()) {
    for (int y : map.image().points()) {
      images.push_back(static_cast<std::uint8_t>(y));
    }
    values.assign(map.raw_values().begin(), map.raw_values().end());
  }

  friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
    if (a.height != b.height) return a.height < b.height;
    if (a.domain != b.domain) return a.domain < b.domain;
    if (a.images != b.images) return a.images < b.images;
    return a.values < b.values;
  }
};

void sort_canonically(std::vector<PartialMap>& maps) {
  std::vector<std::pair<CanonicalKey, std::size_t>> keyed;
  keyed.reserve(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    keyed.emplace_back(CanonicalKey(maps[i]), i);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PartialMap> sorted;
  sorted.reserve(maps.size());
  for (const auto& [key, i] : keyed) {
    sorted.push_back(std::move(maps[i]));
  }
  maps = std::move(sorted);
}

bool family_requires_one(Family family) {
  return family == Family::SS || family == Family::M || family == Family::RSS;
}

bool family_excludes_one(Family family) { return family == Family::SSPrime; }

bool family_admits_empty_map(const MonoidSpec& spec) {
  switch (spec.family) {
    case Family::LS:
    case Family::SSPrime:
      return true;
    case Family::K:
      return true;  // height 0 <= p always
    default:
      return false;
  }
}

// Emits every member with the given domain split into consecutive runs
// per `cuts` (bit j set = cut after the j-th domain point), recursing over
// the strictly increasing image choices a_i <= min A_i.
void emit_images(const std::vector<int>& domain_points,
                 const std::vector<int>& block_starts, std::size_t block,
                 int previous_image, std::vector<std::uint8_t>& values, int n,
                 std::vector<PartialMap>& out,
                 const EnumerationLimits& limits) {
  if (block == block_starts.size() - 1) {
    PartialMap map(n);
    for (std::size_t i = 0; i < domain_points.size(); ++i) {
      map = map.with(domain_points[i], values[i]);
    }
    if (out.size() >= limits.max_elements) {
      throw std::length_error("enumeration exceeds the element cap");
    }
    out.push_back(std::move(map));
    return;
  }
  const int start = block_starts[block];
  const int end = block_starts[block + 1];
  const int block_min = domain_points[start];
  for (int image = previous_image + 1; image <= block_min; ++image) {
    for (int i = start; i < end; ++i) {
      values[i] = static_cast<std::uint8_t>(image);
    }
    emit_images(domain_points, block_starts, block + 1, image, values, n, out,
                limits);
  }
}

std::vector<PartialMap> structural_enumerate(const MonoidSpec& spec,
                                             const EnumerationLimits& limits) {
  const int n = spec.n;
  std::vector<PartialMap> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (family_requires_one(spec.family) && !(mask & 1)) continue;
    if (family_excludes_one(spec.family) && (mask & 1)) continue;
    const std::vector<int> domain_points = PointSet::from_mask(mask).points();
    const int d = static_cast<int>(domain_points.size());
    if (d == 0) {
      if (family_admits_empty_map(spec)) {
        out.emplace_back(n);
      }
      continue;
    }
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (d - 1));
         ++cuts) {
      const int parts = __builtin_popcountll(cuts) + 1;
      if (spec.uses_height_bound()) {
        if (spec.is_rees() ? parts != spec.p : parts > spec.p) continue;
      }
      std::vector<int> block_starts = {0};
      for (int j = 0; j < d - 1; ++j) {
        if ((cuts >> j) & 1) block_starts.push_back(j + 1);
      }
      block_starts.push_back(d);
      std::vector<std::uint8_t> values(static_cast<std::size_t>(d), 0);
      emit_images(domain_points, block_starts, 0, 0, values, n, out, limits);
    }
  }
  return out;
}

// Walks all (n+1)^n partial maps and keeps the members. Only feasible for
// small n; the caller skips it beyond kFilterOracleCeiling candidates.
constexpr std::uint64_t kFilterOracleCeiling = 20'000'000;

std::uint64_t filter_candidate_count(int n) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::uint64_t>(n + 1);
    if (count > kFilterOracleCeiling) return count;
  }
  return count;
}

std::vector<PartialMap> filter_enumerate(const MonoidSpec& spec) {
  const int n = spec.n;
  std::vector<PartialMap> out;
  std::vector<int> odometer(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> pairs;
  while (true) {
    pairs.clear();
    for (int x = 1; x <= n; ++x) {
      if (odometer[x - 1] != 0) {
        pairs.emplace_back(x, odometer[x - 1]);
      }
    }
    const PartialMap candidate =
        PartialMap::from_pairs(n, std::span<const std::pair<int, int>>(pairs));
    if (is_member(candidate, spec)) {
      out.push_back(candidate);
    }
    int pos = 0;
    while (pos < n && odometer[pos] == n) {
      odometer[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++odometer[pos];
  }
  return out;
}

}  // namespace

ElementStore ElementStore::enumerate(const MonoidSpec& spec,
                                     const EnumerationLimits& limits) {
  spec.validate();
  if (spec.n > limits.max_n) {
    throw std::length_error(spec.to_string() +
                            ": chain size exceeds the enumeration cap (" +
                            std::to_string(limits.max_n) + ")");
  }

  ElementStore store;
  store.spec_ = spec;
  store.has_zero_ = spec.is_rees();
  store.elements_ = structural_enumerate(spec, limits);
  sort_canonically(store.elements_);

  if (filter_candidate_count(spec.n) <= kFilterOracleCeiling) {
    std::vector<PartialMap> filtered = filter_enumerate(spec);
    sort_canonically(filtered);
    if (filtered != store.elements_) {
      throw std::logic_error(spec.to_string() +
                             ": structural and filter enumerations disagree");
    }
  }

  store.index_.reserve(store.elements_.size() * 2);
  for (std::size_t i = 0; i < store.elements_.size(); ++i) {
    const auto [it, inserted] = store.index_.emplace(
        store.elements_[i], static_cast<ElementIndex>(i));
    if (!inserted) {
      throw std::logic_error("enumeration produced a duplicate element");
    }
  }

  store.identity_ = std::nullopt;
  const ElementIndex id = store.index_of(PartialMap::identity(spec.n));
  if (id != kNoIndex) {
    store.identity_ = id;
  }

  // Product memoization: full Cayley tables only for small stores; the
  // quadratic table is the memory bottleneck, not composition.
  if (store.size() <= 4096) {
    const std::size_t m = store.elements_.size();
    store.table_.assign(m * m, kNoIndex);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        store.table_[i * m + j] = store.compute_product(
            static_cast<ElementIndex>(i), static_cast<ElementIndex>(j));
      }
    }
  }
  return store;
}

ElementIndex ElementStore::index_of(const PartialMap& map) const {
  const auto it = index_.find(map);
  return it == index_.end() ? kNoIndex : it->second;
}

ElementIndex ElementStore::compute_product(ElementIndex i,
                                           ElementIndex j) const {
  const PartialMap composed = compose(elements_[i], elements_[j]);
  if (spec_.is_rees() && composed.height() < spec_.p) {
    return zero_index();
  }
  const ElementIndex result = index_of(composed);
  if (result == kNoIndex) {
    throw std::logic_error(spec_.to_string() +
                           ": product left the store; family is not closed");
  }
  return result;
}

ElementIndex ElementStore::product(ElementIndex i, ElementIndex j) const {
  if (is_zero(i) || is_zero(j)) {
    return zero_index();
  }
  if (!table_.empty()) {
    return table_[static_cast<std::size_t>(i) * elements_.size() +
                  static_cast<std::size_t>(j)];
  }
  return compute_product(i, j);
}

std::string ElementStore::element_text(ElementIndex i) const {
  return is_zero(i) ? "0" : to_text(elements_[i]);
}

std::vector<ElementIndex> ElementStore::idempotent_indices(
    bool include_zero) const {
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (is_idempotent(elements_[i])) {
      out.push_back(static_cast<ElementIndex>(i));
    }
  }
  if (include_zero && has_zero_) {
    out.push_back(zero_index());
  }
  return out;
}

std::vector<ElementIndex> ElementStore::height_slice(int p) const {
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].height() == p) {
      out.push_back(static_cast<ElementIndex>(i));
    }
  }
  return out;
}

std::vector<ElementIndex> closure_indices(const ElementStore& store,
                                          std::span<const ElementIndex> gens) {
  std::vector<char> in(store.size(), 0);
  std::vector<ElementIndex> members;
  for (ElementIndex g : gens) {
    if (g < 0 || static_cast<std::size_t>(g) >= store.size()) {
      throw std::invalid_argument("closure: generator index out of range");
    }
    if (!in[static_cast<std::size_t>(g)]) {
      in[static_cast<std::size_t>(g)] = 1;
      members.push_back(g);
    }
  }
  const auto add = [&](ElementIndex x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      members.push_back(x);
    }
  };
  for (std::size_t next = 0; next < members.size(); ++next) {
    const ElementIndex x = members[next];
    for (std::size_t k = 0; k < members.size(); ++k) {
      add(store.product(x, members[k]));
      add(store.product(members[k], x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

ClosureResult closure(std::span<const PartialMap> generators,
                      const MonoidSpec& spec,
                      const EnumerationLimits& limits) {
  const ElementStore store = ElementStore::enumerate(spec, limits);
  std::vector<ElementIndex> gens;
  gens.reserve(generators.size());
  for (const PartialMap& g : generators) {
    const ElementIndex i = store.index_of(g);
    if (i == kNoIndex || !is_member(g, spec)) {
      throw std::invalid_argument("closure: generator " + to_text(g) +
                                  " is not a member of " + spec.to_string());
    }
    gens.push_back(i);
  }
  const std::vector<ElementIndex> members = closure_indices(store, gens);
  ClosureResult result;
  result.reached_zero =
      store.has_zero() &&
      std::find(members.begin(), members.end(), store.zero_index()) !=
          members.end();
  for (ElementIndex i : members) {
    result.elements.push_back(store.element_text(i));
  }
  result.equals_family = members.size() == store.size();
  return result;
}

std::vector<PartialMap> idempotents_of_height(int n, int height,
                                              Family family) {
  std::vector<PartialMap> out;
  if (height == 0) {
    if (!family_requires_one(family)) {
      out.emplace_back(n);
    }
    return out;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (family_requires_one(family) && !(mask & 1)) continue;
    if (family_excludes_one(family) && (mask & 1)) continue;
    const std::vector<int> domain_points = PointSet::from_mask(mask).points();
    const int d = static_cast<int>(domain_points.size());
    if (d < height) continue;
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (d - 1));
         ++cuts) {
      if (__builtin_popcountll(cuts) + 1 != height) continue;
      PartialMap map(n);
      int block_min = domain_points[0];
      for (int i = 0; i < d; ++i) {
        if (i > 0 && ((cuts >> (i - 1)) & 1)) {
          block_min = domain_points[i];
        }
        map = map.with(domain_points[i], block_min);
      }
      out.push_back(std::move(map));
    }
  }
  sort_canonically(out);
  return out;
}

bool canonical_less(const PartialMap& a, const PartialMap& b) {
  return CanonicalKey(a) < CanonicalKey(b);
}

}  // namespace schroeder
