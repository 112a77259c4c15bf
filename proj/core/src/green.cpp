#include "schroeder/green.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "schroeder/block_form.hpp"
#include "schroeder/text_format.hpp"

namespace schroeder {

namespace {

template <typename Key>
Classification classify_by_keys(Relation rel, const std::vector<Key>& keys) {
  std::map<Key, std::vector<ElementIndex>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    groups[keys[i]].push_back(static_cast<ElementIndex>(i));
  }
  Classification result;
  result.relation = rel;
  result.classes.reserve(groups.size());
  for (auto& [key, members] : groups) {
    result.classes.push_back(std::move(members));
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  result.class_of.assign(keys.size(), -1);
  for (std::size_t c = 0; c < result.classes.size(); ++c) {
    for (ElementIndex i : result.classes[c]) {
      result.class_of[static_cast<std::size_t>(i)] = static_cast<int>(c);
    }
  }
  return result;
}

// Principal ideal of a as a bitset over element indices. Left ideals
// collect x.a over x in S^1, right ideals a.x.
std::vector<std::uint64_t> principal_ideal_bits(const ElementStore& store,
                                                ElementIndex a, bool left) {
  const std::size_t m = store.size();
  std::vector<std::uint64_t> bits((m + 63) / 64, 0);
  const auto set = [&](ElementIndex v) {
    bits[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  };
  set(a);  // the adjoined identity's contribution
  for (std::size_t x = 0; x < m; ++x) {
    const ElementIndex xi = static_cast<ElementIndex>(x);
    set(left ? store.product(xi, a) : store.product(a, xi));
  }
  return bits;
}

// Kernel of the translation map x -> a.x (or x.a) over S^1, canonically
// labelled by first occurrence. Two elements are L*-related exactly when
// their right-translation kernels agree, R*-related for left translations.
std::vector<int> translation_kernel(const ElementStore& store, ElementIndex a,
                                    bool right_translation,
                                    std::vector<int>& scratch) {
  const std::size_t m = store.size();
  std::vector<int> canon(m + 1);
  int next_label = 0;
  const auto label = [&](std::size_t slot, ElementIndex value) {
    if (scratch[static_cast<std::size_t>(value)] < 0) {
      scratch[static_cast<std::size_t>(value)] = next_label++;
    }
    canon[slot] = scratch[static_cast<std::size_t>(value)];
  };
  label(0, a);  // x = adjoined identity
  for (std::size_t x = 0; x < m; ++x) {
    const ElementIndex xi = static_cast<ElementIndex>(x);
    label(x + 1, right_translation ? store.product(a, xi)
                                   : store.product(xi, a));
  }
  std::fill(scratch.begin(), scratch.end(), -1);
  return canon;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t size) : parent(size) {
    for (std::size_t i = 0; i < size; ++i) {
      parent[i] = static_cast<int>(i);
    }
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
};

Classification join_classes(Relation rel, const Classification& first,
                            const Classification& second) {
  const std::size_t m = first.class_of.size();
  UnionFind uf(m);
  for (const auto& cls : first.classes) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      uf.unite(cls[0], cls[i]);
    }
  }
  for (const auto& cls : second.classes) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      uf.unite(cls[0], cls[i]);
    }
  }
  std::vector<int> keys(m);
  for (std::size_t i = 0; i < m; ++i) {
    keys[i] = uf.find(static_cast<int>(i));
  }
  return classify_by_keys(rel, keys);
}

Classification meet_classes(Relation rel, const Classification& first,
                            const Classification& second) {
  std::vector<std::pair<int, int>> keys(first.class_of.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    keys[i] = {first.class_of[i], second.class_of[i]};
  }
  return classify_by_keys(rel, keys);
}

std::uint64_t pack_pair(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Verifies D = L o R = R o L over all class profiles; both identities are
// theorems for arbitrary semigroups, so a failure means a broken oracle.
void verify_d_composition(const ElementStore& store, const Classification& l,
                          const Classification& r, const Classification& d) {
  std::unordered_set<std::uint64_t> present;
  std::map<std::pair<int, int>, ElementIndex> profile_rep;
  for (std::size_t i = 0; i < store.size(); ++i) {
    const std::pair<int, int> profile{l.class_of[i], r.class_of[i]};
    present.insert(pack_pair(profile.first, profile.second));
    profile_rep.try_emplace(profile, static_cast<ElementIndex>(i));
  }
  for (const auto& [p1, a] : profile_rep) {
    for (const auto& [p2, b] : profile_rep) {
      const bool related = d.related(a, b);
      const bool lr = present.contains(pack_pair(p1.first, p2.second));
      const bool rl = present.contains(pack_pair(p2.first, p1.second));
      if (related != lr || related != rl) {
        throw std::logic_error("Green's D oracle disagrees with L o R on " +
                               store.element_text(a) + ", " +
                               store.element_text(b));
      }
    }
  }
}

}  // namespace

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::L:
      return "L";
    case Relation::R:
      return "R";
    case Relation::H:
      return "H";
    case Relation::D:
      return "D";
    case Relation::LStar:
      return "L*";
    case Relation::RStar:
      return "R*";
    case Relation::HStar:
      return "H*";
    case Relation::DStar:
      return "D*";
    case Relation::JStar:
      return "J*";
  }
  return "?";
}

Relation parse_relation(std::string_view tok) {
  if (tok == "l") return Relation::L;
  if (tok == "r") return Relation::R;
  if (tok == "h") return Relation::H;
  if (tok == "d") return Relation::D;
  if (tok == "lstar") return Relation::LStar;
  if (tok == "rstar") return Relation::RStar;
  if (tok == "hstar") return Relation::HStar;
  if (tok == "dstar") return Relation::DStar;
  if (tok == "jstar") return Relation::JStar;
  throw std::invalid_argument(
      "unknown relation '" + std::string(tok) +
      "' (expected l|r|h|d|lstar|rstar|hstar|dstar|jstar)");
}

bool is_starred(Relation r) {
  return r == Relation::LStar || r == Relation::RStar ||
         r == Relation::HStar || r == Relation::DStar || r == Relation::JStar;
}

Classification green_classes(const ElementStore& store, Relation r) {
  const std::size_t m = store.size();
  switch (r) {
    case Relation::L:
    case Relation::R: {
      std::vector<std::vector<std::uint64_t>> keys;
      keys.reserve(m);
      for (std::size_t i = 0; i < m; ++i) {
        keys.push_back(principal_ideal_bits(
            store, static_cast<ElementIndex>(i), r == Relation::L));
      }
      return classify_by_keys(r, keys);
    }
    case Relation::H:
      return meet_classes(Relation::H, green_classes(store, Relation::L),
                          green_classes(store, Relation::R));
    case Relation::D: {
      const Classification l = green_classes(store, Relation::L);
      const Classification rr = green_classes(store, Relation::R);
      Classification d = join_classes(Relation::D, l, rr);
      verify_d_composition(store, l, rr, d);
      return d;
    }
    default:
      throw std::invalid_argument("green_classes handles L, R, H, D only");
  }
}

Classification starred_classes(const ElementStore& store, Relation r) {
  const std::size_t m = store.size();
  switch (r) {
    case Relation::LStar:
    case Relation::RStar: {
      std::vector<int> scratch(m + 1, -1);
      std::vector<std::vector<int>> keys;
      keys.reserve(m);
      for (std::size_t i = 0; i < m; ++i) {
        keys.push_back(translation_kernel(store, static_cast<ElementIndex>(i),
                                          r == Relation::LStar, scratch));
      }
      return classify_by_keys(r, keys);
    }
    case Relation::HStar:
      return meet_classes(Relation::HStar,
                          starred_classes(store, Relation::LStar),
                          starred_classes(store, Relation::RStar));
    case Relation::DStar:
      return join_classes(Relation::DStar,
                          starred_classes(store, Relation::LStar),
                          starred_classes(store, Relation::RStar));
    default:
      throw std::invalid_argument(
          "starred_classes handles L*, R*, H*, D* only");
  }
}

namespace {

// Saturates a principal *-ideal: starting from one D*-class, close under
// "take x.t.y, then absorb its whole D*-class".
std::vector<ElementIndex> saturate_star_ideal(const ElementStore& store,
                                              const Classification& dstar,
                                              int start_class) {
  const std::size_t m = store.size();
  std::vector<char> class_in(dstar.count(), 0);
  std::vector<int> worklist = {start_class};
  class_in[static_cast<std::size_t>(start_class)] = 1;
  const auto absorb = [&](ElementIndex v) {
    const int c = dstar.class_of[static_cast<std::size_t>(v)];
    if (!class_in[static_cast<std::size_t>(c)]) {
      class_in[static_cast<std::size_t>(c)] = 1;
      worklist.push_back(c);
    }
  };
  for (std::size_t next = 0; next < worklist.size(); ++next) {
    for (ElementIndex t : dstar.classes[static_cast<std::size_t>(worklist[next])]) {
      // u runs over S^1 t, v over u S^1.
      std::vector<ElementIndex> lefts = {t};
      for (std::size_t x = 0; x < m; ++x) {
        lefts.push_back(store.product(static_cast<ElementIndex>(x), t));
      }
      for (ElementIndex u : lefts) {
        absorb(u);
        for (std::size_t y = 0; y < m; ++y) {
          absorb(store.product(u, static_cast<ElementIndex>(y)));
        }
      }
    }
  }
  std::vector<ElementIndex> ideal;
  for (std::size_t c = 0; c < dstar.count(); ++c) {
    if (class_in[c]) {
      ideal.insert(ideal.end(), dstar.classes[c].begin(),
                   dstar.classes[c].end());
    }
  }
  std::sort(ideal.begin(), ideal.end());
  return ideal;
}

}  // namespace

std::vector<ElementIndex> principal_star_ideal(const ElementStore& store,
                                               ElementIndex a) {
  const Classification dstar = starred_classes(store, Relation::DStar);
  return saturate_star_ideal(store, dstar,
                             dstar.class_of[static_cast<std::size_t>(a)]);
}

Classification j_star_classes(const ElementStore& store) {
  const Classification dstar = starred_classes(store, Relation::DStar);
  std::vector<std::vector<ElementIndex>> ideal_of_class(dstar.count());
  for (std::size_t c = 0; c < dstar.count(); ++c) {
    ideal_of_class[c] = saturate_star_ideal(store, dstar, static_cast<int>(c));
  }
  std::vector<std::vector<ElementIndex>> keys;
  keys.reserve(store.size());
  for (std::size_t i = 0; i < store.size(); ++i) {
    keys.push_back(ideal_of_class[static_cast<std::size_t>(
        dstar.class_of[i])]);
  }
  return classify_by_keys(Relation::JStar, keys);
}

Classification starred_via_full_monoid(const ElementStore& store,
                                       Relation r) {
  if (r != Relation::LStar && r != Relation::RStar) {
    throw std::invalid_argument(
        "starred_via_full_monoid handles L* and R* only");
  }
  const Family family = store.spec().family;
  if (family != Family::LS && family != Family::SS) {
    throw std::invalid_argument(
        "the inverse-ideal route applies to the LS and SS families");
  }
  const int n = store.spec().n;
  if (n > 5) {
    throw std::length_error(
        "inverse-ideal route: full partial transformation monoid too large");
  }

  // Enumerate the full partial transformation monoid.
  std::vector<PartialMap> universe;
  std::vector<int> odometer(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> pairs;
  while (true) {
    pairs.clear();
    for (int x = 1; x <= n; ++x) {
      if (odometer[x - 1] != 0) {
        pairs.emplace_back(x, odometer[x - 1]);
      }
    }
    universe.push_back(
        PartialMap::from_pairs(n, std::span<const std::pair<int, int>>(pairs)));
    int pos = 0;
    while (pos < n && odometer[pos] == n) {
      odometer[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++odometer[pos];
  }
  std::unordered_map<PartialMap, std::size_t, PartialMapHash> universe_index;
  universe_index.reserve(universe.size() * 2);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    universe_index.emplace(universe[i], i);
  }

  // Green's L (or R) of the full monoid, restricted to the store: compare
  // principal left (right) ideals inside it.
  const std::size_t words = (universe.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> keys;
  keys.reserve(store.map_count());
  for (std::size_t i = 0; i < store.map_count(); ++i) {
    const PartialMap& a = store.map_at(static_cast<ElementIndex>(i));
    std::vector<std::uint64_t> bits(words, 0);
    const auto set = [&](const PartialMap& v) {
      const std::size_t vi = universe_index.at(v);
      bits[vi / 64] |= std::uint64_t{1} << (vi % 64);
    };
    set(a);
    for (const PartialMap& x : universe) {
      set(r == Relation::LStar ? compose(x, a) : compose(a, x));
    }
    keys.push_back(std::move(bits));
  }
  return classify_by_keys(r, keys);
}

bool char_L(const PartialMap& a, const PartialMap& b) {
  if (a.chain_size() != b.chain_size()) {
    throw std::invalid_argument("char_L: mismatched chain sizes");
  }
  const BlockForm fa = to_block_form(a);
  const BlockForm fb = to_block_form(b);
  if (fa.images != fb.images) {
    return false;
  }
  for (std::size_t i = 0; i < fa.blocks.size(); ++i) {
    if (fa.block_min(i) != fb.block_min(i)) {
      return false;
    }
  }
  return true;
}

bool char_L_star(const PartialMap& a, const PartialMap& b) {
  if (a.chain_size() != b.chain_size()) {
    throw std::invalid_argument("char_L_star: mismatched chain sizes");
  }
  return a.image() == b.image();
}

bool char_R_star(const PartialMap& a, const PartialMap& b) {
  if (a.chain_size() != b.chain_size()) {
    throw std::invalid_argument("char_R_star: mismatched chain sizes");
  }
  return kernel_classes(a).blocks == kernel_classes(b).blocks;
}

bool char_H_star(const PartialMap& a, const PartialMap& b) { return a == b; }

bool char_D_star(const PartialMap& a, const PartialMap& b) {
  return a.height() == b.height();
}

DStarCompositionReport d_star_composition_check(const ElementStore& store) {
  const Classification l = starred_classes(store, Relation::LStar);
  const Classification r = starred_classes(store, Relation::RStar);
  const Classification d = join_classes(Relation::DStar, l, r);

  std::unordered_set<std::uint64_t> present;
  std::map<std::pair<int, int>, ElementIndex> profile_rep;
  for (std::size_t i = 0; i < store.size(); ++i) {
    const std::pair<int, int> profile{l.class_of[i], r.class_of[i]};
    present.insert(pack_pair(profile.first, profile.second));
    profile_rep.try_emplace(profile, static_cast<ElementIndex>(i));
  }

  // Incidence between L*-classes and R*-classes (classes sharing an
  // element), as sorted adjacency lists.
  std::vector<std::vector<int>> r_of_l(l.count());
  std::vector<std::vector<int>> l_of_r(r.count());
  for (const auto& [profile, rep] : profile_rep) {
    r_of_l[static_cast<std::size_t>(profile.first)].push_back(profile.second);
    l_of_r[static_cast<std::size_t>(profile.second)].push_back(profile.first);
  }

  const auto intersects = [](const std::vector<int>& a,
                             const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      (a[i] < b[j]) ? ++i : ++j;
    }
    return false;
  };

  DStarCompositionReport report;
  bool cover1 = true, cover2 = true, rlr_ok = true, lrl_ok = true,
       lr_eq_rl = true;
  for (const auto& [p1, a] : profile_rep) {
    for (const auto& [p2, b] : profile_rep) {
      const bool related = d.related(a, b);
      const bool lr = present.contains(pack_pair(p1.first, p2.second));
      const bool rl = present.contains(pack_pair(p2.first, p1.second));
      const bool rlr = intersects(l_of_r[static_cast<std::size_t>(p1.second)],
                                  l_of_r[static_cast<std::size_t>(p2.second)]);
      const bool lrl = intersects(r_of_l[static_cast<std::size_t>(p1.first)],
                                  r_of_l[static_cast<std::size_t>(p2.first)]);
      if (lr != rl) lr_eq_rl = false;
      if (related) {
        if (!(p1.first == p2.first || p1.second == p2.second)) cover1 = false;
        if (!(lr || rl)) cover2 = false;
        if (!rlr) rlr_ok = false;
        if (!lrl) lrl_ok = false;
      }
    }
  }
  report.rlr_equals_d_star = rlr_ok;
  report.lrl_equals_d_star = lrl_ok;
  report.lr_equals_rl = lr_eq_rl;
  report.alternation_depth = cover1 ? 1 : (cover2 ? 2 : (rlr_ok && lrl_ok ? 3 : -1));

  if (!lr_eq_rl) {
    // Smallest element pair related via L* o R* but not R* o L*, plus the
    // linking element.
    for (std::size_t a = 0; a < store.size() && !report.asymmetry_witness;
         ++a) {
      for (std::size_t b = 0; b < store.size(); ++b) {
        const bool lr = present.contains(
            pack_pair(l.class_of[a], r.class_of[b]));
        const bool rl = present.contains(
            pack_pair(l.class_of[b], r.class_of[a]));
        if (lr && !rl) {
          DStarWitness witness;
          witness.a = static_cast<ElementIndex>(a);
          witness.b = static_cast<ElementIndex>(b);
          for (std::size_t c = 0; c < store.size(); ++c) {
            if (l.class_of[c] == l.class_of[a] &&
                r.class_of[c] == r.class_of[b]) {
              witness.delta = static_cast<ElementIndex>(c);
              break;
            }
          }
          report.asymmetry_witness = witness;
          break;
        }
      }
    }
  }
  return report;
}

AbundanceReport abundance_report(const ElementStore& store) {
  AbundanceReport report;
  report.l_star = starred_classes(store, Relation::LStar);
  report.r_star = starred_classes(store, Relation::RStar);
  std::vector<char> idempotent(store.size(), 0);
  for (ElementIndex e : store.idempotent_indices(/*include_zero=*/true)) {
    idempotent[static_cast<std::size_t>(e)] = 1;
  }
  const auto collect = [&](const Classification& cls) {
    std::vector<std::vector<ElementIndex>> out(cls.count());
    for (std::size_t c = 0; c < cls.count(); ++c) {
      for (ElementIndex i : cls.classes[c]) {
        if (idempotent[static_cast<std::size_t>(i)]) {
          out[c].push_back(i);
        }
      }
    }
    return out;
  };
  report.l_class_idempotents = collect(report.l_star);
  report.r_class_idempotents = collect(report.r_star);
  report.left_abundant =
      std::all_of(report.l_class_idempotents.begin(),
                  report.l_class_idempotents.end(),
                  [](const auto& v) { return !v.empty(); });
  report.right_abundant =
      std::all_of(report.r_class_idempotents.begin(),
                  report.r_class_idempotents.end(),
                  [](const auto& v) { return !v.empty(); });
  report.unique_idempotent_per_r_class =
      std::all_of(report.r_class_idempotents.begin(),
                  report.r_class_idempotents.end(),
                  [](const auto& v) { return v.size() == 1; });
  return report;
}

RegularityReport regularity_report(const ElementStore& store) {
  RegularityReport report;
  const std::size_t m = store.size();
  for (std::size_t a = 0; a < m; ++a) {
    const ElementIndex ai = static_cast<ElementIndex>(a);
    for (std::size_t b = 0; b < m; ++b) {
      if (store.product(store.product(ai, static_cast<ElementIndex>(b)), ai) ==
          ai) {
        report.regular.push_back(ai);
        break;
      }
    }
  }
  report.idempotents = store.idempotent_indices(/*include_zero=*/true);
  report.regular_equals_idempotent = report.regular == report.idempotents;
  return report;
}

std::string eggbox_render(const ElementStore& store, const Classification& l,
                          const Classification& r) {
  if (l.class_of.size() != store.size() || r.class_of.size() != store.size()) {
    throw std::invalid_argument("eggbox_render: classifications do not match "
                                "the store");
  }
  const bool l_kind = l.relation == Relation::L || l.relation == Relation::LStar;
  const bool r_kind = r.relation == Relation::R || r.relation == Relation::RStar;
  if (!l_kind || !r_kind) {
    throw std::invalid_argument(
        "eggbox_render: expected an L-kind and an R-kind classification");
  }
  const bool starred = is_starred(l.relation);
  const Classification d =
      join_classes(starred ? Relation::DStar : Relation::D, l, r);

  std::vector<char> idempotent(store.size(), 0);
  for (ElementIndex e : store.idempotent_indices(/*include_zero=*/true)) {
    idempotent[static_cast<std::size_t>(e)] = 1;
  }

  std::string out;
  const std::string d_name = starred ? "D*-class" : "D-class";
  for (std::size_t c = 0; c < d.count(); ++c) {
    const auto& members = d.classes[c];
    std::vector<int> rows, cols;
    for (ElementIndex i : members) {
      rows.push_back(r.class_of[static_cast<std::size_t>(i)]);
      cols.push_back(l.class_of[static_cast<std::size_t>(i)]);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    const int height = store.height_of(members.front());
    out += d_name + " " + std::to_string(c + 1) + " (" +
           (height < 0 ? std::string("zero")
                       : "height " + std::to_string(height)) +
           ", " + std::to_string(members.size()) + " element" +
           (members.size() == 1 ? "" : "s") + "): " +
           std::to_string(rows.size()) + " x " + std::to_string(cols.size()) +
           "\n";

    std::vector<std::string> col_labels;
    for (int col : cols) {
      col_labels.push_back(
          store.element_text(l.representative(col)));
    }
    std::vector<std::string> row_labels;
    std::size_t row_width = 0;
    for (int row : rows) {
      row_labels.push_back(store.element_text(r.representative(row)));
      row_width = std::max(row_width, row_labels.back().size());
    }

    std::string header(row_width + 2, ' ');
    std::vector<std::size_t> col_widths;
    for (const std::string& label : col_labels) {
      col_widths.push_back(std::max<std::size_t>(label.size(), 2));
      header += " " + label;
      header.append(col_widths.back() - label.size(), ' ');
    }
    out += header + "\n";

    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      std::string line = "  " + row_labels[ri];
      line.append(row_width - row_labels[ri].size(), ' ');
      for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        std::size_t count = 0;
        bool has_idempotent = false;
        for (ElementIndex i : members) {
          if (r.class_of[static_cast<std::size_t>(i)] == rows[ri] &&
              l.class_of[static_cast<std::size_t>(i)] == cols[ci]) {
            ++count;
            has_idempotent |= idempotent[static_cast<std::size_t>(i)] != 0;
          }
        }
        std::string cell =
            count == 0 ? "." : std::to_string(count) + (has_idempotent ? "*" : "");
        line += " " + cell;
        line.append(col_widths[ci] > cell.size() ? col_widths[ci] - cell.size()
                                                 : 0,
                    ' ');
      }
      out += line + "\n";
    }
  }
  return out;
}

std::map<int, std::size_t> class_count_by_height(const ElementStore& store,
                                                 const Classification& c) {
  std::map<int, std::set<int>> seen;
  for (std::size_t i = 0; i < store.size(); ++i) {
    seen[store.height_of(static_cast<ElementIndex>(i))].insert(c.class_of[i]);
  }
  std::map<int, std::size_t> counts;
  for (const auto& [height, ids] : seen) {
    counts[height] = ids.size();
  }
  return counts;
}

}  // namespace schroeder
