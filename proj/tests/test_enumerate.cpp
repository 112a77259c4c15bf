#include <doctest.h>

#include <stdexcept>

#include "schroeder/combinatorics.hpp"
#include "schroeder/element_store.hpp"
#include "schroeder/text_format.hpp"

using namespace schroeder;

TEST_CASE("LS_1 is the empty map and the identity") {
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(1));
  REQUIRE(ls.size() == 2);
  CHECK(ls.element_text(0) == "-");
  CHECK(ls.element_text(1) == "1->1");
}

TEST_CASE("orders match the Schroeder numbers, n <= 6") {
  // enumerate() itself cross-checks the structural generator against the
  // filter oracle, so a count here pins both generators to the formula.
  for (int n = 0; n <= 6; ++n) {
    CHECK(ElementStore::enumerate(MonoidSpec::ls(n)).size() ==
          schroeder_number(SchroederKind::Large, n));
  }
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t small = schroeder_number(SchroederKind::Small, n);
    CHECK(ElementStore::enumerate(MonoidSpec::ss(n)).size() == small);
    CHECK(ElementStore::enumerate(MonoidSpec::ss_prime(n)).size() == small);
  }
}

TEST_CASE("deterministic element order") {
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(2));
  const std::vector<std::string> expected = {"-",      "1->1",     "2->1",
                                             "2->2",   "1,2->1",   "1->1;2->2"};
  REQUIRE(ls.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(ls.element_text(static_cast<ElementIndex>(i)) == expected[i]);
  }
}

TEST_CASE("products: identity, zero, and the quotient threshold") {
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(3));
  const ElementIndex id = *ls.identity_index();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    CHECK(ls.product(id, static_cast<ElementIndex>(i)) ==
          static_cast<ElementIndex>(i));
    CHECK(ls.product(static_cast<ElementIndex>(i), id) ==
          static_cast<ElementIndex>(i));
  }

  const ElementStore rls = ElementStore::enumerate(MonoidSpec::rls(3, 2));
  const ElementIndex a = rls.index_of(parse_element_text(3, "1->1;2->2"));
  const ElementIndex b = rls.index_of(parse_element_text(3, "1->1;3->3"));
  REQUIRE(a != kNoIndex);
  REQUIRE(b != kNoIndex);
  CHECK(rls.product(a, b) == rls.zero_index());  // composition has height 1
  CHECK(rls.product(rls.zero_index(), a) == rls.zero_index());
  CHECK(rls.product(a, rls.zero_index()) == rls.zero_index());
  CHECK(rls.element_text(rls.zero_index()) == "0");
}

TEST_CASE("SS and SS' are closed under composition, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const MonoidSpec spec :
         {MonoidSpec::ss(n), MonoidSpec::ss_prime(n)}) {
      const ElementStore store = ElementStore::enumerate(spec);
      for (std::size_t i = 0; i < store.size(); ++i) {
        for (std::size_t j = 0; j < store.size(); ++j) {
          const PartialMap product =
              compose(store.map_at(static_cast<ElementIndex>(i)),
                      store.map_at(static_cast<ElementIndex>(j)));
          REQUIRE(is_member(product, spec));
        }
      }
    }
  }
}

TEST_CASE("K(n,p) and M(n,p) are two-sided ideals, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    for (int p = 1; p < n; ++p) {
      const ElementStore parent = ElementStore::enumerate(MonoidSpec::ls(n));
      const MonoidSpec ideal_spec = MonoidSpec::k(n, p);
      const ElementStore ideal = ElementStore::enumerate(ideal_spec);
      for (std::size_t s = 0; s < parent.size(); ++s) {
        for (std::size_t k = 0; k < ideal.size(); ++k) {
          const PartialMap& outer = parent.map_at(static_cast<ElementIndex>(s));
          const PartialMap& inner = ideal.map_at(static_cast<ElementIndex>(k));
          REQUIRE(is_member(compose(outer, inner), ideal_spec));
          REQUIRE(is_member(compose(inner, outer), ideal_spec));
        }
      }
    }
  }
}

TEST_CASE("Rees multiplication is associative, exhaustive n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 1; p <= n; ++p) {
      for (const MonoidSpec spec :
           {MonoidSpec::rls(n, p), MonoidSpec::rss(n, p)}) {
        const ElementStore store = ElementStore::enumerate(spec);
        const std::size_t m = store.size();
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) {
            const ElementIndex ab = store.product(static_cast<ElementIndex>(a),
                                                  static_cast<ElementIndex>(b));
            for (std::size_t c = 0; c < m; ++c) {
              const ElementIndex bc =
                  store.product(static_cast<ElementIndex>(b),
                                static_cast<ElementIndex>(c));
              REQUIRE(store.product(ab, static_cast<ElementIndex>(c)) ==
                      store.product(static_cast<ElementIndex>(a), bc));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("closure: fixed points of the operation") {
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(3));
  const std::vector<PartialMap> just_identity = {PartialMap::identity(3)};
  const ClosureResult identity_closure =
      closure(std::span<const PartialMap>(just_identity), MonoidSpec::ls(3));
  CHECK(identity_closure.elements.size() == 1);
  CHECK_FALSE(identity_closure.equals_family);

  std::vector<PartialMap> everything;
  for (std::size_t i = 0; i < ls.map_count(); ++i) {
    everything.push_back(ls.map_at(static_cast<ElementIndex>(i)));
  }
  CHECK(closure(std::span<const PartialMap>(everything), MonoidSpec::ls(3))
            .equals_family);
}

TEST_CASE("the top-slice idempotents close onto K(n, n-1), n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    const std::vector<PartialMap> generators =
        idempotents_of_height(n, n - 1, Family::LS);
    const ClosureResult result = closure(
        std::span<const PartialMap>(generators), MonoidSpec::k(n, n - 1));
    CHECK(result.equals_family);
  }
}

TEST_CASE("closure rejects non-members") {
  const std::vector<PartialMap> bad = {
      PartialMap::from_pairs(3, {{2, 2}, {3, 1}})};
  CHECK_THROWS_AS(
      closure(std::span<const PartialMap>(bad), MonoidSpec::ls(3)),
      std::invalid_argument);
}

TEST_CASE("idempotent listings") {
  CHECK(ElementStore::enumerate(MonoidSpec::ss(3)).idempotent_indices().size() ==
        9);
  CHECK(ElementStore::enumerate(MonoidSpec::ls(1)).idempotent_indices().size() ==
        2);

  const ElementStore rls = ElementStore::enumerate(MonoidSpec::rls(3, 2));
  const auto nonzero = rls.idempotent_indices();
  const auto with_zero = rls.idempotent_indices(/*include_zero=*/true);
  CHECK(with_zero.size() == nonzero.size() + 1);
  // Nonzero idempotents of the quotient are the height-p idempotents.
  CHECK(nonzero.size() == idempotents_of_height(3, 2, Family::LS).size());
}

TEST_CASE("height slices") {
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(3));
  CHECK(ls.height_slice(3).size() == 1);
  CHECK(ls.map_at(ls.height_slice(3).front()) == PartialMap::identity(3));
  CHECK(ls.height_slice(0).size() == 1);
  CHECK(ls.map_at(ls.height_slice(0).front()).is_empty_map());
  // Both independent generators agree on this count; the constant is a
  // sum of min(A) over the seven single-block domains.
  CHECK(ls.height_slice(1).size() == 11);
}

TEST_CASE("idempotents_of_height matches the stores") {
  for (int n = 1; n <= 4; ++n) {
    const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(n));
    for (int p = 0; p <= n; ++p) {
      std::size_t from_store = 0;
      for (ElementIndex e : ls.idempotent_indices()) {
        if (ls.map_at(e).height() == p) {
          ++from_store;
        }
      }
      CHECK(idempotents_of_height(n, p, Family::LS).size() == from_store);
    }
  }
}

TEST_CASE("enumeration caps produce clean errors") {
  EnumerationLimits tight;
  tight.max_n = 2;
  CHECK_THROWS_AS(ElementStore::enumerate(MonoidSpec::ls(3), tight),
                  std::length_error);
  EnumerationLimits tiny;
  tiny.max_elements = 3;
  CHECK_THROWS_AS(ElementStore::enumerate(MonoidSpec::ls(3), tiny),
                  std::length_error);
}

TEST_CASE("monoid spec validation and parsing") {
  CHECK_THROWS_AS(MonoidSpec::rls(3, 0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(MonoidSpec::k(3, 4).validate(), std::invalid_argument);
  CHECK_THROWS_AS(MonoidSpec::ss(0).validate(), std::invalid_argument);
  CHECK(MonoidSpec::parse_family("rss") == Family::RSS);
  CHECK_THROWS_AS(MonoidSpec::parse_family("xyz"), std::invalid_argument);
  CHECK(MonoidSpec::rls(3, 2).to_string() == "RLS_3(2)");
}
