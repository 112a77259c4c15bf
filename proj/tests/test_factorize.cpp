#include <doctest.h>

#include <stdexcept>

#include "schroeder/element_store.hpp"
#include "schroeder/factorize.hpp"
#include "schroeder/text_format.hpp"

using namespace schroeder;

TEST_CASE("inverse witness on the worked example") {
  const PartialMap alpha = parse_element_text(3, "1,2->1;3->2");
  const InverseWitnessResult w = inverse_witness(alpha);
  CHECK(to_text(w.witness) == "1->1;2->3");
  CHECK(compose(compose(alpha, w.witness), alpha) == alpha);
  CHECK(w.image_identity == parse_element_text(3, "1->1;2->2"));
  CHECK(w.left_idempotent == parse_element_text(3, "1,2->1;3->3"));
  CHECK_FALSE(w.degenerate);

  const PartialMap id = PartialMap::identity(3);
  CHECK(inverse_witness(id).witness == id);

  CHECK(inverse_witness(PartialMap(3)).degenerate);
  CHECK_THROWS_AS(inverse_witness(PartialMap::from_pairs(3, {{2, 2}, {3, 1}})),
                  std::invalid_argument);
}

TEST_CASE("small-monoid members keep 1 fixed through the witness") {
  const ElementStore ss = ElementStore::enumerate(MonoidSpec::ss(3));
  for (std::size_t i = 0; i < ss.map_count(); ++i) {
    const PartialMap& alpha = ss.map_at(static_cast<ElementIndex>(i));
    const InverseWitnessResult w = inverse_witness(alpha);
    CHECK(w.witness(1) == 1);  // a_1 = t_1 = 1
    CHECK(is_member(w.left_idempotent, MonoidSpec::ss(3)));
  }
}

TEST_CASE("inverse witness packaged as a factorization") {
  const PartialMap alpha = parse_element_text(3, "1,2->1;3->2");
  const Factorization f = inverse_witness_factorization(alpha);
  CHECK(f.certificate == FactorizationCertificate::InverseWitness);
  CHECK(f.product() == alpha);
}

TEST_CASE("same-height factorization examples") {
  const PartialMap alpha = parse_element_text(3, "1,2->1;3->2");
  const Factorization f = idempotent_factorization(alpha);
  REQUIRE(f.factors.size() == 3);
  CHECK(to_text(f.factors[0]) == "1,2->1;3->3");
  CHECK(to_text(f.factors[1]) == "1->1;3->3");
  CHECK(f.skippable[1]);  // a_1 = t_1 = 1
  CHECK(to_text(f.factors[2]) == "1->1;2,3->2");
  CHECK_FALSE(f.skippable[2]);
  CHECK(f.product() == alpha);
  CHECK(f.certificate == FactorizationCertificate::SameHeight);

  // An idempotent input factors as itself with all movers skippable.
  const PartialMap eps = parse_element_text(3, "1,2->1;3->3");
  const Factorization g = idempotent_factorization(eps);
  CHECK(g.factors[0] == eps);
  for (std::size_t i = 1; i < g.factors.size(); ++i) {
    CHECK(g.skippable[i]);
  }

  const Factorization empty = idempotent_factorization(PartialMap(3));
  REQUIRE(empty.factors.size() == 1);
  CHECK(empty.factors[0].is_empty_map());
}

TEST_CASE("same-height factorization round-trips over LS_4") {
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(4));
  for (std::size_t i = 0; i < ls.map_count(); ++i) {
    const PartialMap& alpha = ls.map_at(static_cast<ElementIndex>(i));
    const Factorization f = idempotent_factorization(alpha);
    REQUIRE(f.product() == alpha);
    for (const PartialMap& factor : f.factors) {
      REQUIRE(is_idempotent(factor));
      if (!alpha.is_empty_map()) {
        REQUIRE(factor.height() == alpha.height());
      }
    }
  }
}

TEST_CASE("height descent on the worked examples") {
  // 1->1 in LS_3: the missing points 2 < 3 sit beyond the block.
  const Factorization a = height_descent(parse_element_text(3, "1->1"));
  CHECK(a.case_tag == "3.ii");
  REQUIRE(a.factors.size() == 2);
  CHECK(to_text(a.factors[0]) == "1->1;2->2");
  CHECK(to_text(a.factors[1]) == "1->1;3->3");
  CHECK(a.product() == parse_element_text(3, "1->1"));

  // A full map splits its big block.
  const Factorization b = height_descent(parse_element_text(3, "1,2,3->1"));
  CHECK(b.case_tag == "1.ii");
  REQUIRE(b.factors.size() == 2);
  CHECK(to_text(b.factors[0]) == "1->1;2,3->2");
  CHECK(to_text(b.factors[1]) == "1,2->1;3->3");
  CHECK(b.product() == parse_element_text(3, "1,2,3->1"));

  // Heights above n-2 cannot ascend.
  CHECK_THROWS_AS(height_descent(parse_element_text(3, "1->1;2->2")),
                  std::invalid_argument);
  CHECK_THROWS_AS(height_descent(parse_element_text(3, "1,2->1;3->2")),
                  std::invalid_argument);  // not idempotent
}

TEST_CASE("height descent falls back when no case matches") {
  // The only missing point of 2->2 in LS_3 precedes the block, a shape
  // the decision tree does not cover; the search must still succeed.
  const Factorization f = height_descent(parse_element_text(3, "2->2"));
  CHECK(f.case_tag == "fallback");
  CHECK_FALSE(f.template_ok);
  CHECK(f.fallback_activations == 1);
  CHECK(f.product() == parse_element_text(3, "2->2"));
  for (const PartialMap& factor : f.factors) {
    CHECK(is_idempotent(factor));
    CHECK(factor.height() == 2);
  }
}

TEST_CASE("height descent of the empty map") {
  const Factorization f = height_descent(PartialMap(3));
  CHECK(f.product().is_empty_map());
  for (const PartialMap& factor : f.factors) {
    CHECK(factor.height() == 1);
    CHECK(is_idempotent(factor));
  }
  CHECK_THROWS_AS(height_descent(PartialMap(3), Family::SS),
                  std::invalid_argument);
}

TEST_CASE("height descent soundness, both families, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    for (const Family family : {Family::LS, Family::SS}) {
      const int low = family == Family::SS ? 1 : 0;
      const MonoidSpec member_spec =
          family == Family::SS ? MonoidSpec::ss(n) : MonoidSpec::ls(n);
      for (int p = low; p <= n - 2; ++p) {
        for (const PartialMap& eps : idempotents_of_height(n, p, family)) {
          const Factorization f = height_descent(eps, family);
          REQUIRE(f.product() == eps);
          REQUIRE(f.factors.size() >= 2);
          REQUIRE(f.factors.size() <= 3);
          for (const PartialMap& factor : f.factors) {
            REQUIRE(is_idempotent(factor));
            REQUIRE(factor.height() == p + 1);
            REQUIRE(is_member(factor, member_spec));
          }
        }
      }
    }
  }
}

TEST_CASE("decompose_to_idempotents") {
  // Fixed example: a height-1 map of LS_4 raised to height 3.
  const PartialMap alpha = PartialMap::from_pairs(4, {{2, 1}});
  const Factorization f = decompose_to_idempotents(alpha, 3);
  CHECK(f.product() == alpha);
  for (const PartialMap& factor : f.factors) {
    CHECK(is_idempotent(factor));
    CHECK(factor.height() == 3);
  }

  // Idempotent at its own height: the non-skippable part is the map itself.
  const PartialMap eps = parse_element_text(3, "1,2->1;3->3");
  const Factorization same = decompose_to_idempotents(eps, eps.height());
  CHECK(same.factors[0] == eps);
  for (std::size_t i = 1; i < same.factors.size(); ++i) {
    CHECK(same.skippable[i]);
  }

  // Exhaustive over LS_3, every admissible target.
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(3));
  for (std::size_t i = 0; i < ls.map_count(); ++i) {
    const PartialMap& map = ls.map_at(static_cast<ElementIndex>(i));
    for (int target = map.height(); target <= 2; ++target) {
      const Factorization g = decompose_to_idempotents(map, target);
      REQUIRE(g.product() == map);
      if (target > map.height()) {
        for (const PartialMap& factor : g.factors) {
          REQUIRE(factor.height() == target);
        }
      }
    }
  }

  CHECK_THROWS_AS(decompose_to_idempotents(parse_element_text(3, "1,2->1;3->2"), 1),
                  std::invalid_argument);  // below the map height
  CHECK_THROWS_AS(decompose_to_idempotents(PartialMap::from_pairs(3, {{2, 1}}), 3),
                  std::invalid_argument);  // above n-1
}

TEST_CASE("idempotent product rigidity in the quotients") {
  CHECK(idempotent_product_rigidity_check(
            ElementStore::enumerate(MonoidSpec::rls(3, 2)))
            .holds);
  CHECK(idempotent_product_rigidity_check(
            ElementStore::enumerate(MonoidSpec::rss(4, 2)))
            .holds);
  CHECK_THROWS_AS(idempotent_product_rigidity_check(
                      ElementStore::enumerate(MonoidSpec::ls(3))),
                  std::invalid_argument);
}

TEST_CASE("idempotent pairs with different fixed sets fall out of the slice") {
  const ElementStore rls = ElementStore::enumerate(MonoidSpec::rls(3, 2));
  for (ElementIndex i : rls.idempotent_indices()) {
    for (ElementIndex j : rls.idempotent_indices()) {
      if (fixed_points(rls.map_at(i)) == fixed_points(rls.map_at(j))) {
        continue;
      }
      const ElementIndex product = rls.product(i, j);
      const bool nonzero_idempotent =
          !rls.is_zero(product) && is_idempotent(rls.map_at(product));
      CHECK_FALSE(nonzero_idempotent);
    }
  }
}
