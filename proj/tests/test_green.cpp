#include <doctest.h>

#include <stdexcept>

#include "schroeder/combinatorics.hpp"
#include "schroeder/element_store.hpp"
#include "schroeder/green.hpp"
#include "schroeder/text_format.hpp"

using namespace schroeder;

TEST_CASE("relation tokens") {
  CHECK(parse_relation("lstar") == Relation::LStar);
  CHECK(relation_name(Relation::JStar) == "J*");
  CHECK_THROWS_AS(parse_relation("q"), std::invalid_argument);
}

TEST_CASE("R-classes are singletons, H = R, D = L") {
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(3));
  CHECK(green_classes(ls, Relation::R).count() == 22);
  const Classification h = green_classes(ls, Relation::H);
  CHECK(h.count() == 22);
  const Classification d = green_classes(ls, Relation::D);
  const Classification l = green_classes(ls, Relation::L);
  REQUIRE(d.count() == l.count());
  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    CHECK(d.classes[i] == l.classes[i]);
  }

  const ElementStore ss = ElementStore::enumerate(MonoidSpec::ss(3));
  CHECK(green_classes(ss, Relation::H).count() == ss.size());
}

TEST_CASE("char_L on the worked examples") {
  const PartialMap a = parse_element_text(3, "1,2->1;3->2");
  const PartialMap b = parse_element_text(3, "1->1;2,3->2");
  CHECK_FALSE(char_L(a, b));  // same image, block minima (1,3) vs (1,2)
  CHECK(char_L(a, a));
  CHECK(char_L(parse_element_text(3, "1,2->1;3->3"),
               parse_element_text(3, "1->1;3->3")));
  CHECK_THROWS_AS(char_L(a, PartialMap::from_pairs(3, {{2, 2}, {3, 1}})),
                  std::invalid_argument);
}

TEST_CASE("char_L agrees with the definitional oracle on LS_3") {
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(3));
  const Classification l = green_classes(ls, Relation::L);
  for (std::size_t i = 0; i < ls.map_count(); ++i) {
    for (std::size_t j = 0; j < ls.map_count(); ++j) {
      REQUIRE(char_L(ls.map_at(static_cast<ElementIndex>(i)),
                     ls.map_at(static_cast<ElementIndex>(j))) ==
              l.related(static_cast<ElementIndex>(i),
                        static_cast<ElementIndex>(j)));
    }
  }
}

TEST_CASE("starred classes match image, kernel, equality") {
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(3));
  const Classification lstar = starred_classes(ls, Relation::LStar);
  const Classification rstar = starred_classes(ls, Relation::RStar);
  const Classification hstar = starred_classes(ls, Relation::HStar);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = 0; j < ls.size(); ++j) {
      const PartialMap& a = ls.map_at(static_cast<ElementIndex>(i));
      const PartialMap& b = ls.map_at(static_cast<ElementIndex>(j));
      REQUIRE(lstar.related(static_cast<ElementIndex>(i),
                            static_cast<ElementIndex>(j)) ==
              char_L_star(a, b));
      REQUIRE(rstar.related(static_cast<ElementIndex>(i),
                            static_cast<ElementIndex>(j)) ==
              char_R_star(a, b));
      REQUIRE(hstar.related(static_cast<ElementIndex>(i),
                            static_cast<ElementIndex>(j)) ==
              char_H_star(a, b));
    }
  }
}

TEST_CASE("the inverse-ideal route gives the same L* and R*, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    for (const MonoidSpec spec : {MonoidSpec::ls(n), MonoidSpec::ss(n)}) {
      const ElementStore store = ElementStore::enumerate(spec);
      for (const Relation r : {Relation::LStar, Relation::RStar}) {
        const Classification direct = starred_classes(store, r);
        const Classification via_full = starred_via_full_monoid(store, r);
        REQUIRE(direct.classes == via_full.classes);
      }
    }
  }
  CHECK_THROWS_AS(starred_via_full_monoid(
                      ElementStore::enumerate(MonoidSpec::rls(3, 1)),
                      Relation::LStar),
                  std::invalid_argument);
}

TEST_CASE("D* has one class per height") {
  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(3));
  const Classification dstar = starred_classes(ls, Relation::DStar);
  CHECK(dstar.count() == 4);  // heights 0..3
}

TEST_CASE("D* composition identities and the asymmetry witness") {
  const ElementStore ls3 = ElementStore::enumerate(MonoidSpec::ls(3));
  const DStarCompositionReport report = d_star_composition_check(ls3);
  CHECK(report.rlr_equals_d_star);
  CHECK(report.lrl_equals_d_star);
  CHECK_FALSE(report.lr_equals_rl);
  REQUIRE(report.asymmetry_witness.has_value());

  // The reported witness must genuinely be one-way.
  const Classification lstar = starred_classes(ls3, Relation::LStar);
  const Classification rstar = starred_classes(ls3, Relation::RStar);
  const DStarWitness w = *report.asymmetry_witness;
  CHECK(lstar.related(w.a, w.delta));
  CHECK(rstar.related(w.delta, w.b));
  for (std::size_t c = 0; c < ls3.size(); ++c) {
    const bool reverse_link =
        rstar.related(w.a, static_cast<ElementIndex>(c)) &&
        lstar.related(static_cast<ElementIndex>(c), w.b);
    CHECK_FALSE(reverse_link);
  }

  // The known triple is such a witness.
  const ElementIndex ia = ls3.index_of(parse_element_text(3, "1->1;2->2"));
  const ElementIndex ib = ls3.index_of(parse_element_text(3, "1->1;3->3"));
  const ElementIndex id = ls3.index_of(parse_element_text(3, "1->1;3->2"));
  CHECK(lstar.related(ia, id));
  CHECK(rstar.related(id, ib));

  // SS_2: the compositions agree. LS_2: already asymmetric through
  // 2->2 (R*) 2->1 (L*) 1->1, with no element of image {2} and kernel {{1}}.
  CHECK(d_star_composition_check(
            ElementStore::enumerate(MonoidSpec::ss(2)))
            .lr_equals_rl);
  CHECK_FALSE(d_star_composition_check(
                  ElementStore::enumerate(MonoidSpec::ls(2)))
                  .lr_equals_rl);
}

TEST_CASE("J* equals D* and respects heights, LS_3 and SS_3") {
  for (const MonoidSpec spec : {MonoidSpec::ls(3), MonoidSpec::ss(3)}) {
    const ElementStore store = ElementStore::enumerate(spec);
    const Classification jstar = j_star_classes(store);
    const Classification dstar = starred_classes(store, Relation::DStar);
    REQUIRE(jstar.classes == dstar.classes);
  }

  const ElementStore ls = ElementStore::enumerate(MonoidSpec::ls(3));
  const ElementIndex id = *ls.identity_index();
  CHECK(principal_star_ideal(ls, id).size() == ls.size());
  for (std::size_t b = 0; b < ls.size(); ++b) {
    for (ElementIndex a : principal_star_ideal(ls, static_cast<ElementIndex>(b))) {
      CHECK(ls.height_of(a) <= ls.height_of(static_cast<ElementIndex>(b)));
    }
  }
}

TEST_CASE("abundance reports") {
  const AbundanceReport ls4 =
      abundance_report(ElementStore::enumerate(MonoidSpec::ls(4)));
  CHECK(ls4.abundant());
  CHECK(ls4.unique_idempotent_per_r_class);

  const AbundanceReport rss =
      abundance_report(ElementStore::enumerate(MonoidSpec::rss(3, 2)));
  CHECK(rss.abundant());
  CHECK(rss.unique_idempotent_per_r_class);

  // R*-class counts per height slice of SS_4.
  const ElementStore ss4 = ElementStore::enumerate(MonoidSpec::ss(4));
  const auto counts =
      class_count_by_height(ss4, starred_classes(ss4, Relation::RStar));
  for (unsigned p = 1; p <= 4; ++p) {
    CHECK(counts.at(static_cast<int>(p)) == idempotent_count_ss_slice(4, p));
  }

  // SS'_2 is not abundant: the L*-class of 2->1 has no idempotent.
  const AbundanceReport ssp =
      abundance_report(ElementStore::enumerate(MonoidSpec::ss_prime(2)));
  CHECK_FALSE(ssp.left_abundant);
}

TEST_CASE("regularity reports") {
  const RegularityReport ls3 =
      regularity_report(ElementStore::enumerate(MonoidSpec::ls(3)));
  CHECK(ls3.regular_equals_idempotent);

  // Height-bounded families with p >= 3 contain nonregular elements.
  const ElementStore k43 = ElementStore::enumerate(MonoidSpec::k(4, 3));
  const RegularityReport k43_report = regularity_report(k43);
  CHECK(k43_report.regular.size() < k43.size());
  CHECK(k43_report.regular_equals_idempotent);

  // M(n,1) is a left-zero band: everything is idempotent, so regular.
  const ElementStore m41 = ElementStore::enumerate(MonoidSpec::m(4, 1));
  const RegularityReport m41_report = regularity_report(m41);
  CHECK(m41_report.regular.size() == m41.size());
}

TEST_CASE("eggbox rendering") {
  const ElementStore ls2 = ElementStore::enumerate(MonoidSpec::ls(2));
  const std::string grid =
      eggbox_render(ls2, starred_classes(ls2, Relation::LStar),
                    starred_classes(ls2, Relation::RStar));
  CHECK(grid.find("D*-class 2 (height 1, 4 elements): 3 x 2") !=
        std::string::npos);
  CHECK(grid.find("D*-class 3 (height 2, 1 element): 1 x 1") !=
        std::string::npos);

  const ElementStore rls = ElementStore::enumerate(MonoidSpec::rls(2, 1));
  const std::string quotient_grid =
      eggbox_render(rls, starred_classes(rls, Relation::LStar),
                    starred_classes(rls, Relation::RStar));
  CHECK(quotient_grid.find("(zero, 1 element): 1 x 1") != std::string::npos);

  CHECK_THROWS_AS(eggbox_render(ls2, starred_classes(ls2, Relation::LStar),
                                starred_classes(ls2, Relation::LStar)),
                  std::invalid_argument);
}

TEST_CASE("L*-class counts per slice of LS_4 are C(4,p)") {
  const ElementStore ls4 = ElementStore::enumerate(MonoidSpec::ls(4));
  const auto counts =
      class_count_by_height(ls4, starred_classes(ls4, Relation::LStar));
  for (unsigned p = 0; p <= 4; ++p) {
    CHECK(counts.at(static_cast<int>(p)) == binomial(4, p));
  }
}
