#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "schroeder/combinatorics.hpp"
#include "schroeder/rank.hpp"

using namespace schroeder;

TEST_CASE("binomials and powers") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(50, 25) == 126410606437752ull);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
  CHECK(checked_pow(3, 5) == 243);
  CHECK_THROWS_AS(checked_pow(10, 30), std::overflow_error);
}

TEST_CASE("Schroeder numbers from the summation formulas") {
  CHECK(schroeder_number(SchroederKind::Large, 0) == 1);
  CHECK(schroeder_number(SchroederKind::Large, 3) == 22);
  CHECK(schroeder_number(SchroederKind::Small, 3) == 11);
  CHECK_THROWS_AS(schroeder_number(SchroederKind::Small, 0),
                  std::invalid_argument);
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(schroeder_number(SchroederKind::Large, n) ==
          2 * schroeder_number(SchroederKind::Small, n));
  }
}

TEST_CASE("binomial identity") {
  CHECK(binomial_identity_check(3, 2));  // both sides are 4
  CHECK(binomial_identity_check(7, 7));  // single term, both sides 1
  CHECK(binomial_identity_check(6, 3));
  CHECK_THROWS_AS(binomial_identity_check(3, 0), std::invalid_argument);
}

TEST_CASE("slice count formulas") {
  CHECK(idempotent_count_ls_slice(3, 1) == 7);
  CHECK(idempotent_count_ls_slice(3, 2) == 5);
  CHECK(idempotent_count_ls_slice(3, 0) == 1);
  CHECK(idempotent_count_ss_slice(3, 2) == 4);
  CHECK(idempotent_count_ss_slice(4, 1) == 8);
}

TEST_CASE("closed ranks") {
  CHECK(closed_rank(MonoidSpec::ls(4)) == 8);
  CHECK(closed_rank(MonoidSpec::ss(4)) == 7);
  CHECK(closed_rank(MonoidSpec::k(3, 1)) == 7);
  CHECK(closed_rank(MonoidSpec::m(3, 2)) == 4);
  CHECK(closed_rank(MonoidSpec::rls(3, 1)) == 7);
  CHECK_THROWS_AS(closed_rank(MonoidSpec::ss_prime(3)), std::invalid_argument);

  // Boundary parameters agree with brute force rather than the (here
  // inapplicable) slice formulas.
  CHECK(closed_rank(MonoidSpec::k(3, 3)) == 6);
  CHECK(closed_rank_is_boundary_case(MonoidSpec::k(3, 3)) == false);
  CHECK(closed_rank(MonoidSpec::rls(3, 3)) == 2);
  CHECK(closed_rank_is_boundary_case(MonoidSpec::rls(3, 3)));
  CHECK(closed_rank(MonoidSpec::rss(3, 1)) == 5);
  CHECK(closed_rank_is_boundary_case(MonoidSpec::rss(3, 1)));
  CHECK(closed_rank(MonoidSpec::rss(1, 1)) == 2);
}

TEST_CASE("full-monoid ranks are one above the top ideal, arithmetic n <= 50") {
  for (unsigned n = 2; n <= 50; ++n) {
    CHECK(idempotent_count_ls_slice(n, n - 1) + 1 == 2 * n);
    CHECK(idempotent_count_ss_slice(n, n - 1) + 1 == 2 * n - 1);
  }
}

TEST_CASE("idempotent count report") {
  const IdempotentCountReport report = idempotent_count_formulas(4);
  CHECK(report.ss_total == 27);
  CHECK(report.ss_total_is_power_of_three);
  CHECK(report.ls_total == (checked_pow(3, 4) + 1) / 2);
  CHECK(report.enumeration_checked);
  CHECK(report.matches_enumeration);
  CHECK(report.ls_by_height[2] == idempotent_count_ls_slice(4, 2));
}

TEST_CASE("verify_rank on LS_3") {
  const RankReport report = verify_rank(MonoidSpec::ls(3));
  CHECK(report.closed_form == 6);
  CHECK(report.verified_generates == true);
  CHECK(report.idempotents_only == true);
  REQUIRE(report.generating_set.size() == 6);
  // Five height-2 idempotents plus the identity.
  CHECK(std::count(report.generating_set.begin(), report.generating_set.end(),
                   "1->1;2->2;3->3") == 1);
}

TEST_CASE("verify_rank across families") {
  CHECK(verify_rank(MonoidSpec::rss(3, 2)).closed_form == 4);
  CHECK(verify_rank(MonoidSpec::rss(3, 2)).verified_generates == true);

  const RankReport m41 = verify_rank(MonoidSpec::m(4, 1));
  CHECK(m41.closed_form == 8);  // left-zero: every element is needed
  CHECK(m41.verified_generates == true);
  CHECK(m41.generating_set.size() == 8);

  const RankReport capped = verify_rank(MonoidSpec::ls(6), {5, 500000});
  CHECK(capped.closed_form == 12);
  CHECK_FALSE(capped.verified_generates.has_value());
}

TEST_CASE("brute-force ranks") {
  CHECK(brute_min_rank(MonoidSpec::ls(2)) == 4);
  CHECK(brute_min_rank(MonoidSpec::ss(2)) == 3);
  CHECK(brute_min_rank(MonoidSpec::rls(3, 1)) == 7);
  CHECK(brute_min_rank(MonoidSpec::rss(3, 1)) == 5);
  BruteForceOptions tight;
  tight.max_size = 10;
  CHECK_THROWS_AS(brute_min_rank(MonoidSpec::ls(3), tight), std::length_error);
}

TEST_CASE("idrank equals rank on the verified families") {
  CHECK(idrank_equals_rank_check(MonoidSpec::k(4, 2)));
  CHECK(idrank_equals_rank_check(MonoidSpec::ls(3)));
  CHECK(idrank_equals_rank_check(MonoidSpec::m(4, 3)));
}

TEST_CASE("indecomposable elements of LS_2") {
  const ElementStore ls2 = ElementStore::enumerate(MonoidSpec::ls(2));
  const std::vector<ElementIndex> must = indecomposable_elements(ls2);
  CHECK(must.size() == 4);  // three height-1 idempotents and the identity
  for (ElementIndex i : must) {
    CHECK(is_idempotent(ls2.map_at(i)));
  }
}
