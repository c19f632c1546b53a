#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qpos/composition.hpp"

using namespace qpos;

TEST_CASE("composition basics") {
  Composition a{1, 2, 1};
  CHECK(a.weight() == 4);
  CHECK(a.length() == 3);
  CHECK(a[1] == 2);
  CHECK(a.to_string() == "[1,2,1]");

  Composition empty;
  CHECK(empty.weight() == 0);
  CHECK(empty.empty());
  CHECK(empty.to_string() == "[]");

  CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({-3}), std::invalid_argument);
}

TEST_CASE("descent sets and the inverse bijection") {
  CHECK(Composition{1, 2, 1}.descent_set() == std::vector<int>{1, 3});
  CHECK(Composition{4}.descent_set() == std::vector<int>{});
  CHECK(Composition{1, 1, 1}.descent_set() == std::vector<int>{1, 2});
  CHECK(Composition::from_descents(4, {1, 3}) == Composition{1, 2, 1});
  CHECK(Composition::from_descents(4, {3, 1}) == Composition{1, 2, 1});  // order-insensitive
  CHECK(Composition::from_descents(0, {}) == Composition{});
  CHECK(Composition::from_descents(3, {}) == Composition{3});
  CHECK_THROWS_AS(Composition::from_descents(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition::from_descents(3, {3}), std::invalid_argument);

  for (int n = 0; n <= 6; ++n)
    for (const auto& alpha : compositions_of(n))
      CHECK(Composition::from_descents(n, alpha.descent_set()) == alpha);
}

TEST_CASE("reverse, concat, take, drop") {
  Composition a{1, 2, 1, 3};
  CHECK(a.reversed() == Composition{3, 1, 2, 1});
  CHECK(Composition{1, 2}.concat(Composition{3}) == Composition{1, 2, 3});
  CHECK(Composition{}.concat(Composition{2}) == Composition{2});
  CHECK(a.take(2) == Composition{1, 2});
  CHECK(a.drop(2) == Composition{1, 3});
  CHECK(a.take(0) == Composition{});
  CHECK(a.drop(4) == Composition{});
}

TEST_CASE("display order: weight, then length, then lex") {
  CHECK(Composition{2} < Composition{1, 2});       // weight first
  CHECK(Composition{3} < Composition{1, 2});       // length next
  CHECK(Composition{1, 3} < Composition{2, 2});    // lex last
  CHECK(Composition{2, 1, 1} < Composition{1, 1, 1, 1});

  auto all4 = compositions_of(4);
  std::vector<Composition> expected = {
      {4}, {1, 3}, {2, 2}, {3, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(all4 == expected);
  CHECK(compositions_of(0) == std::vector<Composition>{Composition{}});
  CHECK(compositions_of(6).size() == 32);
}

TEST_CASE("refinement order via descent-set containment") {
  CHECK(refinement_leq(Composition{4}, Composition{1, 2, 1}));
  CHECK(refinement_leq(Composition{2, 2}, Composition{1, 1, 2}));
  CHECK(!refinement_leq(Composition{2, 2}, Composition{1, 3}));
  CHECK(refinement_leq(Composition{1, 2, 1}, Composition{1, 2, 1}));
  CHECK(!refinement_leq(Composition{1, 2, 1}, Composition{4}));
  CHECK(!refinement_leq(Composition{2}, Composition{3}));  // weight mismatch

  // coarse <= fine iff every part of coarse is a consecutive sum of fine's parts
  CHECK(coarsenings_of(Composition{1, 1}) ==
        std::vector<Composition>{{2}, {1, 1}});
  CHECK(refinements_of(Composition{2}) == std::vector<Composition>{{2}, {1, 1}});
  CHECK(coarsenings_of(Composition{1, 2, 1}).size() == 4);
  CHECK(refinements_of(Composition{4}).size() == 8);
  for (const auto& b : coarsenings_of(Composition{2, 1, 2}))
    CHECK(refinement_leq(b, Composition{2, 1, 2}));
  for (const auto& b : refinements_of(Composition{2, 1, 2}))
    CHECK(refinement_leq(Composition{2, 1, 2}, b));
}
