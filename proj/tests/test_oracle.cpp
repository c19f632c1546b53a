#include <doctest.h>

#include <random>
#include <set>

#include "qpos/enumerator.hpp"
#include "qpos/errors.hpp"
#include "qpos/oracle.hpp"
#include "qpos/poset.hpp"
#include "test_util.hpp"

using namespace qpos;

TEST_CASE("weight vectors and level flags") {
  Poset c2 = Poset::chain(2);
  CHECK(in_normal_fan(c2, {1, 2}));
  CHECK(in_normal_fan(c2, {2, 2}));
  CHECK(!in_normal_fan(c2, {2, 1}));
  CHECK(in_normal_fan(Poset::antichain(2), {5, 1}));
  CHECK_THROWS_AS(in_normal_fan(c2, {1, 2, 3}), IndexError);

  CHECK(level_flag({1, 1, 2}) == Flag::of_lists({{1, 2}, {3}}));
  CHECK(level_flag({3, 1, 2}) == Flag::of_lists({{2}, {3}, {1}}));
  CHECK(level_flag({}) == Flag());

  // the level flag of a monotone vector is always a flag of ideals
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> val(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Poset p = qpos_test::random_poset(4, rng);
    WeightVector w = {val(rng), val(rng), val(rng), val(rng)};
    if (in_normal_fan(p, w)) CHECK(is_ideal_flag(p, level_flag(w)));
  }
}

TEST_CASE("integer-point transform of the two-element chain") {
  TruncatedExpansion pts = fq_integer_points(Poset::chain(2), 2);
  CHECK(pts.coefficient({1, 1}) == QPoly(1));
  CHECK(pts.coefficient({2, 0}) == QPoly::q());
  CHECK(pts.coefficient({0, 2}) == QPoly::q());
  CHECK(pts.monomials().size() == 3);

  CHECK(fq_integer_points(Poset(), 3).coefficient({0, 0, 0}) == QPoly(1));
  CHECK(fq_integer_points(Poset::chain(1), 0).monomials().empty());
}

TEST_CASE("integer points agree with truncating the flag enumerator") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : all_posets(n)) {
      QSym fq = fq_poset_cone(p);
      for (int m = 0; m <= 3; ++m)
        CHECK(truncate(fq, m) == fq_integer_points(p, m));
    }
}

TEST_CASE("face lattice by distinct quotients") {
  auto faces2 = face_lattice(Poset::chain(2));
  REQUIRE(faces2.size() == 2);
  CHECK(faces2[0].dim == 0);
  CHECK(faces2[0].relation == Poset::antichain(2));
  CHECK(faces2[1].dim == 1);
  CHECK(faces2[1].relation == Poset::chain(2));

  auto faces3 = face_lattice(Poset::chain(3));
  REQUIRE(faces3.size() == 4);
  CHECK(face_count_polynomial(Poset::chain(3)) ==
        QPoly(1) + QPoly::term(1, 2) + QPoly::term(2));

  auto facesK = face_lattice(Poset::complete_bipartite(2, 2));
  CHECK(facesK.size() == 10);  // f-vector 1, 4, 4, 1
  CHECK(face_count_polynomial(Poset::complete_bipartite(2, 2)) ==
        QPoly(1) + QPoly::term(1, 4) + QPoly::term(2, 4) + QPoly::term(3));

  // each face is a positive subrelation, and dims are consistent
  Poset k = Poset::complete_bipartite(2, 2);
  auto cycles = comparability_cycles(k);
  for (const auto& face : facesK) {
    CHECK(is_positive_subposet(k, face.relation, cycles));
    CHECK(face.dim == rank(face.relation));
  }

  CHECK(face_lattice(Poset()).size() == 1);
  CHECK(face_count_polynomial(Poset::antichain(3)) == QPoly(1));
}

TEST_CASE("positive subrelations coincide with quotients on small hosts") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : all_posets(n)) CHECK(positive_subposet_cross_check(p));
  CHECK_THROWS_AS(positive_subposet_cross_check(Poset::chain(5)), SizeError);
}

TEST_CASE("signed flag counts per face") {
  CHECK(euler_flag_identity(Poset::chain(2)));
  CHECK(euler_flag_identity(Poset::complete_bipartite(2, 2)));
  CHECK(euler_flag_identity(Poset::antichain(4)));
  std::mt19937 rng(13);
  for (int n = 0; n <= 5; ++n)
    for (int trial = 0; trial < 4; ++trial)
      CHECK(euler_flag_identity(qpos_test::random_poset(n, rng)));
}
