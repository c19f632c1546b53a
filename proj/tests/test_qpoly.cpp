#include <doctest.h>

#include "qpos/qpoly.hpp"

using namespace qpos;

TEST_CASE("zero and term construction") {
  QPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.to_string() == "0");
  CHECK(QPoly(0).is_zero());

  QPoly c(7);
  CHECK(c.degree() == 0);
  CHECK(c.coeff(0) == 7);
  CHECK(QPoly::q().degree() == 1);
  CHECK(QPoly::term(3, 2).coeff(3) == 2);
  CHECK(QPoly::term(3, 0).is_zero());
}

TEST_CASE("arithmetic") {
  QPoly one(1);
  QPoly p = one + QPoly::q();
  QPoly cube = p * p * p;
  CHECK(cube.to_string() == "1 + 3q + 3q^2 + q^3");
  CHECK(cube.degree() == 3);
  CHECK(cube.coeff(2) == 3);

  QPoly diff = p - p;
  CHECK(diff.is_zero());

  QPoly neg = -p;
  CHECK(neg.to_string() == "-1 - q");
  CHECK((neg + p).is_zero());

  QPoly scaled = p * mpz_class(5);
  CHECK(scaled.to_string() == "5 + 5q");

  QPoly acc;
  acc.add_term(1, 1);
  acc.add_term(1, -1);
  CHECK(acc.is_zero());  // cancelled terms are dropped
}

TEST_CASE("substitution and evaluation") {
  QPoly p = QPoly(1) + QPoly::q();  // 1 + q
  CHECK(p.substituted(-QPoly::q()).to_string() == "1 - q");
  CHECK(p.substituted(QPoly(0)).to_string() == "1");

  QPoly sq = QPoly::term(2) + QPoly(1);  // q^2 + 1
  QPoly shifted = sq.substituted(QPoly(1) + QPoly::q());
  CHECK(shifted.to_string() == "2 + 2q + q^2");

  QPoly cube = p * p * p;
  CHECK(cube.evaluated(2) == 27);
  CHECK(cube.evaluated(-1) == 0);
  CHECK(QPoly().evaluated(10) == 0);
}

TEST_CASE("rendering corner cases") {
  CHECK((QPoly(-1) + QPoly::q()).to_string() == "-1 + q");
  CHECK(QPoly::term(2).to_string() == "q^2");
  CHECK((QPoly::term(1, 4) + QPoly::term(3, -1)).to_string() == "4q - q^3");
}

TEST_CASE("binomial with integer top argument") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 3) == -4);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(60, 30) == mpz_class("118264581564861424"));
}
