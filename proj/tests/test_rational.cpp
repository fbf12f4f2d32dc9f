#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ckf/linalg.hpp"

using namespace ckf;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK((Rat(1, 3) * Rat(3, 7)) == Rat(1, 7));
  CHECK((Rat(1) / Rat(1, 5)) == Rat(5));
  CHECK(Rat(7, 3) > Rat(2));
  CHECK(Rat(-1, 1000000) < Rat(0));
  CHECK(Rat(0).sign() == 0);
  CHECK(Rat(-3, 7).sign() == -1);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("rational parse and print round-trip") {
  for (const char* s : {"0", "5", "-7", "1/2", "-3/4", "22/7"}) {
    Rat r = Rat::parse(s);
    CHECK(Rat::parse(r.str()) == r);
  }
  CHECK(Rat::parse("4/8") == Rat(1, 2));
  CHECK_THROWS(Rat::parse("x"));
}

TEST_CASE("overflow is detected, not wrapped") {
  Rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, arithmetic_overflow);
}

TEST_CASE("linear algebra over Q") {
  QMat m = {{Rat(1), Rat(2), Rat(3)},
            {Rat(2), Rat(4), Rat(6)},
            {Rat(1), Rat(0), Rat(1)}};
  CHECK(mat_rank(m) == 2);
  auto ker = nullspace(m);
  REQUIRE(ker.size() == 1);
  for (const auto& row : m) CHECK(dot(row, ker[0]).is_zero());

  QMat a = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
  auto x = solve(a, {Rat(3), Rat(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(2));
  CHECK((*x)[1] == Rat(1));

  QMat inconsistent = {{Rat(1), Rat(0)}, {Rat(1), Rat(0)}};
  CHECK(!solve(inconsistent, {Rat(1), Rat(2)}).has_value());

  auto c = coordinates_in({{Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)}},
                          {Rat(3), Rat(2), Rat(0)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rat(1));
  CHECK((*c)[1] == Rat(2));
}

TEST_CASE("complex rational matrices") {
  CMat a(2), b(2);
  a.at(0, 1) = CRat(Rat(1));
  a.at(1, 0) = CRat(Rat(1));
  b.at(0, 0) = CRat(Rat(0), Rat(1));
  b.at(1, 1) = CRat(Rat(0), Rat(-1));
  CMat c = bracket(a, b);
  CHECK(c.at(0, 1) == CRat(Rat(0), Rat(-2)));
  CHECK(c.at(1, 0) == CRat(Rat(0), Rat(2)));
  CHECK(bracket(a, a).is_zero());
  CHECK(a.conj_transpose() == a);
}
