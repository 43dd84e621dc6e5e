#include <doctest.h>

#include "qaw/rational_poly.hpp"

using namespace qaw;

TEST_CASE("construction trims trailing zeros") {
  const RationalPoly p{Rational{1}, Rational{2}, Rational{0}, Rational{0}};
  CHECK(p.degree() == 1);
  CHECK(RationalPoly{}.is_zero());
  CHECK(RationalPoly{Rational{0}}.degree() == -1);
  CHECK(RationalPoly::monomial(3, Rational{5}).coeff(3) == 5);
  CHECK(RationalPoly::monomial(3).coeff(7) == 0);
}

TEST_CASE("arithmetic") {
  const RationalPoly a{Rational{1}, Rational{1}};   // 1 + x
  const RationalPoly b{Rational{-1}, Rational{1}};  // -1 + x
  CHECK(a * b == RationalPoly{Rational{-1}, Rational{0}, Rational{1}});
  CHECK((a - a).is_zero());
  CHECK(a + b == RationalPoly{Rational{0}, Rational{2}});
  CHECK(a * Rational{1, 2} == RationalPoly{Rational{1, 2}, Rational{1, 2}});
  CHECK((a * a)(Rational{1, 3}) == Rational{16, 9});
  CHECK((a * a).evaluate(0.5) == doctest::Approx(2.25));
}

TEST_CASE("reflection") {
  const RationalPoly p{Rational{1}, Rational{2}, Rational{3}};
  CHECK(p.reflected(2) == RationalPoly{Rational{3}, Rational{2}, Rational{1}});
  CHECK(p.reflected(4) == RationalPoly{Rational{0}, Rational{0}, Rational{3}, Rational{2}, Rational{1}});
  CHECK_THROWS(p.reflected(1));
}

TEST_CASE("printing") {
  CHECK(RationalPoly{}.str() == "0");
  CHECK_FALSE(RationalPoly{Rational{1, 2}, Rational{-3}}.str().empty());
}
