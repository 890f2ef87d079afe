#include "catch_amalgamated.hpp"
#include "g2kit/rational.hpp"
#include "g2kit/scalar.hpp"

using namespace g2kit;

namespace {
ExactScalar rad(int r, Rational q = 1) { return ExactScalar::radical(r, q); }
}  // namespace

TEST_CASE("rational arithmetic is exact and canonical", "[rational]") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(-2, 3).str() == "-2/3");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
}

TEST_CASE("rationals promote to big integers on overflow", "[rational]") {
  Rational big(1);
  for (int k = 0; k < 40; ++k) big = big * Rational(1000003);
  Rational back = big;
  for (int k = 0; k < 40; ++k) back = back / Rational(1000003);
  CHECK(back == Rational(1));
  CHECK(Rational::parse(big.str()) == big);
}

TEST_CASE("products of radicals reduce in the field basis", "[scalar]") {
  CHECK(rad(2) * rad(3) == rad(6));
  CHECK(rad(6) * rad(7) == rad(42));
  CHECK(rad(14) * rad(21) == rad(6, 7));
  CHECK((ExactScalar(1) + rad(2)) * (ExactScalar(1) - rad(2)) == ExactScalar(-1));
  CHECK(rad(6, Rational(1, 3)) * rad(6, Rational(1, 3)) == ExactScalar(Rational(2, 3)));
  CHECK(ExactScalar::sqrt(Rational(2, 3)) == rad(6, Rational(1, 3)));
  CHECK(ExactScalar::sqrt(Rational(12)) == rad(3, 2));
}

TEST_CASE("inverses", "[scalar]") {
  CHECK(ExactScalar(2).inverse() == ExactScalar(Rational(1, 2)));
  CHECK(rad(2).inverse() == rad(2, Rational(1, 2)));
  const ExactScalar x = ExactScalar(1) + rad(2) + rad(3);
  CHECK(x * x.inverse() == ExactScalar(1));
  const ExactScalar y = rad(7, 3) - rad(42) + ExactScalar(Rational(5, 2));
  CHECK(y * y.inverse() == ExactScalar(1));
  CHECK_THROWS_AS(ExactScalar{}.inverse(), DivisionByZero);
}

TEST_CASE("complex scalars", "[scalar]") {
  const ComplexScalar i = ComplexScalar::i();
  CHECK(i * i == ComplexScalar(-1));
  CHECK(i.conj() == -i);
  CHECK(i.inverse() == -i);
  const ComplexScalar z(rad(2), rad(3));
  CHECK(z * z.conj() == ComplexScalar(ExactScalar(5)));
  CHECK(z * z.inverse() == ComplexScalar(1));
  CHECK(z.times_i() == i * z);
}

TEST_CASE("canonical text form round-trips", "[scalar]") {
  const ComplexScalar a(rad(6, Rational(1, 3)));
  CHECK(a.str() == "(0,0,0,1/3,0,0,0,0|0,0,0,0,0,0,0,0)");
  const ComplexScalar b(ExactScalar(Rational(-3, 4)) + rad(42, 5), rad(14, Rational(-1, 9)));
  CHECK(ComplexScalar::parse(b.str()) == b);
  CHECK(ComplexScalar::parse("(1,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)") == ComplexScalar(1));
  CHECK_THROWS_AS(ComplexScalar::parse("(1,0,0|0)"), ParseError);
  CHECK_THROWS_AS(ComplexScalar::parse("1,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0"), ParseError);
  CHECK_THROWS_AS(ComplexScalar::parse("(1,0,0,0,0,0,0,x|0,0,0,0,0,0,0,0)"), ParseError);
}

TEST_CASE("pretty form", "[scalar]") {
  CHECK(ExactScalar(Rational(284, 441)).pretty() == "284/441");
  CHECK(ExactScalar{}.pretty() == "0");
}
