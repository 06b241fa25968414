#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "robinf/rational.hpp"

using namespace robinf;
using namespace robinf::literals;

TEST_CASE("parse integer, fraction and decimal literals") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational::parse("0.8") == Rational(4, 5));
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("2.") == Rational(2));
  CHECK(Rational::parse("0.000") == Rational(0));
  CHECK("0.3"_q + "0.7"_q == Rational(1));
}

TEST_CASE("malformed literals are rejected") {
  for (const char* bad : {"", "-", "1/0", "1/-2", "a", "1.2.3", "1/2/3", "0x10", "1e3", ".", " 1", "1/"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("canonical form after construction and arithmetic") {
  const Rational q(mpz_class(10), mpz_class(-4));
  CHECK(q.numerator() == -5);
  CHECK(q.denominator() == 2);
  CHECK(q.str() == "-5/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK((Rational(1, 6) + Rational(1, 3)).str() == "1/2");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(-1, 3) < Rational(1, 4));
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK(Rational(-2, 7).sign() == -1);
  CHECK(Rational(-2, 7).abs() == Rational(2, 7));
  CHECK(-Rational(2, 7) == Rational(-2, 7));
  CHECK(Rational(9, 3).is_integer());
}

TEST_CASE("property: str() round-trips and stays canonical under random arithmetic") {
  std::mt19937_64 rng(2024);
  auto draw = [&] {
    const long p = static_cast<long>(rng() % 2001) - 1000;
    const long q = 1 + static_cast<long>(rng() % 1000);
    return Rational(p, q);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = draw();
    const Rational b = draw();
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(r.denominator() > 0);
      CHECK(gcd(r.numerator(), r.denominator()) == 1);
      CHECK(Rational::parse(r.str()) == r);
    }
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Rational(-3, 9);
  CHECK(os.str() == "-1/3");
}
