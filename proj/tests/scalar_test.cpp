#include "cliffmodel/scalar.hpp"

#include <doctest.h>

#include "cliffmodel/errors.hpp"

using cliff::Scalar;

TEST_CASE("scalar arithmetic is exact") {
  Scalar a(1, 2);   // 1 + 2i
  Scalar b(3, -1);  // 3 - i
  CHECK(a * b == Scalar(5, 5));
  CHECK(a + b == Scalar(4, 1));
  CHECK(a - b == Scalar(-2, 3));
  CHECK((a * b) / b == a);
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::i().inverse() == -Scalar::i());
  CHECK(a.conj() == Scalar(1, -2));
  CHECK(a.norm2() == 5);
  CHECK(Scalar(mpq_class(2, 4)) == Scalar(mpq_class(1, 2)));  // canonicalized
  CHECK_THROWS_AS(Scalar(1) / Scalar(), cliff::invalid_argument);
}

TEST_CASE("scalar long-form rendering keeps both parts explicit") {
  CHECK(Scalar().to_string() == "0/1+0/1*i");
  CHECK(Scalar(mpq_class(1, 2), mpq_class(-1)).to_string() == "1/2-1/1*i");
  CHECK(Scalar(3).to_string() == "3/1+0/1*i");
  CHECK(Scalar(0, 1).to_string() == "0/1+1/1*i");
  CHECK(Scalar(-2, 0).to_string() == "-2/1+0/1*i");
}

TEST_CASE("scalar short rendering compresses pure parts") {
  CHECK(Scalar().to_short_string() == "0/1");
  CHECK(Scalar(3).to_short_string() == "3/1");
  CHECK(Scalar(0, 2).to_short_string() == "2/1*i");
  CHECK(Scalar(0, -2).to_short_string() == "-2/1*i");
  CHECK(Scalar(1, 2).to_short_string() == "1/1+2/1*i");
}

TEST_CASE("scalar parsing accepts long and short forms") {
  CHECK(Scalar::parse("1/2-1/1*i") == Scalar(mpq_class(1, 2), mpq_class(-1)));
  CHECK(Scalar::parse("0/1+0/1*i") == Scalar());
  CHECK(Scalar::parse("3") == Scalar(3));
  CHECK(Scalar::parse("-3/4") == Scalar(mpq_class(-3, 4)));
  CHECK(Scalar::parse("2/1*i") == Scalar(0, 2));
  CHECK(Scalar::parse("-i") == Scalar(0, -1));
  CHECK(Scalar::parse("i") == Scalar(0, 1));
  CHECK(Scalar::parse(" 1 + 2*i ") == Scalar(1, 2));
  CHECK_THROWS_AS(Scalar::parse(""), cliff::parse_error);
  CHECK_THROWS_AS(Scalar::parse("1/0"), cliff::parse_error);
  CHECK_THROWS_AS(Scalar::parse("1+2"), cliff::parse_error);
  CHECK_THROWS_AS(Scalar::parse("i+2*i"), cliff::parse_error);
  CHECK_THROWS_AS(Scalar::parse("x"), cliff::parse_error);
}

TEST_CASE("rendering and parsing round-trip") {
  const Scalar samples[] = {Scalar(), Scalar(1), Scalar(-7, 3),
                            Scalar(mpq_class(22, 7), mpq_class(-5, 9)),
                            Scalar(0, -1)};
  for (const Scalar& z : samples) {
    CHECK(Scalar::parse(z.to_string()) == z);
    CHECK(Scalar::parse(z.to_short_string()) == z);
  }
}

TEST_CASE("rational square roots detect perfect squares only") {
  CHECK(*cliff::sqrt_exact(mpq_class(4, 9)) == mpq_class(2, 3));
  CHECK(*cliff::sqrt_exact(mpq_class(0)) == 0);
  CHECK(*cliff::sqrt_exact(mpq_class(49)) == 7);
  CHECK(!cliff::sqrt_exact(mpq_class(2)));
  CHECK(!cliff::sqrt_exact(mpq_class(-4)));
  CHECK(!cliff::sqrt_exact(mpq_class(4, 7)));
}

TEST_CASE("complex square roots pick the canonical branch") {
  // Positive real part wins; a negative real has root +i*|root|.
  CHECK(*cliff::sqrt_exact(Scalar(4)) == Scalar(2));
  CHECK(*cliff::sqrt_exact(Scalar(-1)) == Scalar::i());
  CHECK(*cliff::sqrt_exact(Scalar(-4)) == Scalar(0, 2));
  CHECK(*cliff::sqrt_exact(Scalar(3, 4)) == Scalar(2, 1));
  CHECK(*cliff::sqrt_exact(Scalar(-3, -4)) == Scalar(1, -2));
  CHECK(*cliff::sqrt_exact(Scalar(0, 2)) == Scalar(1, 1));
  CHECK(!cliff::sqrt_exact(Scalar(2)));
  CHECK(!cliff::sqrt_exact(Scalar(0, 1)));
  CHECK(!cliff::sqrt_exact(Scalar(1, 1)));
}
