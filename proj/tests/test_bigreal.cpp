#include <doctest.h>

#include <cmath>

#include "dzv/bigreal.hpp"
#include "dzv/reconstruct.hpp"

using namespace dzv;

namespace {
constexpr mpfr_prec_t P = 256;

double err_of(const BigReal& x) { return x.error_double(); }
}  // namespace

TEST_CASE("ball arithmetic tracks conservative bounds") {
  BigReal a = BigReal::from_rational(Rational(1, 3), P);
  BigReal b = BigReal::from_rational(Rational(1, 7), P);
  BigReal c = (a + b) * (a - b) / b;
  double expect = (1.0 / 3 + 1.0 / 7) * (1.0 / 3 - 1.0 / 7) / (1.0 / 7);
  CHECK(std::abs(c.to_double() - expect) < 1e-12);
  CHECK(err_of(c) > 0);
  CHECK(err_of(c) < 1e-60);
}

TEST_CASE("exact integers stay exact") {
  BigReal two = BigReal::from_long(2, P);
  BigReal big = two.pow_si(100);
  CHECK(err_of(big) == 0);
  CHECK(mpfr_cmp_ui_2exp(big.value(), 1, 100) == 0);
}

TEST_CASE("division by a ball containing zero throws") {
  BigReal z = BigReal::from_long(0, P);
  z.add_error_2exp(-10);
  BigReal one = BigReal::from_long(1, P);
  CHECK_THROWS_AS(one / z, std::domain_error);
}

TEST_CASE("contains_zero respects bounds") {
  BigReal x = BigReal::from_rational(Rational(1, 1000000), P);
  CHECK(!x.contains_zero());
  x.add_error_2exp(-2);
  CHECK(x.contains_zero());
}

TEST_CASE("pi, log, exp sanity") {
  BigReal pi = BigReal::pi(P);
  CHECK(std::abs(pi.to_double() - 3.14159265358979) < 1e-13);
  CHECK(err_of(pi) < 1e-70);
  BigReal l = BigReal::from_long(10, P).log();
  CHECK(std::abs(l.to_double() - std::log(10.0)) < 1e-14);
  BigReal e = BigReal::from_long(1, P).exp();
  CHECK(std::abs(e.to_double() - std::exp(1.0)) < 1e-14);
  CHECK(std::abs(BigReal::log2(P).to_double() - std::log(2.0)) < 1e-14);
  CHECK(std::abs(BigReal::euler_gamma(P).to_double() - 0.5772156649015329) < 1e-14);
}

TEST_CASE("hex round trip") {
  BigReal x = BigReal::pi(P).mul(Rational(22, 7));
  bool ok = false;
  BigReal y = BigReal::from_hex(x.to_hex().c_str(), x.error_hex().c_str(), P, &ok);
  CHECK(ok);
  CHECK(mpfr_cmp(x.value(), y.value()) == 0);
}

TEST_CASE("rational reconstruction: paper constant 5197/691") {
  // 5197/691 = 7.5209840810419682
  BigReal x = BigReal::from_rational(Rational(5197, 691), P);
  x.add_error_2exp(-84);  // ~1e-25
  auto r = rational_reconstruct(x, Integer(1000000));
  REQUIRE(r.has_value());
  CHECK(*r == Rational(5197, 691));
}

TEST_CASE("rational reconstruction: exact half") {
  BigReal x = BigReal::from_rational(Rational(1, 2), P);
  auto r = rational_reconstruct(x, Integer(10));
  REQUIRE(r.has_value());
  CHECK(*r == Rational(1, 2));
}

TEST_CASE("rational reconstruction: pi with tiny denominator cap fails") {
  BigReal x = BigReal::pi(P);
  x.add_error_2exp(-100);  // ~1e-30
  CHECK(!rational_reconstruct(x, Integer(10)).has_value());
}

TEST_CASE("rational reconstruction: insufficient precision fails rather than guesses") {
  BigReal x = BigReal::from_rational(Rational(5197, 691), P);
  x.add_error_2exp(-4);  // huge uncertainty
  CHECK(!rational_reconstruct(x, Integer(1000000)).has_value());
}
