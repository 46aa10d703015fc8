#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ssp/exact.hpp"

using ssp::BigInt;
using ssp::Rational;

namespace {

Rational from_mpq(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rational normal form") {
    CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
    CHECK(Rational(BigInt(0), BigInt(-7)).denominator() == 1);
    CHECK(Rational(BigInt(10), BigInt(5)).is_integer());
    CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
    CHECK(Rational::parse("-12/8") == Rational(BigInt(-3), BigInt(2)));
    CHECK(Rational::parse("42").to_string() == "42");
  }

  TEST_CASE("floor and ceil") {
    CHECK(Rational(BigInt(7), BigInt(2)).floor() == 3);
    CHECK(Rational(BigInt(7), BigInt(2)).ceil() == 4);
    CHECK(Rational(BigInt(-7), BigInt(2)).floor() == -4);
    CHECK(Rational(BigInt(-7), BigInt(2)).ceil() == -3);
    CHECK(Rational(5).ceil() == 5);
  }

  TEST_CASE("(a + b) - b == a on random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
      const Rational a(BigInt(num(rng)), BigInt(den(rng)));
      const Rational b(BigInt(num(rng)), BigInt(den(rng)));
      CHECK((a + b) - b == a);
      if (b.sign() != 0) CHECK((a * b) / b == a);
    }
  }

  TEST_CASE("bernoulli small values") {
    CHECK(ssp::bernoulli(0) == Rational(1));
    CHECK(ssp::bernoulli(1) == Rational(BigInt(-1), BigInt(2)));
    CHECK(ssp::bernoulli(2) == Rational(BigInt(1), BigInt(6)));
    CHECK(ssp::bernoulli(4) == Rational(BigInt(-1), BigInt(30)));
    CHECK(ssp::bernoulli(6) == Rational(BigInt(1), BigInt(42)));
    CHECK(ssp::bernoulli(7) == Rational(0));
  }

  TEST_CASE("bernoulli agrees with Akiyama-Tanigawa") {
    for (unsigned m = 2; m <= 60; m += 2) {
      CAPTURE(m);
      CHECK(ssp::bernoulli(m) == from_mpq(oracle::bernoulli(m)));
    }
  }

  TEST_CASE("defining recurrence sums to zero") {
    for (unsigned m = 1; m <= 40; ++m) {
      Rational sum;
      for (unsigned j = 0; j <= m; ++j) sum += Rational(ssp::binomial(m + 1, j)) * ssp::bernoulli(j);
      CAPTURE(m);
      CHECK(sum == Rational(0));
    }
  }

  TEST_CASE("zeta at negative odd integers") {
    CHECK(ssp::zeta_negative_odd(1) == Rational(BigInt(-1), BigInt(12)));
    CHECK(ssp::zeta_negative_odd(2) == Rational(BigInt(1), BigInt(120)));
    CHECK(ssp::zeta_negative_odd(3) == Rational(BigInt(-1), BigInt(252)));
  }

  TEST_CASE("mass constants") {
    CHECK(ssp::mass_constant(1) == Rational(BigInt(1), BigInt(24)));
    CHECK(ssp::mass_constant(2) == Rational(BigInt(1), BigInt(5760)));
    CHECK(ssp::mass_constant(3) == Rational(BigInt(1), BigInt(2903040)));
    for (unsigned g = 1; g <= 12; ++g) {
      CAPTURE(g);
      const Rational c = ssp::mass_constant(g);
      CHECK(c.sign() > 0);
      CHECK(c == ssp::mass_constant_bernoulli_abs(g));
      CHECK(c == from_mpq(oracle::mass_constant(g)));
    }
  }

  TEST_CASE("bernoulli product form by hand") {
    for (unsigned g = 1; g <= 12; ++g) {
      Rational prod(1);
      for (unsigned i = 1; i <= g; ++i) prod *= ssp::bernoulli(2 * i);
      const Rational expected = prod.abs() / Rational(ssp::ipow(2, 2 * g) * ssp::factorial(g));
      CAPTURE(g);
      CHECK(ssp::mass_constant(g) == expected);
    }
  }

  TEST_CASE("integer helpers") {
    CHECK(ssp::to_decimal(ssp::ipow(10, 30)) == "1000000000000000000000000000000");
    CHECK(ssp::binomial(10, 3) == 120);
    CHECK(ssp::factorial(10) == 3628800);
  }
}
