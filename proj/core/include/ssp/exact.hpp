#pragma once

// Exact integers and rationals, Bernoulli numbers, zeta(1-2i) and the mass
// constant C_g. Nothing in here touches floating point.

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ssp {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& x);
BigInt ipow(const BigInt& base, unsigned long exponent);
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  Rational abs() const;
  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const { return v_.get_d(); }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// B_m with B_1 = -1/2. Memoized; safe to call from several threads.
Rational bernoulli(unsigned m);

/// zeta(1 - 2i) = -B_{2i} / (2i), i >= 1.
Rational zeta_negative_odd(unsigned i);

/// C_g = (-1)^{g(g+1)/2} 2^{-g} prod_{i=1}^{g} zeta(1-2i).
/// Throws FormulaInconsistency if the result is not strictly positive.
Rational mass_constant(unsigned g);

/// |prod_{i=1}^{g} B_{2i}| / (2^{2g} g!). Equal to mass_constant(g); kept as
/// a second, independent route.
Rational mass_constant_bernoulli_abs(unsigned g);

}  // namespace ssp
