#include "ssp/exact.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "ssp/errors.hpp"

namespace ssp {

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str(10);
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s, 10));
    return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
  }
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}
Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};

}  // namespace

Rational bernoulli(unsigned m) {
  std::lock_guard lock(g_bernoulli_mutex);
  // sum_{j=0}^{k} C(k+1, j) B_j = 0  =>  B_k = -(1/(k+1)) sum_{j<k} C(k+1, j) B_j
  for (unsigned k = static_cast<unsigned>(g_bernoulli.size()); k <= m; ++k) {
    Rational acc;
    for (unsigned j = 0; j < k; ++j) {
      if (j >= 3 && (j & 1U)) continue;  // odd-index values vanish
      acc += Rational(binomial(k + 1, j)) * g_bernoulli[j];
    }
    g_bernoulli.push_back(-acc / Rational(static_cast<long>(k + 1)));
  }
  return g_bernoulli[m];
}

Rational zeta_negative_odd(unsigned i) {
  if (i == 0) throw std::invalid_argument("zeta_negative_odd: i must be >= 1");
  return -bernoulli(2 * i) / Rational(static_cast<long>(2 * i));
}

Rational mass_constant(unsigned g) {
  if (g == 0) throw std::invalid_argument("mass_constant: g must be >= 1");
  Rational prod(1);
  for (unsigned i = 1; i <= g; ++i) prod *= zeta_negative_odd(i);
  const unsigned long t = static_cast<unsigned long>(g) * (g + 1) / 2;
  Rational c = prod / Rational(ipow(2, g));
  if (t & 1UL) c = -c;
  if (c.sign() <= 0) {
    throw FormulaInconsistency("mass_constant(" + std::to_string(g) +
                               ") is not positive: " + c.to_string());
  }
  return c;
}

Rational mass_constant_bernoulli_abs(unsigned g) {
  if (g == 0) throw std::invalid_argument("mass_constant_bernoulli_abs: g must be >= 1");
  Rational prod(1);
  for (unsigned i = 1; i <= g; ++i) prod *= bernoulli(2 * i);
  return prod.abs() / Rational(BigInt(ipow(2, 2UL * g) * factorial(g)));
}

}  // namespace ssp
