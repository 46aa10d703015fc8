#include "ssp/witt.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "ssp/errors.hpp"

namespace ssp {

namespace {

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

unsigned ceil_log2(unsigned n) {
  unsigned k = 0;
  while ((1U << k) < n) ++k;
  return k;
}

}  // namespace

const WittRing& WittRing::get(std::uint32_t p, unsigned s, unsigned n) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, unsigned, unsigned>, std::unique_ptr<WittRing>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, s, n}];
  if (!slot) slot.reset(new WittRing(p, s, n));
  return *slot;
}

WittRing::WittRing(std::uint32_t p, unsigned s, unsigned n)
    : p_(p), s_(s), n_(n), field_(&FieldCtx::get(p, s)) {
  if (n == 0) throw std::invalid_argument("WittRing: truncation level must be >= 1");
  pn_ = ipow(BigInt(p), n);
  for (auto c : field_->modulus()) lifted_modulus_.emplace_back(c);

  // Newton iteration for the root of f congruent to x^p mod p.
  auto eval = [&](const std::vector<BigInt>& y, const std::vector<BigInt>& poly) {
    std::vector<BigInt> acc(s_, 0);
    for (std::size_t i = poly.size(); i-- > 0;) {
      acc = mul_coeffs(acc, y);
      acc[0] += poly[i];
      reduce_coeffs(acc);
    }
    return acc;
  };
  std::vector<BigInt> deriv;
  for (std::size_t i = 1; i < lifted_modulus_.size(); ++i) deriv.push_back(lifted_modulus_[i] * static_cast<unsigned long>(i));

  const FqElem frob_x = FqElem::gen(*field_).frobenius();
  std::vector<BigInt> y;
  for (auto c : frob_x.coeffs()) y.emplace_back(c);
  for (unsigned it = 0; it <= ceil_log2(n) + 1; ++it) {
    const WittElem fy(this, eval(y, lifted_modulus_));
    const WittElem dfy(this, eval(y, deriv));
    const WittElem step = fy * dfy.inverse();
    y = (WittElem(this, y) - step).c_;
  }
  const WittElem root(this, y);
  if (!WittElem(this, eval(y, lifted_modulus_)).is_zero()) throw std::logic_error("WittRing: Frobenius lift did not converge");
  if (!(root.reduce() == frob_x)) throw std::logic_error("WittRing: Frobenius lift reduces incorrectly");

  sigma_powers_.clear();
  WittElem cur = one();
  for (unsigned i = 0; i < s_; ++i) {
    sigma_powers_.push_back(cur.c_);
    cur = cur * root;
  }
  // sigma^s must fix x.
  WittElem it = gen();
  for (unsigned i = 0; i < s_; ++i) it = it.frobenius_lift();
  if (!(it == gen())) throw std::logic_error("WittRing: sigma^s is not the identity on x");
}

void WittRing::reduce_coeffs(std::vector<BigInt>& c) const {
  for (auto& v : c) v = mod_pos(v, pn_);
}

std::vector<BigInt> WittRing::mul_coeffs(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const {
  std::vector<BigInt> prod(2 * s_ - 1, 0);
  for (unsigned i = 0; i < s_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < s_; ++j) prod[i + j] += a[i] * b[j];
  }
  // x^s = -sum_{i<s} m_i x^i
  for (std::size_t k = prod.size(); k-- > s_;) {
    if (prod[k] == 0) continue;
    const BigInt lead = prod[k];
    const std::size_t shift = k - s_;
    for (unsigned i = 0; i < s_; ++i) prod[shift + i] -= lead * lifted_modulus_[i];
    prod[k] = 0;
  }
  prod.resize(s_);
  reduce_coeffs(prod);
  return prod;
}

WittElem WittRing::zero() const { return WittElem(this, std::vector<BigInt>(s_, 0)); }
WittElem WittRing::one() const { return from_int(1); }

WittElem WittRing::from_int(const BigInt& v) const {
  std::vector<BigInt> c(s_, 0);
  c[0] = mod_pos(v, pn_);
  return WittElem(this, std::move(c));
}

WittElem WittRing::from_coeffs(const std::vector<BigInt>& coeffs) const {
  if (coeffs.size() > s_) throw std::invalid_argument("WittElem: too many coefficients");
  std::vector<BigInt> c(s_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
  reduce_coeffs(c);
  return WittElem(this, std::move(c));
}

WittElem WittRing::gen() const {
  if (s_ == 1) return from_int(-lifted_modulus_[0]);
  std::vector<BigInt> c(s_, 0);
  c[1] = 1;
  return WittElem(this, std::move(c));
}

WittElem WittRing::lift(const FqElem& x) const {
  if (&x.ctx() != field_) throw std::invalid_argument("WittRing::lift: residue field mismatch");
  std::vector<BigInt> c;
  for (auto v : x.coeffs()) c.emplace_back(v);
  return WittElem(this, std::move(c));
}

WittElem WittRing::sigma_of_gen() const { return gen().frobenius_lift(); }

bool WittElem::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

FqElem WittElem::reduce() const {
  std::vector<long long> c;
  for (const auto& v : c_) c.push_back(static_cast<long long>(mpz_fdiv_ui(v.get_mpz_t(), ring_->p_)));
  return FqElem::from_coeffs(*ring_->field_, c);
}

Valuation WittElem::val_p() const {
  std::optional<unsigned> best;
  for (const auto& v : c_) {
    if (v == 0) continue;
    const unsigned k = static_cast<unsigned>(mpz_remove(BigInt().get_mpz_t(), v.get_mpz_t(), BigInt(ring_->p_).get_mpz_t()));
    if (!best || k < *best) best = k;
  }
  return best;
}

WittElem WittElem::frobenius_lift() const {
  std::vector<BigInt> out(ring_->s_, 0);
  for (unsigned i = 0; i < ring_->s_; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < ring_->s_; ++j) out[j] += c_[i] * ring_->sigma_powers_[i][j];
  }
  ring_->reduce_coeffs(out);
  return WittElem(ring_, std::move(out));
}

WittElem WittElem::frobenius_lift_inverse() const {
  WittElem x = *this;
  for (unsigned i = 1; i < ring_->s_; ++i) x = x.frobenius_lift();
  return x;
}

WittElem WittElem::inverse() const {
  const FqElem r = reduce();
  if (r.is_zero()) throw std::domain_error("WittElem: inverse of a non-unit");
  // y <- y (2 - x y) doubles the precision each step.
  WittElem y = ring_->lift(r.inverse());
  const WittElem two = ring_->from_int(2);
  for (unsigned it = 0; it <= ceil_log2(ring_->n_) + 1; ++it) y = y * (two - *this * y);
  return y;
}

WittElem WittElem::pow(unsigned e) const {
  WittElem r = one();
  WittElem b = *this;
  while (e) {
    if (e & 1U) r = r * b;
    b = b * b;
    e >>= 1U;
  }
  return r;
}

WittElem WittElem::divide_by_p_power(unsigned k) const {
  const BigInt pk = ipow(BigInt(ring_->p_), k);
  std::vector<BigInt> out;
  for (const auto& v : c_) {
    if (mpz_divisible_p(v.get_mpz_t(), pk.get_mpz_t()) == 0) throw std::domain_error("divide_by_p_power: not divisible");
    out.emplace_back(v / pk);
  }
  return WittElem(ring_, std::move(out));
}

WittElem WittRing::from_int(long long v) const { return from_int(BigInt(static_cast<long>(v))); }

WittElem operator+(const WittElem& a, const WittElem& b) {
  std::vector<BigInt> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.c_[i] + b.c_[i];
    if (c[i] >= a.ring_->pn_) c[i] -= a.ring_->pn_;
  }
  return WittElem(a.ring_, std::move(c));
}

WittElem operator-(const WittElem& a, const WittElem& b) {
  std::vector<BigInt> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.c_[i] - b.c_[i];
    if (c[i] < 0) c[i] += a.ring_->pn_;
  }
  return WittElem(a.ring_, std::move(c));
}

WittElem operator*(const WittElem& a, const WittElem& b) { return WittElem(a.ring_, a.ring_->mul_coeffs(a.c_, b.c_)); }

WittElem WittElem::operator-() const { return ring_->zero() - *this; }

WittElem hensel_sqrt(const WittRing& ring, long long alpha) {
  const FqElem root = sqrt_nonresidue(ring.residue_field(), alpha);
  const WittElem a = ring.from_int(alpha);
  const WittElem two = ring.from_int(2);
  WittElem u = ring.lift(root);
  for (unsigned it = 0; it <= ceil_log2(ring.n()) + 1; ++it) u = u - (u * u - a) * (two * u).inverse();
  if (!(u * u == a)) throw std::logic_error("hensel_sqrt: lift failed");
  return u;
}

WMatrix witt_zero_matrix(const WittRing& ring, std::size_t rows, std::size_t cols) {
  return WMatrix(rows, cols, ring.zero());
}

WMatrix witt_identity(const WittRing& ring, std::size_t n) { return WMatrix::identity(n, ring.zero(), ring.one()); }

WMatrix sigma(const WMatrix& m) {
  return m.map([](const WittElem& x) { return x.frobenius_lift(); });
}

WMatrix sigma_inverse(const WMatrix& m) {
  return m.map([](const WittElem& x) { return x.frobenius_lift_inverse(); });
}

FMatrix reduce(const WMatrix& m) {
  return m.map([](const WittElem& x) { return x.reduce(); });
}

WMatrix witt_matrix(const WittRing& ring, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  WMatrix m = witt_zero_matrix(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("witt_matrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ring.from_int(rows[i][j]);
  }
  return m;
}

WMatrix change_level(const WMatrix& m, const WittRing& target) {
  return m.map([&target](const WittElem& x) { return target.from_coeffs(x.coeffs()); });
}

std::vector<WittElem> charpoly(const WMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("charpoly: need a non-empty square matrix");
  const std::size_t n = a.rows();
  const WittRing& ring = a(0, 0).ring();
  std::vector<WittElem> c{ring.one(), -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Leading r x r block A_r, row R = a(r, 0..r-1), column S = a(0..r-1, r).
    std::vector<WittElem> q{ring.one(), -a(r, r)};
    std::vector<WittElem> v(r);  // A_r^k S
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      WittElem dot = ring.zero();
      for (std::size_t i = 0; i < r; ++i) dot = dot + a(r, i) * v[i];
      q.push_back(-dot);
      if (k + 1 < r) {
        std::vector<WittElem> nv(r, ring.zero());
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) nv[i] = nv[i] + a(i, j) * v[j];
        v = std::move(nv);
      }
    }
    // Lower-triangular Toeplitz (r+2) x (r+1) with first column q, times c.
    std::vector<WittElem> nc(r + 2, ring.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nc[i] = nc[i] + q[i - j] * c[j];
    c = std::move(nc);
  }
  return c;
}

WittElem determinant(const WMatrix& m) {
  const auto c = charpoly(m);
  return (m.rows() % 2 == 0) ? c.back() : -c.back();
}

std::optional<WMatrix> inverse(const WMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("inverse: need a non-empty square matrix");
  const std::size_t n = m.rows();
  const WittRing& ring = m(0, 0).ring();
  WMatrix w = m;
  WMatrix inv = witt_identity(ring, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !w(piv, col).is_unit()) ++piv;
    if (piv == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(w(col, j), w(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    const WittElem pinv = w(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      w(col, j) = w(col, j) * pinv;
      inv(col, j) = inv(col, j) * pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w(i, col).is_zero()) continue;
      const WittElem f = w(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) = w(i, j) - f * w(col, j);
        inv(i, j) = inv(i, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace ssp
