#include "ssp/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "ssp/errors.hpp"

namespace ssp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m;
  unsigned __int128 x = b % m;
  while (e) {
    if (e & 1U) r = r * x % m;
    x = x * x % m;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_nonneg(long long a, std::uint64_t m) {
  const long long mm = static_cast<long long>(m);
  long long r = a % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

using Poly = std::vector<std::uint32_t>;  // low degree first

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t sub = lead * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_zero_poly(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  Poly r = poly_mod(std::move(prod), m, p);
  r.resize(m.size() - 1, 0);
  return r;
}

// Monic polynomial of degree d with lower coefficients given by the base-p
// digits of idx.
Poly monic_from_index(std::uint64_t idx, unsigned d, std::uint32_t p) {
  Poly f(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  f[d] = 1;
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (is_zero_poly(poly_mod(f, monic_from_index(idx, d, p), p))) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree s; coefficient a_0 is the most
// significant in the comparison, then a_1, and so on.
Poly choose_modulus(std::uint32_t p, unsigned s) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < s; ++i) count *= p;
  for (std::uint64_t k = 0; k < count; ++k) {
    Poly f(s + 1, 0);
    std::uint64_t rem = k;
    for (unsigned i = s; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rem % p);
      rem /= p;
    }
    f[s] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

int legendre(long long a, std::uint64_t p) {
  const std::uint64_t r = mod_nonneg(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

const FieldCtx& FieldCtx::get(std::uint32_t p, unsigned s) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, s}];
  if (!slot) slot.reset(new FieldCtx(p, s));
  return *slot;
}

FieldCtx::FieldCtx(std::uint32_t p, unsigned s) : p_(p), s_(s) {
  if (!is_prime(p)) throw std::invalid_argument("FieldCtx: p = " + std::to_string(p) + " is not prime");
  if (s == 0) throw std::invalid_argument("FieldCtx: s must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("FieldCtx: field order exceeds table limit");
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = choose_modulus(p, s);

  // Primitive element by smallest code, then log/exp tables.
  const auto factors = prime_factors(q_ - 1);
  auto as_poly = [&](std::uint32_t code) {
    Poly a(s_, 0);
    for (unsigned i = 0; i < s_; ++i) {
      a[i] = code % p_;
      code /= p_;
    }
    return a;
  };
  auto as_code = [&](const Poly& a) {
    std::uint32_t c = 0;
    for (unsigned i = s_; i-- > 0;) c = c * p_ + a[i];
    return c;
  };
  auto poly_pow = [&](Poly base, std::uint64_t e) {
    Poly r = as_poly(1);
    while (e) {
      if (e & 1U) r = mul_mod(r, base, modulus_, p_);
      base = mul_mod(base, base, modulus_, p_);
      e >>= 1U;
    }
    return r;
  };
  std::uint32_t gen = 0;
  for (std::uint32_t c = 1; c < q_; ++c) {
    const Poly pc = as_poly(c);
    bool primitive = true;
    for (auto l : factors) {
      if (as_code(poly_pow(pc, (q_ - 1) / l)) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = c;
      break;
    }
  }
  if (gen == 0) throw std::logic_error("FieldCtx: no primitive element");

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  Poly cur = as_poly(1);
  const Poly g = as_poly(gen);
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    const std::uint32_t c = as_code(cur);
    exp_[k] = c;
    log_[c] = k;
    cur = mul_mod(cur, g, modulus_, p_);
  }
  frob_.assign(q_, 0);
  for (std::uint32_t c = 1; c < q_; ++c) {
    frob_[c] = exp_[static_cast<std::uint64_t>(log_[c]) * p_ % (q_ - 1)];
  }
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  if (s_ == 1) {
    const std::uint32_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  std::uint32_t r = 0;
  std::uint32_t scale = 1;
  for (unsigned i = 0; i < s_; ++i) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  std::uint32_t r = 0;
  std::uint32_t scale = 1;
  for (unsigned i = 0; i < s_; ++i) {
    const std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("FqElem: inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

std::uint32_t FieldCtx::encode(const std::vector<long long>& coeffs) const {
  if (coeffs.size() > s_) throw std::invalid_argument("FqElem: too many coefficients");
  std::uint32_t c = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) c = c * p_ + static_cast<std::uint32_t>(mod_nonneg(coeffs[i], p_));
  return c;
}

std::vector<std::uint32_t> FieldCtx::decode(std::uint32_t code) const {
  std::vector<std::uint32_t> out(s_);
  for (unsigned i = 0; i < s_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

std::uint32_t FieldCtx::from_int(long long v) const { return static_cast<std::uint32_t>(mod_nonneg(v, p_)); }

FqElem FqElem::from_code(const FieldCtx& ctx, std::uint32_t code) {
  if (code >= ctx.order()) throw std::out_of_range("FqElem: code out of range");
  return {&ctx, code};
}

FqElem FqElem::from_coeffs(const FieldCtx& ctx, const std::vector<long long>& coeffs) {
  return {&ctx, ctx.encode(coeffs)};
}

FqElem FqElem::gen(const FieldCtx& ctx) {
  if (ctx.s() == 1) return {&ctx, ctx.from_int(-static_cast<long long>(ctx.modulus()[0]))};
  return {&ctx, ctx.p()};
}

FqElem FqElem::frobenius_inverse() const {
  FqElem x = *this;
  for (unsigned i = 1; i < ctx_->s(); ++i) x = x.frobenius();
  return x;
}

FqElem FqElem::norm() const {
  FqElem acc = *this;
  FqElem conj = *this;
  for (unsigned i = 1; i < ctx_->s(); ++i) {
    conj = conj.frobenius();
    acc = acc * conj;
  }
  return acc;
}

std::string FqElem::to_string() const {
  const auto c = coeffs();
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

bool lex_less(const FqElem& a, const FqElem& b) {
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::vector<FqElem> elements(const FieldCtx& ctx) {
  std::vector<FqElem> out;
  out.reserve(ctx.order());
  for (std::uint32_t c = 0; c < ctx.order(); ++c) out.push_back(FqElem::from_code(ctx, c));
  return out;
}

FqElem sqrt_nonresidue(const FieldCtx& ctx, long long alpha) {
  if (ctx.p() == 2) throw std::invalid_argument("sqrt_nonresidue: p must be odd");
  if (ctx.s() % 2 != 0) throw std::invalid_argument("sqrt_nonresidue: needs an even-degree extension");
  const int ls = legendre(alpha, ctx.p());
  if (ls != -1) {
    throw NotInertError("alpha = " + std::to_string(alpha) + (ls == 0 ? " is divisible by p" : " is a QR mod p") +
                        ": p not inert in Q(sqrt(alpha))");
  }
  const FqElem a(ctx, alpha);
  std::optional<FqElem> best;
  for (const auto& x : elements(ctx)) {
    if (x * x == a && (!best || lex_less(x, *best))) best = x;
  }
  if (!best) throw std::logic_error("sqrt_nonresidue: no root found");
  return *best;
}

FMatrix zero_matrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols) {
  return FMatrix(rows, cols, FqElem(ctx, 0));
}

FMatrix identity_matrix(const FieldCtx& ctx, std::size_t n) {
  return FMatrix::identity(n, FqElem(ctx, 0), FqElem(ctx, 1));
}

FMatrix sigma(const FMatrix& m) {
  return m.map([](const FqElem& x) { return x.frobenius(); });
}

FMatrix conjugate_transpose(const FMatrix& m) { return sigma(m).transpose(); }

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(FMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
    const FqElem inv = m(row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const FqElem f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  FMatrix w = m;
  return rref(w).size();
}

FMatrix kernel(const FieldCtx& ctx, const FMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return identity_matrix(ctx, n);
  FMatrix w = m;
  const auto pivots = rref(w);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  const std::size_t nullity = n - pivots.size();
  FMatrix basis = zero_matrix(ctx, n, nullity);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = FqElem(ctx, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -w(r, free);
    ++k;
  }
  return basis;
}

FqElem determinant(const FMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("determinant: need a non-empty square matrix");
  FMatrix w = m;
  FqElem det = w(0, 0).one();
  const std::size_t n = w.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w(piv, col).is_zero()) ++piv;
    if (piv == n) return det.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(col, j), w(piv, j));
      det = -det;
    }
    det = det * w(col, col);
    const FqElem inv = w(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (w(i, col).is_zero()) continue;
      const FqElem f = w(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) w(i, j) = w(i, j) - f * w(col, j);
    }
  }
  return det;
}

FMatrix hconcat(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  FMatrix out(a.rows(), a.cols() + b.cols(), a(0, 0));
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

std::optional<FMatrix> inverse(const FMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("inverse: need a non-empty square matrix");
  const std::size_t n = m.rows();
  FMatrix aug = hconcat(m, identity_matrix(m(0, 0).ctx(), n));
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

std::optional<FMatrix> solve(const FMatrix& a, const FMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  FMatrix aug = hconcat(a, b);
  const auto pivots = rref(aug);
  for (auto c : pivots)
    if (c >= n) return std::nullopt;  // inconsistent
  const FieldCtx& ctx = aug(0, 0).ctx();
  FMatrix x = zero_matrix(ctx, n, b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, n + j);
  return x;
}

}  // namespace ssp
