#pragma once

// Finite fields F_{p^s} = F_p[t]/(m(t)) with m the smallest monic irreducible
// of degree s (coefficients compared low-degree first). Elements are small
// value types: a context pointer plus the base-p code sum c_i p^i of their
// coefficient vector. Contexts are interned per (p, s) and live for the
// whole program, so the same (p, s) always yields the same modulus.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssp/matrix.hpp"

namespace ssp {

bool is_prime(std::uint64_t n);

/// Legendre symbol (a | p) for an odd prime p: 0, 1 or -1.
int legendre(long long a, std::uint64_t p);

class FieldCtx {
 public:
  /// Largest field order for which a context can be built.
  static constexpr std::uint32_t kMaxOrder = 1U << 20;

  static const FieldCtx& get(std::uint32_t p, unsigned s);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const { return p_; }
  unsigned s() const { return s_; }
  std::uint32_t order() const { return q_; }
  /// s+1 coefficients, low degree first; the last one is 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t frob(std::uint32_t a) const { return frob_[a]; }

  std::uint32_t encode(const std::vector<long long>& coeffs) const;
  std::vector<std::uint32_t> decode(std::uint32_t code) const;
  std::uint32_t from_int(long long v) const;

 private:
  FieldCtx(std::uint32_t p, unsigned s);

  std::uint32_t p_;
  unsigned s_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> frob_;
};

class FqElem {
 public:
  FqElem() = default;
  FqElem(const FieldCtx& ctx, long long value) : ctx_(&ctx), code_(ctx.from_int(value)) {}

  static FqElem from_code(const FieldCtx& ctx, std::uint32_t code);
  static FqElem from_coeffs(const FieldCtx& ctx, const std::vector<long long>& coeffs);
  /// The class of t.
  static FqElem gen(const FieldCtx& ctx);

  const FieldCtx& ctx() const { return *ctx_; }
  std::uint32_t code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return ctx_->decode(code_); }

  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }
  bool in_prime_field() const { return code_ < ctx_->p(); }

  /// x -> x^p.
  FqElem frobenius() const { return {ctx_, ctx_->frob(code_)}; }
  /// x -> x^{p^{s-1}}.
  FqElem frobenius_inverse() const;
  /// prod_{i<s} sigma^i(x); lies in F_p.
  FqElem norm() const;
  FqElem inverse() const { return {ctx_, ctx_->inv(code_)}; }
  FqElem pow(std::uint64_t e) const { return {ctx_, ctx_->pow(code_, e)}; }

  FqElem zero() const { return {ctx_, 0U}; }
  FqElem one() const { return {ctx_, 1U}; }

  /// Polynomial notation in t, e.g. "2t+1".
  std::string to_string() const;

  friend FqElem operator+(const FqElem& a, const FqElem& b) { return {a.ctx_, a.ctx_->add(a.code_, b.code_)}; }
  friend FqElem operator-(const FqElem& a, const FqElem& b) { return {a.ctx_, a.ctx_->sub(a.code_, b.code_)}; }
  friend FqElem operator*(const FqElem& a, const FqElem& b) { return {a.ctx_, a.ctx_->mul(a.code_, b.code_)}; }
  friend FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inverse(); }
  FqElem operator-() const { return {ctx_, ctx_->neg(code_)}; }
  friend bool operator==(const FqElem& a, const FqElem& b) { return a.code_ == b.code_ && a.ctx_ == b.ctx_; }

 private:
  FqElem(const FieldCtx* ctx, std::uint32_t code) : ctx_(ctx), code_(code) {}

  const FieldCtx* ctx_ = nullptr;
  std::uint32_t code_ = 0;
};

/// Coefficient vectors compared lexicographically, low degree first.
bool lex_less(const FqElem& a, const FqElem& b);

/// All elements of the field in code order.
std::vector<FqElem> elements(const FieldCtx& ctx);

/// Root u of u^2 = alpha in F_{p^s} (s even). Of the two roots the one with
/// the lexicographically smaller coefficient vector is returned; then
/// frobenius(u) == -u. Throws NotInertError if alpha is a square mod p.
FqElem sqrt_nonresidue(const FieldCtx& ctx, long long alpha);

using FMatrix = Matrix<FqElem>;

FMatrix zero_matrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols);
FMatrix identity_matrix(const FieldCtx& ctx, std::size_t n);
FMatrix sigma(const FMatrix& m);
/// sigma(m)^T, i.e. X* for the quadratic extension.
FMatrix conjugate_transpose(const FMatrix& m);

std::size_t rank(const FMatrix& m);
/// Columns form a basis of {x : m x = 0}.
FMatrix kernel(const FieldCtx& ctx, const FMatrix& m);
FqElem determinant(const FMatrix& m);
std::optional<FMatrix> inverse(const FMatrix& m);
/// Some x with a x = b, if one exists.
std::optional<FMatrix> solve(const FMatrix& a, const FMatrix& b);
/// Horizontal concatenation [a | b].
FMatrix hconcat(const FMatrix& a, const FMatrix& b);

}  // namespace ssp
