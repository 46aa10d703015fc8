#pragma once

// R/(p) = F_{p^2}[Pi] with Pi^2 = 0 and Pi w = sigma(w) Pi, the reduction
// mod p of the maximal order of the quaternion algebra ramified at p and
// infinity. Elements are a + b Pi with a, b in F_{p^2}.

#include <cstdint>
#include <string>
#include <vector>

#include "ssp/gf.hpp"
#include "ssp/matrix.hpp"

namespace ssp {

class QuatElem {
 public:
  QuatElem() = default;
  QuatElem(FqElem a, FqElem b) : a_(a), b_(b) {}

  const FqElem& a() const { return a_; }
  const FqElem& b() const { return b_; }
  const FieldCtx& ctx() const { return a_.ctx(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_unit() const { return !a_.is_zero(); }
  /// Reduction mod Pi.
  FqElem reduce() const { return a_; }
  /// Canonical involution: sigma(a) - b Pi.
  QuatElem conj() const { return {a_.frobenius(), -b_}; }
  /// Throws std::domain_error for non-units.
  QuatElem inverse() const;

  QuatElem zero() const { return {a_.zero(), a_.zero()}; }
  QuatElem one() const { return {a_.one(), a_.zero()}; }

  std::string to_string() const;

  friend QuatElem operator+(const QuatElem& x, const QuatElem& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QuatElem operator-(const QuatElem& x, const QuatElem& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  /// (a + b Pi)(c + d Pi) = ac + (ad + b sigma(c)) Pi
  friend QuatElem operator*(const QuatElem& x, const QuatElem& y) {
    return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_.frobenius()};
  }
  QuatElem operator-() const { return {-a_, -b_}; }
  friend bool operator==(const QuatElem& x, const QuatElem& y) = default;

 private:
  FqElem a_;
  FqElem b_;
};

class QuatModP {
 public:
  /// Throws ValidationError for p not an odd prime, NotInertError when
  /// alpha is a square mod p.
  QuatModP(std::uint32_t p, long long alpha);

  std::uint32_t p() const { return p_; }
  long long alpha() const { return alpha_; }
  const FieldCtx& field() const { return *field_; }
  /// u with u^2 = alpha.
  QuatElem u() const { return embed(u_); }
  QuatElem pi() const;
  QuatElem embed(const FqElem& w) const { return {w, w.zero()}; }
  QuatElem zero() const;
  QuatElem one() const;

  /// The F_p-basis 1, u, Pi, u Pi.
  std::vector<QuatElem> basis() const;
  /// All p^4 elements.
  std::vector<QuatElem> elements() const;

 private:
  std::uint32_t p_;
  long long alpha_;
  const FieldCtx* field_;
  FqElem u_;
};

using QMatrix = Matrix<QuatElem>;

/// Conjugate transpose for the canonical involution.
QMatrix conj_transpose(const QMatrix& x);
/// Entrywise reduction mod Pi.
FMatrix reduce(const QMatrix& x);

}  // namespace ssp
