#pragma once

// Truncated unramified Witt rings W_n(F_{p^s}), realized as
// (Z/p^n)[x]/(f(x)) where f is the F_p modulus of F_{p^s} with its
// coefficients read as integers. The Frobenius lift sigma is the unique ring
// automorphism with sigma(x) = x^p mod p; it is found by Newton iteration on
// f at construction time and checked there.

#include <cstdint>
#include <optional>
#include <vector>

#include "ssp/exact.hpp"
#include "ssp/gf.hpp"
#include "ssp/matrix.hpp"

namespace ssp {

class WittElem;

/// p-adic valuation of an element of a truncated ring. std::nullopt is the
/// censored marker: the element is 0 mod p^n, so its valuation is >= n and
/// otherwise unknown.
using Valuation = std::optional<unsigned>;

class WittRing {
 public:
  /// Interned per (p, s, n); references stay valid for the whole program.
  static const WittRing& get(std::uint32_t p, unsigned s, unsigned n);

  WittRing(const WittRing&) = delete;
  WittRing& operator=(const WittRing&) = delete;

  std::uint32_t p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned n() const { return n_; }
  const BigInt& modulus_pn() const { return pn_; }
  const FieldCtx& residue_field() const { return *field_; }
  /// s+1 coefficients, low degree first, monic.
  const std::vector<BigInt>& lifted_modulus() const { return lifted_modulus_; }

  WittElem zero() const;
  WittElem one() const;
  WittElem from_int(const BigInt& v) const;
  WittElem from_int(long long v) const;
  WittElem from_coeffs(const std::vector<BigInt>& coeffs) const;
  /// The class of x.
  WittElem gen() const;
  /// Lift of a residue-field element through its coefficient vector.
  WittElem lift(const FqElem& x) const;
  /// sigma(x) as stored at construction.
  WittElem sigma_of_gen() const;

  /// Same (p, s) at another truncation level.
  const WittRing& at_level(unsigned n) const { return get(p_, s_, n); }

 private:
  friend class WittElem;
  friend WittElem operator+(const WittElem& a, const WittElem& b);
  friend WittElem operator-(const WittElem& a, const WittElem& b);
  friend WittElem operator*(const WittElem& a, const WittElem& b);
  WittRing(std::uint32_t p, unsigned s, unsigned n);

  void reduce_coeffs(std::vector<BigInt>& c) const;
  std::vector<BigInt> mul_coeffs(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const;

  std::uint32_t p_;
  unsigned s_;
  unsigned n_;
  BigInt pn_;
  const FieldCtx* field_;
  std::vector<BigInt> lifted_modulus_;
  // sigma(x)^i for i < s, as coefficient vectors.
  std::vector<std::vector<BigInt>> sigma_powers_;
};

class WittElem {
 public:
  WittElem() = default;

  const WittRing& ring() const { return *ring_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_unit() const { return !reduce().is_zero(); }

  /// Reduction W_n -> W_1 = F_{p^s}.
  FqElem reduce() const;
  Valuation val_p() const;

  WittElem frobenius_lift() const;
  /// sigma^{-1} = sigma^{s-1}.
  WittElem frobenius_lift_inverse() const;
  /// Throws std::domain_error for non-units.
  WittElem inverse() const;
  WittElem pow(unsigned e) const;
  /// x / p^k for x with val_p(x) >= k; the result is only meaningful mod
  /// p^{n-k}.
  WittElem divide_by_p_power(unsigned k) const;

  WittElem zero() const { return ring_->zero(); }
  WittElem one() const { return ring_->one(); }

  friend WittElem operator+(const WittElem& a, const WittElem& b);
  friend WittElem operator-(const WittElem& a, const WittElem& b);
  friend WittElem operator*(const WittElem& a, const WittElem& b);
  WittElem operator-() const;
  friend bool operator==(const WittElem& a, const WittElem& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

 private:
  friend class WittRing;
  WittElem(const WittRing* ring, std::vector<BigInt> c) : ring_(ring), c_(std::move(c)) {}

  const WittRing* ring_ = nullptr;
  std::vector<BigInt> c_;
};

/// u in W_n(F_{p^s}) with u^2 = alpha, reducing to sqrt_nonresidue(alpha).
/// Throws NotInertError when alpha is a square mod p.
WittElem hensel_sqrt(const WittRing& ring, long long alpha);

using WMatrix = Matrix<WittElem>;

WMatrix witt_zero_matrix(const WittRing& ring, std::size_t rows, std::size_t cols);
WMatrix witt_identity(const WittRing& ring, std::size_t n);
WMatrix sigma(const WMatrix& m);
WMatrix sigma_inverse(const WMatrix& m);
FMatrix reduce(const WMatrix& m);
/// Integer matrix read into the ring.
WMatrix witt_matrix(const WittRing& ring, const std::vector<std::vector<long long>>& rows);
/// Same coefficient representatives in another ring of the same (p, s).
WMatrix change_level(const WMatrix& m, const WittRing& target);

/// Coefficients c_0..c_h of det(T I - m) = sum_j c_j T^{h-j} (c_0 = 1),
/// computed division-free (Berkowitz), so exact at the truncation level.
std::vector<WittElem> charpoly(const WMatrix& m);
WittElem determinant(const WMatrix& m);
/// Inverse over the local ring; nullopt when the reduction is singular.
std::optional<WMatrix> inverse(const WMatrix& m);

}  // namespace ssp
