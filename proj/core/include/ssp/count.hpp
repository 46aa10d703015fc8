#pragma once

// The eigensystem counting pipeline: superspecial mass bound through the
// Siegel embedding, times the bound on irreducible mod-p representations of
// G(U_r x U_s)(F_{p^2}). Also the degree bookkeeping in p and functions on a
// finite right G-set with values in a representation.

#include <cstdint>
#include <string>
#include <vector>

#include "ssp/exact.hpp"
#include "ssp/gf.hpp"
#include "ssp/groups.hpp"

namespace ssp {

struct SignatureParams {
  std::uint32_t p = 0;
  long long alpha = 0;
  unsigned r = 0;
  unsigned s = 0;
  std::uint64_t n = 0;

  unsigned g() const { return r + s; }
};

/// Throws ValidationError naming the first violated invariant; returns
/// warnings. rs = 0 is accepted with a warning, and so is p | N unless
/// strict is set.
std::vector<std::string> validate(const SignatureParams& params, bool strict = false);

/// prod_{i=1}^g (p^i + (-1)^i)
BigInt mass_product(unsigned g, std::uint32_t p);

/// C_g #GSp_{2g}(Z/N) prod (p^i + (-1)^i), exact. The second form uses
/// the |Bernoulli| expression of C_g.
Rational superspecial_bound(const SignatureParams& params);
Rational superspecial_bound_bernoulli(const SignatureParams& params);

struct CountReport {
  SignatureParams params;
  std::vector<std::string> warnings;
  Rational mass_constant;
  BigInt gsp_order;
  BigInt mass_product;
  Rational superspecial_bound;
  BigInt superspecial_bound_ceil;
  BigInt class_count;
  BigInt dim_bound;
  BigInt irr_sum_bound;
  /// ceil(superspecial_bound) * irr_sum_bound
  BigInt final_bound;
  /// superspecial_bound * irr_sum_bound before rounding.
  Rational final_bound_exact;
  unsigned asymptotic_exponent = 0;
  std::string bound_kind = "upper bound via Siegel embedding";
};

CountReport eigensystem_bound(const SignatureParams& params);

/// Degree in p of the bound, summed factor by factor; throws
/// FormulaInconsistency unless it equals g^2 + g + 1 - rs and the degree of
/// bound_polynomial_in_p.
unsigned asymptotic_exponent_symbolic(unsigned g, unsigned r, unsigned s);

/// The p-dependent part of the bound as an integer polynomial in p
/// (coefficients low degree first): mass product, dimension bound and
/// class count multiplied out.
std::vector<BigInt> bound_polynomial_in_p(unsigned g, unsigned r, unsigned s);

/// C_1 (p - 1), the supersingular mass (p - 1)/24.
Rational supersingular_mass(std::uint32_t p);

// ---------------------------------------------------------------------------
// Equivariant functions

struct PermGenerator {
  std::string name;
  /// x . M = perm[x]
  std::vector<std::size_t> perm;
};

struct CosetSpace {
  std::size_t points = 0;
  std::vector<PermGenerator> generators;
  std::string group;

  /// Throws std::invalid_argument unless every generator is a permutation
  /// of the points.
  void validate() const;
  /// Orbit of every point, numbered in order of first appearance.
  std::vector<std::size_t> orbit_labels() const;
  std::size_t orbit_count() const;
};

struct Representation {
  std::size_t dim = 0;
  const FieldCtx* field = nullptr;
  /// rho of each generator, in the order of the space's generators.
  std::vector<FMatrix> generators;
};

/// dim { f : points -> W : f(x . M) = rho(M)^{-1} f(x) }, computed orbit by
/// orbit from Schreier generators of the stabilizers. Throws
/// std::invalid_argument on inconsistent data.
std::size_t equivariant_dimension(const CosetSpace& space, const Representation& rho);

/// equivariant_dimension <= points * dim rho.
bool dim_superspecial_bound_check(const CosetSpace& space, const Representation& rho);

/// Right cosets H g of a subgroup H of g, acted on by right multiplication
/// with the given generators.
CosetSpace right_coset_space(const MatrixGroup& group, const std::vector<std::size_t>& subgroup,
                             const std::vector<std::size_t>& generators, const std::string& label);

/// The same space with point x renamed to relabel[x].
CosetSpace relabel(const CosetSpace& space, const std::vector<std::size_t>& relabel);

}  // namespace ssp
