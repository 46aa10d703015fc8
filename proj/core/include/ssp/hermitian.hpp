#pragma once

// The mod-p Hermitian space M/VM attached to a polarized Dieudonne module
// with F + V = 0: <x, y> = e(x, F y) mod p, which is well defined on M/VM,
// linear in x, sigma-semilinear in y and satisfies <x, y> = <y, x>^sigma.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ssp/dieudonne.hpp"
#include "ssp/gf.hpp"

namespace ssp {

/// <x, y> = x^T gram sigma(y) on coordinate columns.
struct HermitianQuotient {
  const FieldCtx* field = nullptr;
  FMatrix gram;
  /// Induced action of sqrt(alpha); with an action the basis is ordered so
  /// that it is diag(-sqrt(alpha) I_r, sqrt(alpha) I_s).
  std::optional<FMatrix> action;
  unsigned r = 0;
  unsigned s = 0;
  std::optional<FqElem> sqrt_alpha;
  /// Source data, for mapping vectors of M/pM to quotient coordinates.
  LieQuotient lie;
  /// Columns: the graded basis in coordinates of lie.basis.
  FMatrix basis_change;

  std::size_t dim() const { return gram.rows(); }
  bool graded() const { return action.has_value(); }
  /// Block sizes of the grading; {dim()} when ungraded.
  std::vector<std::size_t> blocks() const;
  FqElem pair(const FMatrix& x, const FMatrix& y) const;
};

/// Throws PairingError ("polarization required", "F+V != 0", "degenerate",
/// or the failed structural identity).
HermitianQuotient reduce_pairing(const DieudonneModule& m);

/// e(x, F y) mod p for coordinate columns x, y of M.
FqElem witt_pairing_value(const DieudonneModule& m, const WMatrix& x, const WMatrix& y);

/// Coordinates in the graded quotient basis of the class of x in M/VM.
FMatrix quotient_coordinates(const HermitianQuotient& h, const FMatrix& x_mod_p);

/// <x, y>^sigma == <y, x> on all basis pairs.
bool is_sigma_alternating(const HermitianQuotient& h);
/// <b x, y> == <x, b* y> for the sqrt(alpha) action; true when ungraded.
bool is_skew_hermitian(const HermitianQuotient& h);

struct AutomorphismGroup {
  BigInt order;
  /// Filled only when requested.
  std::vector<FMatrix> elements;
  /// Similitude factor of each element, parallel to elements.
  std::vector<FqElem> factors;
};

/// All X, block diagonal for the grading, with X^T G sigma(X) = c G for some
/// c in F_p^x. Throws BudgetExceeded past the budget.
AutomorphismGroup automorphism_group_bruteforce(const HermitianQuotient& h, bool collect_elements = false,
                                                std::uint64_t budget = 0);

/// Similitude factor c of X, if X^T G sigma(X) = c G with c in F_p^x.
std::optional<FqElem> similitude_factor(const HermitianQuotient& h, const FMatrix& x);

/// The dual space with (eps_v, eps_w) transported through v -> <., v>:
/// Gram sigma(G)^{-1}, action transposed. Applying it twice returns h.
HermitianQuotient cotangent_dual(const HermitianQuotient& h);

}  // namespace ssp
