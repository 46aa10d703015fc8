#pragma once

// Dieudonne modules over W_n(F_{p^s}): free modules with a sigma-semilinear F
// and a sigma^{-1}-semilinear V given by matrices (F x = A sigma(x),
// V x = B sigma^{-1}(x) on coordinate columns), an optional polarization
// Gram matrix E (e(x, y) = x^T E y) and an optional action of sqrt(alpha).
//
// Also here: Newton and Hodge polygons, the slope predicates, the endpoint
// admissibility test, Kottwitz' determinant condition, and the explicit
// superspecial model with unitary structure.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssp/exact.hpp"
#include "ssp/gf.hpp"
#include "ssp/witt.hpp"

namespace ssp {

/// i(sqrt(alpha)) as a W-linear matrix.
struct OkAction {
  long long alpha = 0;
  WMatrix matrix;
};

class DieudonneModule {
 public:
  /// Rebuilds the same module at another truncation level.
  using PrecisionSource = std::function<DieudonneModule(unsigned n)>;

  /// Throws std::invalid_argument on shape mismatches.
  DieudonneModule(const WittRing& ring, WMatrix f, WMatrix v, std::optional<WMatrix> polarization = std::nullopt,
                  std::optional<OkAction> action = std::nullopt);

  const WittRing& ring() const { return *ring_; }
  std::size_t rank() const { return f_.rows(); }
  const WMatrix& f_matrix() const { return f_; }
  const WMatrix& v_matrix() const { return v_; }
  const std::optional<WMatrix>& polarization() const { return e_; }
  const std::optional<OkAction>& ok_action() const { return action_; }

  bool has_precision_source() const { return static_cast<bool>(source_); }
  void set_precision_source(PrecisionSource source) { source_ = std::move(source); }
  /// Throws InsufficientPrecision when no precision source is attached.
  DieudonneModule at_level(unsigned n) const;

  DieudonneModule without_polarization() const;

  /// F and V on coordinate columns (h x k matrices).
  WMatrix apply_f(const WMatrix& x) const { return f_ * sigma(x); }
  WMatrix apply_v(const WMatrix& x) const { return v_ * sigma_inverse(x); }
  /// e(x, y) for coordinate columns; requires a polarization.
  WittElem pairing(const WMatrix& x, const WMatrix& y) const;

 private:
  const WittRing* ring_;
  WMatrix f_;
  WMatrix v_;
  std::optional<WMatrix> e_;
  std::optional<OkAction> action_;
  PrecisionSource source_;
};

struct AxiomCheck {
  std::string name;
  bool passed = false;
  /// First (row, col) where the defining matrix identity fails.
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  /// nullptr when the named check was not applicable.
  const AxiomCheck* find(const std::string& name) const;
};

/// FV = VF = p, and, when present, the polarization (alternating, principal,
/// e(Fx, y) = e(x, Vy)^sigma) and the O_k-action (square, commutation with F
/// and V, skew-Hermitian for e).
AxiomReport check_axioms(const DieudonneModule& m);

/// F + V = 0 as additive operators on M.
bool f_plus_v_vanishes(const DieudonneModule& m);

/// Rank-2 module over W_n(F_{p^2}) with F = [[0,1],[-p,0]] sigma,
/// V = [[0,-1],[p,0]] sigma^{-1} and polarization [[0,1],[-1,0]].
DieudonneModule build_a_half(const WittRing& ring);

/// g = r + s copies of build_a_half with the product polarization and the
/// action of sqrt(alpha) built blockwise from u = hensel_sqrt(alpha), each
/// block oriented so that the induced action on M/VM is
/// diag(-sqrt(alpha) I_r, sqrt(alpha) I_s). Throws ValidationError for odd g
/// or g < 2, NotInertError when alpha is a square mod p.
DieudonneModule build_superspecial_unitary(std::uint32_t p, unsigned n, long long alpha, unsigned r, unsigned s);

/// F -> P^{-1} A sigma(P) sigma, V -> P^{-1} B sigma^{-1}(P) sigma^{-1},
/// E -> P^T E P, action -> P^{-1} C P. P must be invertible.
DieudonneModule change_basis(const DieudonneModule& m, const WMatrix& p);

/// Matrix of the W-linear map F^s: A sigma(A) ... sigma^{s-1}(A).
WMatrix frobenius_power_matrix(const DieudonneModule& m);

// ---------------------------------------------------------------------------
// Polygons

struct Slope {
  Rational slope;
  unsigned multiplicity = 0;
  friend bool operator==(const Slope&, const Slope&) = default;
};

class NewtonPolygon {
 public:
  /// Equal adjacent slopes are merged. Throws std::invalid_argument for a
  /// zero multiplicity or decreasing slopes.
  explicit NewtonPolygon(std::vector<Slope> segments);

  const std::vector<Slope>& segments() const { return segments_; }
  unsigned height() const;
  /// sum slope * multiplicity
  Rational endpoint() const;
  /// e.g. "1/2 x2"
  std::string to_string() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<Slope> segments_;
};

struct HodgeWeight {
  int weight = 0;
  unsigned multiplicity = 0;
  friend bool operator==(const HodgeWeight&, const HodgeWeight&) = default;
};

class HodgePolygon {
 public:
  explicit HodgePolygon(std::vector<HodgeWeight> weights);

  const std::vector<HodgeWeight>& weights() const { return weights_; }
  unsigned height() const;
  Rational endpoint() const;

  friend bool operator==(const HodgePolygon&, const HodgePolygon&) = default;

 private:
  std::vector<HodgeWeight> weights_;
};

/// Default starting truncation for polygon computations on a module of the
/// given height, and the hard cap for automatic retries.
unsigned default_polygon_level(std::size_t height);
inline constexpr unsigned kMaxPolygonLevel = 64;

/// Slopes of F from the p-adic Newton polygon of the characteristic
/// polynomial of F^s, abscissae divided by s. When a needed valuation is
/// censored and the module has a precision source, the computation is
/// retried at doubled truncation up to kMaxPolygonLevel; otherwise throws
/// InsufficientPrecision.
NewtonPolygon newton_polygon(const DieudonneModule& m);

/// Same, at the module's own level only.
NewtonPolygon newton_polygon_at_level(const DieudonneModule& m);

/// Newton polygon of a monic polynomial given by its coefficients
/// c_0 = 1, c_1, ..., c_h (of T^h, ..., T^0), abscissae divided by s.
NewtonPolygon newton_polygon_of_charpoly(const std::vector<WittElem>& coeffs, unsigned s);

/// Elementary divisors of the matrix of F (Smith form over W_n).
HodgePolygon hodge_polygon(const DieudonneModule& m);

bool is_isoclinic(const NewtonPolygon& np);
bool is_basic_gl(const NewtonPolygon& np);

struct AdmissibilityReport {
  Rational newton_endpoint;
  Rational hodge_endpoint;
  bool endpoints_equal = false;
  bool newton_on_or_above = false;
};

/// Throws std::invalid_argument on a height mismatch.
AdmissibilityReport endpoint_admissibility(const NewtonPolygon& np, const HodgePolygon& hp);

// ---------------------------------------------------------------------------
// Lie algebra M/VM and the unitary structure

struct LieQuotient {
  /// h x k basis of the image of VM in M/pM.
  FMatrix v_image;
  /// h x d standard vectors completing v_image to a basis of M/pM; their
  /// classes form a basis of M/VM.
  FMatrix basis;
};

LieQuotient lie_quotient(const DieudonneModule& m);

/// Matrix on the basis of M/VM of an endomorphism given mod p (it must
/// preserve the image of VM).
FMatrix induced_action(const LieQuotient& q, const FMatrix& endo);

struct UnitaryStructureReport {
  std::size_t rank_minus = 0;  // Witt rank of M_- = ker(i(sqrt a) + u)
  std::size_t rank_plus = 0;
  bool f_swaps = false;  // F M_{+-} in M_{-+}
  bool v_swaps = false;
  bool isotropic = false;  // e(M_+, M_+) = 0 = e(M_-, M_-)
  std::size_t dim_lie_minus = 0;  // dim M_-/V M_+
  std::size_t dim_lie_plus = 0;   // dim M_+/V M_-
  std::size_t dim_lie = 0;        // dim M/VM
};

/// Needs a polarization and an O_k-action.
UnitaryStructureReport check_unitary_structure(const DieudonneModule& m);

/// True iff det(X1 I + X2 L) = (X1 - sqrt(a) X2)^r (X1 + sqrt(a) X2)^s in
/// F_{p^2}[X1, X2], sqrt(a) = sqrt_nonresidue(alpha). Throws
/// std::invalid_argument if L is not (r+s)-square or L^2 != alpha.
bool determinant_condition(unsigned r, unsigned s, long long alpha, const FMatrix& lie_action);

/// Coefficients of det(X1 I + X2 L), index k <-> X1^{g-k} X2^k.
std::vector<FqElem> determinant_polynomial(const FMatrix& lie_action);

}  // namespace ssp
