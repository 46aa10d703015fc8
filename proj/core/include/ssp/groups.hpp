#pragma once

// Orders and p-regular class counts of finite unitary and symplectic
// groups, together with the exhaustive enumerations used to check them,
// and the reduction map from the commutant of Phi in GU_g(R/(p)) onto
// G(U_r x U_s)(F_{p^2}).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssp/exact.hpp"
#include "ssp/gf.hpp"
#include "ssp/quat.hpp"

namespace ssp {

// ---------------------------------------------------------------------------
// Closed forms

/// #SU_t(F_{p^2}) = p^{t(t-1)/2} prod_{i=2}^t (p^i - (-1)^i); SU_0 = SU_1 = 1.
BigInt order_su(unsigned t, std::uint32_t p);
/// #U_t = #SU_t (p+1) for t >= 1; U_0 = 1.
BigInt order_u(unsigned t, std::uint32_t p);
/// Unitary similitudes: #U_t (p-1); GU_0 = 1.
BigInt order_gu(unsigned t, std::uint32_t p);
/// #G(U_r x U_s) = p^{(r(r-1)+s(s-1))/2} prod_{i<=r} (p^i-(-1)^i)
/// prod_{i<=s} (p^i-(-1)^i) (p-1).
BigInt order_gusplit(unsigned r, unsigned s, std::uint32_t p);

/// #GSp_{2g}(F_l) = l^{g^2} (l-1) prod_{i<=g} (l^{2i}-1).
BigInt order_gsp_prime(unsigned g, std::uint64_t l);
/// #GSp_{2g}(Z/N), lifted to prime powers and multiplied over N.
BigInt order_gsp_mod(unsigned g, std::uint64_t n);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// p^{g-2}(p-1)(p+1)^2 if rs != 0, else p^{g-1}(p-1)(p+1); needs r+s >= 2.
BigInt p_regular_classes(unsigned r, unsigned s, std::uint32_t p);
/// p^{(r(r-1)+s(s-1))/2}, the order of a p-Sylow subgroup.
BigInt irrep_dim_bound(unsigned r, unsigned s, std::uint32_t p);
/// p_regular_classes * irrep_dim_bound.
BigInt irrep_sum_bound(unsigned r, unsigned s, std::uint32_t p);

enum class GroupFamily { SU, U, GU, GUsplit, GSp };

struct GroupSpec {
  GroupFamily family = GroupFamily::SU;
  /// SU/U/GU: {t, p}; GUsplit: {r, s, p}; GSp: {g, N}.
  std::vector<std::uint64_t> params;

  /// Throws ValidationError for bad parameters.
  static GroupSpec parse(const std::string& family, const std::vector<std::uint64_t>& params);
  std::string family_name() const;
};

BigInt group_order(const GroupSpec& spec);

// ---------------------------------------------------------------------------
// Finite matrix groups given by their element lists

class MatrixGroup {
 public:
  /// The elements must form a group under multiplication; checked by
  /// closure only when verify is set.
  explicit MatrixGroup(std::vector<FMatrix> elements, bool verify = false);

  std::size_t order() const { return elements_.size(); }
  const std::vector<FMatrix>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(const FMatrix& x) const;
  std::size_t identity_index() const { return identity_; }

  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;
  std::uint64_t element_order(std::size_t i) const;

  /// Conjugacy classes of elements whose order is prime to p.
  std::size_t p_regular_class_count(std::uint32_t p) const;
  std::size_t class_count() const;
  /// Order of a maximal p-subgroup found by greedy closure.
  std::size_t sylow_order(std::uint32_t p) const;
  std::size_t center_order() const;

 private:
  static std::vector<std::uint32_t> key(const FMatrix& x);
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const;
  };

  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const;

  std::vector<FMatrix> elements_;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, KeyHash> index_;
  std::size_t identity_ = 0;
};

// ---------------------------------------------------------------------------
// Exhaustive enumerations (desk-scale oracles). All throw BudgetExceeded
// when the candidate count exceeds the budget (0 = default budget).

/// X in M_t(F_{p^2}) with X* X = I (and det X = 1 if special).
std::vector<FMatrix> enumerate_unitary(unsigned t, std::uint32_t p, bool special, std::uint64_t budget = 0);
/// All g x g matrices over F_{p^2} filtered to block-diagonal ones with
/// X* X = c I, c in F_p^x.
std::vector<FMatrix> enumerate_gusplit(unsigned r, unsigned s, std::uint32_t p, std::uint64_t budget = 0);
/// #GSp_2(Z/N) by running over all 2x2 matrices mod N.
BigInt count_gsp2_bruteforce(std::uint64_t n, std::uint64_t budget = 0);
/// #GSp_{2g}(F_l): ordered hyperbolic pairs counted by enumeration in
/// F_l^{2g}, recursing on the orthogonal complement, times (l-1).
BigInt count_gsp_hyperbolic(unsigned g, std::uint64_t l, std::uint64_t budget = 0);

// ---------------------------------------------------------------------------
// The reduction GU_g(R/(p))^Phi -> G(U_r x U_s)(F_{p^2})

/// x Phi == Phi x with Phi = diag(-u I_r, u I_s).
bool commutes_with_phi(const QuatModP& q, const QMatrix& x, unsigned r, unsigned s);

struct LemmaGpReport {
  std::uint32_t p = 0;
  long long alpha = 0;
  unsigned r = 0;
  unsigned s = 0;
  std::string scope;
  /// Elements X of M_g(R/(p)) with X Phi = Phi X and X* X = c I, c in F_p^x.
  BigInt commutant_order;
  BigInt gp_order;
  /// Off-diagonal blocks of every commuting X reduce to 0 mod Pi.
  bool block_vanishing = false;
  bool image_in_gp = false;
  bool surjective = false;
  bool equal_fibers = false;
  BigInt kernel_order;
  /// Kernel elements are congruent to the identity mod Pi.
  bool kernel_trivial_mod_pi = false;
  bool identity_maps_to_identity = false;

  bool passed() const;
};

/// Needs r + s = 2 so that the enumeration stays small.
LemmaGpReport lemma_gp_check(std::uint32_t p, long long alpha, unsigned r, unsigned s, std::uint64_t budget = 0);

}  // namespace ssp
