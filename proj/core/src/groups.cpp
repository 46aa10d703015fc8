#include "ssp/groups.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ssp/budget.hpp"
#include "ssp/errors.hpp"

namespace ssp {

namespace {

BigInt signed_power_product(std::uint32_t p, unsigned from, unsigned to) {
  BigInt acc = 1;
  for (unsigned i = from; i <= to; ++i) {
    const BigInt pi = ipow(BigInt(p), i);
    acc *= (i % 2 == 0) ? BigInt(pi - 1) : BigInt(pi + 1);
  }
  return acc;
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw ValidationError("p must be an odd prime (got " + std::to_string(p) + ")");
}

EnumBudget make_budget(std::uint64_t budget) {
  return EnumBudget(budget == 0 ? default_enumeration_budget() : budget);
}

BigInt checked_pow(std::uint64_t base, std::uint64_t exp) { return ipow(BigInt(static_cast<unsigned long>(base)), exp); }

void charge_all(EnumBudget& budget, const BigInt& candidates, const char* what) {
  if (candidates > BigInt(static_cast<unsigned long>(budget.limit()))) {
    throw BudgetExceeded(std::string(what) + ": " + candidates.get_str() + " candidates exceed the budget of " +
                         std::to_string(budget.limit()) + " (set SSP_MAX_ENUM to raise it)");
  }
  budget.charge(candidates.get_ui(), what);
}

// Matrix with entries given by an index in base q over a fixed element list.
FMatrix matrix_from_index(const std::vector<FqElem>& elems, std::size_t rows, std::size_t cols, std::uint64_t idx) {
  std::vector<FqElem> data;
  data.reserve(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) {
    data.push_back(elems[idx % elems.size()]);
    idx /= elems.size();
  }
  return FMatrix::from_data(rows, cols, std::move(data));
}

// X* X = c I with c in F_p^x; returns c.
std::optional<FqElem> unitary_similitude(const FMatrix& x) {
  const FMatrix m = conjugate_transpose(x) * x;
  const FqElem c = m(0, 0);
  if (c.is_zero() || !c.in_prime_field()) return std::nullopt;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == (i == j ? c : c.zero()))) return std::nullopt;
  return c;
}

}  // namespace

BigInt order_su(unsigned t, std::uint32_t p) {
  require_odd_prime(p);
  if (t <= 1) return 1;
  return ipow(BigInt(p), t * (t - 1) / 2) * signed_power_product(p, 2, t);
}

BigInt order_u(unsigned t, std::uint32_t p) {
  if (t == 0) return 1;
  return order_su(t, p) * (p + 1);
}

BigInt order_gu(unsigned t, std::uint32_t p) {
  if (t == 0) return 1;
  return order_u(t, p) * (p - 1);
}

BigInt order_gusplit(unsigned r, unsigned s, std::uint32_t p) {
  require_odd_prime(p);
  return ipow(BigInt(p), (r * (r - 1) + s * (s - 1)) / 2) * signed_power_product(p, 1, r) *
         signed_power_product(p, 1, s) * (p - 1);
}

BigInt order_gsp_prime(unsigned g, std::uint64_t l) {
  const BigInt bl(static_cast<unsigned long>(l));
  BigInt acc = ipow(bl, static_cast<unsigned long>(g) * g) * (bl - 1);
  for (unsigned i = 1; i <= g; ++i) acc *= BigInt(ipow(bl, 2 * i) - 1);
  return acc;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

BigInt order_gsp_mod(unsigned g, std::uint64_t n) {
  if (g == 0) throw ValidationError("g must be >= 1");
  if (n == 0) throw ValidationError("N must be >= 1");
  const unsigned long dim = 2UL * g * g + g + 1;
  BigInt acc = 1;
  for (const auto& [l, k] : factorize(n)) {
    acc *= order_gsp_prime(g, l) * ipow(BigInt(static_cast<unsigned long>(l)), (k - 1) * dim);
  }
  return acc;
}

BigInt p_regular_classes(unsigned r, unsigned s, std::uint32_t p) {
  require_odd_prime(p);
  const unsigned g = r + s;
  if (g < 2) throw ValidationError("r + s must be >= 2");
  const BigInt bp(p);
  if (r != 0 && s != 0) return ipow(bp, g - 2) * (p - 1) * (p + 1) * (p + 1);
  return ipow(bp, g - 1) * (p - 1) * (p + 1);
}

BigInt irrep_dim_bound(unsigned r, unsigned s, std::uint32_t p) {
  require_odd_prime(p);
  return ipow(BigInt(p), (r * (r - 1) + s * (s - 1)) / 2);
}

BigInt irrep_sum_bound(unsigned r, unsigned s, std::uint32_t p) {
  return p_regular_classes(r, s, p) * irrep_dim_bound(r, s, p);
}

GroupSpec GroupSpec::parse(const std::string& family, const std::vector<std::uint64_t>& params) {
  static const std::map<std::string, std::pair<GroupFamily, std::size_t>> kFamilies = {
      {"su", {GroupFamily::SU, 2}},           {"u", {GroupFamily::U, 2}},     {"gu", {GroupFamily::GU, 2}},
      {"gusplit", {GroupFamily::GUsplit, 3}}, {"gsp", {GroupFamily::GSp, 2}},
  };
  const auto it = kFamilies.find(family);
  if (it == kFamilies.end()) throw ValidationError("unknown group family '" + family + "'");
  const auto [fam, arity] = it->second;
  if (params.size() != arity) {
    throw ValidationError("family " + family + " takes " + std::to_string(arity) + " parameters, got " +
                          std::to_string(params.size()));
  }
  if (fam == GroupFamily::GSp) {
    if (params[0] < 1) throw ValidationError("g must be >= 1");
    if (params[1] < 1) throw ValidationError("N must be >= 1");
  } else {
    require_odd_prime(params.back());
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
      if (params[i] > 64) throw ValidationError("matrix size too large");
    }
  }
  return GroupSpec{fam, params};
}

std::string GroupSpec::family_name() const {
  switch (family) {
    case GroupFamily::SU:
      return "su";
    case GroupFamily::U:
      return "u";
    case GroupFamily::GU:
      return "gu";
    case GroupFamily::GUsplit:
      return "gusplit";
    case GroupFamily::GSp:
      return "gsp";
  }
  return "?";
}

BigInt group_order(const GroupSpec& spec) {
  const auto& q = spec.params;
  switch (spec.family) {
    case GroupFamily::SU:
      return order_su(static_cast<unsigned>(q[0]), static_cast<std::uint32_t>(q[1]));
    case GroupFamily::U:
      return order_u(static_cast<unsigned>(q[0]), static_cast<std::uint32_t>(q[1]));
    case GroupFamily::GU:
      return order_gu(static_cast<unsigned>(q[0]), static_cast<std::uint32_t>(q[1]));
    case GroupFamily::GUsplit:
      return order_gusplit(static_cast<unsigned>(q[0]), static_cast<unsigned>(q[1]), static_cast<std::uint32_t>(q[2]));
    case GroupFamily::GSp:
      return order_gsp_mod(static_cast<unsigned>(q[0]), q[1]);
  }
  throw std::logic_error("group_order: unknown family");
}

// ---------------------------------------------------------------------------

std::vector<std::uint32_t> MatrixGroup::key(const FMatrix& x) {
  std::vector<std::uint32_t> k;
  k.reserve(x.data().size());
  for (const auto& e : x.data()) k.push_back(e.code());
  return k;
}

std::size_t MatrixGroup::KeyHash::operator()(const std::vector<std::uint32_t>& k) const {
  std::size_t h = k.size();
  for (auto v : k) h = h * 1000003U ^ v;
  return h;
}

MatrixGroup::MatrixGroup(std::vector<FMatrix> elements, bool verify) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("MatrixGroup: no elements");
  const FMatrix& first = elements_.front();
  const FMatrix id = identity_matrix(first(0, 0).ctx(), first.rows());
  bool found = false;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(key(elements_[i]), i).second) throw std::invalid_argument("MatrixGroup: repeated element");
    if (elements_[i] == id) {
      identity_ = i;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("MatrixGroup: identity missing");
  if (verify) {
    for (std::size_t i = 0; i < order(); ++i) {
      for (std::size_t j = 0; j < order(); ++j) {
        if (!index_of(elements_[i] * elements_[j])) throw std::invalid_argument("MatrixGroup: not closed");
      }
    }
  }
}

std::optional<std::size_t> MatrixGroup::index_of(const FMatrix& x) const {
  const auto it = index_.find(key(x));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::multiply(std::size_t i, std::size_t j) const {
  const auto k = index_of(elements_[i] * elements_[j]);
  if (!k) throw std::logic_error("MatrixGroup: product left the group");
  return *k;
}

std::size_t MatrixGroup::inverse(std::size_t i) const {
  const auto inv = ssp::inverse(elements_[i]);
  const auto k = inv ? index_of(*inv) : std::nullopt;
  if (!k) throw std::logic_error("MatrixGroup: inverse left the group");
  return *k;
}

std::uint64_t MatrixGroup::element_order(std::size_t i) const {
  std::uint64_t n = 1;
  std::size_t cur = i;
  while (cur != identity_) {
    cur = multiply(cur, i);
    ++n;
  }
  return n;
}

namespace {

bool coprime_to(std::uint64_t n, std::uint32_t p) { return n % p != 0; }

bool is_power_of(std::uint64_t n, std::uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::size_t MatrixGroup::p_regular_class_count(std::uint32_t p) const {
  std::vector<std::size_t> inv(order());
  for (std::size_t i = 0; i < order(); ++i) inv[i] = inverse(i);
  std::vector<bool> seen(order(), false);
  std::size_t classes = 0;
  for (std::size_t x = 0; x < order(); ++x) {
    if (seen[x]) continue;
    // Conjugates share the element order, so the test is per class.
    const bool regular = p == 0 || coprime_to(element_order(x), p);
    for (std::size_t g = 0; g < order(); ++g) seen[multiply(multiply(g, x), inv[g])] = true;
    if (regular) ++classes;
  }
  return classes;
}

std::size_t MatrixGroup::class_count() const { return p_regular_class_count(0); }

std::vector<std::size_t> MatrixGroup::closure(const std::vector<std::size_t>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::size_t> members{identity_};
  in[identity_] = true;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::size_t gen : gens) {
      const std::size_t y = multiply(members[k], gen);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return members;
}

std::size_t MatrixGroup::sylow_order(std::uint32_t p) const {
  std::vector<std::size_t> gens;
  std::vector<bool> in(order(), false);
  in[identity_] = true;
  std::size_t size = 1;
  for (std::size_t x = 0; x < order(); ++x) {
    if (in[x] || !is_power_of(element_order(x), p)) continue;
    gens.push_back(x);
    const auto c = closure(gens);
    if (!is_power_of(c.size(), p)) {
      gens.pop_back();
      continue;
    }
    std::fill(in.begin(), in.end(), false);
    for (auto y : c) in[y] = true;
    size = c.size();
  }
  return size;
}

std::size_t MatrixGroup::center_order() const {
  std::size_t n = 0;
  for (std::size_t z = 0; z < order(); ++z) {
    bool central = true;
    for (std::size_t g = 0; g < order() && central; ++g) {
      central = elements_[z] * elements_[g] == elements_[g] * elements_[z];
    }
    if (central) ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------

std::vector<FMatrix> enumerate_unitary(unsigned t, std::uint32_t p, bool special, std::uint64_t budget_limit) {
  require_odd_prime(p);
  if (t == 0) throw std::invalid_argument("enumerate_unitary: t must be >= 1");
  const FieldCtx& ctx = FieldCtx::get(p, 2);
  const auto elems = elements(ctx);
  EnumBudget budget = make_budget(budget_limit);
  const BigInt total = checked_pow(elems.size(), static_cast<std::uint64_t>(t) * t);
  charge_all(budget, total, "unitary enumeration");
  const FMatrix id = identity_matrix(ctx, t);
  std::vector<FMatrix> out;
  for (std::uint64_t idx = 0; idx < total.get_ui(); ++idx) {
    FMatrix x = matrix_from_index(elems, t, t, idx);
    if (!(conjugate_transpose(x) * x == id)) continue;
    if (special && !determinant(x).is_one()) continue;
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<FMatrix> enumerate_gusplit(unsigned r, unsigned s, std::uint32_t p, std::uint64_t budget_limit) {
  require_odd_prime(p);
  const unsigned g = r + s;
  if (g == 0) throw std::invalid_argument("enumerate_gusplit: r + s must be >= 1");
  const FieldCtx& ctx = FieldCtx::get(p, 2);
  const auto elems = elements(ctx);
  EnumBudget budget = make_budget(budget_limit);
  const BigInt total = checked_pow(elems.size(), static_cast<std::uint64_t>(g) * g);
  charge_all(budget, total, "G(U_r x U_s) enumeration");
  std::vector<FMatrix> out;
  for (std::uint64_t idx = 0; idx < total.get_ui(); ++idx) {
    FMatrix x = matrix_from_index(elems, g, g, idx);
    bool block = true;
    for (unsigned i = 0; i < g && block; ++i)
      for (unsigned j = 0; j < g && block; ++j)
        if ((i < r) != (j < r) && !x(i, j).is_zero()) block = false;
    if (!block || !unitary_similitude(x)) continue;
    out.push_back(std::move(x));
  }
  return out;
}

BigInt count_gsp2_bruteforce(std::uint64_t n, std::uint64_t budget_limit) {
  if (n == 0) throw ValidationError("N must be >= 1");
  EnumBudget budget = make_budget(budget_limit);
  charge_all(budget, checked_pow(n, 4), "GSp_2 enumeration");
  const long long m = static_cast<long long>(n);
  auto mod = [m](long long v) { return ((v % m) + m) % m; };
  auto gcd = [](long long a, long long b) {
    while (b != 0) {
      a %= b;
      std::swap(a, b);
    }
    return a;
  };
  BigInt count = 0;
  for (long long a = 0; a < m; ++a)
    for (long long b = 0; b < m; ++b)
      for (long long c = 0; c < m; ++c)
        for (long long d = 0; d < m; ++d) {
          // X^T J X with J = [[0, 1], [-1, 0]] and X = [[a, b], [c, d]].
          const long long m00 = mod(a * c - c * a);
          const long long m01 = mod(a * d - c * b);
          const long long m10 = mod(b * c - d * a);
          const long long m11 = mod(b * d - d * b);
          if (m00 != 0 || m11 != 0 || mod(m01 + m10) != 0) continue;
          if (gcd(m01, m) != 1) continue;
          ++count;
        }
  return count;
}

BigInt count_gsp_hyperbolic(unsigned g, std::uint64_t l, std::uint64_t budget_limit) {
  if (!is_prime(l)) throw ValidationError("l must be prime");
  EnumBudget budget = make_budget(budget_limit);
  BigInt sp = 1;
  for (unsigned k = 1; k <= g; ++k) {
    // omega(e, f) = sum_i e_{2i} f_{2i+1} - e_{2i+1} f_{2i} on F_l^{2k}.
    const unsigned dim = 2 * k;
    const BigInt vectors = checked_pow(l, dim);
    charge_all(budget, vectors * vectors, "hyperbolic pair enumeration");
    const std::uint64_t nv = vectors.get_ui();
    std::vector<std::vector<std::uint64_t>> coords(nv, std::vector<std::uint64_t>(dim));
    for (std::uint64_t v = 0; v < nv; ++v) {
      std::uint64_t rest = v;
      for (unsigned i = 0; i < dim; ++i) {
        coords[v][i] = rest % l;
        rest /= l;
      }
    }
    std::uint64_t pairs = 0;
    for (std::uint64_t e = 0; e < nv; ++e) {
      for (std::uint64_t f = 0; f < nv; ++f) {
        std::uint64_t w = 0;
        for (unsigned i = 0; i < k; ++i) {
          w += coords[e][2 * i] * coords[f][2 * i + 1] % l;
          w += (l - coords[e][2 * i + 1] * coords[f][2 * i] % l) % l;
        }
        if (w % l == 1) ++pairs;
      }
    }
    sp *= static_cast<unsigned long>(pairs);
  }
  return sp * static_cast<unsigned long>(l - 1);
}

// ---------------------------------------------------------------------------

bool commutes_with_phi(const QuatModP& q, const QMatrix& x, unsigned r, unsigned s) {
  const unsigned g = r + s;
  if (x.rows() != g || x.cols() != g) throw std::invalid_argument("commutes_with_phi: shape mismatch");
  const QuatElem u = q.u();
  std::vector<QuatElem> phi(g);
  for (unsigned i = 0; i < g; ++i) phi[i] = i < r ? -u : u;
  for (unsigned i = 0; i < g; ++i)
    for (unsigned j = 0; j < g; ++j)
      if (!(x(i, j) * phi[j] == phi[i] * x(i, j))) return false;
  return true;
}

bool LemmaGpReport::passed() const {
  return block_vanishing && image_in_gp && surjective && equal_fibers && kernel_trivial_mod_pi &&
         identity_maps_to_identity && kernel_order * gp_order == commutant_order;
}

LemmaGpReport lemma_gp_check(std::uint32_t p, long long alpha, unsigned r, unsigned s, std::uint64_t budget_limit) {
  if (r + s != 2) throw std::invalid_argument("lemma_gp_check: only r + s = 2 is enumerable");
  const QuatModP q(p, alpha);
  const unsigned g = r + s;
  EnumBudget budget = make_budget(budget_limit);

  LemmaGpReport rep;
  rep.p = p;
  rep.alpha = alpha;
  rep.r = r;
  rep.s = s;
  rep.scope = "GU_" + std::to_string(g) + " over R/(p) = F_{p^2}[Pi]/(Pi^2), truncation level p";

  // Entry (i, j) of X Phi = Phi X reads x_ij phi_j = phi_i x_ij; solve it
  // over all p^4 values of each entry.
  const auto all = q.elements();
  const QuatElem u = q.u();
  std::vector<std::vector<QuatElem>> allowed(g * g);
  rep.block_vanishing = true;
  for (unsigned i = 0; i < g; ++i) {
    for (unsigned j = 0; j < g; ++j) {
      const QuatElem pi_ = i < r ? -u : u;
      const QuatElem pj = j < r ? -u : u;
      budget.charge(all.size(), "commutant enumeration");
      for (const auto& e : all) {
        if (!(e * pj == pi_ * e)) continue;
        allowed[i * g + j].push_back(e);
        if ((i < r) != (j < r) && !e.reduce().is_zero()) rep.block_vanishing = false;
      }
    }
  }

  BigInt total = 1;
  for (const auto& a : allowed) total *= static_cast<unsigned long>(a.size());
  charge_all(budget, total, "commutant enumeration");

  const MatrixGroup gp(enumerate_gusplit(r, s, p, budget.limit()));
  rep.gp_order = gp.order();
  std::vector<BigInt> fiber(gp.order(), BigInt(0));
  rep.image_in_gp = true;
  rep.commutant_order = 0;
  rep.kernel_trivial_mod_pi = true;

  const QMatrix qid = QMatrix::identity(g, q.zero(), q.one());
  bool identity_seen = false;
  std::vector<std::size_t> idx(g * g, 0);
  for (;;) {
    std::vector<QuatElem> data;
    data.reserve(g * g);
    for (std::size_t k = 0; k < g * g; ++k) data.push_back(allowed[k][idx[k]]);
    const QMatrix x = QMatrix::from_data(g, g, std::move(data));
    const QMatrix m = conj_transpose(x) * x;
    const QuatElem c = m(0, 0);
    bool similitude = c.b().is_zero() && !c.a().is_zero() && c.a().in_prime_field();
    for (unsigned i = 0; i < g && similitude; ++i)
      for (unsigned j = 0; j < g && similitude; ++j) similitude = m(i, j) == (i == j ? c : q.zero());
    if (similitude) {
      ++rep.commutant_order;
      const FMatrix image = reduce(x);
      const auto at = gp.index_of(image);
      if (!at) {
        rep.image_in_gp = false;
      } else {
        ++fiber[*at];
        if (*at == gp.identity_index()) {
          // X = I + N with N reducing to 0, i.e. N has entries in Pi R.
          for (unsigned i = 0; i < g; ++i)
            for (unsigned j = 0; j < g; ++j)
              if (!(x(i, j) - qid(i, j)).a().is_zero()) rep.kernel_trivial_mod_pi = false;
        }
      }
      if (x == qid) identity_seen = at && *at == gp.identity_index();
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == allowed[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }

  rep.identity_maps_to_identity = identity_seen;
  rep.surjective = std::all_of(fiber.begin(), fiber.end(), [](const BigInt& f) { return f > 0; });
  rep.equal_fibers = std::all_of(fiber.begin(), fiber.end(), [&](const BigInt& f) { return f == fiber.front(); });
  rep.kernel_order = fiber[gp.identity_index()];
  return rep;
}

}  // namespace ssp
