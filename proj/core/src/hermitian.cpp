#include "ssp/hermitian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ssp/budget.hpp"
#include "ssp/errors.hpp"

namespace ssp {

namespace {

FMatrix scalar_identity(const FieldCtx& ctx, std::size_t n, const FqElem& c) {
  FMatrix m = zero_matrix(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

WMatrix lift_matrix(const WittRing& ring, const FMatrix& m) {
  return m.map([&ring](const FqElem& x) { return ring.lift(x); });
}

bool block_diagonal(const FMatrix& m, const std::vector<std::size_t>& blocks) {
  std::vector<std::size_t> owner;
  for (std::size_t b = 0; b < blocks.size(); ++b) owner.insert(owner.end(), blocks[b], b);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (owner[i] != owner[j] && !m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<std::size_t> HermitianQuotient::blocks() const {
  if (!graded()) return {dim()};
  std::vector<std::size_t> out;
  if (r > 0) out.push_back(r);
  if (s > 0) out.push_back(s);
  return out;
}

FqElem HermitianQuotient::pair(const FMatrix& x, const FMatrix& y) const {
  return (x.transpose() * gram * sigma(y))(0, 0);
}

FqElem witt_pairing_value(const DieudonneModule& m, const WMatrix& x, const WMatrix& y) {
  return m.pairing(x, m.apply_f(y)).reduce();
}

HermitianQuotient reduce_pairing(const DieudonneModule& m) {
  if (!m.polarization()) throw PairingError("polarization required");
  if (!f_plus_v_vanishes(m)) throw PairingError("F+V != 0");
  const WittRing& ring = m.ring();
  const FieldCtx& ctx = ring.residue_field();

  HermitianQuotient h;
  h.field = &ctx;
  h.lie = lie_quotient(m);
  const std::size_t d = h.lie.basis.cols();
  if (d == 0) throw PairingError("degenerate: M/VM is zero");
  const FMatrix& basis = h.lie.basis;
  // <x, y> = x^T (E A) sigma(y) mod p.
  const FMatrix ea = reduce(*m.polarization() * m.f_matrix());
  const FMatrix g0 = basis.transpose() * ea * sigma(basis);

  // Semilinearity in the second slot, checked against the Witt-level value.
  const WittElem lambda = ring.gen();
  const FqElem lambda_bar = lambda.reduce();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const WMatrix bi = lift_matrix(ring, basis.column(i));
      const WMatrix bj = lift_matrix(ring, basis.column(j));
      if (!(witt_pairing_value(m, bi, bj) == g0(i, j))) throw PairingError("pairing value disagrees with its Gram matrix");
      const WMatrix scaled = lambda * bj;
      if (!(witt_pairing_value(m, bi, scaled) == lambda_bar.frobenius() * g0(i, j))) {
        throw PairingError("pairing is not sigma-semilinear in the second variable");
      }
    }
  }

  if (const auto& act = m.ok_action()) {
    const FqElem u = sqrt_nonresidue(ctx, act->alpha);
    const FMatrix l = induced_action(h.lie, reduce(act->matrix));
    const FMatrix k_minus = kernel(ctx, l + scalar_identity(ctx, d, u));
    const FMatrix k_plus = kernel(ctx, l - scalar_identity(ctx, d, u));
    if (k_minus.cols() + k_plus.cols() != d) throw PairingError("sqrt(alpha) does not act semisimply on M/VM");
    h.r = static_cast<unsigned>(k_minus.cols());
    h.s = static_cast<unsigned>(k_plus.cols());
    h.basis_change = hconcat(k_minus, k_plus);
    h.action = *inverse(h.basis_change) * l * h.basis_change;
    h.sqrt_alpha = u;
  } else {
    h.basis_change = identity_matrix(ctx, d);
  }
  h.gram = h.basis_change.transpose() * g0 * sigma(h.basis_change);

  if (!inverse(h.gram)) throw PairingError("degenerate");
  if (!is_sigma_alternating(h)) throw PairingError("pairing is not sigma-alternating");
  if (!is_skew_hermitian(h)) throw PairingError("pairing is not skew-Hermitian for the O_k-action");
  if (!block_diagonal(h.gram, h.blocks())) throw PairingError("<L-, L+> is not zero");
  return h;
}

FMatrix quotient_coordinates(const HermitianQuotient& h, const FMatrix& x_mod_p) {
  const std::size_t k = h.lie.v_image.cols();
  const std::size_t d = h.lie.basis.cols();
  const auto full = inverse(hconcat(h.lie.v_image, h.lie.basis));
  const auto change = inverse(h.basis_change);
  if (!full || !change) throw std::logic_error("quotient_coordinates: inconsistent quotient data");
  return *change * (*full * x_mod_p).block(k, 0, d, 1);
}

bool is_sigma_alternating(const HermitianQuotient& h) { return sigma(h.gram).transpose() == h.gram; }

bool is_skew_hermitian(const HermitianQuotient& h) {
  if (!h.action) return true;
  // <L x, y> = <x, -L y>  <=>  L^T G = -G sigma(L)
  return h.action->transpose() * h.gram == -(h.gram * sigma(*h.action));
}

std::optional<FqElem> similitude_factor(const HermitianQuotient& h, const FMatrix& x) {
  if (x.rows() != h.dim() || x.cols() != h.dim()) return std::nullopt;
  const FMatrix lhs = x.transpose() * h.gram * sigma(x);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
      if (h.gram(i, j).is_zero()) continue;
      const FqElem c = lhs(i, j) / h.gram(i, j);
      if (c.is_zero() || !c.in_prime_field()) return std::nullopt;
      if (!(lhs == c * h.gram)) return std::nullopt;
      return c;
    }
  }
  return std::nullopt;
}

namespace {

// All k x k matrices X (as column lists) with X^T g sigma(X) = c g.
void enumerate_block(const FMatrix& g, const FqElem& c, const std::vector<FMatrix>& vectors, EnumBudget& budget,
                     std::vector<FMatrix>* out, BigInt& count) {
  const std::size_t k = g.rows();
  // Rows v^T g and columns sigma(v), so every test is one dot product.
  std::vector<std::vector<FqElem>> vt_g(vectors.size());
  std::vector<std::vector<FqElem>> sig(vectors.size());
  std::vector<FqElem> self_value(vectors.size());
  auto dot = [](const std::vector<FqElem>& a, const std::vector<FqElem>& b) {
    FqElem acc = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
  };
  for (std::size_t t = 0; t < vectors.size(); ++t) {
    vt_g[t] = (vectors[t].transpose() * g).data();
    sig[t] = sigma(vectors[t]).data();
    self_value[t] = dot(vt_g[t], sig[t]);
  }
  std::vector<FqElem> target_diag(k);
  for (std::size_t j = 0; j < k; ++j) target_diag[j] = c * g(j, j);
  std::vector<std::size_t> chosen(k, 0);

  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == k) {
      ++count;
      if (out) {
        FMatrix x = zero_matrix(g(0, 0).ctx(), k, k);
        for (std::size_t col = 0; col < k; ++col) x.set_block(0, col, vectors[chosen[col]]);
        out->push_back(std::move(x));
      }
      return;
    }
    budget.charge(vectors.size(), "automorphism enumeration");
    for (std::size_t t = 0; t < vectors.size(); ++t) {
      if (!(self_value[t] == target_diag[j])) continue;
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        const std::size_t ci = chosen[i];
        ok = dot(vt_g[ci], sig[t]) == c * g(i, j) && dot(vt_g[t], sig[ci]) == c * g(j, i);
      }
      if (!ok) continue;
      chosen[j] = t;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

std::vector<FMatrix> all_vectors(const FieldCtx& ctx, std::size_t k) {
  const auto elems = elements(ctx);
  std::vector<FMatrix> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= elems.size();
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    FMatrix v = zero_matrix(ctx, k, 1);
    std::size_t rest = idx;
    for (std::size_t i = 0; i < k; ++i) {
      v(i, 0) = elems[rest % elems.size()];
      rest /= elems.size();
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

AutomorphismGroup automorphism_group_bruteforce(const HermitianQuotient& h, bool collect_elements,
                                                std::uint64_t budget_limit) {
  const FieldCtx& ctx = *h.field;
  EnumBudget budget(budget_limit == 0 ? default_enumeration_budget() : budget_limit);
  const auto blocks = h.blocks();
  for (std::size_t b : blocks) {
    const double per_column = std::pow(static_cast<double>(ctx.order()), static_cast<double>(b));
    if (per_column > static_cast<double>(budget.limit())) {
      throw BudgetExceeded("automorphism enumeration: " + std::to_string(ctx.order()) + "^" + std::to_string(b) +
                           " candidates per column exceed the budget of " + std::to_string(budget.limit()));
    }
  }

  AutomorphismGroup result;
  result.order = 0;
  for (std::uint32_t cv = 1; cv < ctx.p(); ++cv) {
    const FqElem c(ctx, cv);
    BigInt product = 1;
    std::vector<std::vector<FMatrix>> per_block;
    std::size_t offset = 0;
    for (std::size_t b : blocks) {
      const FMatrix gb = h.gram.block(offset, offset, b, b);
      BigInt count = 0;
      per_block.emplace_back();
      enumerate_block(gb, c, all_vectors(ctx, b), budget, collect_elements ? &per_block.back() : nullptr, count);
      product *= count;
      offset += b;
    }
    result.order += product;
    if (!collect_elements || product == 0) continue;
    // Block-diagonal assembly of the cartesian product.
    std::vector<std::size_t> idx(blocks.size(), 0);
    for (;;) {
      FMatrix x = zero_matrix(ctx, h.dim(), h.dim());
      std::size_t off = 0;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        x.set_block(off, off, per_block[b][idx[b]]);
        off += blocks[b];
      }
      result.elements.push_back(std::move(x));
      result.factors.push_back(c);
      std::size_t pos = 0;
      while (pos < blocks.size() && ++idx[pos] == per_block[pos].size()) idx[pos++] = 0;
      if (pos == blocks.size()) break;
    }
  }
  return result;
}

HermitianQuotient cotangent_dual(const HermitianQuotient& h) {
  HermitianQuotient d = h;
  const auto inv = inverse(sigma(h.gram));
  if (!inv) throw PairingError("degenerate");
  d.gram = *inv;
  if (h.action) d.action = h.action->transpose();
  return d;
}

}  // namespace ssp
