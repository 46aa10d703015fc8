#include "ssp/count.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "ssp/errors.hpp"

namespace ssp {

std::vector<std::string> validate(const SignatureParams& params, bool strict) {
  const std::uint32_t p = params.p;
  if (p == 2) throw ValidationError("p must be odd (p = 2 is excluded)");
  if (!is_prime(p)) throw ValidationError("p must be an odd prime");
  if (params.alpha >= 0) throw ValidationError("alpha must be a negative integer");
  const auto abs_alpha = static_cast<std::uint64_t>(-params.alpha);
  for (const auto& [q, k] : factorize(abs_alpha)) {
    if (k > 1) throw ValidationError("alpha must be squarefree");
  }
  if (abs_alpha % p == 0) throw ValidationError("p divides alpha: p ramifies in Q(sqrt(alpha))");
  if (legendre(params.alpha, p) != -1) throw ValidationError("alpha is a QR mod p: p splits or ramifies");
  const unsigned g = params.g();
  if (g % 2 != 0) throw ValidationError("g = r + s must be even (got " + std::to_string(g) + ")");
  if (g < 2) throw ValidationError("g = r + s must be >= 2");
  if (params.n < 3) throw ValidationError("N must be >= 3");
  std::vector<std::string> warnings;
  if (params.n % p == 0) {
    if (strict) throw ValidationError("p divides N");
    warnings.emplace_back("p divides N: outside the level hypothesis; the arithmetic is evaluated as stated");
  }
  if (params.r == 0 || params.s == 0) {
    warnings.emplace_back("rs = 0: signature outside the positive (r, s) range; the rs = 0 branch is used");
  }
  return warnings;
}

BigInt mass_product(unsigned g, std::uint32_t p) {
  BigInt acc = 1;
  for (unsigned i = 1; i <= g; ++i) {
    const BigInt pi = ipow(BigInt(p), i);
    acc *= (i % 2 == 0) ? BigInt(pi + 1) : BigInt(pi - 1);
  }
  return acc;
}

Rational superspecial_bound(const SignatureParams& params) {
  validate(params);
  const unsigned g = params.g();
  return mass_constant(g) * Rational(order_gsp_mod(g, params.n)) * Rational(mass_product(g, params.p));
}

Rational superspecial_bound_bernoulli(const SignatureParams& params) {
  validate(params);
  const unsigned g = params.g();
  return mass_constant_bernoulli_abs(g) * Rational(order_gsp_mod(g, params.n)) * Rational(mass_product(g, params.p));
}

CountReport eigensystem_bound(const SignatureParams& params) {
  CountReport rep;
  rep.params = params;
  rep.warnings = validate(params);
  const unsigned g = params.g();
  rep.mass_constant = mass_constant(g);
  rep.gsp_order = order_gsp_mod(g, params.n);
  rep.mass_product = mass_product(g, params.p);
  rep.superspecial_bound = rep.mass_constant * Rational(rep.gsp_order) * Rational(rep.mass_product);
  rep.superspecial_bound_ceil = rep.superspecial_bound.ceil();
  rep.class_count = p_regular_classes(params.r, params.s, params.p);
  rep.dim_bound = irrep_dim_bound(params.r, params.s, params.p);
  rep.irr_sum_bound = rep.class_count * rep.dim_bound;
  rep.final_bound = rep.superspecial_bound_ceil * rep.irr_sum_bound;
  rep.final_bound_exact = rep.superspecial_bound * Rational(rep.irr_sum_bound);
  rep.asymptotic_exponent = asymptotic_exponent_symbolic(g, params.r, params.s);
  return rep;
}

namespace {

using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly monomial(unsigned k) {
  Poly m(k + 1, BigInt(0));
  m[k] = 1;
  return m;
}

// p^k + c
Poly shifted_power(unsigned k, long c) {
  Poly m = monomial(k);
  m[0] += c;
  return m;
}

std::size_t degree(const Poly& a) {
  std::size_t d = a.size() - 1;
  while (d > 0 && a[d] == 0) --d;
  return d;
}

}  // namespace

std::vector<BigInt> bound_polynomial_in_p(unsigned g, unsigned r, unsigned s) {
  if (r + s != g) throw std::invalid_argument("bound_polynomial_in_p: r + s must equal g");
  if (g < 2) throw std::invalid_argument("bound_polynomial_in_p: g must be >= 2");
  Poly acc{BigInt(1)};
  for (unsigned i = 1; i <= g; ++i) acc = poly_mul(acc, shifted_power(i, i % 2 == 0 ? 1 : -1));
  acc = poly_mul(acc, monomial((r * (r - 1) + s * (s - 1)) / 2));
  if (r != 0 && s != 0) {
    acc = poly_mul(acc, monomial(g - 2));
    acc = poly_mul(acc, shifted_power(1, -1));
    acc = poly_mul(acc, poly_mul(shifted_power(1, 1), shifted_power(1, 1)));
  } else {
    acc = poly_mul(acc, monomial(g - 1));
    acc = poly_mul(acc, shifted_power(1, -1));
    acc = poly_mul(acc, shifted_power(1, 1));
  }
  return acc;
}

unsigned asymptotic_exponent_symbolic(unsigned g, unsigned r, unsigned s) {
  if (r + s != g) throw std::invalid_argument("asymptotic_exponent_symbolic: r + s must equal g");
  if (g < 2) throw std::invalid_argument("asymptotic_exponent_symbolic: g must be >= 2");
  const unsigned mass = g * (g + 1) / 2;
  const unsigned dim = (r * (r - 1) + s * (s - 1)) / 2;
  // p^{g-2} (p-1) (p+1)^2  or  p^{g-1} (p-1) (p+1)
  const unsigned classes = (r != 0 && s != 0) ? (g - 2) + 1 + 2 : (g - 1) + 1 + 1;
  const unsigned summed = mass + dim + classes;
  const unsigned closed = g * g + g + 1 - r * s;
  if (summed != closed) {
    throw FormulaInconsistency("degree sum " + std::to_string(summed) + " != g^2+g+1-rs = " + std::to_string(closed));
  }
  const std::size_t poly_degree = degree(bound_polynomial_in_p(g, r, s));
  if (poly_degree != closed) {
    throw FormulaInconsistency("polynomial degree " + std::to_string(poly_degree) +
                               " != g^2+g+1-rs = " + std::to_string(closed));
  }
  return closed;
}

Rational supersingular_mass(std::uint32_t p) { return mass_constant(1) * Rational(static_cast<long>(p) - 1); }

// ---------------------------------------------------------------------------

void CosetSpace::validate() const {
  for (const auto& gen : generators) {
    if (gen.perm.size() != points) {
      throw std::invalid_argument("generator '" + gen.name + "' has " + std::to_string(gen.perm.size()) +
                                  " images for " + std::to_string(points) + " points");
    }
    std::vector<bool> hit(points, false);
    for (std::size_t y : gen.perm) {
      if (y >= points || hit[y]) throw std::invalid_argument("generator '" + gen.name + "' is not a permutation");
      hit[y] = true;
    }
  }
}

std::vector<std::size_t> CosetSpace::orbit_labels() const {
  validate();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(points, kNone);
  std::size_t next = 0;
  for (std::size_t x = 0; x < points; ++x) {
    if (label[x] != kNone) continue;
    std::vector<std::size_t> queue{x};
    label[x] = next;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const auto& gen : generators) {
        const std::size_t y = gen.perm[queue[k]];
        if (label[y] == kNone) {
          label[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t CosetSpace::orbit_count() const {
  const auto labels = orbit_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

namespace {

FMatrix vstack(const FieldCtx& ctx, const std::vector<FMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  FMatrix out = zero_matrix(ctx, rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    out.set_block(at, 0, b);
    at += b.rows();
  }
  return out;
}

}  // namespace

std::size_t equivariant_dimension(const CosetSpace& space, const Representation& rho) {
  space.validate();
  if (rho.field == nullptr || rho.dim == 0) throw std::invalid_argument("representation needs a field and dim >= 1");
  if (rho.generators.size() != space.generators.size()) {
    throw std::invalid_argument("representation has " + std::to_string(rho.generators.size()) +
                                " generator matrices for " + std::to_string(space.generators.size()) + " generators");
  }
  const FieldCtx& ctx = *rho.field;
  std::vector<FMatrix> rho_inv;
  for (const auto& m : rho.generators) {
    if (m.rows() != rho.dim || m.cols() != rho.dim) throw std::invalid_argument("representation matrix of wrong size");
    if (&m(0, 0).ctx() != &ctx) throw std::invalid_argument("representation matrix over a different field");
    auto inv = inverse(m);
    if (!inv) throw std::invalid_argument("representation matrix is not invertible");
    rho_inv.push_back(std::move(*inv));
  }
  const FMatrix id = identity_matrix(ctx, rho.dim);

  // Transversal: x0 . t_y = y, stored as rho(t_y) and its inverse.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root(space.points, kNone);
  std::vector<FMatrix> t(space.points), t_inv(space.points);
  std::size_t dim = 0;
  for (std::size_t x0 = 0; x0 < space.points; ++x0) {
    if (root[x0] != kNone) continue;
    root[x0] = x0;
    t[x0] = id;
    t_inv[x0] = id;
    std::vector<std::size_t> orbit{x0};
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const std::size_t y = orbit[k];
      for (std::size_t g = 0; g < space.generators.size(); ++g) {
        const std::size_t z = space.generators[g].perm[y];
        if (root[z] != kNone) continue;
        root[z] = x0;
        t[z] = t[y] * rho.generators[g];
        t_inv[z] = rho_inv[g] * t_inv[y];
        orbit.push_back(z);
      }
    }
    // Schreier generators t_y s t_z^{-1} fix x0; f(x0) must be fixed by rho
    // of each of them.
    std::vector<FMatrix> conditions;
    for (std::size_t y : orbit) {
      for (std::size_t g = 0; g < space.generators.size(); ++g) {
        const std::size_t z = space.generators[g].perm[y];
        const FMatrix h = t[y] * rho.generators[g] * t_inv[z];
        if (!(h == id)) conditions.push_back(h - id);
      }
    }
    dim += conditions.empty() ? rho.dim : kernel(ctx, vstack(ctx, conditions, rho.dim)).cols();
  }
  return dim;
}

bool dim_superspecial_bound_check(const CosetSpace& space, const Representation& rho) {
  return equivariant_dimension(space, rho) <= space.points * rho.dim;
}

CosetSpace right_coset_space(const MatrixGroup& group, const std::vector<std::size_t>& subgroup,
                             const std::vector<std::size_t>& generators, const std::string& label) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(group.order(), kNone);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (coset_of[g] != kNone) continue;
    for (std::size_t h : subgroup) {
      const std::size_t hg = group.multiply(h, g);
      if (coset_of[hg] != kNone && coset_of[hg] != reps.size()) {
        throw std::invalid_argument("right_coset_space: subgroup is not closed");
      }
      coset_of[hg] = reps.size();
    }
    reps.push_back(g);
  }
  CosetSpace space;
  space.points = reps.size();
  space.group = label;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    PermGenerator gen{"g" + std::to_string(k), std::vector<std::size_t>(reps.size())};
    for (std::size_t c = 0; c < reps.size(); ++c) gen.perm[c] = coset_of[group.multiply(reps[c], generators[k])];
    space.generators.push_back(std::move(gen));
  }
  space.validate();
  return space;
}

CosetSpace relabel(const CosetSpace& space, const std::vector<std::size_t>& relabel) {
  if (relabel.size() != space.points) throw std::invalid_argument("relabel: wrong size");
  CosetSpace out = space;
  for (std::size_t g = 0; g < space.generators.size(); ++g) {
    for (std::size_t x = 0; x < space.points; ++x) {
      out.generators[g].perm[relabel[x]] = relabel[space.generators[g].perm[x]];
    }
  }
  out.validate();
  return out;
}

}  // namespace ssp
