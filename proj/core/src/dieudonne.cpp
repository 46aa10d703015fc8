#include "ssp/dieudonne.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ssp/errors.hpp"

namespace ssp {

namespace {

void require_square(const WMatrix& m, std::size_t h, const char* what) {
  if (m.rows() != h || m.cols() != h) {
    throw std::invalid_argument(std::string("DieudonneModule: ") + what + " must be " + std::to_string(h) + "x" +
                                std::to_string(h));
  }
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const WMatrix& a, const WMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

AxiomCheck identity_check(std::string name, const WMatrix& lhs, const WMatrix& rhs) {
  auto diff = first_difference(lhs, rhs);
  return AxiomCheck{std::move(name), !diff.has_value(), diff};
}

WMatrix scalar_matrix(const WittRing& ring, std::size_t h, const WittElem& c) {
  WMatrix m = witt_zero_matrix(ring, h, h);
  for (std::size_t i = 0; i < h; ++i) m(i, i) = c;
  return m;
}

}  // namespace

DieudonneModule::DieudonneModule(const WittRing& ring, WMatrix f, WMatrix v, std::optional<WMatrix> polarization,
                                 std::optional<OkAction> action)
    : ring_(&ring), f_(std::move(f)), v_(std::move(v)), e_(std::move(polarization)), action_(std::move(action)) {
  const std::size_t h = f_.rows();
  if (h == 0) throw std::invalid_argument("DieudonneModule: rank must be positive");
  require_square(f_, h, "F");
  require_square(v_, h, "V");
  if (e_) require_square(*e_, h, "polarization");
  if (action_) require_square(action_->matrix, h, "action");
  if (&f_(0, 0).ring() != ring_ || &v_(0, 0).ring() != ring_) {
    throw std::invalid_argument("DieudonneModule: matrices over a different ring");
  }
}

DieudonneModule DieudonneModule::at_level(unsigned n) const {
  if (!source_) {
    throw InsufficientPrecision("module has no precision source; cannot rebuild at level " + std::to_string(n));
  }
  DieudonneModule out = source_(n);
  out.source_ = source_;
  return out;
}

DieudonneModule DieudonneModule::without_polarization() const {
  DieudonneModule out = *this;
  out.e_.reset();
  return out;
}

WittElem DieudonneModule::pairing(const WMatrix& x, const WMatrix& y) const {
  if (!e_) throw PairingError("polarization required");
  return (x.transpose() * *e_ * y)(0, 0);
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

AxiomReport check_axioms(const DieudonneModule& m) {
  const WittRing& ring = m.ring();
  const std::size_t h = m.rank();
  const WMatrix& a = m.f_matrix();
  const WMatrix& b = m.v_matrix();
  const WMatrix p_id = scalar_matrix(ring, h, ring.from_int(ring.p()));

  AxiomReport report;
  // F(V x) = A sigma(B) x and V(F x) = B sigma^{-1}(A) x.
  report.checks.push_back(identity_check("FV=p", a * sigma(b), p_id));
  report.checks.push_back(identity_check("VF=p", b * sigma_inverse(a), p_id));

  if (const auto& e = m.polarization()) {
    report.checks.push_back(identity_check("polarization-alternating", e->transpose(), -*e));
    bool zero_diag = true;
    std::optional<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t i = 0; i < h && zero_diag; ++i) {
      if (!(*e)(i, i).is_zero()) {
        zero_diag = false;
        where = std::make_pair(i, i);
      }
    }
    if (!zero_diag) report.checks.back() = AxiomCheck{"polarization-alternating", false, where};
    report.checks.push_back(AxiomCheck{"polarization-principal", determinant(*e).is_unit(), std::nullopt});
    // e(Fx, y) = e(x, Vy)^sigma  <=>  A^T E = sigma(E B)
    report.checks.push_back(identity_check("polarization-compatible", a.transpose() * *e, sigma(*e * b)));
  }

  if (const auto& act = m.ok_action()) {
    const WMatrix& c = act->matrix;
    report.checks.push_back(identity_check("action-square", c * c, scalar_matrix(ring, h, ring.from_int(act->alpha))));
    // C F = F C  <=>  C A = A sigma(C); likewise for V with sigma^{-1}.
    report.checks.push_back(identity_check("action-commutes-F", c * a, a * sigma(c)));
    report.checks.push_back(identity_check("action-commutes-V", c * b, b * sigma_inverse(c)));
    if (const auto& e = m.polarization()) {
      // e(b x, y) = e(x, conj(b) y) with conj(sqrt a) = -sqrt a.
      report.checks.push_back(identity_check("action-skew-hermitian", c.transpose() * *e, -(*e * c)));
    }
  }
  return report;
}

bool f_plus_v_vanishes(const DieudonneModule& m) {
  // F and V are additive and Z_p-linear; test them on the Z_p-basis
  // x^k e_j of M.
  const WittRing& ring = m.ring();
  const std::size_t h = m.rank();
  for (unsigned k = 0; k < ring.s(); ++k) {
    const WittElem scalar = ring.gen().pow(k);
    for (std::size_t j = 0; j < h; ++j) {
      WMatrix x = witt_zero_matrix(ring, h, 1);
      x(j, 0) = scalar;
      const WMatrix sum = m.apply_f(x) + m.apply_v(x);
      for (std::size_t i = 0; i < h; ++i)
        if (!sum(i, 0).is_zero()) return false;
    }
  }
  return true;
}

DieudonneModule build_a_half(const WittRing& ring) {
  if (ring.s() != 2) throw std::invalid_argument("build_a_half: needs W(F_{p^2})");
  const long long p = ring.p();
  DieudonneModule m(ring, witt_matrix(ring, {{0, 1}, {-p, 0}}), witt_matrix(ring, {{0, -1}, {p, 0}}),
                    witt_matrix(ring, {{0, 1}, {-1, 0}}));
  const std::uint32_t up = ring.p();
  m.set_precision_source([up](unsigned n) { return build_a_half(WittRing::get(up, 2, n)); });
  return m;
}

DieudonneModule build_superspecial_unitary(std::uint32_t p, unsigned n, long long alpha, unsigned r, unsigned s) {
  if (p == 2 || !is_prime(p)) throw ValidationError("p must be an odd prime");
  const unsigned g = r + s;
  if (g < 2 || g % 2 != 0) throw ValidationError("g = r + s must be even and >= 2 (got " + std::to_string(g) + ")");
  const WittRing& ring = WittRing::get(p, 2, n);
  const WittElem u = hensel_sqrt(ring, alpha);
  const WittElem su = u.frobenius_lift();
  const FqElem root = u.reduce();
  const DieudonneModule block = build_a_half(ring);
  const LieQuotient block_lie = lie_quotient(block);

  const std::size_t h = 2 * g;
  WMatrix f = witt_zero_matrix(ring, h, h);
  WMatrix v = witt_zero_matrix(ring, h, h);
  WMatrix e = witt_zero_matrix(ring, h, h);
  WMatrix c = witt_zero_matrix(ring, h, h);
  const WMatrix orient_a = WMatrix::diagonal({u, su}, ring.zero());
  const WMatrix orient_b = WMatrix::diagonal({su, u}, ring.zero());
  for (unsigned k = 0; k < g; ++k) {
    const FqElem target = k < r ? -root : root;
    const WMatrix* chosen = nullptr;
    for (const WMatrix* cand : {&orient_a, &orient_b}) {
      const FMatrix induced = induced_action(block_lie, reduce(*cand));
      if (induced.rows() == 1 && induced(0, 0) == target) {
        chosen = cand;
        break;
      }
    }
    if (chosen == nullptr) throw std::logic_error("build_superspecial_unitary: no block orientation matches");
    f.set_block(2 * k, 2 * k, block.f_matrix());
    v.set_block(2 * k, 2 * k, block.v_matrix());
    e.set_block(2 * k, 2 * k, *block.polarization());
    c.set_block(2 * k, 2 * k, *chosen);
  }
  DieudonneModule m(ring, std::move(f), std::move(v), std::move(e), OkAction{alpha, std::move(c)});
  m.set_precision_source([=](unsigned level) { return build_superspecial_unitary(p, level, alpha, r, s); });
  return m;
}

DieudonneModule change_basis(const DieudonneModule& m, const WMatrix& p) {
  const auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("change_basis: matrix is not invertible");
  std::optional<WMatrix> e;
  if (m.polarization()) e = p.transpose() * *m.polarization() * p;
  std::optional<OkAction> act;
  if (m.ok_action()) act = OkAction{m.ok_action()->alpha, *pinv * m.ok_action()->matrix * p};
  return DieudonneModule(m.ring(), *pinv * m.f_matrix() * sigma(p), *pinv * m.v_matrix() * sigma_inverse(p),
                         std::move(e), std::move(act));
}

WMatrix frobenius_power_matrix(const DieudonneModule& m) {
  WMatrix acc = m.f_matrix();
  WMatrix twisted = m.f_matrix();
  for (unsigned i = 1; i < m.ring().s(); ++i) {
    twisted = sigma(twisted);
    acc = acc * twisted;
  }
  return acc;
}

// ---------------------------------------------------------------------------

NewtonPolygon::NewtonPolygon(std::vector<Slope> segments) {
  for (auto& seg : segments) {
    if (seg.multiplicity == 0) throw std::invalid_argument("NewtonPolygon: zero multiplicity");
    if (!segments_.empty()) {
      if (seg.slope < segments_.back().slope) throw std::invalid_argument("NewtonPolygon: slopes must be non-decreasing");
      if (seg.slope == segments_.back().slope) {
        segments_.back().multiplicity += seg.multiplicity;
        continue;
      }
    }
    segments_.push_back(std::move(seg));
  }
}

unsigned NewtonPolygon::height() const {
  unsigned h = 0;
  for (const auto& s : segments_) h += s.multiplicity;
  return h;
}

Rational NewtonPolygon::endpoint() const {
  Rational t;
  for (const auto& s : segments_) t += s.slope * Rational(static_cast<long>(s.multiplicity));
  return t;
}

std::string NewtonPolygon::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) os << ", ";
    os << segments_[i].slope.to_string() << " x" << segments_[i].multiplicity;
  }
  return os.str();
}

HodgePolygon::HodgePolygon(std::vector<HodgeWeight> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 1; i < weights_.size(); ++i) {
    if (weights_[i].weight <= weights_[i - 1].weight) throw std::invalid_argument("HodgePolygon: weights must increase");
  }
}

unsigned HodgePolygon::height() const {
  unsigned h = 0;
  for (const auto& w : weights_) h += w.multiplicity;
  return h;
}

Rational HodgePolygon::endpoint() const {
  Rational t;
  for (const auto& w : weights_) t += Rational(static_cast<long>(w.weight) * static_cast<long>(w.multiplicity));
  return t;
}

unsigned default_polygon_level(std::size_t height) { return static_cast<unsigned>(2 * height + 2); }

NewtonPolygon newton_polygon_of_charpoly(const std::vector<WittElem>& coeffs, unsigned s) {
  if (coeffs.size() < 2) throw std::invalid_argument("newton_polygon_of_charpoly: degree must be >= 1");
  const std::size_t h = coeffs.size() - 1;
  const unsigned level = coeffs[0].ring().n();
  std::vector<Valuation> vals(h + 1);
  for (std::size_t j = 0; j <= h; ++j) vals[j] = coeffs[j].val_p();
  if (vals[0] != 0U) throw std::invalid_argument("newton_polygon_of_charpoly: polynomial is not monic");
  if (!vals[h]) {
    throw InsufficientPrecision("constant term of the characteristic polynomial vanishes at level " +
                                std::to_string(level));
  }

  // Lower convex hull of the uncensored points (j, v_j).
  std::vector<std::pair<long, long>> hull;
  auto cross = [](const std::pair<long, long>& o, const std::pair<long, long>& a, const std::pair<long, long>& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  for (std::size_t j = 0; j <= h; ++j) {
    if (!vals[j]) continue;
    const std::pair<long, long> pt{static_cast<long>(j), static_cast<long>(*vals[j])};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }

  // A censored point (valuation >= level) cannot lower the hull if the hull
  // already passes at or below the level there.
  for (std::size_t j = 1; j < h; ++j) {
    if (vals[j]) continue;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
      const auto& [x0, y0] = hull[k];
      const auto& [x1, y1] = hull[k + 1];
      if (static_cast<long>(j) < x0 || static_cast<long>(j) > x1) continue;
      const Rational at = Rational(y0) + Rational(y1 - y0, x1 - x0) * Rational(static_cast<long>(j) - x0);
      if (at > Rational(static_cast<long>(level))) {
        throw InsufficientPrecision("coefficient " + std::to_string(j) + " is censored at level " +
                                    std::to_string(level));
      }
      break;
    }
  }

  std::vector<Slope> segs;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const long dx = hull[k + 1].first - hull[k].first;
    const long dy = hull[k + 1].second - hull[k].second;
    segs.push_back(Slope{Rational(dy, static_cast<long>(dx) * static_cast<long>(s)), static_cast<unsigned>(dx)});
  }
  return NewtonPolygon(std::move(segs));
}

NewtonPolygon newton_polygon_at_level(const DieudonneModule& m) {
  return newton_polygon_of_charpoly(charpoly(frobenius_power_matrix(m)), m.ring().s());
}

NewtonPolygon newton_polygon(const DieudonneModule& m) {
  if (!m.has_precision_source()) return newton_polygon_at_level(m);
  unsigned level = std::max(m.ring().n(), default_polygon_level(m.rank()));
  for (;;) {
    try {
      return level == m.ring().n() ? newton_polygon_at_level(m) : newton_polygon_at_level(m.at_level(level));
    } catch (const InsufficientPrecision&) {
      if (level >= kMaxPolygonLevel) throw;
      level = std::min(2 * level, kMaxPolygonLevel);
    }
  }
}

HodgePolygon hodge_polygon(const DieudonneModule& m) {
  WMatrix w = m.f_matrix();
  const std::size_t h = w.rows();
  std::vector<unsigned> divisors;
  for (std::size_t k = 0; k < h; ++k) {
    // Pivot on an entry of minimal valuation; every entry of its row and
    // column is then divisible by the pivot, so elimination is exact mod p^n.
    std::optional<unsigned> best;
    std::size_t bi = k, bj = k;
    for (std::size_t i = k; i < h; ++i) {
      for (std::size_t j = k; j < h; ++j) {
        const auto v = w(i, j).val_p();
        if (v && (!best || *v < *best)) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (!best) {
      throw InsufficientPrecision("elementary divisors of F censored at level " + std::to_string(m.ring().n()));
    }
    for (std::size_t j = 0; j < h; ++j) std::swap(w(k, j), w(bi, j));
    for (std::size_t i = 0; i < h; ++i) std::swap(w(i, k), w(i, bj));
    const WittElem unit_inv = w(k, k).divide_by_p_power(*best).inverse();
    for (std::size_t i = k + 1; i < h; ++i) {
      if (w(i, k).is_zero()) continue;
      const WittElem f = w(i, k).divide_by_p_power(*best) * unit_inv;
      for (std::size_t j = k; j < h; ++j) w(i, j) = w(i, j) - f * w(k, j);
    }
    for (std::size_t j = k + 1; j < h; ++j) {
      if (w(k, j).is_zero()) continue;
      const WittElem f = w(k, j).divide_by_p_power(*best) * unit_inv;
      for (std::size_t i = k; i < h; ++i) w(i, j) = w(i, j) - f * w(i, k);
    }
    divisors.push_back(*best);
  }
  std::sort(divisors.begin(), divisors.end());
  std::vector<HodgeWeight> weights;
  for (auto d : divisors) {
    if (!weights.empty() && weights.back().weight == static_cast<int>(d)) {
      ++weights.back().multiplicity;
    } else {
      weights.push_back(HodgeWeight{static_cast<int>(d), 1});
    }
  }
  return HodgePolygon(std::move(weights));
}

bool is_isoclinic(const NewtonPolygon& np) { return np.segments().size() == 1; }

bool is_basic_gl(const NewtonPolygon& np) { return is_isoclinic(np); }

AdmissibilityReport endpoint_admissibility(const NewtonPolygon& np, const HodgePolygon& hp) {
  if (np.height() != hp.height()) {
    throw std::invalid_argument("endpoint_admissibility: heights differ (" + std::to_string(np.height()) + " vs " +
                                std::to_string(hp.height()) + ")");
  }
  AdmissibilityReport r;
  r.newton_endpoint = np.endpoint();
  r.hodge_endpoint = hp.endpoint();
  r.endpoints_equal = r.newton_endpoint == r.hodge_endpoint;
  r.newton_on_or_above = r.newton_endpoint >= r.hodge_endpoint;
  return r;
}

// ---------------------------------------------------------------------------

LieQuotient lie_quotient(const DieudonneModule& m) {
  const FieldCtx& ctx = m.ring().residue_field();
  const std::size_t h = m.rank();
  // VM = B sigma^{-1}(M) = column span of B over W, since sigma^{-1} is onto.
  const FMatrix b = reduce(m.v_matrix());
  FMatrix span = zero_matrix(ctx, h, 0);
  std::size_t r = 0;
  for (std::size_t j = 0; j < h; ++j) {
    FMatrix trial = hconcat(span, b.column(j));
    const std::size_t tr = rank(trial);
    if (tr > r) {
      span = std::move(trial);
      r = tr;
    }
  }
  FMatrix full = span;
  FMatrix basis = zero_matrix(ctx, h, 0);
  for (std::size_t k = 0; k < h && r < h; ++k) {
    FMatrix ek = zero_matrix(ctx, h, 1);
    ek(k, 0) = FqElem(ctx, 1);
    FMatrix trial = hconcat(full, ek);
    if (rank(trial) > r) {
      full = std::move(trial);
      basis = hconcat(basis, ek);
      ++r;
    }
  }
  return LieQuotient{std::move(span), std::move(basis)};
}

FMatrix induced_action(const LieQuotient& q, const FMatrix& endo) {
  const std::size_t k = q.v_image.cols();
  const std::size_t d = q.basis.cols();
  if (d == 0) return q.basis;
  const auto kinv = inverse(hconcat(q.v_image, q.basis));
  if (!kinv) throw std::logic_error("induced_action: quotient basis is not a complement");
  if (k > 0) {
    const FMatrix stay = *kinv * (endo * q.v_image);
    for (std::size_t i = k; i < k + d; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (!stay(i, j).is_zero()) throw std::invalid_argument("induced_action: endomorphism does not preserve VM");
  }
  const FMatrix coords = *kinv * (endo * q.basis);
  return coords.block(k, 0, d, d);
}

UnitaryStructureReport check_unitary_structure(const DieudonneModule& m) {
  if (!m.ok_action()) throw std::invalid_argument("check_unitary_structure: module has no O_k-action");
  if (!m.polarization()) throw PairingError("polarization required");
  const WittRing& ring = m.ring();
  const std::size_t h = m.rank();
  const WittElem u = hensel_sqrt(ring, m.ok_action()->alpha);
  const WMatrix& c = m.ok_action()->matrix;
  const WMatrix ui = WMatrix::diagonal(std::vector<WittElem>(h, u), ring.zero());
  const WittElem inv2u = (ring.from_int(2) * u).inverse();
  const WMatrix proj_plus = inv2u * (c + ui);   // onto M_+, kernel M_-
  const WMatrix proj_minus = inv2u * (ui - c);  // onto M_-, kernel M_+
  const WMatrix zero = witt_zero_matrix(ring, h, h);
  const WMatrix& a = m.f_matrix();
  const WMatrix& b = m.v_matrix();
  const WMatrix& e = *m.polarization();

  UnitaryStructureReport r;
  r.rank_plus = rank(reduce(proj_plus));
  r.rank_minus = rank(reduce(proj_minus));
  const WMatrix f_plus = a * sigma(proj_plus);
  const WMatrix f_minus = a * sigma(proj_minus);
  const WMatrix v_plus = b * sigma_inverse(proj_plus);
  const WMatrix v_minus = b * sigma_inverse(proj_minus);
  r.f_swaps = proj_plus * f_plus == zero && proj_minus * f_minus == zero;
  r.v_swaps = proj_plus * v_plus == zero && proj_minus * v_minus == zero;
  r.isotropic = proj_plus.transpose() * e * proj_plus == zero && proj_minus.transpose() * e * proj_minus == zero;
  r.dim_lie_minus = r.rank_minus - rank(reduce(v_plus));
  r.dim_lie_plus = r.rank_plus - rank(reduce(v_minus));
  r.dim_lie = lie_quotient(m).basis.cols();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

using HomPoly = std::vector<FqElem>;  // index k <-> X1^{deg-k} X2^k

HomPoly hom_mul(const HomPoly& a, const HomPoly& b) {
  HomPoly out(a.size() + b.size() - 1, a[0].zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

}  // namespace

std::vector<FqElem> determinant_polynomial(const FMatrix& l) {
  if (!l.is_square() || l.rows() == 0) throw std::invalid_argument("determinant_polynomial: need a square matrix");
  const std::size_t g = l.rows();
  if (g > 20) throw std::invalid_argument("determinant_polynomial: size too large for subset expansion");
  const FqElem zero = l(0, 0).zero();
  const FqElem one = l(0, 0).one();
  // det of rows 0..|S|-1 and column set S, expanded along the last row.
  std::vector<HomPoly> minor(std::size_t{1} << g);
  minor[0] = HomPoly{one};
  for (std::size_t mask = 1; mask < minor.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    HomPoly acc(row + 2, zero);
    std::size_t pos = 0;
    for (std::size_t j = 0; j < g; ++j) {
      if (!(mask >> j & 1U)) continue;
      const HomPoly entry{row == j ? one : zero, l(row, j)};
      HomPoly term = hom_mul(entry, minor[mask & ~(std::size_t{1} << j)]);
      const bool negative = ((row + pos) & 1U) != 0;
      for (std::size_t k = 0; k < term.size(); ++k) acc[k] = negative ? acc[k] - term[k] : acc[k] + term[k];
      ++pos;
    }
    minor[mask] = std::move(acc);
  }
  return minor.back();
}

bool determinant_condition(unsigned r, unsigned s, long long alpha, const FMatrix& lie_action) {
  const std::size_t g = r + s;
  if (!lie_action.is_square() || lie_action.rows() != g || g == 0) {
    throw std::invalid_argument("determinant_condition: matrix must be " + std::to_string(g) + "x" + std::to_string(g));
  }
  const FieldCtx& ctx = lie_action(0, 0).ctx();
  const FqElem root = sqrt_nonresidue(ctx, alpha);
  FMatrix alpha_id = identity_matrix(ctx, g);
  for (std::size_t i = 0; i < g; ++i) alpha_id(i, i) = FqElem(ctx, alpha);
  if (!(lie_action * lie_action == alpha_id)) {
    throw std::invalid_argument("determinant_condition: matrix does not square to alpha");
  }
  HomPoly rhs{FqElem(ctx, 1)};
  for (unsigned i = 0; i < r; ++i) rhs = hom_mul(rhs, HomPoly{FqElem(ctx, 1), -root});
  for (unsigned i = 0; i < s; ++i) rhs = hom_mul(rhs, HomPoly{FqElem(ctx, 1), root});
  return determinant_polynomial(lie_action) == rhs;
}

}  // namespace ssp
