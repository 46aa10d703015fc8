#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ssp/groups.hpp"

namespace oracle {

mpq_class bernoulli(unsigned n) {
  std::vector<mpq_class> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  return a[0];
}

mpq_class mass_constant(unsigned g) {
  mpq_class c = 1;
  for (unsigned i = 1; i <= g; ++i) {
    mpq_class zeta = -bernoulli(2 * i) / mpq_class(2 * i);
    c *= zeta / 2;
  }
  const unsigned long e = static_cast<unsigned long>(g) * (g + 1) / 2;
  if (e % 2 == 1) c = -c;
  c.canonicalize();
  return c;
}

Fp2::Fp2(std::uint32_t prime) : p(prime) {
  for (std::uint32_t c = 2; c < p; ++c) {
    bool square = false;
    for (std::uint32_t x = 1; x < p && !square; ++x) square = (x * x) % p == c;
    if (!square) {
      d = c;
      return;
    }
  }
  throw std::invalid_argument("no non-residue");
}

Fp2::E Fp2::add(E x, E y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
Fp2::E Fp2::sub(E x, E y) const { return {(x.a + p - y.a) % p, (x.b + p - y.b) % p}; }
Fp2::E Fp2::mul(E x, E y) const {
  const std::uint64_t a = (std::uint64_t{x.a} * y.a + std::uint64_t{x.b} * y.b % p * d) % p;
  const std::uint64_t b = (std::uint64_t{x.a} * y.b + std::uint64_t{x.b} * y.a) % p;
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}
// t^p = d^{(p-1)/2} t = -t
Fp2::E Fp2::conj(E x) const { return {x.a, (p - x.b) % p}; }

std::vector<Fp2::E> Fp2::all() const {
  std::vector<E> out;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) out.push_back({a, b});
  return out;
}

namespace {

Mat mat_mul(const Fp2& f, const Mat& x, const Mat& y, unsigned n) {
  Mat z(n * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Fp2::E acc{};
      for (unsigned k = 0; k < n; ++k) acc = f.add(acc, f.mul(x[i * n + k], y[k * n + j]));
      z[i * n + j] = acc;
    }
  return z;
}

Mat star(const Fp2& f, const Mat& x, unsigned n) {
  Mat z(n * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) z[i * n + j] = f.conj(x[j * n + i]);
  return z;
}

// X* X = c I with c in F_p^x, returns c or 0.
std::uint32_t similitude(const Fp2& f, const Mat& x, unsigned n) {
  const Mat m = mat_mul(f, star(f, x, n), x, n);
  const Fp2::E c = m[0];
  if (c.b != 0 || c.a == 0) return 0;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (!(m[i * n + j] == (i == j ? c : Fp2::E{}))) return 0;
  return c.a;
}

Fp2::E det(const Fp2& f, const Mat& x, unsigned n) {
  if (n == 1) return x[0];
  if (n == 2) return f.sub(f.mul(x[0], x[3]), f.mul(x[1], x[2]));
  throw std::invalid_argument("det: n <= 2 only");
}

std::vector<Mat> all_matrices(const Fp2& f, unsigned n) {
  const auto els = f.all();
  std::vector<Mat> out;
  std::size_t total = 1;
  for (unsigned k = 0; k < n * n; ++k) total *= els.size();
  for (std::size_t idx = 0; idx < total; ++idx) {
    Mat m(n * n);
    std::size_t rest = idx;
    for (unsigned k = 0; k < n * n; ++k) {
      m[k] = els[rest % els.size()];
      rest /= els.size();
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::uint32_t inv_mod(std::uint32_t c, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x)
    if ((std::uint64_t{c} * x) % p == 1) return x;
  throw std::invalid_argument("not invertible");
}

}  // namespace

std::uint64_t count_unitary(const Fp2& f, unsigned t, bool special) {
  std::uint64_t n = 0;
  for (const auto& x : all_matrices(f, t)) {
    if (similitude(f, x, t) != 1) continue;
    if (special && !(det(f, x, t) == Fp2::E{1, 0})) continue;
    ++n;
  }
  return n;
}

std::vector<Mat> gusplit_elements(const Fp2& f, unsigned r, unsigned s) {
  const unsigned g = r + s;
  // Unitary similitudes of each block, sorted by factor.
  auto blocks = [&f](unsigned k) {
    std::map<std::uint32_t, std::vector<Mat>> by_c;
    if (k == 0) {
      for (std::uint32_t c = 1; c < f.p; ++c) by_c[c].push_back(Mat{});
      return by_c;
    }
    for (const auto& x : all_matrices(f, k))
      if (auto c = similitude(f, x, k)) by_c[c].push_back(x);
    return by_c;
  };
  auto br = blocks(r);
  auto bs = blocks(s);
  std::vector<Mat> out;
  for (std::uint32_t c = 1; c < f.p; ++c) {
    for (const auto& x : br[c]) {
      for (const auto& y : bs[c]) {
        Mat m(g * g);
        for (unsigned i = 0; i < r; ++i)
          for (unsigned j = 0; j < r; ++j) m[i * g + j] = x[i * r + j];
        for (unsigned i = 0; i < s; ++i)
          for (unsigned j = 0; j < s; ++j) m[(r + i) * g + r + j] = y[i * s + j];
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

std::uint64_t p_regular_classes(const Fp2& f, const std::vector<Mat>& group, unsigned g) {
  std::map<Mat, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;
  Mat id(g * g);
  for (unsigned i = 0; i < g; ++i) id[i * g + i] = {1, 0};
  // X^{-1} = c^{-1} X*
  std::vector<Mat> inv(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    const std::uint32_t c = similitude(f, group[i], g);
    Mat m = star(f, group[i], g);
    for (auto& e : m) e = f.mul(e, f.scalar(inv_mod(c, f.p)));
    inv[i] = m;
  }
  std::vector<bool> seen(group.size(), false);
  std::uint64_t classes = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t order = 1;
    for (Mat y = group[i]; !(y == id); y = mat_mul(f, y, group[i], g)) ++order;
    for (std::size_t k = 0; k < group.size(); ++k) {
      seen[index.at(mat_mul(f, mat_mul(f, group[k], group[i], g), inv[k], g))] = true;
    }
    if (order % f.p != 0) ++classes;
  }
  return classes;
}

std::uint64_t center_order(const Fp2& f, const std::vector<Mat>& group, unsigned g) {
  std::uint64_t n = 0;
  for (const auto& z : group) {
    bool central = true;
    for (const auto& x : group) {
      if (!(mat_mul(f, z, x, g) == mat_mul(f, x, z, g))) {
        central = false;
        break;
      }
    }
    if (central) ++n;
  }
  return n;
}

std::uint64_t count_gl2(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      for (std::uint64_t c = 0; c < n; ++c)
        for (std::uint64_t d = 0; d < n; ++d) {
          const std::uint64_t det = (a * d + n * n - b * c % n) % n;
          std::uint64_t x = det, y = n;
          while (y != 0) {
            const std::uint64_t t = x % y;
            x = y;
            y = t;
          }
          if (x == 1) ++count;
        }
  return count;
}

std::size_t rank(std::vector<std::vector<ssp::FqElem>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const ssp::FqElem inv = rows[r][c].inverse();
    for (auto& e : rows[r]) e = e * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const ssp::FqElem factor = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = rows[i][k] - factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t equivariant_dimension(const ssp::CosetSpace& space, const ssp::Representation& rho) {
  const std::size_t d = rho.dim;
  const std::size_t unknowns = space.points * d;
  const ssp::FieldCtx& ctx = *rho.field;
  std::vector<std::vector<ssp::FqElem>> rows;
  // rho(s) f(x.s) - f(x) = 0
  for (std::size_t g = 0; g < space.generators.size(); ++g) {
    const ssp::FMatrix& m = rho.generators[g];
    for (std::size_t x = 0; x < space.points; ++x) {
      const std::size_t y = space.generators[g].perm[x];
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<ssp::FqElem> row(unknowns, ssp::FqElem(ctx, 0));
        for (std::size_t k = 0; k < d; ++k) row[y * d + k] = row[y * d + k] + m(i, k);
        row[x * d + i] = row[x * d + i] - ssp::FqElem(ctx, 1);
        rows.push_back(std::move(row));
      }
    }
  }
  return unknowns - rank(std::move(rows));
}

namespace {

unsigned long valuation(mpz_class v, unsigned long p) {
  unsigned long k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

}  // namespace

std::vector<mpq_class> integer_frobenius_slopes(const std::vector<std::vector<long>>& a, unsigned s,
                                                 unsigned long p) {
  const std::size_t h = a.size();
  using M = std::vector<std::vector<mpq_class>>;
  auto mul = [h](const M& x, const M& y) {
    M z(h, std::vector<mpq_class>(h, 0));
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j)
        for (std::size_t k = 0; k < h; ++k) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  M base(h, std::vector<mpq_class>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) base[i][j] = a[i][j];
  M b = base;
  for (unsigned k = 1; k < s; ++k) b = mul(b, base);
  // Faddeev-LeVerrier: det(T - B) = sum c_k T^{h-k}.
  std::vector<mpq_class> c(h + 1, 0);
  c[0] = 1;
  M mk(h, std::vector<mpq_class>(h, 0));
  for (std::size_t k = 1; k <= h; ++k) {
    M next = mul(b, mk);
    for (std::size_t i = 0; i < h; ++i) next[i][i] += c[k - 1];
    mk = next;
    M bm = mul(b, mk);
    mpq_class tr = 0;
    for (std::size_t i = 0; i < h; ++i) tr += bm[i][i];
    c[k] = -tr / mpq_class(static_cast<long>(k));
  }
  // Lower hull of (k, v(c_k)) over nonzero integral coefficients.
  std::vector<std::pair<long, long>> pts;
  for (std::size_t k = 0; k <= h; ++k) {
    if (c[k] == 0) continue;
    if (c[k].get_den() != 1) throw std::invalid_argument("non-integral characteristic polynomial");
    pts.emplace_back(static_cast<long>(k), static_cast<long>(valuation(c[k].get_num(), p)));
  }
  std::vector<mpq_class> slopes;
  std::size_t at = 0;
  while (at + 1 < pts.size()) {
    std::size_t best = at + 1;
    mpq_class best_slope(pts[best].second - pts[at].second, pts[best].first - pts[at].first);
    for (std::size_t k = at + 2; k < pts.size(); ++k) {
      mpq_class sl(pts[k].second - pts[at].second, pts[k].first - pts[at].first);
      sl.canonicalize();
      if (sl <= best_slope) {
        best_slope = sl;
        best = k;
      }
    }
    best_slope.canonicalize();
    for (long k = pts[at].first; k < pts[best].first; ++k) slopes.push_back(best_slope / s);
    at = best;
  }
  return slopes;
}

namespace {

ssp::WMatrix random_column(const ssp::WittRing& ring, std::size_t h, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned long> pick(0, 1UL << 40);
  ssp::WMatrix x = ssp::witt_zero_matrix(ring, h, 1);
  for (std::size_t i = 0; i < h; ++i) {
    std::vector<mpz_class> c;
    for (unsigned k = 0; k < ring.s(); ++k) c.emplace_back(pick(rng));
    x(i, 0) = ring.from_coeffs(c);
  }
  return x;
}

}  // namespace

std::size_t pairing_disagreements(const ssp::DieudonneModule& m, const ssp::HermitianQuotient& h, unsigned trials,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t rank = m.rank();
  std::size_t bad = 0;
  for (unsigned t = 0; t < trials; ++t) {
    const ssp::WMatrix x = random_column(m.ring(), rank, rng);
    const ssp::WMatrix y = random_column(m.ring(), rank, rng);
    const ssp::WMatrix x2 = x + m.apply_f(random_column(m.ring(), rank, rng));
    const ssp::WMatrix y2 = y + m.apply_v(random_column(m.ring(), rank, rng));
    const ssp::FqElem direct = ssp::witt_pairing_value(m, x2, y2);
    const ssp::FqElem via_gram =
        h.pair(ssp::quotient_coordinates(h, ssp::reduce(x)), ssp::quotient_coordinates(h, ssp::reduce(y)));
    if (!(direct == via_gram) || !(direct == ssp::witt_pairing_value(m, x, y))) ++bad;
  }
  return bad;
}

Fixture random_gusplit_fixture(std::uint64_t seed) {
  static const ssp::MatrixGroup group(ssp::enumerate_gusplit(1, 1, 3));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);

  // Subgroup generated by up to two random elements.
  std::vector<std::size_t> sub{group.identity_index()};
  std::set<std::size_t> in_sub(sub.begin(), sub.end());
  const std::size_t sub_gens = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  std::vector<std::size_t> gens;
  for (std::size_t k = 0; k < sub_gens; ++k) gens.push_back(pick(rng));
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t g : gens) {
      const std::size_t y = group.multiply(sub[i], g);
      if (in_sub.insert(y).second) sub.push_back(y);
    }
  }

  std::vector<std::size_t> acting;
  const std::size_t n_acting = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  for (std::size_t k = 0; k < n_acting; ++k) acting.push_back(pick(rng));

  Fixture fx;
  fx.space = ssp::right_coset_space(group, sub, acting, "random subgroup of GUsplit(1,1,3)");
  fx.kind = static_cast<RepKind>(std::uniform_int_distribution<int>(0, 2)(rng));
  const ssp::FieldCtx& f9 = ssp::FieldCtx::get(3, 2);
  fx.rho.field = &f9;
  fx.rho.dim = fx.kind == RepKind::Natural ? 2 : 1;
  for (std::size_t a : acting) {
    const ssp::FMatrix& m = group.elements()[a];
    switch (fx.kind) {
      case RepKind::Trivial:
        fx.rho.generators.push_back(ssp::identity_matrix(f9, 1));
        break;
      case RepKind::Det: {
        ssp::FMatrix d = ssp::identity_matrix(f9, 1);
        d(0, 0) = ssp::determinant(m);
        fx.rho.generators.push_back(d);
        break;
      }
      case RepKind::Natural:
        fx.rho.generators.push_back(m);
        break;
    }
  }
  return fx;
}

}  // namespace oracle
