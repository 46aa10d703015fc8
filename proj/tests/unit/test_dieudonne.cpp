#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ssp/dieudonne.hpp"
#include "ssp/errors.hpp"

using ssp::BigInt;
using ssp::DieudonneModule;
using ssp::NewtonPolygon;
using ssp::Rational;
using ssp::Slope;
using ssp::WittRing;
using ssp::WMatrix;

namespace {

Rational half() { return Rational(BigInt(1), BigInt(2)); }

WMatrix random_invertible(const WittRing& ring, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> pick(-40, 40);
  for (;;) {
    WMatrix m = ssp::witt_zero_matrix(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<BigInt> c;
        for (unsigned k = 0; k < ring.s(); ++k) c.emplace_back(static_cast<long>(pick(rng)));
        m(i, j) = ring.from_coeffs(c);
      }
    if (ssp::inverse(m)) return m;
  }
}

std::vector<Rational> expand(const NewtonPolygon& np) {
  std::vector<Rational> out;
  for (const auto& seg : np.segments())
    for (unsigned k = 0; k < seg.multiplicity; ++k) out.push_back(seg.slope);
  return out;
}

ssp::FMatrix lie_diag(const ssp::FieldCtx& f, unsigned r, unsigned s, long long alpha) {
  const ssp::FqElem u = ssp::sqrt_nonresidue(f, alpha);
  std::vector<ssp::FqElem> d;
  for (unsigned i = 0; i < r; ++i) d.push_back(-u);
  for (unsigned i = 0; i < s; ++i) d.push_back(u);
  return ssp::FMatrix::diagonal(d, ssp::FqElem(f, 0));
}

}  // namespace

TEST_SUITE("dieudonne") {
  TEST_CASE("axiom checker on toy modules") {
    const WittRing& ring = WittRing::get(5, 1, 3);
    const DieudonneModule good(ring, ssp::witt_identity(ring, 2), ring.from_int(5) * ssp::witt_identity(ring, 2));
    CHECK(ssp::check_axioms(good).all_passed());
    const DieudonneModule bad(ring, ssp::witt_identity(ring, 2), ssp::witt_identity(ring, 2));
    const auto report = ssp::check_axioms(bad);
    CHECK_FALSE(report.all_passed());
    REQUIRE(report.find("FV=p") != nullptr);
    CHECK_FALSE(report.find("FV=p")->passed);
    CHECK(report.find("FV=p")->first_violation == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(report.find("polarization-alternating") == nullptr);
    CHECK_THROWS_AS(DieudonneModule(ring, ssp::witt_identity(ring, 2), ssp::witt_identity(ring, 3)),
                    std::invalid_argument);
  }

  TEST_CASE("A'_{1/2} model") {
    for (unsigned n : {1u, 2u, 4u}) {
      const WittRing& ring = WittRing::get(3, 2, n);
      const DieudonneModule m = ssp::build_a_half(ring);
      CHECK(m.f_matrix() == ssp::witt_matrix(ring, {{0, 1}, {-3, 0}}));
      CHECK(m.v_matrix() == ssp::witt_matrix(ring, {{0, -1}, {3, 0}}));
      CHECK(ssp::check_axioms(m).all_passed());
      CHECK(ssp::f_plus_v_vanishes(m));
      CHECK(ssp::newton_polygon(m) == NewtonPolygon({{half(), 2}}));
    }
    CHECK_THROWS_AS(ssp::build_a_half(WittRing::get(3, 1, 2)), std::invalid_argument);
  }

  TEST_CASE("Newton polygon examples") {
    const WittRing& fp = WittRing::get(5, 1, 6);
    const DieudonneModule ordinary(fp, ssp::witt_matrix(fp, {{1, 0}, {0, 5}}), ssp::witt_matrix(fp, {{5, 0}, {0, 1}}));
    const NewtonPolygon np = ssp::newton_polygon(ordinary);
    CHECK(np == NewtonPolygon({{Rational(0), 1}, {Rational(1), 1}}));
    CHECK_FALSE(ssp::is_isoclinic(np));
    CHECK_FALSE(ssp::is_basic_gl(np));
    CHECK(np.to_string() == "0 x1, 1 x1");

    const NewtonPolygon ss = ssp::newton_polygon(ssp::build_superspecial_unitary(3, 4, -1, 1, 1));
    CHECK(ss == NewtonPolygon({{half(), 4}}));
    CHECK(ssp::is_isoclinic(ss));
    CHECK(ssp::is_basic_gl(ss));
    CHECK(ss.to_string() == "1/2 x4");

    const NewtonPolygon third({{Rational(BigInt(1), BigInt(3)), 3}});
    CHECK(ssp::is_isoclinic(third));
    CHECK(NewtonPolygon({{half(), 1}, {half(), 1}}).segments().size() == 1);
    CHECK_THROWS_AS(NewtonPolygon({{Rational(1), 1}, {Rational(0), 1}}), std::invalid_argument);
    CHECK_THROWS_AS(NewtonPolygon({{Rational(0), 0}}), std::invalid_argument);
  }

  TEST_CASE("Newton polygon matches an independent characteristic polynomial") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> pick(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
      const unsigned s = trial % 2 == 0 ? 1u : 2u;
      const std::uint32_t p = trial % 3 == 0 ? 3u : 5u;
      std::vector<std::vector<long>> a(3, std::vector<long>(3));
      std::vector<std::vector<long long>> rows(3, std::vector<long long>(3));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) rows[i][j] = a[i][j] = pick(rng);
      mpz_class det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                      a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                      a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
      if (det == 0) continue;
      const WittRing& ring = WittRing::get(p, s, 40);
      const WMatrix f = ssp::witt_matrix(ring, rows);
      const DieudonneModule m(ring, f, f);
      std::vector<Rational> expected;
      for (const auto& q : oracle::integer_frobenius_slopes(a, s, p)) expected.emplace_back(q.get_num(), q.get_den());
      CAPTURE(trial);
      CHECK(expand(ssp::newton_polygon_at_level(m)) == expected);
    }
  }

  TEST_CASE("Newton polygon is invariant under sigma-conjugation") {
    std::mt19937_64 rng(3);
    for (auto [r, s] : {std::pair{1u, 1u}, {2u, 0u}, {1u, 3u}}) {
      const DieudonneModule m = ssp::build_superspecial_unitary(3, 20, -1, r, s);
      const NewtonPolygon np = ssp::newton_polygon(m);
      for (int trial = 0; trial < 3; ++trial) {
        const DieudonneModule c = ssp::change_basis(m, random_invertible(m.ring(), m.rank(), rng));
        CHECK(ssp::check_axioms(c).all_passed());
        CHECK(ssp::f_plus_v_vanishes(c));
        CHECK(ssp::newton_polygon_at_level(c) == np);
        CHECK(ssp::hodge_polygon(c) == ssp::hodge_polygon(m));
      }
    }
  }

  TEST_CASE("precision retry") {
    const WittRing& r1 = WittRing::get(3, 2, 1);
    const DieudonneModule bare(r1, ssp::witt_matrix(r1, {{0, 1}, {-3, 0}}), ssp::witt_matrix(r1, {{0, -1}, {3, 0}}));
    CHECK_FALSE(bare.has_precision_source());
    CHECK_THROWS_AS(ssp::newton_polygon(bare), ssp::InsufficientPrecision);
    CHECK_THROWS_AS(bare.at_level(4), ssp::InsufficientPrecision);
    const DieudonneModule sourced = ssp::build_a_half(r1);
    CHECK(sourced.has_precision_source());
    CHECK(ssp::newton_polygon(sourced) == NewtonPolygon({{half(), 2}}));
    CHECK(sourced.at_level(5).ring().n() == 5);
    CHECK(ssp::default_polygon_level(2) == 6);
  }

  TEST_CASE("Hodge polygon and admissibility") {
    const auto hp = ssp::hodge_polygon(ssp::build_a_half(WittRing::get(3, 2, 3)));
    CHECK(hp == ssp::HodgePolygon({{0, 1}, {1, 1}}));
    for (unsigned g : {2u, 4u}) {
      const DieudonneModule m = ssp::build_superspecial_unitary(3, 8, -1, g / 2, g / 2);
      const auto np = ssp::newton_polygon(m);
      const auto h = ssp::hodge_polygon(m);
      CHECK(h == ssp::HodgePolygon({{0, g}, {1, g}}));
      const auto adm = ssp::endpoint_admissibility(np, h);
      CHECK(adm.newton_endpoint == Rational(g));
      CHECK(adm.hodge_endpoint == Rational(g));
      CHECK(adm.endpoints_equal);
      CHECK(adm.newton_on_or_above);
      // t_N = v_p(det F)
      CHECK(ssp::determinant(m.f_matrix()).val_p() == g);
    }
    const auto bad = ssp::endpoint_admissibility(NewtonPolygon({{Rational(0), 2}}), ssp::HodgePolygon({{1, 2}}));
    CHECK(bad.newton_endpoint == Rational(0));
    CHECK(bad.hodge_endpoint == Rational(2));
    CHECK_FALSE(bad.endpoints_equal);
    CHECK_THROWS_AS(ssp::endpoint_admissibility(NewtonPolygon({{half(), 2}}), ssp::HodgePolygon({{0, 3}})),
                    std::invalid_argument);
  }

  TEST_CASE("superspecial model with unitary structure") {
    for (auto [r, s] : {std::pair{1u, 1u}, {2u, 0u}, {0u, 2u}, {2u, 2u}, {1u, 3u}}) {
      for (unsigned n : {2u, 4u}) {
        CAPTURE(r);
        CAPTURE(s);
        CAPTURE(n);
        const DieudonneModule m = ssp::build_superspecial_unitary(3, n, -1, r, s);
        CHECK(m.rank() == 2 * (r + s));
        CHECK(ssp::check_axioms(m).all_passed());
        CHECK(ssp::f_plus_v_vanishes(m));
        REQUIRE(m.ok_action().has_value());
        const WMatrix& c = m.ok_action()->matrix;
        CHECK(c * c == m.ring().from_int(-1) * ssp::witt_identity(m.ring(), m.rank()));
        const auto u = ssp::check_unitary_structure(m);
        CHECK(u.rank_minus == r + s);
        CHECK(u.rank_plus == r + s);
        CHECK(u.f_swaps);
        CHECK(u.v_swaps);
        CHECK(u.isotropic);
        CHECK(u.dim_lie_minus == r);
        CHECK(u.dim_lie_plus == s);
        CHECK(u.dim_lie == r + s);
        const auto q = ssp::lie_quotient(m);
        const auto lie = ssp::induced_action(q, ssp::reduce(c));
        CHECK(ssp::determinant_condition(r, s, -1, lie));
        if (r != s) CHECK_FALSE(ssp::determinant_condition(s, r, -1, lie));
      }
    }
    const DieudonneModule m = ssp::build_superspecial_unitary(3, 2, -1, 1, 1);
    const auto& f9 = m.ring().residue_field();
    const auto lie = ssp::induced_action(ssp::lie_quotient(m), ssp::reduce(m.ok_action()->matrix));
    CHECK(lie == lie_diag(f9, 1, 1, -1));
  }

  TEST_CASE("other primes and alphas") {
    for (auto [p, alpha, r, s] : {std::tuple{5u, -2LL, 2u, 0u}, {7u, -1LL, 1u, 3u}, {3u, -37LL, 2u, 2u}}) {
      const DieudonneModule m = ssp::build_superspecial_unitary(p, 3, alpha, r, s);
      CHECK(ssp::check_axioms(m).all_passed());
      CHECK(ssp::f_plus_v_vanishes(m));
      const auto u = ssp::check_unitary_structure(m);
      CHECK(u.dim_lie_minus == r);
      CHECK(u.dim_lie_plus == s);
    }
  }

  TEST_CASE("model validation") {
    CHECK_THROWS_AS(ssp::build_superspecial_unitary(3, 2, -1, 1, 2), ssp::ValidationError);
    CHECK_THROWS_AS(ssp::build_superspecial_unitary(3, 2, -1, 0, 0), ssp::ValidationError);
    CHECK_THROWS_AS(ssp::build_superspecial_unitary(5, 2, -1, 1, 1), ssp::NotInertError);
  }

  TEST_CASE("determinant condition") {
    const auto& f9 = ssp::FieldCtx::get(3, 2);
    const ssp::FqElem u = ssp::sqrt_nonresidue(f9, -1);
    CHECK(ssp::determinant_condition(1, 1, -1, lie_diag(f9, 1, 1, -1)));
    CHECK_FALSE(ssp::determinant_condition(1, 1, -1, ssp::FMatrix::diagonal({u, u}, ssp::FqElem(f9, 0))));
    CHECK_FALSE(ssp::determinant_condition(2, 0, -1, lie_diag(f9, 1, 1, -1)));
    CHECK_THROWS_AS(ssp::determinant_condition(1, 1, -1, ssp::identity_matrix(f9, 2)), std::invalid_argument);
    CHECK_THROWS_AS(ssp::determinant_condition(1, 2, -1, lie_diag(f9, 1, 1, -1)), std::invalid_argument);
    // det(X1 + X2 diag(-u, u)) = X1^2 - u^2 X2^2 = X1^2 + X2^2
    const auto poly = ssp::determinant_polynomial(lie_diag(f9, 1, 1, -1));
    REQUIRE(poly.size() == 3);
    CHECK(poly[0] == ssp::FqElem(f9, 1));
    CHECK(poly[1] == ssp::FqElem(f9, 0));
    CHECK(poly[2] == ssp::FqElem(f9, 1));

    std::mt19937 rng(17);
    std::uniform_int_distribution<std::uint32_t> pick(0, 8);
    for (int trial = 0; trial < 50; ++trial) {
      ssp::FMatrix p = ssp::zero_matrix(f9, 4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) p(i, j) = ssp::FqElem::from_code(f9, pick(rng));
      const auto pinv = ssp::inverse(p);
      if (!pinv) continue;
      const ssp::FMatrix l = *pinv * lie_diag(f9, 1, 3, -1) * p;
      CHECK(ssp::determinant_condition(1, 3, -1, l));
      CHECK_FALSE(ssp::determinant_condition(3, 1, -1, l));
      CHECK_FALSE(ssp::determinant_condition(2, 2, -1, l));
    }
  }
}
