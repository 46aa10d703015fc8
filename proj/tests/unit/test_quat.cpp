#include "doctest.h"
#include "ssp/errors.hpp"
#include "ssp/quat.hpp"

using ssp::QuatElem;
using ssp::QuatModP;

TEST_SUITE("quat") {
  TEST_CASE("defining relations on the basis") {
    for (auto [p, alpha] : {std::pair{3u, -1LL}, {5u, -2LL}, {7u, -1LL}}) {
      const QuatModP q(p, alpha);
      const QuatElem u = q.u();
      const QuatElem pi = q.pi();
      CHECK(u * u == q.embed(ssp::FqElem(q.field(), alpha)));
      CHECK(pi * pi == q.zero());
      CHECK(pi * u == -(u * pi));
      for (const auto& w : ssp::elements(q.field())) CHECK(pi * q.embed(w) == q.embed(w.frobenius()) * pi);
      CHECK(q.basis().size() == 4);
      CHECK(q.elements().size() == std::size_t{p} * p * p * p);
    }
  }

  TEST_CASE("associativity and the canonical involution, exhaustively at p = 3") {
    const QuatModP q(3, -1);
    const auto all = q.elements();
    for (const auto& x : all) {
      CHECK(x.conj().conj() == x);
      if (x.is_unit()) {
        CHECK(x * x.inverse() == q.one());
        CHECK(x.inverse() * x == q.one());
      } else {
        CHECK_THROWS_AS(x.inverse(), std::domain_error);
      }
      for (const auto& y : all) {
        CHECK((x * y).conj() == y.conj() * x.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
      }
    }
    for (const auto& x : q.basis())
      for (const auto& y : q.basis())
        for (const auto& z : all) CHECK((x * y) * z == x * (y * z));
  }

  TEST_CASE("reduction mod Pi is a ring map") {
    const QuatModP q(5, -2);
    const auto all = q.elements();
    for (std::size_t i = 0; i < all.size(); i += 13)
      for (std::size_t j = 0; j < all.size(); j += 17) {
        CHECK((all[i] * all[j]).reduce() == all[i].reduce() * all[j].reduce());
        CHECK((all[i] + all[j]).reduce() == all[i].reduce() + all[j].reduce());
      }
  }

  TEST_CASE("matrices") {
    const QuatModP q(3, -1);
    ssp::QMatrix m(2, 2, q.zero());
    m(0, 0) = q.u();
    m(0, 1) = q.pi();
    m(1, 1) = q.one();
    const ssp::QMatrix ct = ssp::conj_transpose(m);
    CHECK(ct(1, 0) == q.pi().conj());
    CHECK(ct(0, 0) == q.u().conj());
    CHECK(ssp::reduce(m)(0, 1).is_zero());
    CHECK(ssp::reduce(m)(0, 0) == q.u().reduce());
  }

  TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(QuatModP(5, -1), ssp::NotInertError);
    CHECK_THROWS_AS(QuatModP(4, -1), ssp::ValidationError);
    CHECK_THROWS_AS(QuatModP(2, -1), ssp::ValidationError);
  }
}
