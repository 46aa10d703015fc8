#include "ssp/verify.hpp"

#include <exception>

#include "ssp/count.hpp"
#include "ssp/dieudonne.hpp"
#include "ssp/groups.hpp"
#include "ssp/hermitian.hpp"

namespace ssp {

namespace {

using CheckFn = std::function<VerifyCheck()>;

VerifyCheck compare(std::string name, const BigInt& formula, const BigInt& oracle, const char* oracle_kind) {
  return VerifyCheck{std::move(name), formula == oracle,
                     "formula " + formula.get_str() + ", " + oracle_kind + " " + oracle.get_str()};
}

VerifyCheck run_guarded(const std::string& name, const CheckFn& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return VerifyCheck{name, false, std::string("error: ") + e.what()};
  }
}

std::string tag(std::initializer_list<long long> xs) {
  std::string out = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + ")";
}

void add_group_checks(std::vector<std::pair<std::string, CheckFn>>& checks, std::uint32_t p) {
  for (unsigned t : {1U, 2U}) {
    const std::string su = "su-order-vs-enumeration" + tag({t, p});
    checks.emplace_back(su, [=] {
      return compare(su, order_su(t, p), BigInt(static_cast<unsigned long>(enumerate_unitary(t, p, true).size())),
                     "enumeration");
    });
    const std::string u = "u-order-vs-enumeration" + tag({t, p});
    checks.emplace_back(u, [=] {
      return compare(u, order_u(t, p), BigInt(static_cast<unsigned long>(enumerate_unitary(t, p, false).size())),
                     "enumeration");
    });
  }
  for (auto [r, s] : {std::pair{1U, 1U}, std::pair{2U, 0U}}) {
    const std::string base = tag({r, s, p});
    checks.emplace_back("gusplit-order-vs-enumeration" + base, [=] {
      const MatrixGroup g(enumerate_gusplit(r, s, p));
      VerifyCheck c = compare("gusplit-order-vs-enumeration" + base, order_gusplit(r, s, p),
                              BigInt(static_cast<unsigned long>(g.order())), "enumeration");
      if (c.passed && order_gusplit(r, s, p) != order_u(r, p) * order_u(s, p) * (p - 1)) {
        c.passed = false;
        c.detail += "; product of unitary orders disagrees";
      }
      return c;
    });
    checks.emplace_back("p-regular-classes" + base, [=] {
      const MatrixGroup g(enumerate_gusplit(r, s, p));
      return compare("p-regular-classes" + base, p_regular_classes(r, s, p),
                     BigInt(static_cast<unsigned long>(g.p_regular_class_count(p))), "enumeration");
    });
    checks.emplace_back("sylow-order" + base, [=] {
      const MatrixGroup g(enumerate_gusplit(r, s, p));
      return compare("sylow-order" + base, irrep_dim_bound(r, s, p),
                     BigInt(static_cast<unsigned long>(g.sylow_order(p))), "enumeration");
    });
  }
}

VerifyCheck dieudonne_check(const std::string& name, std::uint32_t p, long long alpha, unsigned r, unsigned s,
                            unsigned n) {
  const DieudonneModule m = build_superspecial_unitary(p, n, alpha, r, s);
  const AxiomReport axioms = check_axioms(m);
  const UnitaryStructureReport u = check_unitary_structure(m);
  const bool ok = axioms.all_passed() && f_plus_v_vanishes(m) && u.f_swaps && u.v_swaps && u.isotropic &&
                  u.dim_lie_minus == r && u.dim_lie_plus == s && u.dim_lie == r + s;
  return VerifyCheck{name, ok,
                     "axioms " + std::string(axioms.all_passed() ? "ok" : "fail") + ", dim M-/VM+ " +
                         std::to_string(u.dim_lie_minus) + ", dim M+/VM- " + std::to_string(u.dim_lie_plus)};
}

VerifyCheck aut_check(const std::string& name, std::uint32_t p, long long alpha, unsigned r, unsigned s) {
  const HermitianQuotient h = reduce_pairing(build_superspecial_unitary(p, 2, alpha, r, s));
  return compare(name, order_gusplit(r, s, p), automorphism_group_bruteforce(h).order, "enumeration");
}

VerifyCheck admissibility_check(const std::string& name, std::uint32_t p, long long alpha, unsigned r, unsigned s) {
  const DieudonneModule m = build_superspecial_unitary(p, 4, alpha, r, s);
  const AdmissibilityReport a = endpoint_admissibility(newton_polygon(m), hodge_polygon(m));
  const Rational g(static_cast<long>(r + s));
  return VerifyCheck{name, a.endpoints_equal && a.newton_endpoint == g,
                     "t_N " + a.newton_endpoint.to_string() + ", t_H " + a.hodge_endpoint.to_string()};
}

}  // namespace

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const VerifyCheck* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

VerifyHooks default_verify_hooks() { return VerifyHooks{order_gsp_mod}; }

VerifyReport run_verify(VerifyLevel level, const VerifyHooks& hooks) {
  std::vector<std::pair<std::string, CheckFn>> checks;
  const auto gsp = hooks.gsp_order ? hooks.gsp_order : default_verify_hooks().gsp_order;

  add_group_checks(checks, 3);
  checks.emplace_back("gsp-order-vs-enumeration(1,3)", [=] {
    return compare("gsp-order-vs-enumeration(1,3)", gsp(1, 3), count_gsp2_bruteforce(3), "enumeration");
  });
  checks.emplace_back("gsp-order-vs-hyperbolic-pairs(2,3)", [=] {
    return compare("gsp-order-vs-hyperbolic-pairs(2,3)", gsp(2, 3), count_gsp_hyperbolic(2, 3), "enumeration");
  });
  checks.emplace_back("mass-constant", [] {
    bool ok = mass_constant(1) == Rational(1, 24) && mass_constant(2) == Rational(1, 5760);
    for (unsigned g = 1; g <= 12 && ok; ++g) ok = mass_constant(g) == mass_constant_bernoulli_abs(g);
    return VerifyCheck{"mass-constant", ok, "C_1 " + mass_constant(1).to_string() + ", C_2 " + mass_constant(2).to_string()};
  });
  checks.emplace_back("dieudonne-superspecial(3,-1,1,1)",
                      [] { return dieudonne_check("dieudonne-superspecial(3,-1,1,1)", 3, -1, 1, 1, 2); });
  checks.emplace_back("newton-a-half(3)", [] {
    const NewtonPolygon np = newton_polygon(build_a_half(WittRing::get(3, 2, 2)));
    const bool ok = np == NewtonPolygon({Slope{Rational(1, 2), 2}});
    return VerifyCheck{"newton-a-half(3)", ok, "slopes " + np.to_string()};
  });
  checks.emplace_back("pairing-perfect(3,-1,1,1)", [] {
    const HermitianQuotient h = reduce_pairing(build_superspecial_unitary(3, 2, -1, 1, 1));
    const bool ok = inverse(h.gram).has_value() && is_sigma_alternating(h) && is_skew_hermitian(h);
    return VerifyCheck{"pairing-perfect(3,-1,1,1)", ok, "dim " + std::to_string(h.dim())};
  });
  checks.emplace_back("aut-order-vs-formula(3,1,1)",
                      [] { return aut_check("aut-order-vs-formula(3,1,1)", 3, -1, 1, 1); });
  checks.emplace_back("eigensystem-bound(3,-1,1,1,3)", [=] {
    const CountReport rep = eigensystem_bound(SignatureParams{3, -1, 1, 1, 3});
    const Rational via_hook = mass_constant(2) * Rational(gsp(2, 3)) * Rational(mass_product(2, 3));
    const bool ok = rep.final_bound == 11520 && rep.superspecial_bound == via_hook &&
                    rep.superspecial_bound == superspecial_bound_bernoulli(rep.params);
    return VerifyCheck{"eigensystem-bound(3,-1,1,1,3)", ok,
                       "bound " + rep.final_bound.get_str() + " = " + rep.superspecial_bound_ceil.get_str() + " x " +
                           rep.irr_sum_bound.get_str()};
  });
  checks.emplace_back("asymptotic-exponent(g<=8)", [] {
    unsigned cases = 0;
    for (unsigned g = 2; g <= 8; g += 2)
      for (unsigned r = 0; r <= g; ++r, ++cases) asymptotic_exponent_symbolic(g, r, g - r);
    return VerifyCheck{"asymptotic-exponent(g<=8)", true, std::to_string(cases) + " signatures"};
  });

  if (level == VerifyLevel::Full) {
    add_group_checks(checks, 5);
    checks.emplace_back("gsp-order-multiplicative(1,12)", [=] {
      return compare("gsp-order-multiplicative(1,12)", gsp(1, 12), count_gsp2_bruteforce(12), "enumeration");
    });
    checks.emplace_back("dieudonne-superspecial(3,-1,2,2)",
                        [] { return dieudonne_check("dieudonne-superspecial(3,-1,2,2)", 3, -1, 2, 2, 4); });
    checks.emplace_back("dieudonne-superspecial(5,-2,1,3)",
                        [] { return dieudonne_check("dieudonne-superspecial(5,-2,1,3)", 5, -2, 1, 3, 2); });
    checks.emplace_back("endpoint-admissibility(3,-1,1,1)",
                        [] { return admissibility_check("endpoint-admissibility(3,-1,1,1)", 3, -1, 1, 1); });
    checks.emplace_back("endpoint-admissibility(3,-1,2,2)",
                        [] { return admissibility_check("endpoint-admissibility(3,-1,2,2)", 3, -1, 2, 2); });
    checks.emplace_back("aut-order-vs-formula(5,1,1)",
                        [] { return aut_check("aut-order-vs-formula(5,1,1)", 5, -2, 1, 1); });
    checks.emplace_back("aut-order-vs-formula(3,2,2)",
                        [] { return aut_check("aut-order-vs-formula(3,2,2)", 3, -1, 2, 2); });
    checks.emplace_back("lemma-gp(3,-1,1,1)", [] {
      const LemmaGpReport rep = lemma_gp_check(3, -1, 1, 1);
      return VerifyCheck{"lemma-gp(3,-1,1,1)", rep.passed(),
                         "commutant " + rep.commutant_order.get_str() + ", image " + rep.gp_order.get_str() +
                             ", kernel " + rep.kernel_order.get_str()};
    });
  }

  VerifyReport report;
  report.level = level;
  for (const auto& [name, fn] : checks) report.checks.push_back(run_guarded(name, fn));
  return report;
}

}  // namespace ssp
