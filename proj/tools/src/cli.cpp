#include "ssp_cli/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "ssp/budget.hpp"
#include "ssp/count.hpp"
#include "ssp/errors.hpp"
#include "ssp/groups.hpp"
#include "ssp/hermitian.hpp"
#include "ssp/verify.hpp"
#include "ssp_cli/io.hpp"
#include "ssp_cli/report.hpp"

namespace ssp::cli {

namespace {

constexpr const char* kSiegelNote = "upper bound via Siegel embedding";

struct BoundArgs {
  long long p = 0;
  long long alpha = 0;
  long long r = -1;
  long long s = -1;
  long long n = 0;
};

SignatureParams to_params(const BoundArgs& a) {
  if (a.p <= 0 || a.p > 0xffffffffLL) throw ValidationError("p must be a positive prime");
  if (a.r < 0 || a.s < 0) throw ValidationError("r and s must be non-negative");
  if (a.n <= 0) throw ValidationError("N must be >= 3");
  return SignatureParams{static_cast<std::uint32_t>(a.p), a.alpha, static_cast<unsigned>(a.r),
                         static_cast<unsigned>(a.s), static_cast<std::uint64_t>(a.n)};
}

// Field elements as polynomials in t, so that no bare number appears.
Json field_matrix_text(const FMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json params_json(const SignatureParams& p) {
  return Json{{"p", p.p}, {"alpha", p.alpha}, {"r", p.r}, {"s", p.s}, {"N", p.n}};
}

Json count_results(const CountReport& c) {
  Json r;
  r["mass_constant"] = labeled(c.mass_constant, Provenance::Formula);
  r["gsp_order"] = labeled(c.gsp_order, Provenance::Formula);
  r["mass_product"] = labeled(c.mass_product, Provenance::Formula);
  r["superspecial_bound"] = labeled(c.superspecial_bound, Provenance::Bound);
  r["superspecial_bound_ceil"] = labeled(c.superspecial_bound_ceil, Provenance::Bound);
  r["class_count"] = labeled(c.class_count, Provenance::Formula);
  r["dim_bound"] = labeled(c.dim_bound, Provenance::Bound);
  r["irr_sum_bound"] = labeled(c.irr_sum_bound, Provenance::Bound);
  r["final_bound"] = labeled(c.final_bound, Provenance::Bound);
  r["final_bound_exact"] = labeled(c.final_bound_exact, Provenance::Bound);
  r["asymptotic_exponent"] = labeled(static_cast<unsigned long long>(c.asymptotic_exponent), Provenance::Formula);
  return r;
}

const char* kCsvHeader =
    "p,alpha,r,s,N,mass_constant,gsp_order,mass_product,superspecial_bound,class_count,dim_bound,irr_sum_bound,"
    "final_bound,asymptotic_exponent\n";

std::string csv_row(const CountReport& c) {
  std::ostringstream os;
  os << c.params.p << ',' << c.params.alpha << ',' << c.params.r << ',' << c.params.s << ',' << c.params.n << ','
     << c.mass_constant.to_string() << ',' << to_decimal(c.gsp_order) << ',' << to_decimal(c.mass_product) << ','
     << c.superspecial_bound.to_string() << ',' << to_decimal(c.class_count) << ',' << to_decimal(c.dim_bound) << ','
     << to_decimal(c.irr_sum_bound) << ',' << to_decimal(c.final_bound) << ',' << c.asymptotic_exponent << '\n';
  return os.str();
}

std::vector<std::uint64_t> parse_params_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size() || item.empty() || item[0] == '-') throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("bad parameter '" + item + "' in --params");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Outcome {
  Report report;
  std::string text;  // printed instead of the JSON report when non-empty
};

Outcome cmd_bound(const BoundArgs& a, bool csv, bool strict) {
  const SignatureParams params = to_params(a);
  validate(params, strict);
  Report rep;
  rep.command = "bound";
  rep.parameters = params_json(params);
  const CountReport c = eigensystem_bound(params);
  rep.results = count_results(c);
  rep.notes.emplace_back(kSiegelNote);
  for (const auto& w : c.warnings) rep.notes.push_back(w);
  return Outcome{rep, csv ? std::string(kCsvHeader) + csv_row(c) : std::string()};
}

Outcome cmd_group(const std::string& family, const std::string& params_text, bool enumerate) {
  const GroupSpec spec = GroupSpec::parse(family, parse_params_list(params_text));
  Report rep;
  rep.command = "group";
  rep.parameters = Json{{"family", spec.family_name()}, {"params", spec.params}};
  rep.results["order"] = labeled(group_order(spec), Provenance::Formula);
  const auto& q = spec.params;
  if (spec.family == GroupFamily::GUsplit) {
    const auto r = static_cast<unsigned>(q[0]);
    const auto s = static_cast<unsigned>(q[1]);
    const auto p = static_cast<std::uint32_t>(q[2]);
    if (r + s >= 2) {
      rep.results["p_regular_classes"] = labeled(p_regular_classes(r, s, p), Provenance::Formula);
      rep.results["irrep_dim_bound"] = labeled(irrep_dim_bound(r, s, p), Provenance::Bound);
      rep.results["irrep_sum_bound"] = labeled(irrep_sum_bound(r, s, p), Provenance::Bound);
    }
  }
  if (enumerate) {
    switch (spec.family) {
      case GroupFamily::SU:
      case GroupFamily::U: {
        const auto t = static_cast<unsigned>(q[0]);
        const auto p = static_cast<std::uint32_t>(q[1]);
        const bool special = spec.family == GroupFamily::SU;
        const std::size_t n = t == 0 ? 1 : enumerate_unitary(t, p, special).size();
        rep.results["enumerated_order"] = labeled(static_cast<unsigned long long>(n), Provenance::Enumeration);
        break;
      }
      case GroupFamily::GU: {
        const auto t = static_cast<unsigned>(q[0]);
        const auto p = static_cast<std::uint32_t>(q[1]);
        const std::size_t n = t == 0 ? 1 : enumerate_gusplit(t, 0, p).size();
        rep.results["enumerated_order"] = labeled(static_cast<unsigned long long>(n), Provenance::Enumeration);
        break;
      }
      case GroupFamily::GUsplit: {
        const auto r = static_cast<unsigned>(q[0]);
        const auto s = static_cast<unsigned>(q[1]);
        const auto p = static_cast<std::uint32_t>(q[2]);
        const MatrixGroup g(enumerate_gusplit(r, s, p));
        rep.results["enumerated_order"] = labeled(static_cast<unsigned long long>(g.order()), Provenance::Enumeration);
        rep.results["enumerated_p_regular_classes"] =
            labeled(static_cast<unsigned long long>(g.p_regular_class_count(p)), Provenance::Enumeration);
        rep.results["enumerated_sylow_order"] =
            labeled(static_cast<unsigned long long>(g.sylow_order(p)), Provenance::Enumeration);
        break;
      }
      case GroupFamily::GSp: {
        const auto g = static_cast<unsigned>(q[0]);
        const std::uint64_t n = q[1];
        if (g == 1) {
          rep.results["enumerated_order"] = labeled(count_gsp2_bruteforce(n), Provenance::Enumeration);
        } else if (is_prime(n)) {
          rep.results["enumerated_order"] = labeled(count_gsp_hyperbolic(g, n), Provenance::Enumeration);
        } else {
          rep.notes.emplace_back("no enumeration oracle for g >= 2 and composite N");
        }
        break;
      }
    }
  }
  return Outcome{rep, {}};
}

struct ModelArgs {
  std::string file;
  std::string model = "superspecial";
  long long p = 3;
  long long alpha = -1;
  long long r = 1;
  long long s = 1;
  long long n = 0;
};

DieudonneModule load_module(const ModelArgs& a, Json& params) {
  if (!a.file.empty()) {
    params["file"] = a.file;
    return module_from_json(read_json_file(a.file));
  }
  if (a.p <= 2 || a.p > 0xffffLL || !is_prime(static_cast<std::uint64_t>(a.p))) {
    throw ValidationError("p must be an odd prime");
  }
  const auto p = static_cast<std::uint32_t>(a.p);
  const unsigned n = a.n > 0 ? static_cast<unsigned>(a.n) : 2;
  params["model"] = a.model;
  params["p"] = a.p;
  params["n"] = n;
  if (a.model == "a-half") return build_a_half(WittRing::get(p, 2, n));
  if (a.model != "superspecial") throw ValidationError("unknown model '" + a.model + "'");
  if (a.r < 0 || a.s < 0) throw ValidationError("r and s must be non-negative");
  params["alpha"] = a.alpha;
  params["r"] = a.r;
  params["s"] = a.s;
  return build_superspecial_unitary(p, n, a.alpha, static_cast<unsigned>(a.r), static_cast<unsigned>(a.s));
}

Outcome cmd_newton(const ModelArgs& a) {
  Report rep;
  rep.command = "newton";
  const DieudonneModule m = load_module(a, rep.parameters);
  const NewtonPolygon np = newton_polygon(m);
  Json slopes = Json::array();
  for (const auto& seg : np.segments()) {
    slopes.push_back(Json{{"slope", labeled(seg.slope, Provenance::Formula)},
                          {"multiplicity", labeled(static_cast<unsigned long long>(seg.multiplicity), Provenance::Formula)}});
  }
  rep.results["slopes"] = std::move(slopes);
  rep.results["slopes_text"] = np.to_string();
  rep.results["isoclinic"] = is_isoclinic(np);
  rep.results["basic"] = is_basic_gl(np);
  const HodgePolygon hp = hodge_polygon(m);
  Json weights = Json::array();
  for (const auto& w : hp.weights()) {
    weights.push_back(Json{{"weight", labeled(BigInt(static_cast<long>(w.weight)), Provenance::Formula)},
                           {"multiplicity", labeled(static_cast<unsigned long long>(w.multiplicity), Provenance::Formula)}});
  }
  rep.results["hodge"] = std::move(weights);
  const AdmissibilityReport adm = endpoint_admissibility(np, hp);
  rep.results["newton_endpoint"] = labeled(adm.newton_endpoint, Provenance::Formula);
  rep.results["hodge_endpoint"] = labeled(adm.hodge_endpoint, Provenance::Formula);
  rep.results["endpoints_equal"] = adm.endpoints_equal;
  rep.results["newton_on_or_above_hodge"] = adm.newton_on_or_above;
  return Outcome{rep, {}};
}

Outcome cmd_pairing(const ModelArgs& a, bool aut, bool dual) {
  Report rep;
  rep.command = "pairing";
  const DieudonneModule m = load_module(a, rep.parameters);
  const HermitianQuotient h = reduce_pairing(m);
  rep.results["dim"] = labeled(static_cast<unsigned long long>(h.dim()), Provenance::Formula);
  rep.results["graded"] = h.graded();
  if (h.graded()) {
    rep.results["r"] = labeled(static_cast<unsigned long long>(h.r), Provenance::Formula);
    rep.results["s"] = labeled(static_cast<unsigned long long>(h.s), Provenance::Formula);
  }
  rep.results["gram"] = field_matrix_text(h.gram);
  rep.results["perfect"] = inverse(h.gram).has_value();
  rep.results["sigma_alternating"] = is_sigma_alternating(h);
  rep.results["skew_hermitian"] = is_skew_hermitian(h);
  rep.notes.emplace_back("gram entries are elements of F_{p^2} = F_p[t]/(m(t)) written as polynomials in t");
  if (aut) {
    rep.results["automorphism_order"] = labeled(automorphism_group_bruteforce(h).order, Provenance::Enumeration);
    if (h.graded()) rep.results["gusplit_order"] = labeled(order_gusplit(h.r, h.s, h.field->p()), Provenance::Formula);
  }
  if (dual) {
    const HermitianQuotient d = cotangent_dual(h);
    rep.results["dual_gram"] = field_matrix_text(d.gram);
    if (aut) rep.results["dual_automorphism_order"] = labeled(automorphism_group_bruteforce(d).order, Provenance::Enumeration);
  }
  return Outcome{rep, {}};
}

Outcome cmd_amf(const std::string& space_file, const std::string& rep_file) {
  Report rep;
  rep.command = "amf";
  rep.parameters = Json{{"space", space_file}, {"representation", rep_file}};
  const CosetSpace space = coset_space_from_json(read_json_file(space_file));
  const Representation rho = representation_from_json(read_json_file(rep_file));
  std::size_t dim = 0;
  try {
    dim = equivariant_dimension(space, rho);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  rep.results["points"] = labeled(static_cast<unsigned long long>(space.points), Provenance::Formula);
  rep.results["orbits"] = labeled(static_cast<unsigned long long>(space.orbit_count()), Provenance::Enumeration);
  rep.results["rep_dim"] = labeled(static_cast<unsigned long long>(rho.dim), Provenance::Formula);
  rep.results["dimension"] = labeled(static_cast<unsigned long long>(dim), Provenance::Enumeration);
  rep.results["bound"] = labeled(static_cast<unsigned long long>(space.points * rho.dim), Provenance::Bound);
  rep.results["bound_holds"] = dim <= space.points * rho.dim;
  if (!space.group.empty()) rep.parameters["group"] = space.group;
  return Outcome{rep, {}};
}

Outcome cmd_verify(const std::string& level_text) {
  VerifyLevel level = VerifyLevel::Quick;
  if (level_text == "full") {
    level = VerifyLevel::Full;
  } else if (level_text != "quick") {
    throw ValidationError("--level must be quick or full");
  }
  const VerifyReport vr = run_verify(level);
  Report rep;
  rep.command = "verify";
  rep.parameters = Json{{"level", level_text}};
  Json checks = Json::array();
  std::size_t passed = 0;
  for (const auto& c : vr.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (c.passed) ++passed;
  }
  rep.results["checks"] = std::move(checks);
  rep.results["passed"] = labeled(static_cast<unsigned long long>(passed), Provenance::Enumeration);
  rep.results["total"] = labeled(static_cast<unsigned long long>(vr.checks.size()), Provenance::Enumeration);
  if (const VerifyCheck* bad = vr.first_failure()) {
    rep.status = kExitVerifyFailed;
    rep.notes.push_back("first failing check: " + bad->name);
  }
  return Outcome{rep, {}};
}

struct SweepRange {
  std::string var;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

SweepRange parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  const auto colon = text.find(':', eq == std::string::npos ? 0 : eq);
  if (eq == std::string::npos || colon == std::string::npos) throw ValidationError("--sweep expects var=lo:hi");
  SweepRange r;
  r.var = text.substr(0, eq);
  if (r.var != "p" && r.var != "N") throw ValidationError("--sweep variable must be p or N");
  try {
    r.lo = std::stoull(text.substr(eq + 1, colon - eq - 1));
    r.hi = std::stoull(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw ValidationError("--sweep expects var=lo:hi with integer bounds");
  }
  if (r.lo > r.hi || r.hi - r.lo > 100000) throw ValidationError("--sweep range is empty or too large");
  return r;
}

Outcome cmd_sweep(const std::string& sweep_text, BoundArgs base, bool json, bool strict) {
  const SweepRange range = parse_sweep(sweep_text);
  Report rep;
  rep.command = "sweep";
  rep.parameters = Json{{"sweep", sweep_text}, {"alpha", base.alpha}, {"r", base.r}, {"s", base.s}};
  if (range.var == "p") {
    rep.parameters["N"] = base.n;
  } else {
    rep.parameters["p"] = base.p;
  }
  std::string csv = kCsvHeader;
  Json rows = Json::array();
  for (std::uint64_t v = range.lo; v <= range.hi; ++v) {
    BoundArgs a = base;
    if (range.var == "p") {
      if (v < 3 || !is_prime(v)) continue;
      a.p = static_cast<long long>(v);
    } else {
      a.n = static_cast<long long>(v);
    }
    SignatureParams params;
    try {
      params = to_params(a);
      validate(params, strict);
    } catch (const ValidationError& e) {
      rep.notes.push_back(range.var + "=" + std::to_string(v) + " skipped: " + e.what());
      continue;
    }
    const CountReport c = eigensystem_bound(params);
    csv += csv_row(c);
    Json row = Json::object();
    row["parameters"] = params_json(c.params);
    const Json results = count_results(c);
    for (const auto& [k, v] : results.items()) row[k] = v;
    rows.push_back(std::move(row));
  }
  rep.results["rows"] = std::move(rows);
  rep.notes.emplace_back(kSiegelNote);
  return Outcome{rep, json ? std::string() : csv};
}

Report error_report(const std::string& command, Json parameters, const std::string& message, int status) {
  Report rep;
  rep.command = command;
  rep.parameters = std::move(parameters);
  rep.notes.push_back("error: " + message);
  rep.status = status;
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bounds and checks for superspecial unitary Dieudonne modules and mod-p Hecke eigensystems", "ssp"};
  app.require_subcommand(1);

  BoundArgs bound_args;
  bool bound_csv = false;
  bool bound_json = false;
  bool strict = false;
  auto* bound = app.add_subcommand("bound", "Upper bound on the number of mod-p Hecke eigensystems");
  bound->add_option("--p", bound_args.p, "Odd prime, inert in Q(sqrt(alpha))")->required();
  bound->add_option("--alpha", bound_args.alpha, "Negative squarefree integer")->required();
  bound->add_option("--r", bound_args.r, "Signature r")->required();
  bound->add_option("--s", bound_args.s, "Signature s")->required();
  bound->add_option("--N", bound_args.n, "Level N >= 3, prime to p")->required();
  auto* csv_flag = bound->add_flag("--csv", bound_csv, "Emit CSV");
  bound->add_flag("--json", bound_json, "Emit JSON (default)")->excludes(csv_flag);
  bound->add_flag("--strict", strict, "Reject p | N instead of warning");

  std::string family;
  std::string group_params;
  bool enumerate = false;
  auto* group = app.add_subcommand("group", "Orders of finite unitary and symplectic groups");
  group->add_option("--family", family, "su | u | gu | gusplit | gsp")->required();
  group->add_option("--params", group_params, "Comma separated: t,p | r,s,p | g,N")->required();
  group->add_flag("--enumerate", enumerate, "Also run the exhaustive enumeration");

  ModelArgs model;
  auto add_model_options = [&model](CLI::App* sub) {
    sub->add_option("file", model.file, "Module JSON file");
    sub->add_option("--model", model.model, "Built-in model: superspecial | a-half");
    sub->add_option("--p", model.p, "Prime");
    sub->add_option("--alpha", model.alpha, "alpha for the superspecial model");
    sub->add_option("--r", model.r, "Signature r");
    sub->add_option("--s", model.s, "Signature s");
    sub->add_option("--n", model.n, "Witt truncation level");
  };
  auto* newton = app.add_subcommand("newton", "Newton and Hodge polygons of a Dieudonne module");
  add_model_options(newton);
  bool aut = false;
  bool dual = false;
  auto* pairing = app.add_subcommand("pairing", "The Hermitian space M/VM and its automorphism group");
  add_model_options(pairing);
  pairing->add_flag("--aut", aut, "Enumerate the automorphism group");
  pairing->add_flag("--dual", dual, "Also report the cotangent dual");

  std::string space_file;
  std::string rep_file;
  auto* amf = app.add_subcommand("amf", "Dimension of equivariant functions on a finite G-set");
  amf->add_option("space", space_file, "Coset space JSON")->required();
  amf->add_option("representation", rep_file, "Representation JSON")->required();

  std::string level = "quick";
  auto* verify = app.add_subcommand("verify", "Run the formula-versus-enumeration checks");
  verify->add_option("--level", level, "quick | full");

  std::string sweep_text;
  BoundArgs sweep_args;
  bool sweep_json = false;
  auto* sweep = app.add_subcommand("sweep", "Bound over a parameter range (CSV)");
  sweep->add_option("--sweep", sweep_text, "p=lo:hi or N=lo:hi")->required();
  sweep->add_option("--p", sweep_args.p, "Prime when sweeping N");
  sweep->add_option("--alpha", sweep_args.alpha, "alpha")->required();
  sweep->add_option("--r", sweep_args.r, "Signature r")->required();
  sweep->add_option("--s", sweep_args.s, "Signature s")->required();
  sweep->add_option("--N", sweep_args.n, "Level when sweeping p");
  sweep->add_flag("--json", sweep_json, "Emit a JSON report instead of CSV");
  sweep->add_flag("--strict", strict, "Skip parameters with p | N");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ssp: " << e.what() << "\n";
    return kExitInvalid;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  int status = kExitOk;
  std::string message;
  try {
    Outcome o;
    if (command == "bound") {
      o = cmd_bound(bound_args, bound_csv, strict);
    } else if (command == "group") {
      o = cmd_group(family, group_params, enumerate);
    } else if (command == "newton") {
      o = cmd_newton(model);
    } else if (command == "pairing") {
      o = cmd_pairing(model, aut, dual);
    } else if (command == "amf") {
      o = cmd_amf(space_file, rep_file);
    } else if (command == "verify") {
      o = cmd_verify(level);
    } else {
      o = cmd_sweep(sweep_text, sweep_args, sweep_json, strict);
    }
    out << (o.text.empty() ? serialize(o.report) : o.text);
    if (o.report.status != kExitOk) {
      for (const auto& n : o.report.notes) err << "ssp " << command << ": " << n << "\n";
    }
    return o.report.status;
  } catch (const InsufficientPrecision& e) {
    status = kExitPrecision;
    message = std::string("insufficient precision: ") + e.what();
  } catch (const BudgetExceeded& e) {
    status = kExitBudget;
    message = e.what();
  } catch (const FormulaInconsistency& e) {
    status = kExitVerifyFailed;
    message = e.what();
  } catch (const Error& e) {
    status = kExitInvalid;
    message = e.what();
  } catch (const std::invalid_argument& e) {
    status = kExitInvalid;
    message = e.what();
  } catch (const std::exception& e) {
    status = kExitVerifyFailed;
    message = std::string("internal error: ") + e.what();
  }
  err << "ssp " << command << ": " << message << "\n";
  Json echo = Json::object();
  if (command == "bound") {
    echo = Json{{"p", bound_args.p}, {"alpha", bound_args.alpha}, {"r", bound_args.r}, {"s", bound_args.s}, {"N", bound_args.n}};
  }
  out << serialize(error_report(command, std::move(echo), message, status));
  return status;
}

}  // namespace ssp::cli
