#include "ssp_cli/io.hpp"

#include <fstream>
#include <sstream>

#include "ssp/errors.hpp"

namespace ssp::cli {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

long long as_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InputError(what + " must be an integer");
  return v.get<long long>();
}

BigInt as_bigint(const Json& v) {
  if (v.is_number_integer()) return BigInt(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    BigInt out;
    if (out.set_str(v.get<std::string>(), 10) != 0) throw InputError("bad decimal coefficient '" + v.get<std::string>() + "'");
    return out;
  }
  throw InputError("coefficient must be an integer or a decimal string");
}

std::vector<BigInt> coefficients(const Json& entry) {
  if (!entry.is_array()) return {as_bigint(entry)};
  std::vector<BigInt> c;
  for (const auto& x : entry) c.push_back(as_bigint(x));
  return c;
}

template <typename Make>
auto parse_matrix(const Json& doc, std::size_t rows, std::size_t cols, const std::string& name, Make make) {
  if (!doc.is_array() || doc.size() != rows) {
    throw InputError(name + " must have " + std::to_string(rows) + " rows");
  }
  using T = decltype(make(std::vector<BigInt>{}));
  std::vector<T> data;
  for (const auto& row : doc) {
    if (!row.is_array() || row.size() != cols) {
      throw InputError(name + " rows must have " + std::to_string(cols) + " entries");
    }
    for (const auto& e : row) data.push_back(make(coefficients(e)));
  }
  return Matrix<T>::from_data(rows, cols, std::move(data));
}

std::size_t as_size(const Json& v, const std::string& what) {
  const long long x = as_int(v, what);
  if (x < 0) throw InputError(what + " must be non-negative");
  return static_cast<std::size_t>(x);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

DieudonneModule module_from_json(const Json& doc) {
  const long long p = as_int(require(doc, "p"), "p");
  const long long s = as_int(require(doc, "s"), "s");
  const long long n = as_int(require(doc, "n"), "n");
  const std::size_t h = as_size(require(doc, "rank"), "rank");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw InputError("p must be prime");
  if (s < 1 || s > 8) throw InputError("s must be between 1 and 8");
  if (n < 1 || n > 256) throw InputError("n must be between 1 and 256");
  if (h == 0) throw InputError("rank must be positive");
  const WittRing& ring = WittRing::get(static_cast<std::uint32_t>(p), static_cast<unsigned>(s), static_cast<unsigned>(n));
  auto make = [&ring](const std::vector<BigInt>& c) {
    if (c.size() > ring.s()) throw InputError("coefficient vector longer than s");
    return ring.from_coeffs(c);
  };
  WMatrix f = parse_matrix(require(doc, "F"), h, h, "F", make);
  WMatrix v = parse_matrix(require(doc, "V"), h, h, "V", make);
  std::optional<WMatrix> e;
  if (doc.contains("E") && !doc.at("E").is_null()) e = parse_matrix(doc.at("E"), h, h, "E", make);
  std::optional<OkAction> act;
  if (doc.contains("action") && !doc.at("action").is_null()) {
    const Json& a = doc.at("action");
    act = OkAction{as_int(require(a, "alpha"), "action.alpha"), parse_matrix(require(a, "matrix"), h, h, "action", make)};
  }
  return DieudonneModule(ring, std::move(f), std::move(v), std::move(e), std::move(act));
}

namespace {

Json witt_to_json(const WittElem& x) {
  Json c = Json::array();
  for (const auto& v : x.coeffs()) {
    if (v.fits_slong_p()) {
      c.push_back(v.get_si());
    } else {
      c.push_back(v.get_str());
    }
  }
  return c;
}

Json wmatrix_to_json(const WMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(witt_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json module_to_json(const DieudonneModule& m) {
  Json doc;
  doc["p"] = m.ring().p();
  doc["s"] = m.ring().s();
  doc["n"] = m.ring().n();
  doc["rank"] = m.rank();
  doc["F"] = wmatrix_to_json(m.f_matrix());
  doc["V"] = wmatrix_to_json(m.v_matrix());
  if (m.polarization()) doc["E"] = wmatrix_to_json(*m.polarization());
  if (m.ok_action()) doc["action"] = Json{{"alpha", m.ok_action()->alpha}, {"matrix", wmatrix_to_json(m.ok_action()->matrix)}};
  return doc;
}

CosetSpace coset_space_from_json(const Json& doc) {
  CosetSpace space;
  space.points = as_size(require(doc, "points"), "points");
  const Json& gens = require(doc, "generators");
  if (!gens.is_array()) throw InputError("generators must be an array");
  for (const auto& g : gens) {
    PermGenerator gen;
    gen.name = g.contains("name") && g.at("name").is_string() ? g.at("name").get<std::string>()
                                                               : "g" + std::to_string(space.generators.size());
    const Json& perm = require(g, "perm");
    if (!perm.is_array()) throw InputError("perm must be an array");
    for (const auto& x : perm) gen.perm.push_back(as_size(x, "perm entry"));
    space.generators.push_back(std::move(gen));
  }
  if (doc.contains("group") && doc.at("group").is_string()) space.group = doc.at("group").get<std::string>();
  try {
    space.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return space;
}

Json coset_space_to_json(const CosetSpace& space) {
  Json doc;
  doc["points"] = space.points;
  Json gens = Json::array();
  for (const auto& g : space.generators) gens.push_back(Json{{"name", g.name}, {"perm", g.perm}});
  doc["generators"] = std::move(gens);
  doc["group"] = space.group;
  return doc;
}

Representation representation_from_json(const Json& doc) {
  Representation rho;
  rho.dim = as_size(require(doc, "dim"), "dim");
  if (rho.dim == 0) throw InputError("dim must be positive");
  const Json& field = require(doc, "field");
  const long long p = as_int(require(field, "p"), "field.p");
  const long long s = as_int(require(field, "s"), "field.s");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || s < 1) throw InputError("field must be F_{p^s}");
  rho.field = &FieldCtx::get(static_cast<std::uint32_t>(p), static_cast<unsigned>(s));
  const Json& gens = require(doc, "generators");
  if (!gens.is_array()) throw InputError("generators must be an array");
  auto make = [ctx = rho.field](const std::vector<BigInt>& c) {
    if (c.size() > ctx->s()) throw InputError("coefficient vector longer than s");
    std::vector<long long> small;
    for (const auto& x : c) {
      BigInt r = x % BigInt(ctx->p());
      small.push_back(r.get_si());
    }
    return FqElem::from_coeffs(*ctx, small);
  };
  for (const auto& g : gens) rho.generators.push_back(parse_matrix(g, rho.dim, rho.dim, "representation matrix", make));
  return rho;
}

Json fq_to_json(const FqElem& x) {
  Json c = Json::array();
  for (auto v : x.coeffs()) c.push_back(v);
  return c;
}

Json fmatrix_to_json(const FMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(fq_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json representation_to_json(const Representation& rho) {
  Json doc;
  doc["dim"] = rho.dim;
  doc["field"] = Json{{"p", rho.field->p()}, {"s", rho.field->s()}};
  Json gens = Json::array();
  for (const auto& g : rho.generators) gens.push_back(fmatrix_to_json(g));
  doc["generators"] = std::move(gens);
  return doc;
}

}  // namespace ssp::cli
