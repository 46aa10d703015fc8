#include "ssp_cli/report.hpp"

namespace ssp::cli {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Formula:
      return "formula";
    case Provenance::Enumeration:
      return "enumeration";
    case Provenance::Bound:
      return "bound";
  }
  return "formula";
}

Json labeled(const BigInt& v, Provenance p) { return Json{{"value", to_decimal(v)}, {"provenance", provenance_name(p)}}; }

Json labeled(const Rational& v, Provenance p) { return Json{{"value", v.to_string()}, {"provenance", provenance_name(p)}}; }

Json labeled(unsigned long long v, Provenance p) {
  return Json{{"value", std::to_string(v)}, {"provenance", provenance_name(p)}};
}

Json report_to_json(const Report& r) {
  Json doc;
  doc["command"] = r.command;
  doc["parameters"] = r.parameters;
  doc["results"] = r.results;
  doc["notes"] = r.notes;
  doc["status"] = r.status;
  return doc;
}

Report report_from_json(const Json& doc) {
  try {
    Report r;
    r.command = doc.at("command").get<std::string>();
    r.parameters = doc.at("parameters");
    r.results = doc.at("results");
    r.notes = doc.at("notes").get<std::vector<std::string>>();
    r.status = doc.at("status").get<int>();
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string serialize(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

}  // namespace ssp::cli
