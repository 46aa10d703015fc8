#pragma once

#include <string>
#include <vector>

#include "ssp/exact.hpp"
#include "ssp_cli/io.hpp"

namespace ssp::cli {

/// Where a reported number comes from.
enum class Provenance { Formula, Enumeration, Bound };

std::string provenance_name(Provenance p);

/// {"value": "<decimal or fraction>", "provenance": "..."}
Json labeled(const BigInt& v, Provenance p);
Json labeled(const Rational& v, Provenance p);
Json labeled(unsigned long long v, Provenance p);

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::vector<std::string> notes;
  int status = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

Json report_to_json(const Report& r);
/// Throws InputError when a field is missing or mistyped.
Report report_from_json(const Json& doc);
/// Two-space indented JSON followed by a newline.
std::string serialize(const Report& r);

}  // namespace ssp::cli
