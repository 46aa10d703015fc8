#include <cstdlib>
#include <sstream>
#include <string>

#include "doctest.h"
#include "ssp_cli/cli.hpp"
#include "ssp_cli/io.hpp"
#include "ssp_cli/report.hpp"

using ssp::cli::Json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ssp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(SSP_FIXTURE_DIR) + "/" + name; }

// Every number under results is a labeled {"value", "provenance"} pair;
// echoed input parameters are exempt.
bool all_labeled(const Json& j, std::string& where) {
  if (j.is_number()) return false;
  if (j.is_object()) {
    if (j.contains("value")) {
      if (!j.contains("provenance") || !j["value"].is_string()) return false;
      const std::string p = j["provenance"];
      return p == "formula" || p == "enumeration" || p == "bound";
    }
    for (const auto& [k, v] : j.items()) {
      if (k == "parameters") continue;
      if (!all_labeled(v, where)) {
        where = k + "/" + where;
        return false;
      }
    }
  }
  if (j.is_array()) {
    for (const auto& v : j)
      if (!all_labeled(v, where)) return false;
  }
  return true;
}

// Environment override for one scope.
struct EnvGuard {
  std::string name;
  EnvGuard(const char* n, const char* v) : name(n) { setenv(n, v, 1); }
  ~EnvGuard() { unsetenv(name.c_str()); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("bound example") {
    const Run r = run({"bound", "--p", "3", "--alpha", "-1", "--r", "1", "--s", "1", "--N", "3"});
    CHECK(r.code == ssp::cli::kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["results"]["final_bound"]["value"] == "11520");
    CHECK(j["results"]["asymptotic_exponent"]["value"] == "6");
    CHECK(j["results"]["superspecial_bound"]["value"] == "360");
    CHECK(j["results"]["irr_sum_bound"]["value"] == "32");
    CHECK(j["status"] == 0);
  }

  TEST_CASE("bound rejects invalid parameters with exit 2") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
        {{"--p", "3", "--alpha", "-1", "--r", "1", "--s", "2", "--N", "3"}, "g = r + s must be even"},
        {{"--p", "3", "--alpha", "-3", "--r", "1", "--s", "1", "--N", "3"}, "p divides alpha"},
        {{"--p", "5", "--alpha", "-1", "--r", "1", "--s", "1", "--N", "3"}, "alpha is a QR mod p: p splits or ramifies"},
        {{"--p", "3", "--alpha", "5", "--r", "1", "--s", "1", "--N", "4"}, "alpha must be a negative integer"},
        {{"--p", "2", "--alpha", "-1", "--r", "1", "--s", "1", "--N", "3"}, "p must be odd"},
        {{"--p", "3", "--alpha", "-1", "--r", "1", "--s", "1", "--N", "3", "--strict"}, "p divides N"},
    };
    for (const auto& [flags, message] : cases) {
      std::vector<std::string> args{"bound"};
      args.insert(args.end(), flags.begin(), flags.end());
      const Run r = run(args);
      CAPTURE(message);
      CHECK(r.code == ssp::cli::kExitInvalid);
      CHECK(r.err.find(message) != std::string::npos);
    }
    CHECK(run({}).code == ssp::cli::kExitInvalid);
    CHECK(run({"frobnicate"}).code == ssp::cli::kExitInvalid);
    CHECK(run({"bound", "--p", "3"}).code == ssp::cli::kExitInvalid);
  }

  TEST_CASE("csv output") {
    const Run r = run({"bound", "--p", "3", "--alpha", "-1", "--r", "2", "--s", "0", "--N", "3", "--csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::string row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header.rfind("p,alpha,r,s,N,", 0) == 0);
    CHECK(row.find(",25920,7") != std::string::npos);
  }

  TEST_CASE("sweep") {
    const Run r = run({"sweep", "--sweep", "p=3:13", "--alpha", "-1", "--r", "1", "--s", "1", "--N", "4"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> ps;
    std::getline(lines, line);
    while (std::getline(lines, line)) ps.push_back(line.substr(0, line.find(',')));
    // -1 is a square mod 5 and mod 13.
    CHECK(ps == std::vector<std::string>{"3", "7", "11"});
    const Run j = run({"sweep", "--sweep", "N=3:6", "--alpha", "-1", "--r", "1", "--s", "1", "--p", "7", "--json"});
    CHECK(j.code == 0);
    CHECK(Json::parse(j.out)["results"]["rows"].size() == 4);
  }

  TEST_CASE("group, newton, pairing, amf") {
    const Run g = run({"group", "--family", "gusplit", "--params", "1,1,3"});
    CHECK(g.code == 0);
    CHECK(Json::parse(g.out)["results"]["order"]["value"] == "32");

    const Run e = run({"group", "--family", "gusplit", "--params", "1,1,3", "--enumerate"});
    CHECK(e.code == 0);
    CHECK(e.out.find("\"enumeration\"") != std::string::npos);

    const Run n = run({"newton", fixture("a_half_p3.json")});
    CHECK(n.code == 0);
    const Json nj = Json::parse(n.out);
    CHECK(nj["results"]["slopes_text"] == "1/2 x2");
    CHECK(nj["results"]["isoclinic"] == true);
    CHECK(nj["results"]["basic"] == true);

    const Run m = run({"newton", "--model", "superspecial", "--p", "3", "--alpha", "-1", "--r", "2", "--s", "2", "--n",
                       "2"});
    CHECK(m.code == 0);
    CHECK(Json::parse(m.out)["results"]["slopes_text"] == "1/2 x8");

    const Run pr = run({"pairing", "--model", "superspecial", "--p", "3", "--alpha", "-1", "--r", "1", "--s", "1",
                        "--n", "2", "--aut", "--dual"});
    CHECK(pr.code == 0);
    CHECK(pr.out.find("\"32\"") != std::string::npos);

    const Run a = run({"amf", fixture("regular_gusplit_1_1_3.json"), fixture("trivial_rep_5gens.json")});
    CHECK(a.code == 0);
    CHECK(Json::parse(a.out)["results"]["dimension"]["value"] == "1");
  }

  TEST_CASE("precision and budget exit codes") {
    CHECK(run({"newton", fixture("a_half_p3_n1.json")}).code == ssp::cli::kExitPrecision);
    CHECK(run({"newton", fixture("does_not_exist.json")}).code == ssp::cli::kExitInvalid);
    {
      EnvGuard guard("SSP_MAX_ENUM", "10");
      CHECK(run({"group", "--family", "gusplit", "--params", "1,1,3", "--enumerate"}).code == ssp::cli::kExitBudget);
    }
    CHECK(run({"group", "--family", "gusplit", "--params", "1,1,3", "--enumerate"}).code == 0);
  }

  TEST_CASE("verify") {
    const Run q = run({"verify", "--level", "quick"});
    CHECK(q.code == 0);
    CHECK(q.out.find("gsp-order-vs-enumeration(1,3)") != std::string::npos);
    CHECK(run({"verify", "--level", "medium"}).code == ssp::cli::kExitInvalid);
  }

  TEST_CASE("every number carries a provenance label") {
    const std::vector<std::vector<std::string>> commands = {
        {"bound", "--p", "3", "--alpha", "-1", "--r", "1", "--s", "1", "--N", "3"},
        {"group", "--family", "gsp", "--params", "2,3", "--enumerate"},
        {"group", "--family", "su", "--params", "2,3", "--enumerate"},
        {"newton", fixture("a_half_p3.json")},
        {"pairing", fixture("a_half_p3.json"), "--aut", "--dual"},
        {"amf", fixture("regular_gusplit_1_1_3.json"), fixture("trivial_rep_5gens.json")},
        {"sweep", "--sweep", "p=3:11", "--alpha", "-1", "--r", "1", "--s", "1", "--N", "4", "--json"},
        {"verify", "--level", "quick"},
    };
    for (const auto& args : commands) {
      const Run r = run(args);
      CAPTURE(args[0]);
      REQUIRE(r.code == 0);
      std::string where;
      const bool labeled = all_labeled(Json::parse(r.out)["results"], where);
      CAPTURE(where);
      CHECK(labeled);
    }
  }

  TEST_CASE("output is deterministic and round-trips") {
    const std::vector<std::string> args{"bound", "--p", "7", "--alpha", "-1", "--r", "2", "--s", "2", "--N", "12"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.out == b.out);
    const auto report = ssp::cli::report_from_json(Json::parse(a.out));
    CHECK(ssp::cli::serialize(report) == a.out);
    CHECK(ssp::cli::report_from_json(ssp::cli::report_to_json(report)) == report);
    CHECK_THROWS_AS(ssp::cli::report_from_json(Json::parse("{\"command\": 3}")), ssp::cli::InputError);
  }

  TEST_CASE("json input round trips") {
    const auto m = ssp::cli::module_from_json(ssp::cli::read_json_file(fixture("a_half_p3.json")));
    CHECK(ssp::cli::module_to_json(ssp::cli::module_from_json(ssp::cli::module_to_json(m))) ==
          ssp::cli::module_to_json(m));
    const auto space = ssp::cli::coset_space_from_json(ssp::cli::read_json_file(fixture("regular_gusplit_1_1_3.json")));
    CHECK(space.points == 32);
    CHECK(ssp::cli::coset_space_to_json(ssp::cli::coset_space_from_json(ssp::cli::coset_space_to_json(space))) ==
          ssp::cli::coset_space_to_json(space));
    const auto rho = ssp::cli::representation_from_json(ssp::cli::read_json_file(fixture("trivial_rep_5gens.json")));
    CHECK(rho.dim == 1);
    CHECK(rho.generators.size() == 5);
    CHECK_THROWS_AS(ssp::cli::coset_space_from_json(Json::parse("{\"points\": 2, \"generators\": [{\"name\": \"a\", "
                                                                 "\"perm\": [0, 0]}]}")),
                    ssp::ValidationError);
  }
}
