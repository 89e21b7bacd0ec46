#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = symclass::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

} // namespace

TEST_CASE("clips") {
  const Result r = run({"clips", "O", "O"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 Z2 Z3 Z4 D2 D3 D4 O\n");
  CHECK(r.err.empty());
  CHECK(run({"clips", "I", "O", "--table", "published"}).out == "1 Z2 Z3 D3 T\n");
  CHECK(run({"clips", "I", "O"}).out == "1 Z2 Z3 D2 D3 T\n");
  const auto j = nlohmann::json::parse(run({"--json", "clips", "Z6", "Z4"}).out);
  CHECK(j["classes"] == nlohmann::json::array({"1", "Z2"}));
  CHECK(j["pair"] == nlohmann::json::array({"Z6", "Z4"}));
}

TEST_CASE("classes") {
  const Result r = run({"classes", "Ela", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 8);
  CHECK(j["even_harmonic"] == true);
  CHECK(j["closed_form"] == "S");
  CHECK(j["order"] == 4);

  const Result sgr = run({"classes", "S2(Sym(2)*Sym(2))"});
  CHECK(sgr.code == 0);
  CHECK(sgr.out.find("count          21\n") != std::string::npos);
  CHECK(sgr.out.find("closed form    G") != std::string::npos);
}

TEST_CASE("decompose, irreducible and presets") {
  CHECK(run({"decompose", "Photo", "--json"}).out == "{\"0\":2,\"1\":1,\"2\":3,\"3\":1,\"4\":1}\n");
  const Result d = run({"decompose", "S2(Sym(2))"});
  CHECK(starts_with(d.out, "S2(Sym(2)) = 2H0 + 2H2 + H4\n"));
  CHECK(d.out.find("dimension 21") != std::string::npos);
  CHECK(run({"irreducible", "2"}).out == "D2 O(2) SO(3)\n");
  const auto irr = nlohmann::json::parse(run({"irreducible", "4", "--json"}).out);
  CHECK(irr["count"] == 8);

  const Result p = run({"presets"});
  CHECK(p.code == 0);
  CHECK(p.out.find("Sgr") != std::string::npos);
  const auto list = nlohmann::json::parse(run({"presets", "--json"}).out);
  REQUIRE(list.size() == 6);
  CHECK(list[0]["name"] == "Ela");
  CHECK(list[0]["dimension"] == 21);
  CHECK(list[5]["count"] == 21);
  CHECK(list[5]["expansion"] == "S2(Sym(2)*Sym(2))");
}

TEST_CASE("verify-table") {
  const Result ok = run({"verify-table", "--max-n", "3", "--trials", "20", "--seed", "4"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("0 violations, 0 unrealized") != std::string::npos);
  const Result bad = run({"verify-table", "--max-n", "3", "--trials", "20", "--table", "published"});
  CHECK(bad.code == 2);
  CHECK(starts_with(bad.err, "error: oracle:"));
  const auto j = nlohmann::json::parse(run({"verify-table", "--max-n", "2", "--json"}).out);
  CHECK(j["pairs"][0]["pair"] == nlohmann::json::array({"1", "1"}));
  CHECK(j["trials"] == 200);
}

TEST_CASE("errors") {
  const Result parse = run({"classes", "H(2)+2*V"});
  CHECK(parse.code == 1);
  CHECK(starts_with(parse.err, "error: parse:"));
  CHECK(parse.err.find("offset 5") != std::string::npos);
  CHECK(parse.out.empty());

  const Result odd = run({"classes", "V"});
  CHECK(odd.code == 1);
  CHECK(starts_with(odd.err, "error: domain:"));

  CHECK(starts_with(run({"clips", "Q", "O"}).err, "error: parse:"));
  CHECK(run({"clips", "Z0", "O"}).code == 1);
  CHECK(starts_with(run({"irreducible", "-1"}).err, "error:"));
  CHECK(run({"verify-table", "--max-n", "1"}).code == 1);
  CHECK(run({"clips", "O", "O", "--table", "x"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"clips", "O"}).code == 1);
}

TEST_CASE("help mentions quoting") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Quote") != std::string::npos);
}

TEST_CASE("output is deterministic and JSON round-trips") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"classes", "Sgr", "--json"}, {"decompose", "Fgr", "--json"},
        {"clips", "D4", "D6", "--json"}, {"presets", "--json"},
        {"verify-table", "--max-n", "3", "--trials", "10", "--seed", "7", "--json"}}) {
    const Result a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto parsed = nlohmann::ordered_json::parse(a.out);
    CHECK(parsed.dump() + "\n" == a.out);
  }
}
