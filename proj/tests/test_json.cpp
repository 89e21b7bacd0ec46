#include <doctest.h>

#include "symclass/error.hpp"
#include "symclass/json_io.hpp"

using namespace symclass;
using S = SubgroupClass;

TEST_CASE("isotypic JSON") {
  const Isotypic a{{0, 2}, {2, 2}, {4, 1}, {10, 3}};
  const Json j = to_json(a);
  CHECK(j.dump() == "{\"0\":2,\"2\":2,\"4\":1,\"10\":3}");
  CHECK(isotypic_from_json(j) == a);
  CHECK(isotypic_from_json(Json::parse(j.dump())) == a);
  CHECK(to_json(Isotypic{}).dump() == "{}");
  CHECK_THROWS_AS(isotypic_from_json(Json::parse("{\"x\":1}")), DomainError);
  CHECK_THROWS_AS(isotypic_from_json(Json::parse("{\"-1\":1}")), DomainError);
  CHECK_THROWS_AS(isotypic_from_json(Json::parse("{\"1\":-1}")), DomainError);
  CHECK_THROWS_AS(isotypic_from_json(Json::parse("[1]")), DomainError);
}

TEST_CASE("class set JSON") {
  const ClassSet s{S::so3(), S::identity(), S::dihedral(12), S::o2(), S::cyclic(3)};
  const Json j = to_json(s);
  CHECK(j.dump() == R"j(["1","Z3","D12","O(2)","SO(3)"])j");
  CHECK(class_set_from_json(j) == s);
  CHECK_THROWS_AS(class_set_from_json(Json::parse("[1]")), DomainError);
  CHECK_THROWS_AS(class_set_from_json(Json::parse("[\"X\"]")), ParseError);
}

TEST_CASE("report JSON") {
  const Json ela = to_json(classify_space(parse_space("S2(Sym(2))")));
  CHECK(ela.dump() ==
        R"j({"expr":"S2(Sym(2))","isotypic":{"0":2,"2":2,"4":1},"order":4,)j"
        R"j("classes":["1","Z2","D2","D3","D4","O","O(2)","SO(3)"],"count":8,"even_harmonic":true,"closed_form":"S"})j");
  CHECK(Json::parse(ela.dump()) == ela);
  CHECK(to_json(classify_space(parse_space("Ces")))["closed_form"] == "G");
  CHECK(to_json(classify_space(parse_space("H(6)")))["closed_form"].is_null());

  const TableReport r = verify_table(2, 5, 3);
  const Json t = to_json(r);
  CHECK(t["pairs"].size() == r.pairs.size());
  CHECK(t["violation_count"] == 0);
  const Json first = t["pairs"][0];
  CHECK(first["pair"] == Json::array({"1", "1"}));
  CHECK(first["expected"] == Json::array({"1"}));
  CHECK(first["missing"].empty());
  CHECK(Json::parse(t.dump()) == t);
}
