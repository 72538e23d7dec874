#include <doctest.h>

#include "sigma1/json_io.hpp"

using namespace sigma1;

TEST_CASE("integers serialize as decimal strings") {
  CHECK(dec(-5) == "-5");
  CHECK(dec(0) == "0");
  CHECK(dec(1234567890123) == "1234567890123");
}

TEST_CASE("parameter block keeps a fixed key order") {
  const Params par = Params::make(2, 1, 1, 1);
  CHECK(json_of(par).dump() ==
        R"({"p":"2","f":"1","e":"1","d":"1","q":"2","N":"3","Nt":"3"})");
}

TEST_CASE("hyperplane classes and divisor vectors") {
  HyperplaneClass H{1, {1, 0}};
  CHECK(json_of(H).dump() == R"({"level":"1","a":["1","0"]})");

  DivisorVector D{1, 3, {{H, 2}, {HyperplaneClass{1, {0, 1}}, 0}}};
  ordered_json j = json_of(D);
  CHECK(j["modulus"] == "3");
  REQUIRE(j["coeffs"].size() == 1);  // zero entries are dropped
  CHECK(j["coeffs"][0]["exp"] == "2");
  CHECK(j["coeffs"][0]["class"]["a"][0] == "1");
}

TEST_CASE("formal units list symbols by id") {
  SymbolUnit u = SymbolUnit::pi_power(1).mul(SymbolUnit::symbol(x_symbol(0), 2));
  CHECK(json_of(u).dump() ==
        R"({"pi_exp":"1","exponents":[{"symbol":"x0","exp":"2"}]})");
}

TEST_CASE("rationals and valuations") {
  CHECK(json_of(Rat(-2, 3)).dump() == R"({"num":"-2","den":"3"})");
  Valuation v;
  v.v = Rat(1, 3);
  v.arg_comp = 1;
  v.unique = true;
  CHECK(json_of(v).dump() == R"({"v":{"num":"1","den":"3"},"arg_comp":"1","unique":true})");
}

TEST_CASE("dumps are deterministic") {
  const Params par = Params::make(3, 1, 1, 1);
  SimplexPresentation S =
      standard_simplex(par, SimplexType::make(par, std::vector<int64_t>(par.d + 1, 1)));
  XpidPresentation X = xpid_presentation(par, S);
  std::string once = json_of(par, X).dump(2);
  std::string twice = json_of(par, X).dump(2);
  CHECK(once == twice);
  CHECK(json_of(par, S)["kind"] == "maximal");
  CHECK(json_of(par, S)["reps"][0][0]["form"] == "1");
}
