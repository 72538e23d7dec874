#include <doctest.h>

#include "sigma1/errors.hpp"
#include "sigma1/symbol_unit.hpp"

using namespace sigma1;

namespace {

SimplexPresentation maximal(const Params& par) {
  return standard_simplex(par,
                          SimplexType::make(par, std::vector<int64_t>(par.d + 1, 1)));
}

}  // namespace

TEST_CASE("symbol ids and names") {
  CHECK(symbol_name(x_symbol(2)) == "x2");
  CHECK(symbol_name(p_symbol(1, 3)) == "P[1][3]");
  CHECK(is_x_symbol(x_symbol(0)));
  CHECK_FALSE(is_x_symbol(p_symbol(0, 0)));
  CHECK(p_symbol_chart(p_symbol(2, 5)) == 2);
  CHECK(p_symbol_rep(p_symbol(2, 5)) == 5);
}

TEST_CASE("formal unit arithmetic") {
  SymbolUnit a = SymbolUnit::symbol(x_symbol(0), 3).mul(SymbolUnit::pi_power(2));
  SymbolUnit b = SymbolUnit::symbol(x_symbol(0), -1).mul(SymbolUnit::symbol(x_symbol(1)));
  SymbolUnit c = a.mul(b);
  CHECK(c.pi_exp == 2);
  CHECK(c.exponent(x_symbol(0)) == 2);
  CHECK(c.exponent(x_symbol(1)) == 1);
  CHECK(a.mul(a.inverse()).is_one());
  CHECK(a.pow(4).exponent(x_symbol(0)) == 12);
  CHECK(a.pow(-1).pi_exp == -2);
  CHECK(a.div(a).is_one());

  SymbolUnit r = SymbolUnit::symbol(x_symbol(0), 6).mul(SymbolUnit::pi_power(3));
  CHECK(r.divisible_by(3));
  CHECK_FALSE(r.divisible_by(4));
  SymbolUnit rt = r.root(3);
  CHECK(rt.pi_exp == 1);
  CHECK(rt.exponent(x_symbol(0)) == 2);
  CHECK_THROWS_AS((void)r.root(4), Error);
  CHECK(r.congruent_mod(SymbolUnit::pi_power(3), 6));
  CHECK_FALSE(r.congruent_mod(SymbolUnit::one(), 6));
}

TEST_CASE("the canonical unit family over F_2, d = 1") {
  const Params par = Params::make(2, 1, 1, 1);
  SimplexPresentation S = maximal(par);
  auto u = ui_family(S);
  REQUIRE(u.size() == 2);

  // u_0 = (P[0][0] P[0][1]) / (P[1][0] P[1][1]), u_1 = u_0^{-1}
  for (int64_t r = 0; r < 2; ++r) {
    CHECK(u[0].exponent(p_symbol(0, r)) == 1);
    CHECK(u[0].exponent(p_symbol(1, r)) == -1);
  }
  CHECK(u[0].pi_exp == 0);
  CHECK(u[1] == u[0].inverse());
  CHECK(u[0].mul(u[1]).is_one());

  SimplexPresentation V = standard_simplex(par, SimplexType::make(par, {2}));
  CHECK_THROWS_AS((void)ui_family(V), NotMaximal);
}

TEST_CASE("V and Vt on explicit families (q = 3, d = 1)") {
  const Params par = Params::make(3, 1, 1, 1);
  std::vector<SymbolUnit> v = {SymbolUnit::symbol(x_symbol(0)), SymbolUnit::symbol(x_symbol(1))};
  SymbolUnit V = V_invariant(par, v);
  CHECK(V.exponent(x_symbol(0)) == 1);  // v_0
  CHECK(V.exponent(x_symbol(1)) == 3);  // v_1^q

  std::vector<SymbolUnit> ones = {SymbolUnit::one(), SymbolUnit::one()};
  SymbolUnit Vt = Vtilde_invariant(par, ones);
  CHECK(Vt.exponent(x_symbol(0)) == 2);  // q - 1
  CHECK(Vt.exponent(x_symbol(1)) == 0);
  CHECK(Vt.pi_exp == 0);

  CHECK_THROWS_AS((void)V_invariant(par, {SymbolUnit::one()}), BadParams);
}

TEST_CASE("twists are equivalent with verified witnesses; perturbations are not") {
  const Params par = Params::make(2, 1, 1, 1);
  SimplexPresentation S = maximal(par);
  XpidPresentation X = xpid_presentation(par, S);
  RaynaudDatum D1{X.coeffs};

  std::vector<SymbolUnit> w = {
      SymbolUnit::symbol(x_symbol(0)),
      SymbolUnit::pi_power(2).mul(SymbolUnit::symbol(p_symbol(0, 1), -1))};
  RaynaudDatum D2 = twist(par, D1, w);
  CHECK(equivalent(par, D1, D2));
  auto wit = equivalence_witness(par, D1, D2);
  REQUIRE(wit.has_value());
  for (size_t i = 0; i < 2; ++i) {
    SymbolUnit rebuilt = D1.v[i].mul((*wit)[i].pow(par.q)).div((*wit)[(i + 1) % 2]);
    CHECK(rebuilt == D2.v[i]);
  }

  RaynaudDatum D3 = D2;
  D3.v[0] = D3.v[0].mul(SymbolUnit::symbol(x_symbol(0), 1));  // 1 != 0 mod N = 3
  CHECK_FALSE(equivalent(par, D1, D3));
  CHECK_FALSE(equivalence_witness(par, D1, D3).has_value());
}

TEST_CASE("covering chart: coefficients, elimination, global section") {
  const Params par = Params::make(2, 1, 1, 1);
  SimplexPresentation S = maximal(par);
  XpidPresentation X = xpid_presentation(par, S);
  REQUIRE(X.coeffs.size() == 2);
  CHECK(X.coeffs[0] == X.u[0].mul(SymbolUnit::symbol(x_symbol(1))));
  CHECK(X.coeffs[1] == X.u[1].mul(SymbolUnit::symbol(x_symbol(0))));
  CHECK(X.composite_exponent == 4);
  CHECK(verify_xpid_composite(par, X));
  CHECK(verify_global_section(par, X));
}

TEST_CASE("generic fiber aggregation over F_2, d = 1") {
  const Params par = Params::make(2, 1, 1, 1);
  SimplexPresentation S = maximal(par);
  SymbolUnit lhs = genericfiber_class(par, S);
  CHECK(lhs.pi_exp == 1);
  // per point: q(q-1) = 2 on its P; charts contribute q(q-1) q^i |R_i| to x_j
  CHECK(lhs.exponent(x_symbol(0)) == 4);  // i = 0 only: 2 * 1 * 2
  CHECK(lhs.exponent(x_symbol(1)) == 0);
  for (int64_t r = 0; r < 2; ++r) {
    CHECK(lhs.exponent(p_symbol(0, r)) == 2);
    CHECK(lhs.exponent(p_symbol(1, r)) == 4);
  }

  const ResidueRing ring2 = ResidueRing::make(par, 2);
  CHECK(genericfiber_bijection_ok(par, S, ring2));
  LemeqReport rep = verify_lemeqsigsig(par, S, ring2);
  CHECK(rep.ok);
  CHECK(rep.bijection_ok);
  CHECK(rep.x_exponents_ok);
}

TEST_CASE("generic fiber congruence at q = 3") {
  const Params par = Params::make(3, 1, 1, 1);
  SimplexPresentation S = maximal(par);
  LemeqReport rep = verify_lemeqsigsig(par, S, ResidueRing::make(par, 2));
  CHECK(rep.ok);
  CHECK(rep.bijection_ok);
  CHECK(rep.x_exponents_ok);
  CHECK(rep.lhs.pi_exp == 1);
}

TEST_CASE("restriction to the vertex") {
  const Params par = Params::make(2, 1, 1, 1);
  SimplexPresentation S = maximal(par);
  const ResidueRing ring1 = ResidueRing::make(par, 1);
  const HyperplaneClass e0{1, {1, 0}}, e1{1, {0, 1}}, e01{1, {1, 1}};

  UnitClass rx0 = restrict_to_vertex(par, S, SymbolUnit::symbol(x_symbol(0)), ring1);
  CHECK(rx0.pi_exp == 0);
  CHECK(rx0.div.coeff(e0) == 1);
  CHECK(rx0.div.coeff(e1) == -1);
  CHECK(rx0.div.degree() == 0);

  UnitClass rx1 = restrict_to_vertex(par, S, SymbolUnit::symbol(x_symbol(1)), ring1);
  CHECK(rx1.pi_exp == 1);
  CHECK(rx1.div.coeff(e1) == 1);
  CHECK(rx1.div.coeff(e0) == -1);

  // chart-1 representative (1, 1): reduced class [1,1], based at [0,1] = e_1
  UnitClass rp = restrict_to_vertex(par, S, SymbolUnit::symbol(p_symbol(1, 1)), ring1);
  CHECK(rp.div.coeff(e01) == 1);
  CHECK(rp.div.coeff(e1) == -1);
  // chart-1 representative (0, 1) restricts to the trivial unit
  UnitClass rp0 = restrict_to_vertex(par, S, SymbolUnit::symbol(p_symbol(1, 0)), ring1);
  CHECK(rp0.div.degree() == 0);
  CHECK(rp0.div.eq(DivisorVector{1, 0, {}}));

  CHECK(vertex_consistency_check(par, S, ring1));
  const Params par3 = Params::make(3, 1, 1, 1);
  CHECK(vertex_consistency_check(par3, maximal(par3), ResidueRing::make(par3, 1)));
}
