#include <doctest.h>

#include "sigma1/errors.hpp"
#include "sigma1/lagrange.hpp"

using namespace sigma1;

namespace {

std::vector<mpq_class> qs(std::initializer_list<long> vs) {
  std::vector<mpq_class> out;
  for (long v : vs) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials with exact coefficients") {
  CHECK(cyclotomic_polynomial(1) == qs({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == qs({1, 1}));
  CHECK(cyclotomic_polynomial(3) == qs({1, 1, 1}));
  CHECK(cyclotomic_polynomial(4) == qs({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == qs({1, -1, 1}));
}

TEST_CASE("arithmetic in Q(i)") {
  const CyclotomicField K = CyclotomicField::make(4);
  CHECK(K.degree() == 2);
  CHECK(K.eq(K.mul(K.zeta(), K.zeta()), K.neg(K.one())));
  CHECK(K.eq(K.zeta_power(4), K.one()));

  CyclotomicField::Elem a = K.add(K.one(), K.zeta());  // 1 + i
  CyclotomicField::Elem b = K.inv(a);
  CHECK(K.eq(K.mul(a, b), K.one()));
  CHECK(K.eq(K.pow(a, 2), K.mul(a, a)));
  CHECK_THROWS_AS((void)K.inv(K.zero()), NonUnit);

  // Q(zeta_1) = Q is supported (needed for q = 2)
  const CyclotomicField Q = CyclotomicField::make(1);
  CHECK(Q.degree() == 1);
  CHECK(Q.eq(Q.zeta(), Q.one()));
}

TEST_CASE("interpolation basis at small q") {
  LagrangeBasis B2 = LagrangeBasis::make(2);
  REQUIRE(B2.L.size() == 1);
  CHECK(kp_eq(B2.K, B2.L[0], kp_constant(B2.K, B2.K.one())));

  LagrangeBasis B3 = LagrangeBasis::make(3);
  REQUIRE(B3.L.size() == 2);
  // nodes 1, -1: L_0 = (1 + X)/2, L_1 = (1 - X)/2
  const CyclotomicField& K = B3.K;
  CHECK(K.eq(B3.L[0][0], K.from_rational(mpq_class(1, 2))));
  CHECK(K.eq(B3.L[0][1], K.from_rational(mpq_class(1, 2))));
  CHECK(K.eq(B3.L[1][0], K.from_rational(mpq_class(1, 2))));
  CHECK(K.eq(B3.L[1][1], K.from_rational(mpq_class(-1, 2))));
}

TEST_CASE("idempotent reports across small q") {
  for (int64_t q : {2, 3, 4, 5}) {
    IdempotentReport rep = idempotent_check(q);
    CHECK(rep.delta_ok);
    CHECK(rep.orth_ok);
    CHECK(rep.idem_ok);
    CHECK(rep.sum_ok);
    CHECK(rep.ok);
  }
}

TEST_CASE("monomial sections and the carry unit (q = 3, d = 1)") {
  const Params par = Params::make(3, 1, 1, 1);
  const ResidueRing ring1 = ResidueRing::make(par, 1);
  const ComponentRing CR = ComponentRing::make(par, ring1);

  // carry unit: degree-zero divisor with +1 off the base class and -3 at it
  const UnitClass& u = CR.carry_unit();
  CHECK(u.pi_exp == 0);
  CHECK(u.div.degree() == 0);
  CHECK(u.div.coeff(HyperplaneClass{1, {0, 1}}) == -3);
  CHECK(u.div.coeff(HyperplaneClass{1, {1, 0}}) == 1);
  CHECK(u.div.coeff(HyperplaneClass{1, {1, 2}}) == 1);

  // t^3 * t^2 = t * u, t^4 = u, and u^{-2} cancels the N = 8 carries
  MonomialSection t3 = CR.t_power(3), t2 = CR.t_power(2);
  MonomialSection prod = CR.mul(t3, t2);
  CHECK(prod.t_exp == 1);
  CHECK(prod.v.eq(u));
  MonomialSection wrap = CR.t_power(4);
  CHECK(wrap.t_exp == 0);
  CHECK(wrap.v.eq(u));
  MonomialSection back = CR.canonicalize(par.N, u.pow(-(par.q - 1)));
  CHECK(CR.eq(back, CR.one()));

  // inverse round trip, including a negative graded exponent
  MonomialSection s = CR.canonicalize(3, u.pow(2));
  CHECK(CR.eq(CR.mul(s, CR.inverse(s)), CR.one()));
  MonomialSection neg = CR.t_power(-1);
  CHECK(neg.t_exp == 3);
  CHECK(neg.v.eq(u.pow(-1)));
}

TEST_CASE("component functions multiply slotwise and invert only when full") {
  const Params par = Params::make(3, 1, 1, 1);
  const ComponentRing CR = ComponentRing::make(par, ResidueRing::make(par, 1));

  ComponentFunction f = cf_uniform(CR, CR.t_power(2));
  ComponentFunction g = cf_inverse(CR, f);
  CHECK(cf_eq(CR, cf_mul(CR, f, g), cf_one(CR)));

  ComponentFunction partial = f;
  partial.comp[1].reset();
  ComponentFunction h = cf_mul(CR, partial, cf_one(CR));
  CHECK_FALSE(h.comp[1].has_value());
  CHECK(h.comp[0].has_value());
  CHECK_FALSE(cf_eq(CR, h, f));
  CHECK_THROWS_AS((void)cf_inverse(CR, partial), NonUnit);
}
