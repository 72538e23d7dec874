#include <doctest.h>

#include "sigma1/divisor.hpp"
#include "sigma1/errors.hpp"

using namespace sigma1;

namespace {

DivisorVector basis(int64_t level, int64_t modulus, const HyperplaneClass& H, int64_t c) {
  DivisorVector D;
  D.level = level;
  D.modulus = modulus;
  D.c[H] = c;
  return D;
}

}  // namespace

TEST_CASE("divisor vectors: exact coefficients, modular comparison") {
  const Params par = Params::make(3, 1, 1, 1);
  const ResidueRing R = ResidueRing::make(par, 1);
  const auto classes = enumerate_hyperplanes(par, R);
  REQUIRE(classes.size() == 4);

  DivisorVector A = basis(1, 4, classes[0], 3).mul(basis(1, 4, classes[1], 2));
  DivisorVector B = basis(1, 4, classes[0], 7).mul(basis(1, 4, classes[1], -2));
  CHECK(A.eq(B));  // 3 = 7 and 2 = -2 mod 4
  CHECK_FALSE(A.eq(basis(1, 4, classes[0], 3)));
  CHECK(A.coeff(classes[0]) == 3);
  CHECK(A.coeff(classes[2]) == 0);
  CHECK(A.degree() == 5);
  CHECK_FALSE(A.degree_zero());
  CHECK(A.mul(A.inverse()).eq(DivisorVector{1, 4, {}}));
  CHECK(A.pow(2).coeff(classes[1]) == 4);

  DivisorVector other_level = basis(2, 4, HyperplaneClass{2, {1, 0}}, 1);
  CHECK_THROWS_AS((void)A.eq(other_level), LevelMismatch);
  CHECK_THROWS_AS((void)A.eq(basis(1, 8, classes[0], 3)), ModulusMismatch);
}

TEST_CASE("rescaling respects the modulus lattice") {
  const Params par = Params::make(3, 1, 1, 1);
  const ResidueRing R = ResidueRing::make(par, 1);
  const auto classes = enumerate_hyperplanes(par, R);
  DivisorVector D = basis(1, 4, classes[0], 3);

  DivisorVector E = D.scaled(2, 8);  // 2*4 = 0 mod 8: well defined
  CHECK(E.modulus == 8);
  CHECK(E.coeff(classes[0]) == 6);
  CHECK_THROWS_AS((void)D.scaled(1, 8), ModulusMismatch);

  DivisorVector I = basis(1, 0, classes[0], 3);  // integral: any rescale legal
  CHECK(I.scaled(5, 7).coeff(classes[0]) == 15);
}

TEST_CASE("canonical generator and the covering class") {
  const Params par = Params::make(3, 1, 1, 1);  // q=3, d=1: Nt=4, N=8
  const ResidueRing R1 = ResidueRing::make(par, 1);
  const ResidueRing R2 = ResidueRing::make(par, 2);

  DivisorVector g1 = canonical_generator(par, R1);
  CHECK(g1.modulus == par.Nt);
  for (const auto& H : enumerate_hyperplanes(par, R1)) CHECK(g1.coeff(H) == 1);

  DivisorVector g2 = canonical_generator(par, R2);
  for (const auto& H : enumerate_hyperplanes(par, R2)) CHECK(g2.coeff(H) == 3);

  KummerClass K = kummer_class_sigma1(par, 0, R1);
  CHECK(K.modulus == 8);
  CHECK(K.pi_exp == 1);
  CHECK(K.div.level == 1);
  CHECK(K.div.modulus == 8);
  for (const auto& H : enumerate_hyperplanes(par, R1)) CHECK(K.div.coeff(H) == 2);
  CHECK_THROWS_AS((void)kummer_class_sigma1(par, 0, R2), LevelMismatch);
}

TEST_CASE("pushforward sums over fibers") {
  const Params par = Params::make(3, 1, 1, 1);
  const ResidueRing R1 = ResidueRing::make(par, 1);
  const ResidueRing R2 = ResidueRing::make(par, 2);

  DivisorVector got = pushforward(par, R2, R1, canonical_generator(par, R2));
  // fibers have size q^d = 3, so every coefficient is 3 * 3 = 9 = 1 mod 4
  for (const auto& H : enumerate_hyperplanes(par, R1)) CHECK(floor_mod(got.coeff(H), 4) == 1);
  CHECK(got.eq(canonical_generator(par, R1)));
}

TEST_CASE("the covering class is GL-invariant (exhaustive over GL(2, F_2))") {
  const Params par = Params::make(2, 1, 1, 1);
  const ResidueRing R = ResidueRing::make(par, 1);
  KummerClass K = kummer_class_sigma1(par, 0, R);
  int64_t invertible = 0;
  for (uint32_t bits = 0; bits < 16; ++bits) {
    GLMatrix g{1, 2, {(bits >> 0) & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1}};
    if (!R.is_unit(gl_det(R, g))) continue;
    ++invertible;
    CHECK(is_invariant(par, R, K, g));
  }
  CHECK(invertible == 6);

  // a vector concentrated on one class is moved
  DivisorVector lop = basis(1, 3, enumerate_hyperplanes(par, R)[1], 1);
  GLMatrix swap{1, 2, {0, 1, 1, 0}};
  CHECK_FALSE(is_invariant(par, R, lop, swap));
}

TEST_CASE("invariance constraints solve to the cyclic group of order Nt") {
  {
    const Params par = Params::make(2, 1, 1, 1);  // N = 3, Nt = 3
    InvariantEnumeration E = invariant_class_enumeration(par, 2);
    CHECK(E.generator == std::vector<int64_t>{1, 2});
    REQUIRE(E.solutions.size() == 3);
    CHECK(E.solutions[0] == std::vector<int64_t>{0, 0});
    CHECK(E.solutions[1] == std::vector<int64_t>{1, 2});
    CHECK(E.solutions[2] == std::vector<int64_t>{2, 1});
    CHECK(E.cyclic_match);
  }
  {
    const Params par = Params::make(3, 1, 1, 1);  // N = 8, Nt = 4
    InvariantEnumeration E = invariant_class_enumeration(par, 2);
    CHECK(E.generator == std::vector<int64_t>{2, 6});
    CHECK(E.solutions.size() == 4);
    CHECK(E.cyclic_match);
  }
}

TEST_CASE("component counts of the covering") {
  const Params par = Params::make(3, 1, 1, 1);
  const ResidueRing R1 = ResidueRing::make(par, 1);
  KummerClass K = kummer_class_sigma1(par, 0, R1);
  CHECK(pi0_over_C(K) == 2);       // gcd(8, 2) = q - 1
  CHECK(pi0_over_Kbreve(K) == 1);  // pi-exponent 1 joins the gcd
}

TEST_CASE("based representative has exact degree zero") {
  const Params par = Params::make(3, 1, 1, 1);
  const ResidueRing R = ResidueRing::make(par, 1);
  const auto classes = enumerate_hyperplanes(par, R);
  DivisorVector D;
  D.level = 1;
  D.modulus = 0;
  for (const auto& H : classes) D.c[H] = 5;
  DivisorVector based = normalize_to_base(D, classes[0]);
  CHECK(based.degree() == 0);
  CHECK(based.coeff(classes[0]) == 5 - 20);
  CHECK(based.coeff(classes[1]) == 5);
}
