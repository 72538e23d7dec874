#include <doctest.h>

#include "sigma1/cover_ring.hpp"
#include "sigma1/errors.hpp"
#include "sigma1/fq.hpp"
#include "sigma1/mpoly.hpp"
#include "sigma1/params.hpp"
#include "sigma1/rng.hpp"

using namespace sigma1;

namespace {

MPoly term(int nvars, std::initializer_list<uint16_t> exps, Fq::Elem c) {
  Mono m;
  size_t j = 0;
  for (uint16_t e : exps) m.e[j++] = e;
  MPoly r;
  r.nvars = nvars;
  if (c != 0) r.t.emplace_back(m, c);
  return r;
}

}  // namespace

TEST_CASE("finite field arithmetic and embeddings") {
  const Fq F4 = Fq::make(2, 2);
  CHECK(F4.size() == 4);
  CHECK(F4.mul(2, 2) == 3);       // g^2 = g + 1
  CHECK(F4.mul(2, 3) == 1);       // g * g^2 = 1
  CHECK(F4.inv(3) == 2);
  CHECK(F4.pow(2, 3) == 1);
  CHECK_THROWS_AS((void)F4.inv(0), NonUnit);
  CHECK(F4.from_int(-1) == 1);

  // mu_3 in F_4, mu_4 in F_9
  CHECK(F4.roots_of_unity(3).size() == 3);
  const Fq F9 = Fq::make(3, 2);
  auto mu4 = F9.roots_of_unity(4);
  REQUIRE(mu4.size() == 4);
  for (Fq::Elem z : mu4) CHECK(F9.pow(z, 4) == 1);
  CHECK_THROWS_AS((void)F9.roots_of_unity(5), BadParams);

  // F_3 -> F_9 is a ring embedding on codes
  const Fq F3 = Fq::make(3, 1);
  auto emb = Fq::subfield_embedding(F3, F9);
  REQUIRE(emb.size() == 3);
  CHECK(emb[0] == 0);
  CHECK(emb[1] == 1);
  for (Fq::Elem a = 0; a < 3; ++a)
    for (Fq::Elem b = 0; b < 3; ++b) {
      CHECK(emb[F3.add(a, b)] == F9.add(emb[a], emb[b]));
      CHECK(emb[F3.mul(a, b)] == F9.mul(emb[a], emb[b]));
    }
}

TEST_CASE("multivariate polynomials: order, division, multiplicity") {
  const Fq F4 = Fq::make(2, 2);
  // grlex: degree first, then leftmost exponent
  CHECK(grlex(Mono{{2, 0, 0, 0}}, Mono{{1, 1, 0, 0}}) == std::strong_ordering::greater);
  CHECK(grlex(Mono{{0, 2, 0, 0}}, Mono{{1, 0, 0, 0}}) == std::strong_ordering::greater);

  MPoly x0 = mp_var(2, 0), x1 = mp_var(2, 1);
  MPoly s = mp_add(F4, x0, x1);
  MPoly sq = mp_mul(F4, s, s);  // x0^2 + x1^2 in characteristic 2
  CHECK(sq == mp_add(F4, mp_mul(F4, x0, x0), mp_mul(F4, x1, x1)));
  auto quot = mp_exact_div(F4, sq, s);
  REQUIRE(quot.has_value());
  CHECK(*quot == s);
  CHECK_FALSE(mp_exact_div(F4, mp_add(F4, mp_mul(F4, x0, x0), mp_const(2, 1)), x1).has_value());

  MPoly a = mp_mul(F4, mp_mul(F4, x0, x0), mp_add(F4, x0, mp_const(2, 1)));
  CHECK(mp_multiplicity(F4, a, x0) == 2);
  CHECK(mp_multiplicity(F4, a, mp_add(F4, x0, mp_const(2, 1))) == 1);
  CHECK(mp_multiplicity(F4, a, x1) == 0);
  CHECK_THROWS_AS((void)mp_multiplicity(F4, mp_zero(2), x0), ZeroElement);
  CHECK(mp_to_string(F4, a, {"x0", "x1"}) == "x0^3 + x0^2");
}

TEST_CASE("exact rationals") {
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(7, 3).scaled(3) == Rat::integer(7));
  CHECK(Rat(-2, 3).to_string() == "-2/3");
  CHECK(Rat::integer(4).to_string() == "4");
  CHECK_THROWS_AS(Rat(1, 0), BadParams);
}

TEST_CASE("cover ring over F_2, d = 1: forms and graded product") {
  const CoverRing R = CoverRing::make(Params::make(2, 1, 1, 1));
  CHECK(R.Nt() == 3);
  CHECK(R.nvars == 1);
  REQUIRE(R.lforms.size() == 2);
  CHECK(R.lforms[0] == mp_var(1, 0));
  CHECK(R.lforms[1] == mp_add(R.F, mp_var(1, 0), mp_const(1, 1)));
  CHECK(R.P == mp_add(R.F, term(1, {2}, 1), term(1, {1}, 1)));
  CHECK(R.P.degree() == R.Nt() - 1);

  // fraction normalization: P / (X0 (X0+1)) = 1, and negative exponents lift
  BaseFrac one = bf_make(R, R.P, {1, 1});
  CHECK(bf_eq(one, bf_const(R, 1)));
  BaseFrac lifted = bf_make(R, mp_const(1, 1), {-1, 0});
  CHECK(lifted.num == R.lforms[0]);
  CHECK(lifted.den == std::vector<int32_t>{0, 0});

  // t * t^2 wraps to P
  CoverElement t = ce_t(R);
  CoverElement t2 = ce_mul(R, t, t);
  CHECK(ce_eq(ce_mul(R, t, t2), ce_monomial(R, 0, bf_poly(R, R.P))));
  CHECK(ce_eq(ce_pow(R, t, 3), ce_monomial(R, 0, bf_poly(R, R.P))));
}

TEST_CASE("larger points: form count matches the graded rank") {
  for (auto [p, f, d] : {std::array<int64_t, 3>{3, 1, 1}, {2, 1, 2}, {2, 2, 1}}) {
    const CoverRing R = CoverRing::make(Params::make(p, f, 1, d));
    CHECK(static_cast<int64_t>(R.lforms.size()) == R.par.Nt - 1);
    CHECK(R.P.degree() == R.par.Nt - 1);
  }
}

TEST_CASE("norm of the graded generator") {
  // Nt = 3 (even sign): N(t) = +P
  const CoverRing R2 = CoverRing::make(Params::make(2, 1, 1, 1));
  CHECK(bf_eq(ce_norm_det(R2, ce_t(R2)), bf_poly(R2, R2.P)));
  // Nt = 4 (odd sign): N(t) = -P
  const CoverRing R3 = CoverRing::make(Params::make(3, 1, 1, 1));
  CHECK(bf_eq(ce_norm_det(R3, ce_t(R3)), bf_poly(R3, mp_neg(R3.F, R3.P))));

  // constants: N(c) = c^Nt
  for (Fq::Elem c = 1; c < 4; ++c)
    CHECK(bf_eq(ce_norm_det(R2, ce_monomial(R2, 0, bf_const(R2, c))),
                bf_const(R2, R2.F.pow(c, 3))));
}

TEST_CASE("norm via determinant agrees with the conjugate product") {
  const CoverRing R = CoverRing::make(Params::make(3, 1, 1, 1));
  CHECK(bf_eq(ce_norm_conjugates(R, ce_t(R)), ce_norm_det(R, ce_t(R))));
  Rng rng(7);
  for (int it = 0; it < 6; ++it) {
    CoverElement f = ce_random(R, rng);
    CHECK(bf_eq(ce_norm_conjugates(R, f), ce_norm_det(R, f)));
  }
}

TEST_CASE("norm is multiplicative") {
  const CoverRing R = CoverRing::make(Params::make(2, 1, 1, 1));
  Rng rng(11);
  for (int it = 0; it < 5; ++it) {
    CoverElement f = ce_random(R, rng);
    CoverElement g = ce_random(R, rng);
    BaseFrac lhs = ce_norm_det(R, ce_mul(R, f, g));
    BaseFrac rhs = bf_mul(R, ce_norm_det(R, f), ce_norm_det(R, g));
    CHECK(bf_eq(lhs, rhs));
  }
}

TEST_CASE("valuations at the unit forms and at infinity") {
  const CoverRing R = CoverRing::make(Params::make(2, 1, 1, 1));
  CoverElement t = ce_t(R);

  Valuation v0 = ce_val_hyperplane(R, t, 0);
  CHECK(v0.v == Rat(1, 3));
  CHECK(v0.arg_comp == 1);
  CHECK(v0.unique);
  CHECK(ce_val_infinity(R, t).v == Rat(-2, 3));

  MPoly g = mp_mul(R.F, mp_mul(R.F, R.lforms[0], R.lforms[0]), R.lforms[1]);
  CoverElement cg = ce_monomial(R, 0, bf_poly(R, g));
  CHECK(ce_val_hyperplane(R, cg, 0).v == Rat::integer(2));
  CHECK(ce_val_hyperplane(R, cg, 1).v == Rat::integer(1));
  CHECK(ce_val_infinity(R, cg).v == Rat::integer(-3));

  // additive on this product, and the minimum stays unique
  CoverElement prod = ce_mul(R, t, cg);
  CHECK(ce_val_hyperplane(R, prod, 0).v == Rat(7, 3));
  CHECK(ce_val_infinity(R, prod).v == Rat(-11, 3));

  CHECK_THROWS_AS((void)ce_val_hyperplane(R, ce_zero(R), 0), ZeroElement);
  CHECK_THROWS_AS((void)ce_val_infinity(R, ce_zero(R)), ZeroElement);
}

TEST_CASE("valuations of the norm are Nt times the valuations upstairs") {
  const CoverRing R = CoverRing::make(Params::make(2, 1, 1, 1));
  Rng rng(23);
  for (int it = 0; it < 5; ++it) {
    CoverElement f = ce_random(R, rng);
    BaseFrac n = ce_norm_det(R, f);
    REQUIRE_FALSE(bf_is_zero(n));
    for (size_t idx = 0; idx < R.lforms.size(); ++idx) {
      int64_t base_val = mp_multiplicity(R.F, n.num, R.lforms[idx]) - n.den[idx];
      CHECK(Rat::integer(base_val) == ce_val_hyperplane(R, f, idx).v.scaled(R.Nt()));
    }
    int64_t dens = 0;
    for (int32_t e : n.den) dens += e;
    CHECK(Rat::integer(-n.num.degree() + dens) == ce_val_infinity(R, f).v.scaled(R.Nt()));
  }
}

TEST_CASE("monomial units have total valuation zero") {
  const CoverRing R = CoverRing::make(Params::make(3, 1, 1, 1));
  Rng rng(31);
  for (int it = 0; it < 10; ++it) {
    CoverElement u = ce_random_monomial_unit(R, rng);
    Rat total = ce_val_infinity(R, u).v;
    for (size_t idx = 0; idx < R.lforms.size(); ++idx)
      total = total + ce_val_hyperplane(R, u, idx).v;
    CHECK(total == Rat::integer(0));
  }
}
