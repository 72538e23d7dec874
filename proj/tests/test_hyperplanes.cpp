#include <doctest.h>

#include <algorithm>
#include <set>

#include "sigma1/errors.hpp"
#include "sigma1/hyperplanes.hpp"

using namespace sigma1;

TEST_CASE("level-1 classes over F_2, d = 1") {
  const Params par = Params::make(2, 1, 1, 1);
  const ResidueRing R = ResidueRing::make(par, 1);
  const auto classes = enumerate_hyperplanes(par, R);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].a == std::vector<ResidueRing::Elem>{0, 1});
  CHECK(classes[1].a == std::vector<ResidueRing::Elem>{1, 0});
  CHECK(classes[2].a == std::vector<ResidueRing::Elem>{1, 1});
}

TEST_CASE("canonical form scales the first unit to 1") {
  const Params par = Params::make(2, 1, 1, 1);
  const ResidueRing R = ResidueRing::make(par, 2);  // Z/4
  HyperplaneClass H = canonicalize(R, UnimodularVector{2, {2, 3}});
  CHECK(H.a == std::vector<ResidueRing::Elem>{2, 1});
  CHECK_THROWS_AS((void)canonicalize(R, UnimodularVector{2, {0, 2}}), NotUnimodular);
  CHECK_THROWS_AS((void)canonicalize(R, UnimodularVector{1, {0, 1}}), LevelMismatch);
  // canonical forms are fixed points
  HyperplaneClass H2 = canonicalize(R, UnimodularVector{2, H.a});
  CHECK(H2 == H);
}

TEST_CASE("counts match the closed form and brute force") {
  for (auto [p, f, d] : {std::tuple<int64_t, int64_t, int64_t>{3, 1, 1},
                         {2, 1, 2},
                         {2, 2, 1}}) {
    const Params par = Params::make(p, f, 1, d);
    for (int64_t n = 1; n <= 2; ++n) {
      const ResidueRing R = ResidueRing::make(par, n);
      const auto classes = enumerate_hyperplanes(par, R);
      CHECK(static_cast<int64_t>(classes.size()) == hyperplane_count(par, n));
      CHECK(std::is_sorted(classes.begin(), classes.end()));

      std::set<HyperplaneClass> seen;
      std::vector<ResidueRing::Elem> v(static_cast<size_t>(d + 1), 0);
      const int64_t total = [&] {
        int64_t t = 1;
        for (int64_t i = 0; i <= d; ++i) t *= R.size();
        return t;
      }();
      for (int64_t code = 0; code < total; ++code) {
        int64_t u = code;
        bool unimodular = false;
        for (int64_t i = 0; i <= d; ++i) {
          v[static_cast<size_t>(i)] = static_cast<ResidueRing::Elem>(u % R.size());
          u /= R.size();
          unimodular = unimodular || R.is_unit(v[static_cast<size_t>(i)]);
        }
        if (unimodular) seen.insert(canonicalize(R, UnimodularVector{n, v}));
      }
      CHECK(seen.size() == classes.size());
      CHECK(std::equal(classes.begin(), classes.end(), seen.begin(), seen.end()));
    }
  }
}

TEST_CASE("reduction and fibers between levels") {
  const Params par = Params::make(2, 1, 1, 1);
  const ResidueRing R2 = ResidueRing::make(par, 2);
  const ResidueRing R1 = ResidueRing::make(par, 1);
  HyperplaneClass H2{2, {1, 2}};
  CHECK(reduce_class(R2, R1, H2).a == std::vector<ResidueRing::Elem>{1, 0});

  HyperplaneClass H1{1, {1, 0}};
  auto fib = fibers(par, R2, R1, H1);
  REQUIRE(fib.size() == 2);  // q^d
  CHECK(fib[0].a == std::vector<ResidueRing::Elem>{1, 0});
  CHECK(fib[1].a == std::vector<ResidueRing::Elem>{1, 2});

  // fibers partition the higher level
  const auto level2 = enumerate_hyperplanes(par, R2);
  size_t covered = 0;
  for (const auto& H : enumerate_hyperplanes(par, R1)) covered += fibers(par, R2, R1, H).size();
  CHECK(covered == level2.size());
}

TEST_CASE("determinant, inverse and the class action") {
  const Params par = Params::make(2, 1, 1, 1);
  const ResidueRing R = ResidueRing::make(par, 2);  // Z/4

  GLMatrix g{2, 2, {1, 2, 3, 1}};
  CHECK(gl_det(R, g) == 3);  // 1 - 6 = -5 = 3 mod 4
  GLMatrix gi = gl_inverse(R, g);
  // g * gi = identity
  for (int64_t r = 0; r < 2; ++r)
    for (int64_t c = 0; c < 2; ++c) {
      ResidueRing::Elem acc = R.zero();
      for (int64_t k = 0; k < 2; ++k) acc = R.add(acc, R.mul(g.at(r, k), gi.at(k, c)));
      CHECK(acc == (r == c ? R.one() : R.zero()));
    }

  GLMatrix sing{2, 2, {2, 0, 0, 1}};
  CHECK_THROWS_AS((void)gl_inverse(R, sing), SingularMatrix);

  // left-action law on a sample class
  Rng rng(7);
  GLMatrix a = random_gl(par, R, rng), b = random_gl(par, R, rng);
  GLMatrix ab{2, 2, {0, 0, 0, 0}};
  for (int64_t r = 0; r < 2; ++r)
    for (int64_t c = 0; c < 2; ++c) {
      ResidueRing::Elem acc = R.zero();
      for (int64_t k = 0; k < 2; ++k) acc = R.add(acc, R.mul(a.at(r, k), b.at(k, c)));
      ab.at(r, c) = acc;
    }
  HyperplaneClass H{2, {1, 2}};
  CHECK(gl_act(R, ab, H) == gl_act(R, a, gl_act(R, b, H)));
}

TEST_CASE("GL(2, F_2) acts transitively on the three classes") {
  const Params par = Params::make(2, 1, 1, 1);
  const ResidueRing R = ResidueRing::make(par, 1);
  std::set<HyperplaneClass> orbit;
  int64_t invertible = 0;
  for (uint32_t bits = 0; bits < 16; ++bits) {
    GLMatrix g{1, 2, {(bits >> 0) & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1}};
    if (!R.is_unit(gl_det(R, g))) continue;
    ++invertible;
    orbit.insert(gl_act(R, g, HyperplaneClass{1, {1, 0}}));
  }
  CHECK(invertible == 6);
  CHECK(orbit.size() == 3);
}

TEST_CASE("seeded sampling produces invertible matrices deterministically") {
  const Params par = Params::make(3, 1, 1, 1);
  const ResidueRing R = ResidueRing::make(par, 2);
  Rng rng1(42), rng2(42);
  for (int t = 0; t < 20; ++t) {
    GLMatrix g1 = random_gl(par, R, rng1);
    GLMatrix g2 = random_gl(par, R, rng2);
    CHECK(g1.m == g2.m);
    CHECK(R.is_unit(gl_det(R, g1)));
  }
}
