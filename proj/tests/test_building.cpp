#include <doctest.h>

#include <set>

#include "sigma1/building.hpp"
#include "sigma1/errors.hpp"

using namespace sigma1;

namespace {

/// Evaluate a P-form at a point of an extension field (d = 1 only: the single
/// variable x0; x1 evaluates as 1, matching the vertex chart convention).
ResidueRing::Elem eval_at(const ResidueRing& E, const PPoly& P, ResidueRing::Elem x0) {
  ResidueRing::Elem acc = E.zero();
  for (const auto& t : P.terms) {
    ResidueRing::Elem term = E.from_int(static_cast<int64_t>(t.coeff));
    for (int64_t rep = 0; rep < t.mono[0]; ++rep) term = E.mul(term, x0);
    acc = E.add(acc, term);
  }
  return acc;
}

}  // namespace

TEST_CASE("type validation") {
  const Params par = Params::make(3, 1, 1, 2);
  CHECK_THROWS_AS((void)SimplexType::make(par, {1, 1}), InvalidType);
  CHECK_THROWS_AS((void)SimplexType::make(par, {4}), InvalidType);
  CHECK_THROWS_AS((void)SimplexType::make(par, {3, 0}), InvalidType);
  SimplexType t = SimplexType::make(par, {1, 2});
  CHECK(t.k() == 1);
  CHECK(t.dvec() == std::vector<int64_t>{0, 2});
}

TEST_CASE("representative count formula") {
  const Params p31 = Params::make(3, 1, 1, 1);
  CHECK(rep_count_formula(p31, 1) == 3);   // maximal blocks: q^d
  CHECK(rep_count_formula(p31, 2) == 4);   // vertex: Nt
  const Params p22 = Params::make(2, 1, 1, 2);
  CHECK(rep_count_formula(p22, 1) == 4);
  CHECK(rep_count_formula(p22, 2) == 6);
  CHECK(rep_count_formula(p22, 3) == 7);   // vertex: Nt
}

TEST_CASE("vertex presentation lists the level-1 classes") {
  const Params par = Params::make(3, 1, 1, 1);
  SimplexPresentation S = standard_simplex(par, SimplexType::make(par, {2}));
  CHECK(S.kind == SimplexKind::Vertex);
  CHECK(S.dvec == std::vector<int64_t>{1});
  REQUIRE(S.reps.size() == 1);
  REQUIRE(S.reps[0].size() == 4);
  const ResidueRing F = ResidueRing::make(par, 1);
  // forms, in enumeration order of the classes [0,1], [1,0], [1,1], [1,2]
  CHECK(ppoly_to_string(F, S.ppolys[0][0]) == "1");
  CHECK(ppoly_to_string(F, S.ppolys[0][1]) == "x0");
  CHECK(ppoly_to_string(F, S.ppolys[0][2]) == "x0+1");
  CHECK(ppoly_to_string(F, S.ppolys[0][3]) == "x0+2");
}

TEST_CASE("product of the vertex forms is X^q - X (checked pointwise in F_9)") {
  const Params par = Params::make(3, 1, 1, 1);
  SimplexPresentation S = standard_simplex(par, SimplexType::make(par, {2}));
  const Params ext = Params::make(3, 2, 1, 1);
  const ResidueRing E = ResidueRing::make(ext, 1);  // F_9
  for (int64_t x = 0; x < E.size(); ++x) {
    const ResidueRing::Elem x0 = static_cast<ResidueRing::Elem>(x);
    ResidueRing::Elem prod = E.one();
    for (const auto& P : S.ppolys[0]) prod = E.mul(prod, eval_at(E, P, x0));
    ResidueRing::Elem want = E.sub(E.mul(E.mul(x0, x0), x0), x0);  // x^3 - x
    CHECK(prod == want);
  }
}

TEST_CASE("maximal presentation: cyclic charts and forms") {
  const Params par = Params::make(3, 1, 1, 1);
  SimplexPresentation S = standard_simplex(par, SimplexType::make(par, {1, 1}));
  CHECK(S.kind == SimplexKind::Maximal);
  CHECK(S.dvec == std::vector<int64_t>{0, 1});
  REQUIRE(S.reps.size() == 2);
  CHECK(S.reps[0].size() == 3);
  CHECK(S.reps[1].size() == 3);

  // chart 0 representatives: (1, a), tails in odometer order
  CHECK(S.reps[0][0].a == std::vector<uint32_t>{1, 0});
  CHECK(S.reps[0][2].a == std::vector<uint32_t>{1, 2});
  CHECK(S.reps[0][2].chart == 0);
  const ResidueRing F = ResidueRing::make(par, 1);
  CHECK(ppoly_to_string(F, S.ppolys[0][0]) == "1");
  CHECK(ppoly_to_string(F, S.ppolys[0][2]) == "1+2*x1");
  CHECK(ppoly_to_string(F, S.ppolys[1][1]) == "1+x0");
}

TEST_CASE("materialization lifts multiplicatively with the implicit uniformizer") {
  const Params par = Params::make(3, 1, 1, 1);
  SimplexPresentation S = standard_simplex(par, SimplexType::make(par, {1, 1}));
  const ResidueRing R2 = ResidueRing::make(par, 2);  // Z/9

  // maximal chart 0, rep (1, 2): lift = (1, pi * teich(2)) = (1, 3*8) = (1, 6)
  UnimodularVector v = materialize_rep(S, 0, 2, R2);
  CHECK(v.a == std::vector<ResidueRing::Elem>{1, 6});

  SimplexPresentation V = standard_simplex(par, SimplexType::make(par, {2}));
  // vertex class [1, 2]: plain Teichmueller lifts, no implicit pi
  UnimodularVector w = materialize_rep(V, 0, 3, R2);
  CHECK(w.a == std::vector<ResidueRing::Elem>{1, 8});
}

TEST_CASE("intermediate types carry the relation and counts only") {
  const Params par = Params::make(2, 1, 1, 2);
  SimplexPresentation S = standard_simplex(par, SimplexType::make(par, {1, 2}));
  CHECK(S.kind == SimplexKind::TypeOneD);
  CHECK(S.dvec == std::vector<int64_t>{0, 2});  // X_0 X_2 = pi
  CHECK(S.rep_counts == std::vector<int64_t>{4, 6});
  CHECK(S.reps.empty());

  SimplexPresentation G = standard_simplex(par, SimplexType::make(par, {2, 1}));
  CHECK(G.kind == SimplexKind::General);
  CHECK(G.dvec == std::vector<int64_t>{1, 2});
  CHECK(G.rep_counts == std::vector<int64_t>{6, 4});
}

TEST_CASE("maximal representatives are pairwise distinct as classes") {
  const Params par = Params::make(2, 1, 1, 2);
  SimplexPresentation S = standard_simplex(par, SimplexType::make(par, {1, 1, 1}));
  const ResidueRing R2 = ResidueRing::make(par, 2);
  std::set<HyperplaneClass> seen;
  for (size_t i = 0; i < S.reps.size(); ++i)
    for (size_t r = 0; r < S.reps[i].size(); ++r)
      seen.insert(canonicalize(R2, materialize_rep(S, static_cast<int64_t>(i),
                                                   static_cast<int64_t>(r), R2)));
  CHECK(seen.size() == 12);  // 3 charts x q^d = 4, no collisions at level 2
}
