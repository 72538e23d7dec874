/**
 * @file hyperplanes.hpp
 * @brief Rational hyperplane classes of P^d over the truncations O_K/pi^n.
 *
 * A hyperplane class at level n is a point of P^d(O_K/pi^n): a unimodular
 * vector (some coordinate a unit) up to unit scaling.  The canonical
 * representative scales the first unit coordinate to 1; coordinates before it
 * are then non-units, and two vectors span the same class iff their canonical
 * forms agree coordinatewise.
 *
 * The module provides enumeration (sorted, deterministic), level reduction
 * and its fibers, and the GL_{d+1}(O_K/pi^n) action with seeded sampling of
 * group elements.  Cardinality at level n is Nt * q^{(n-1)d}, verified by the
 * tests against both the constructive enumeration and a brute-force
 * canonicalize-and-deduplicate oracle.
 */
#ifndef SIGMA1_HYPERPLANES_HPP
#define SIGMA1_HYPERPLANES_HPP

#include <vector>

#include "sigma1/residue_ring.hpp"
#include "sigma1/rng.hpp"

namespace sigma1 {

/// A (d+1)-tuple over O_K/pi^n, not necessarily unimodular or canonical.
struct UnimodularVector {
  int64_t level = 0;
  std::vector<ResidueRing::Elem> a;

  bool operator==(const UnimodularVector&) const = default;
};

/// Canonical representative of a point of P^d(O_K/pi^n).  Only produced by
/// canonicalize()/enumerate_hyperplanes(), so comparing the coordinate tuples
/// compares the underlying classes.
struct HyperplaneClass {
  int64_t level = 0;
  std::vector<ResidueRing::Elem> a;

  auto operator<=>(const HyperplaneClass&) const = default;
};

/// Scale so the first unit coordinate becomes 1.  Throws NotUnimodular when
/// no coordinate is a unit, LevelMismatch when the vector and ring disagree.
HyperplaneClass canonicalize(const ResidueRing& R, const UnimodularVector& v);

/// All classes at the ring's level, sorted by coordinate codes.
std::vector<HyperplaneClass> enumerate_hyperplanes(const Params& par, const ResidueRing& R);

/// Nt * q^{(n-1)d}: the closed-form class count (cross-checked by tests).
int64_t hyperplane_count(const Params& par, int64_t level);

/// Coordinatewise reduction to a lower level, recanonicalized.
HyperplaneClass reduce_class(const ResidueRing& from, const ResidueRing& to,
                             const HyperplaneClass& H);

/// All classes of `from`'s level lying over H (which lives at `to`'s level).
/// Fiber size is q^{d * (level difference)}.
std::vector<HyperplaneClass> fibers(const Params& par, const ResidueRing& from,
                                    const ResidueRing& to, const HyperplaneClass& H);

/// Square matrix over O_K/pi^n, row-major, dimension (d+1).
struct GLMatrix {
  int64_t level = 0;
  int64_t dim = 0;
  std::vector<ResidueRing::Elem> m;  // dim * dim entries

  ResidueRing::Elem at(int64_t r, int64_t c) const { return m[r * dim + c]; }
  ResidueRing::Elem& at(int64_t r, int64_t c) { return m[r * dim + c]; }
};

/// Determinant by Laplace expansion (dim <= 4 in practice).
ResidueRing::Elem gl_det(const ResidueRing& R, const GLMatrix& g);

/// Inverse via adjugate / det.  Throws SingularMatrix when det is a non-unit.
GLMatrix gl_inverse(const ResidueRing& R, const GLMatrix& g);

/// Action on hyperplane classes: the coordinate row vector maps to a * g^{-1}
/// (so hyperplanes transform contragradiently to points).  Left action:
/// gl_act(g*h, H) = gl_act(g, gl_act(h, H)).
HyperplaneClass gl_act(const ResidueRing& R, const GLMatrix& g, const HyperplaneClass& H);

/// Seeded rejection sampling of matrices with unit determinant.
GLMatrix random_gl(const Params& par, const ResidueRing& R, Rng& rng);

}  // namespace sigma1

#endif  // SIGMA1_HYPERPLANES_HPP
