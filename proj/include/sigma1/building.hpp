/**
 * @file building.hpp
 * @brief Standard simplices of the Bruhat-Tits building and their explicit
 *        coordinate presentations.
 *
 * A simplex of the building is pinned, up to the GL action, by its type: a
 * composition (e_0, ..., e_k) of d+1 into positive blocks, with block ends
 * d_i = e_0 + ... + e_i - 1.  The associated formal-scheme chart is
 *
 *     O_K[X_0, ..., X_d, 1/P_sigma] / (X_{d_0} X_{d_1} ... X_{d_k} - pi)
 *
 * where P_sigma is the product of the linear forms P_a attached to a system
 * of representatives R_i of the hyperplane reductions adapted to the flag.
 *
 * Explicit coordinates are constructed for the three cases used downstream:
 *
 *  - vertex, type (d+1): X_j = z_j / z_d for j < d and X_d = pi.  R_0 is the
 *    set of canonical unimodular lifts of the level-1 classes, and
 *    P_a = a_0 X_0 + ... + a_{d-1} X_{d-1} + a_d.
 *  - maximal, type (1,...,1): x_j = z_j / z_{j+1} for j < d and
 *    x_d = pi z_d / z_0 (so x_0 x_1 ... x_d = pi).  R_i consists of the
 *    lifts (a_0, ..., a_{i-1}, 1, pi a_{i+1}, ..., pi a_d), and
 *    P_a = 1 + sum_{j=1}^{d} a_{i-j} x_{i-1} x_{i-2} ... x_{i-j} with all
 *    indices cyclic mod d+1.
 *  - type (1, d): X_j = z_j / z_d for j < d, X_d = pi z_d / z_0, relation
 *    X_0 X_d = pi; the P_a are not expanded.
 *
 * General types get the relation and the representative counts
 * |R_i| = (q^{e_i} - 1) q^{d+1-e_i} / (q-1) only.
 *
 * Entries of representatives are residue-field codes standing for their
 * Teichmueller lifts; materialize_rep() produces honest ring vectors at any
 * level.
 */
#ifndef SIGMA1_BUILDING_HPP
#define SIGMA1_BUILDING_HPP

#include <vector>

#include "sigma1/hyperplanes.hpp"

namespace sigma1 {

enum class SimplexKind { Vertex, Maximal, TypeOneD, General };

struct SimplexType {
  std::vector<int64_t> e;

  /// Validates positivity and sum = d+1 (InvalidType otherwise).
  static SimplexType make(const Params& par, std::vector<int64_t> blocks);

  int64_t k() const { return static_cast<int64_t>(e.size()) - 1; }
  /// Block ends d_i = e_0 + ... + e_i - 1.
  std::vector<int64_t> dvec() const;
};

/**
 * One representative of R_i.  `a` holds d+1 residue-field codes whose
 * Teichmueller lifts form the vector; for the maximal simplex the entries
 * after position `chart` carry an implicit factor pi, and entry `chart`
 * itself is 1.  For the vertex (chart = leading-one position) the entries
 * are the canonical class coordinates, no implicit pi anywhere.
 */
struct SimplexRep {
  int64_t chart = 0;
  std::vector<uint32_t> a;
};

/// One term of a P_a: residue-field coefficient code (Teichmueller lift
/// implied) times a monomial in X_0..X_d.
struct PTerm {
  uint32_t coeff = 0;
  std::vector<int64_t> mono;  // exponent of X_j at position j
};

struct PPoly {
  std::vector<PTerm> terms;
};

struct SimplexPresentation {
  Params par;
  SimplexType type;
  SimplexKind kind = SimplexKind::General;
  std::vector<int64_t> dvec;        ///< relation: prod_i X_{dvec[i]} = pi
  std::vector<int64_t> rep_counts;  ///< |R_i| per block
  /// Explicit representatives (vertex and maximal kinds only).
  std::vector<std::vector<SimplexRep>> reps;
  /// P_a parallel to reps (vertex and maximal kinds only).
  std::vector<std::vector<PPoly>> ppolys;
};

/// Build the presentation for the given type.
SimplexPresentation standard_simplex(const Params& par, const SimplexType& type);

/// |R_i| = (q^{e_i} - 1) q^{d+1-e_i} / (q-1).
int64_t rep_count_formula(const Params& par, int64_t block_size);

/// Teichmueller-lift the representative into the given ring (any level).
UnimodularVector materialize_rep(const SimplexPresentation& S, int64_t block, int64_t rep_index,
                                 const ResidueRing& R);

/// Render P_a as a display string ("1+ax0+...").
std::string ppoly_to_string(const ResidueRing& residue_field, const PPoly& P);

}  // namespace sigma1

#endif  // SIGMA1_BUILDING_HPP
