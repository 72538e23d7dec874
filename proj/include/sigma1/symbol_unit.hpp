/**
 * @file symbol_unit.hpp
 * @brief Formal units on a maximal-simplex chart and the cyclic-cover
 *        descent data attached to them.
 *
 * On the maximal simplex the invertible functions that matter are monomials
 * in the coordinates x_0..x_d and the linear-form units P_{i,a} (a running
 * over the representative system R_i), times a power of pi, times constants
 * and 1-units.  Constants and 1-units are N-divisible on the relevant
 * covers, so a unit is tracked by its exponent vector alone: an integer for
 * pi plus a finitely supported map on the symbols.  Every identity the
 * covering theory needs then becomes an exact statement about exponent
 * vectors, either on the nose or modulo N = q^{d+1} - 1.
 *
 * Implemented here:
 *
 *  - the canonical unit family u_i = (prod_{R_{d-1-i}} P) / (prod_{d-i} P)
 *    with u_0 u_1 ... u_d = 1, and the degree-q covering presentation
 *    y_i^q = u_i x_{d-i} y_{i+1} (indices cyclic mod d+1) together with its
 *    one-variable elimination y^{q^{d+1}} = pi * (unit) * y;
 *
 *  - the twisted invariants V((v_i)) = v_0 v_d^q v_{d-1}^{q^2} ... v_1^{q^d}
 *    and Vt((v_i)) = x_0^{q-1} x_1^{q^2-1} ... x_{d-1}^{q^d-1} V((v_i));
 *
 *  - the equivalence of descent data: (v_i) ~ (v'_i) iff v'_i = v_i w_i^q /
 *    w_{i+1} for some units w_i, decided by V-ratio exponents mod N, with an
 *    explicit witness constructed by back-substitution and re-verified;
 *
 *  - the generic-fiber aggregation over P^d(O/pi^2) and its congruence with
 *    pi * Vt(u) mod N-th powers (the key identification of the two cover
 *    descriptions), including the underlying counting bijection;
 *
 *  - the restriction of symbol units to the central vertex as honest divisor
 *    vectors at level 1, used to cross-check the vertex equation class.
 */
#ifndef SIGMA1_SYMBOL_UNIT_HPP
#define SIGMA1_SYMBOL_UNIT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sigma1/building.hpp"
#include "sigma1/divisor.hpp"

namespace sigma1 {

// --- symbol ids -------------------------------------------------------------
// x_j                  -> id j               (0 <= j <= d)
// P_{i,a} (a-th of R_i) -> id P_ID_BASE + (i << P_CHART_SHIFT) + a
inline constexpr uint32_t P_ID_BASE = 16;
inline constexpr uint32_t P_CHART_SHIFT = 20;

inline uint32_t x_symbol(int64_t j) { return static_cast<uint32_t>(j); }
inline uint32_t p_symbol(int64_t chart, int64_t rep_index) {
  return P_ID_BASE + (static_cast<uint32_t>(chart) << P_CHART_SHIFT) +
         static_cast<uint32_t>(rep_index);
}
inline bool is_x_symbol(uint32_t id) { return id < P_ID_BASE; }
inline int64_t p_symbol_chart(uint32_t id) { return (id - P_ID_BASE) >> P_CHART_SHIFT; }
inline int64_t p_symbol_rep(uint32_t id) {
  return (id - P_ID_BASE) & ((uint32_t{1} << P_CHART_SHIFT) - 1);
}
std::string symbol_name(uint32_t id);

/// Multiplicatively written formal unit: pi^{pi_exp} * prod symbol^{exp}.
struct SymbolUnit {
  int64_t pi_exp = 0;
  std::map<uint32_t, int64_t> e;

  static SymbolUnit one() { return {}; }
  static SymbolUnit symbol(uint32_t id, int64_t exp = 1);
  static SymbolUnit pi_power(int64_t k) { return SymbolUnit{k, {}}; }

  SymbolUnit mul(const SymbolUnit& o) const;
  SymbolUnit div(const SymbolUnit& o) const;
  SymbolUnit inverse() const;
  SymbolUnit pow(int64_t k) const;
  int64_t exponent(uint32_t id) const;
  bool is_one() const;
  bool operator==(const SymbolUnit& o) const;

  /// All exponents (pi included) congruent mod m?
  bool congruent_mod(const SymbolUnit& o, int64_t m) const;
  /// All exponents (pi included) divisible by m?
  bool divisible_by(int64_t m) const;
  /// Exact exponent-wise division by m (all exponents must divide).
  SymbolUnit root(int64_t m) const;

  void compact();
};

/// Descent datum for the degree-q cyclic structure: d+1 units, index cyclic.
struct RaynaudDatum {
  std::vector<SymbolUnit> v;
};

/// u_i = (prod over R_{d-1-i} of P) / (prod over R_{d-i} of P), cyclic
/// indices.  Requires the maximal simplex (NotMaximal otherwise).
std::vector<SymbolUnit> ui_family(const SimplexPresentation& S);

/// V((v_i)) = v_0 * v_d^q * v_{d-1}^{q^2} * ... * v_1^{q^d}.
SymbolUnit V_invariant(const Params& par, const std::vector<SymbolUnit>& v);

/// Vt((v_i)) = x_0^{q-1} x_1^{q^2-1} ... x_{d-1}^{q^d-1} * V((v_i)).
SymbolUnit Vtilde_invariant(const Params& par, const std::vector<SymbolUnit>& v);

/// Datum twisted by a unit family: v_i -> v_i * w_i^q / w_{i+1 mod d+1}.
RaynaudDatum twist(const Params& par, const RaynaudDatum& D, const std::vector<SymbolUnit>& w);

/// Equivalence test: V-ratio of the two data has all exponents == 0 mod N.
bool equivalent(const Params& par, const RaynaudDatum& D1, const RaynaudDatum& D2);

/**
 * Witness for equivalence: units (w_0..w_d) with D2_i = D1_i w_i^q / w_{i+1}.
 * Construction: w_1 = (V-ratio)^{1/N}, then w_{i+1} = w_i^q / delta_i with
 * delta_i = D2_i / D1_i; the cyclic closure is re-verified before returning.
 * std::nullopt when the data are inequivalent.
 */
std::optional<std::vector<SymbolUnit>> equivalence_witness(const Params& par,
                                                           const RaynaudDatum& D1,
                                                           const RaynaudDatum& D2);

// --- covering presentation --------------------------------------------------

/// The cyclic covering chart over the maximal simplex:
/// relations y_i^q = coeffs[i] * y_{i+1} with coeffs[i] = u_i x_{d-i}, and
/// the one-variable elimination y_0^{q^{d+1}} = composite * y_0.
struct XpidPresentation {
  std::vector<SymbolUnit> u;       ///< the canonical family
  std::vector<SymbolUnit> coeffs;  ///< u_i * x_{d-i}
  SymbolUnit composite;            ///< prod_i coeffs[i]^{q^{d-i}}
  int64_t composite_exponent = 0;  ///< q^{d+1}
};

XpidPresentation xpid_presentation(const Params& par, const SimplexPresentation& S);

/**
 * Exact checks on the elimination:
 *  (a) V((coeffs)) equals pi * Vt((u)) after writing pi = x_0...x_d
 *      (the y_1-elimination identity, exact, no congruence);
 *  (b) the y_0 composite, after one application of x_0...x_d = pi, is
 *      pi * (product of symbols with nonnegative exponents).
 */
bool verify_xpid_composite(const Params& par, const XpidPresentation& X);

/// prod_i (u_i x_{d-i}) = pi * 1, i.e. prod u_i = 1 and prod x_i = pi: the
/// global-section relation Z^q = pi Z of the covering.
bool verify_global_section(const Params& par, const XpidPresentation& X);

// --- generic fiber over the level-2 classes ---------------------------------

/**
 * Aggregated class of pi * prod_{a in P^d(O/pi^2)} (l_a / z_d)^{q(q-1)} in
 * symbol exponents: each point indexed by (i, b in R_i, c in F^i) contributes
 * q(q-1) to x_i ... x_{d-1} and to P_{i,b}.  Pure counting; exact integers.
 */
SymbolUnit genericfiber_class(const Params& par, const SimplexPresentation& S);

/// The indexing bijection behind the aggregation: (i, b, c) -> class of
/// b + pi*c at level 2 hits every level-2 class exactly once.
bool genericfiber_bijection_ok(const Params& par, const SimplexPresentation& S,
                               const ResidueRing& ring2);

struct LemeqReport {
  bool ok = false;            ///< lhs == pi * Vt(u) mod N (exponent-wise)
  bool bijection_ok = false;  ///< counting bijection verified at level 2
  bool x_exponents_ok = false;///< lhs x_j == q^{j+1}-1 mod N (j < d), x_d == 0
  SymbolUnit lhs;             ///< generic-fiber aggregation
  SymbolUnit rhs;             ///< pi * Vt(ui_family)
};

/// Full verification of the generic-fiber congruence on the maximal simplex.
LemeqReport verify_lemeqsigsig(const Params& par, const SimplexPresentation& S,
                               const ResidueRing& ring2);

// --- restriction to the central vertex --------------------------------------

/**
 * Specialize a symbol unit to the vertex: x_j -> [e_j] - [e_{j+1}] (j < d),
 * x_d -> pi + [e_d] - [e_0], P_{i,a} -> [a mod pi] - [e_i].  The result is a
 * pi-exponent plus an integral degree-zero divisor vector at level 1.
 */
UnitClass restrict_to_vertex(const Params& par, const SimplexPresentation& S,
                             const SymbolUnit& u, const ResidueRing& ring1);

/**
 * The vertex consistency check: restricting pi * Vt(ui_family) must land in
 * the class with pi-exponent 1 and coefficient q-1 at every level-1 class,
 * modulo N — the single-variable vertex equation T^{q^{d+1}} = pi u T.
 */
bool vertex_consistency_check(const Params& par, const SimplexPresentation& S,
                              const ResidueRing& ring1);

}  // namespace sigma1

#endif  // SIGMA1_SYMBOL_UNIT_HPP
