/**
 * @file lagrange.hpp
 * @brief Interpolation idempotents on the roots of unity, and the graded
 *        monomial-section algebra they glue together.
 *
 * For each a in μ_{q-1} the basis polynomial L_a is pinned down by the
 * interpolation conditions L_a(b) = δ_ab alone (degree q-2 over Q(ζ_{q-1})).
 * idempotent_check verifies exactly that these are orthogonal idempotents
 * summing to 1 modulo X^{q-1} - 1.
 *
 * A component function assigns to each a in μ_{q-1} an optional monomial
 * section t^j * v with 0 <= j < Ñ and v a formal unit class (π-power times an
 * integral divisor class).  Multiplication is componentwise with the carry
 * rule t^Ñ = u, where u is the base-pointed canonical unit of the level;
 * inversion requires every component to be present.
 */
#ifndef SIGMA1_LAGRANGE_HPP
#define SIGMA1_LAGRANGE_HPP

#include <optional>
#include <vector>

#include "sigma1/cyclotomic.hpp"
#include "sigma1/divisor.hpp"

namespace sigma1 {

/// Polynomial over the cyclotomic field, low-degree coefficients first.
using KPoly = std::vector<CyclotomicField::Elem>;

KPoly kp_zero();
KPoly kp_constant(const CyclotomicField& K, const CyclotomicField::Elem& c);
KPoly kp_add(const CyclotomicField& K, const KPoly& a, const KPoly& b);
KPoly kp_mul(const CyclotomicField& K, const KPoly& a, const KPoly& b);
KPoly kp_scale(const CyclotomicField& K, const KPoly& a, const CyclotomicField::Elem& c);
CyclotomicField::Elem kp_eval(const CyclotomicField& K, const KPoly& a,
                              const CyclotomicField::Elem& x);
/// Fold exponents modulo n (reduction mod X^n - 1).
KPoly kp_cyclic_reduce(const CyclotomicField& K, const KPoly& a, int64_t n);
bool kp_eq(const CyclotomicField& K, const KPoly& a, const KPoly& b);
bool kp_is_zero(const CyclotomicField& K, const KPoly& a);

struct LagrangeBasis {
  CyclotomicField K;                          ///< Q(zeta_{q-1})
  std::vector<CyclotomicField::Elem> nodes;   ///< zeta^0, .., zeta^{q-2}
  std::vector<KPoly> L;                       ///< interpolation basis, degree q-2

  static LagrangeBasis make(int64_t q);
};

struct IdempotentReport {
  bool delta_ok = false;  ///< L_a(node_b) = delta_ab
  bool orth_ok = false;   ///< L_a * L_b = 0 mod X^{q-1}-1 for a != b
  bool idem_ok = false;   ///< L_a^2 = L_a mod X^{q-1}-1
  bool sum_ok = false;    ///< sum_a L_a = 1
  bool ok = false;
};

IdempotentReport idempotent_check(int64_t q);

/// Monomial section t^t_exp * v with the graded exponent already in [0, Ñ).
struct MonomialSection {
  int64_t t_exp = 0;
  UnitClass v;
};

/**
 * Context for the monomial-section algebra at a fixed level: holds the carry
 * unit u with t^Ñ = u, the base-pointed canonical unit of the level.
 */
class ComponentRing {
 public:
  static ComponentRing make(const Params& par, const ResidueRing& ring_n);

  const Params& params() const { return par_; }
  int64_t level() const { return level_; }
  const UnitClass& carry_unit() const { return u_; }

  /// Fold an arbitrary t-exponent into [0, Ñ), absorbing carries into v.
  MonomialSection canonicalize(int64_t t_exp, UnitClass v) const;

  MonomialSection one() const;
  MonomialSection t_power(int64_t k) const;
  MonomialSection mul(const MonomialSection& a, const MonomialSection& b) const;
  MonomialSection inverse(const MonomialSection& a) const;
  bool eq(const MonomialSection& a, const MonomialSection& b) const;

 private:
  Params par_;
  int64_t level_ = 1;
  UnitClass u_;
};

/// One optional monomial section per a in μ_{q-1}.
struct ComponentFunction {
  std::vector<std::optional<MonomialSection>> comp;
};

ComponentFunction cf_one(const ComponentRing& CR);
/// Same section on every component.
ComponentFunction cf_uniform(const ComponentRing& CR, const MonomialSection& s);
ComponentFunction cf_mul(const ComponentRing& CR, const ComponentFunction& a,
                         const ComponentFunction& b);
/// Throws NonUnit if any component is absent.
ComponentFunction cf_inverse(const ComponentRing& CR, const ComponentFunction& a);
bool cf_eq(const ComponentRing& CR, const ComponentFunction& a, const ComponentFunction& b);

}  // namespace sigma1

#endif  // SIGMA1_LAGRANGE_HPP
