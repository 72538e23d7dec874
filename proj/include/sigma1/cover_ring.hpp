/**
 * @file cover_ring.hpp
 * @brief Graded function algebra of the cyclic degree-Ñ cover of affine space.
 *
 * Base ring: polynomials over F_{q^(d+1)} in the affine coordinates
 * X_0..X_{d-1}, localized at the affine unit forms (the level-1 classes other
 * than the vertical one), with P = product of those forms.  The cover algebra
 * is free with basis 1, t, .., t^{Ñ-1} where t^Ñ = P, so elements carry Ñ
 * graded components, each a reduced fraction num / prod(forms^den).
 *
 * The norm down to the base is the determinant of the multiplication matrix
 * M[r][c] = f_{(r-c) mod Ñ} * (c > r ? P : 1), evaluated fraction-free
 * (Bareiss) after clearing denominators; a product-over-μ_Ñ twist formula is
 * provided as an independent cross-check.  Valuations at each unit form and
 * at infinity extend by v(t) = 1/Ñ resp. (1-Ñ)/Ñ; distinct graded components
 * have distinct fractional parts, so the minimum is attained at a unique
 * component and v is a genuine valuation.
 */
#ifndef SIGMA1_COVER_RING_HPP
#define SIGMA1_COVER_RING_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sigma1/errors.hpp"
#include "sigma1/hyperplanes.hpp"
#include "sigma1/mpoly.hpp"
#include "sigma1/params.hpp"
#include "sigma1/rng.hpp"

namespace sigma1 {

/// Exact rational with small numerator/denominator, always reduced, d > 0.
struct Rat {
  int64_t n = 0;
  int64_t d = 1;

  Rat() = default;
  Rat(int64_t num, int64_t den);
  static Rat integer(int64_t v) { return Rat(v, 1); }

  Rat operator+(const Rat& o) const { return Rat(n * o.d + o.n * d, d * o.d); }
  Rat operator-(const Rat& o) const { return Rat(n * o.d - o.n * d, d * o.d); }
  Rat scaled(int64_t k) const { return Rat(n * k, d); }
  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend auto operator<=>(const Rat& a, const Rat& b) { return a.n * b.d <=> b.n * a.d; }
  std::string to_string() const;
};

struct CoverRing {
  Params par;
  Fq F;                             ///< coefficient field F_{q^(d+1)}
  Fq Fq_small;                      ///< F_q, matching level-1 residue codes
  std::vector<Fq::Elem> embed;      ///< F_q code -> F code
  int nvars = 0;                    ///< = d
  std::vector<HyperplaneClass> lclasses;  ///< affine level-1 classes, sorted
  std::vector<MPoly> lforms;        ///< matching affine unit forms
  MPoly P;                          ///< product of all unit forms, degree Ñ-1

  static CoverRing make(const Params& par);
  int64_t Nt() const { return par.Nt; }
};

/// Reduced fraction num / prod_i lforms[i]^den[i] over the base ring.
struct BaseFrac {
  MPoly num;
  std::vector<int32_t> den;
};

BaseFrac bf_make(const CoverRing& R, MPoly num, std::vector<int32_t> den);
BaseFrac bf_poly(const CoverRing& R, MPoly num);
BaseFrac bf_const(const CoverRing& R, Fq::Elem c);
bool bf_is_zero(const BaseFrac& a);
bool bf_eq(const BaseFrac& a, const BaseFrac& b);
BaseFrac bf_add(const CoverRing& R, const BaseFrac& a, const BaseFrac& b);
BaseFrac bf_neg(const CoverRing& R, const BaseFrac& a);
BaseFrac bf_mul(const CoverRing& R, const BaseFrac& a, const BaseFrac& b);
std::string bf_to_string(const CoverRing& R, const BaseFrac& a);

/// Element of the cover algebra: comp[i] is the coefficient of t^i.
struct CoverElement {
  std::vector<BaseFrac> comp;
};

CoverElement ce_zero(const CoverRing& R);
CoverElement ce_one(const CoverRing& R);
CoverElement ce_t(const CoverRing& R);
CoverElement ce_monomial(const CoverRing& R, int64_t i, BaseFrac c);
bool ce_is_zero(const CoverElement& f);
bool ce_eq(const CoverElement& a, const CoverElement& b);
CoverElement ce_add(const CoverRing& R, const CoverElement& a, const CoverElement& b);
CoverElement ce_neg(const CoverRing& R, const CoverElement& a);
CoverElement ce_mul(const CoverRing& R, const CoverElement& a, const CoverElement& b);
CoverElement ce_pow(const CoverRing& R, const CoverElement& a, int64_t k);

/// Substitute t -> zeta * t (zeta in the coefficient field).
CoverElement ce_twist(const CoverRing& R, const CoverElement& f, Fq::Elem zeta);

/// Fraction-free determinant (Bareiss, with row pivoting).
MPoly bareiss_det(const Fq& F, std::vector<std::vector<MPoly>> M);

/// Norm to the base ring as determinant of the multiplication matrix.
BaseFrac ce_norm_det(const CoverRing& R, const CoverElement& f);

/**
 * Norm as the product of the μ_Ñ twists of f.  Throws Error if the product
 * fails to land in degree zero (it never should; kept as a hard check).
 */
BaseFrac ce_norm_conjugates(const CoverRing& R, const CoverElement& f);

struct Valuation {
  Rat v;
  int64_t arg_comp = 0;  ///< graded index attaining the minimum
  bool unique = false;   ///< minimum attained at exactly one component
};

/// Valuation at lforms[idx]; throws ZeroElement on the zero element.
Valuation ce_val_hyperplane(const CoverRing& R, const CoverElement& f, size_t idx);
/// Valuation at infinity (minus total degree on the base).
Valuation ce_val_infinity(const CoverRing& R, const CoverElement& f);

/// Random element: sparse polynomial components, occasional denominators.
CoverElement ce_random(const CoverRing& R, Rng& rng);
/// Random unit monomial c * t^k * prod(forms^e) with (k, e) not all zero.
CoverElement ce_random_monomial_unit(const CoverRing& R, Rng& rng);

}  // namespace sigma1

#endif  // SIGMA1_COVER_RING_HPP
