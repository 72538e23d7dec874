#include "sigma1/lagrange.hpp"

#include "sigma1/errors.hpp"
#include "sigma1/numutil.hpp"

namespace sigma1 {

KPoly kp_zero() { return {}; }

KPoly kp_constant(const CyclotomicField& K, const CyclotomicField::Elem& c) {
  if (K.is_zero(c)) return {};
  return {c};
}

namespace {

KPoly kp_trim(const CyclotomicField& K, KPoly a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
  return a;
}

}  // namespace

KPoly kp_add(const CyclotomicField& K, const KPoly& a, const KPoly& b) {
  KPoly r(std::max(a.size(), b.size()), K.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = K.add(r[i], a[i]);
  for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
  return kp_trim(K, std::move(r));
}

KPoly kp_mul(const CyclotomicField& K, const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1, K.zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  return kp_trim(K, std::move(r));
}

KPoly kp_scale(const CyclotomicField& K, const KPoly& a, const CyclotomicField::Elem& c) {
  KPoly r = a;
  for (auto& x : r) x = K.mul(x, c);
  return kp_trim(K, std::move(r));
}

CyclotomicField::Elem kp_eval(const CyclotomicField& K, const KPoly& a,
                              const CyclotomicField::Elem& x) {
  CyclotomicField::Elem acc = K.zero();
  for (size_t i = a.size(); i-- > 0;) acc = K.add(K.mul(acc, x), a[i]);
  return acc;
}

KPoly kp_cyclic_reduce(const CyclotomicField& K, const KPoly& a, int64_t n) {
  if (n < 1) throw BadParams("kp_cyclic_reduce: modulus degree must be positive");
  KPoly r(static_cast<size_t>(n), K.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    size_t j = i % static_cast<size_t>(n);
    r[j] = K.add(r[j], a[i]);
  }
  return kp_trim(K, std::move(r));
}

bool kp_eq(const CyclotomicField& K, const KPoly& a, const KPoly& b) {
  KPoly ta = kp_trim(K, a), tb = kp_trim(K, b);
  if (ta.size() != tb.size()) return false;
  for (size_t i = 0; i < ta.size(); ++i)
    if (!K.eq(ta[i], tb[i])) return false;
  return true;
}

bool kp_is_zero(const CyclotomicField& K, const KPoly& a) { return kp_trim(K, a).empty(); }

LagrangeBasis LagrangeBasis::make(int64_t q) {
  if (q < 2) throw BadParams("LagrangeBasis::make: q must be at least 2");
  LagrangeBasis B;
  const int64_t m = q - 1;
  B.K = CyclotomicField::make(m);
  for (int64_t j = 0; j < m; ++j) B.nodes.push_back(B.K.zeta_power(j));
  for (int64_t j = 0; j < m; ++j) {
    // L_j(X) = prod_{k != j} (X - node_k) / (node_j - node_k): the unique
    // degree <= q-2 polynomial with L_j(node_k) = delta_jk.
    KPoly L = {B.K.one()};
    for (int64_t k = 0; k < m; ++k) {
      if (k == j) continue;
      KPoly factor = {B.K.neg(B.nodes[static_cast<size_t>(k)]), B.K.one()};
      L = kp_mul(B.K, L, factor);
      CyclotomicField::Elem denom =
          B.K.sub(B.nodes[static_cast<size_t>(j)], B.nodes[static_cast<size_t>(k)]);
      L = kp_scale(B.K, L, B.K.inv(denom));
    }
    B.L.push_back(std::move(L));
  }
  return B;
}

IdempotentReport idempotent_check(int64_t q) {
  LagrangeBasis B = LagrangeBasis::make(q);
  const CyclotomicField& K = B.K;
  const int64_t m = q - 1;
  IdempotentReport rep;

  rep.delta_ok = true;
  for (size_t a = 0; a < B.L.size(); ++a)
    for (size_t b = 0; b < B.nodes.size(); ++b) {
      CyclotomicField::Elem v = kp_eval(K, B.L[a], B.nodes[b]);
      CyclotomicField::Elem want = a == b ? K.one() : K.zero();
      if (!K.eq(v, want)) rep.delta_ok = false;
    }

  rep.orth_ok = true;
  rep.idem_ok = true;
  for (size_t a = 0; a < B.L.size(); ++a)
    for (size_t b = 0; b < B.L.size(); ++b) {
      KPoly prod = kp_cyclic_reduce(K, kp_mul(K, B.L[a], B.L[b]), m);
      if (a == b) {
        if (!kp_eq(K, prod, kp_cyclic_reduce(K, B.L[a], m))) rep.idem_ok = false;
      } else {
        if (!kp_is_zero(K, prod)) rep.orth_ok = false;
      }
    }

  KPoly sum = kp_zero();
  for (const auto& L : B.L) sum = kp_add(K, sum, L);
  rep.sum_ok = kp_eq(K, sum, kp_constant(K, K.one()));

  rep.ok = rep.delta_ok && rep.orth_ok && rep.idem_ok && rep.sum_ok;
  return rep;
}

ComponentRing ComponentRing::make(const Params& par, const ResidueRing& ring_n) {
  ComponentRing CR;
  CR.par_ = par;
  CR.level_ = ring_n.level();
  DivisorVector D;
  D.level = CR.level_;
  D.modulus = 0;
  const int64_t coeff = ipow(par.q, CR.level_ - 1);
  std::vector<HyperplaneClass> classes = enumerate_hyperplanes(par, ring_n);
  for (const auto& H : classes) D.c[H] = coeff;
  D = normalize_to_base(D, classes.front());
  CR.u_ = UnitClass{0, std::move(D)};
  return CR;
}

MonomialSection ComponentRing::canonicalize(int64_t t_exp, UnitClass v) const {
  const int64_t Nt = par_.Nt;
  const int64_t carries = floor_div(t_exp, Nt);
  MonomialSection s;
  s.t_exp = t_exp - carries * Nt;
  s.v = carries == 0 ? std::move(v) : v.mul(u_.pow(carries));
  return s;
}

MonomialSection ComponentRing::one() const {
  MonomialSection s;
  s.t_exp = 0;
  s.v = UnitClass{0, DivisorVector{level_, 0, {}}};
  return s;
}

MonomialSection ComponentRing::t_power(int64_t k) const {
  return canonicalize(k, one().v);
}

MonomialSection ComponentRing::mul(const MonomialSection& a, const MonomialSection& b) const {
  return canonicalize(a.t_exp + b.t_exp, a.v.mul(b.v));
}

MonomialSection ComponentRing::inverse(const MonomialSection& a) const {
  return canonicalize(-a.t_exp, a.v.inverse());
}

bool ComponentRing::eq(const MonomialSection& a, const MonomialSection& b) const {
  return a.t_exp == b.t_exp && a.v.eq(b.v);
}

ComponentFunction cf_one(const ComponentRing& CR) {
  ComponentFunction f;
  f.comp.assign(static_cast<size_t>(CR.params().q - 1), CR.one());
  return f;
}

ComponentFunction cf_uniform(const ComponentRing& CR, const MonomialSection& s) {
  ComponentFunction f;
  f.comp.assign(static_cast<size_t>(CR.params().q - 1), s);
  return f;
}

ComponentFunction cf_mul(const ComponentRing& CR, const ComponentFunction& a,
                         const ComponentFunction& b) {
  if (a.comp.size() != b.comp.size())
    throw BadParams("cf_mul: component-count mismatch");
  ComponentFunction f;
  f.comp.resize(a.comp.size());
  for (size_t i = 0; i < a.comp.size(); ++i)
    if (a.comp[i] && b.comp[i]) f.comp[i] = CR.mul(*a.comp[i], *b.comp[i]);
  return f;
}

ComponentFunction cf_inverse(const ComponentRing& CR, const ComponentFunction& a) {
  ComponentFunction f;
  f.comp.resize(a.comp.size());
  for (size_t i = 0; i < a.comp.size(); ++i) {
    if (!a.comp[i])
      throw NonUnit("cf_inverse: a component vanishes identically");
    f.comp[i] = CR.inverse(*a.comp[i]);
  }
  return f;
}

bool cf_eq(const ComponentRing& CR, const ComponentFunction& a, const ComponentFunction& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (size_t i = 0; i < a.comp.size(); ++i) {
    if (a.comp[i].has_value() != b.comp[i].has_value()) return false;
    if (a.comp[i] && !CR.eq(*a.comp[i], *b.comp[i])) return false;
  }
  return true;
}

}  // namespace sigma1
