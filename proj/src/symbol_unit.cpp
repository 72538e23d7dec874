/**
 * @file symbol_unit.cpp
 * @brief Exponent-vector arithmetic and the covering identities.
 */
#include "sigma1/symbol_unit.hpp"

#include <algorithm>

namespace sigma1 {

std::string symbol_name(uint32_t id) {
  if (is_x_symbol(id)) return "x" + std::to_string(id);
  return "P[" + std::to_string(p_symbol_chart(id)) + "][" + std::to_string(p_symbol_rep(id)) +
         "]";
}

SymbolUnit SymbolUnit::symbol(uint32_t id, int64_t exp) {
  SymbolUnit s;
  if (exp != 0) s.e[id] = exp;
  return s;
}

SymbolUnit SymbolUnit::mul(const SymbolUnit& o) const {
  SymbolUnit r = *this;
  r.pi_exp += o.pi_exp;
  for (const auto& [id, k] : o.e) r.e[id] += k;
  r.compact();
  return r;
}

SymbolUnit SymbolUnit::div(const SymbolUnit& o) const { return mul(o.inverse()); }

SymbolUnit SymbolUnit::inverse() const {
  SymbolUnit r = *this;
  r.pi_exp = -r.pi_exp;
  for (auto& [id, k] : r.e) k = -k;
  return r;
}

SymbolUnit SymbolUnit::pow(int64_t k) const {
  SymbolUnit r = *this;
  r.pi_exp *= k;
  for (auto& [id, v] : r.e) v *= k;
  r.compact();
  return r;
}

int64_t SymbolUnit::exponent(uint32_t id) const {
  auto it = e.find(id);
  return it == e.end() ? 0 : it->second;
}

bool SymbolUnit::is_one() const { return pi_exp == 0 && e.empty(); }

bool SymbolUnit::operator==(const SymbolUnit& o) const {
  return pi_exp == o.pi_exp && e == o.e;
}

bool SymbolUnit::congruent_mod(const SymbolUnit& o, int64_t m) const {
  return div(o).divisible_by(m);
}

bool SymbolUnit::divisible_by(int64_t m) const {
  if (floor_mod(pi_exp, m) != 0) return false;
  for (const auto& [id, k] : e)
    if (floor_mod(k, m) != 0) return false;
  return true;
}

SymbolUnit SymbolUnit::root(int64_t m) const {
  if (!divisible_by(m)) throw Error("SymbolUnit::root: exponents not divisible");
  SymbolUnit r = *this;
  r.pi_exp /= m;
  for (auto& [id, k] : r.e) k /= m;
  r.compact();
  return r;
}

void SymbolUnit::compact() {
  for (auto it = e.begin(); it != e.end();)
    it = (it->second == 0) ? e.erase(it) : std::next(it);
}

std::vector<SymbolUnit> ui_family(const SimplexPresentation& S) {
  if (S.kind != SimplexKind::Maximal)
    throw NotMaximal("ui_family: requires the maximal simplex");
  const int64_t d = S.par.d;
  std::vector<SymbolUnit> u(d + 1);
  for (int64_t i = 0; i <= d; ++i) {
    int64_t num_chart = floor_mod(d - 1 - i, d + 1);
    int64_t den_chart = floor_mod(d - i, d + 1);
    SymbolUnit s;
    for (size_t r = 0; r < S.reps[num_chart].size(); ++r)
      s.e[p_symbol(num_chart, static_cast<int64_t>(r))] += 1;
    for (size_t r = 0; r < S.reps[den_chart].size(); ++r)
      s.e[p_symbol(den_chart, static_cast<int64_t>(r))] -= 1;
    s.compact();
    u[i] = std::move(s);
  }
  return u;
}

SymbolUnit V_invariant(const Params& par, const std::vector<SymbolUnit>& v) {
  if (static_cast<int64_t>(v.size()) != par.d + 1)
    throw BadParams("V_invariant: family must have d+1 entries");
  // V = v_0 * v_d^q * v_{d-1}^{q^2} * ... * v_1^{q^d}
  SymbolUnit r = v[0];
  for (int64_t j = 1; j <= par.d; ++j) {
    int64_t idx = par.d + 1 - j;
    r = r.mul(v[idx].pow(ipow(par.q, j)));
  }
  return r;
}

SymbolUnit Vtilde_invariant(const Params& par, const std::vector<SymbolUnit>& v) {
  SymbolUnit r = V_invariant(par, v);
  for (int64_t j = 0; j < par.d; ++j)
    r = r.mul(SymbolUnit::symbol(x_symbol(j), ipow(par.q, j + 1) - 1));
  return r;
}

RaynaudDatum twist(const Params& par, const RaynaudDatum& D, const std::vector<SymbolUnit>& w) {
  if (static_cast<int64_t>(D.v.size()) != par.d + 1 ||
      static_cast<int64_t>(w.size()) != par.d + 1)
    throw BadParams("twist: families must have d+1 entries");
  RaynaudDatum out;
  out.v.resize(D.v.size());
  for (int64_t i = 0; i <= par.d; ++i) {
    int64_t ip1 = floor_mod(i + 1, par.d + 1);
    out.v[i] = D.v[i].mul(w[i].pow(par.q)).div(w[ip1]);
  }
  return out;
}

bool equivalent(const Params& par, const RaynaudDatum& D1, const RaynaudDatum& D2) {
  if (D1.v.size() != D2.v.size() || static_cast<int64_t>(D1.v.size()) != par.d + 1)
    throw BadParams("equivalent: data must have d+1 entries");
  std::vector<SymbolUnit> delta(D1.v.size());
  for (size_t i = 0; i < D1.v.size(); ++i) delta[i] = D2.v[i].div(D1.v[i]);
  return V_invariant(par, delta).divisible_by(par.N);
}

std::optional<std::vector<SymbolUnit>> equivalence_witness(const Params& par,
                                                           const RaynaudDatum& D1,
                                                           const RaynaudDatum& D2) {
  const int64_t d = par.d;
  std::vector<SymbolUnit> delta(d + 1);
  for (int64_t i = 0; i <= d; ++i) delta[i] = D2.v[i].div(D1.v[i]);
  SymbolUnit ratio = V_invariant(par, delta);
  if (!ratio.divisible_by(par.N)) return std::nullopt;

  // w_1 = ratio^{1/N}; then forward substitution w_{i+1} = w_i^q / delta_i.
  std::vector<SymbolUnit> w(d + 1);
  w[1 % (d + 1)] = ratio.root(par.N);
  for (int64_t i = 1; i <= d; ++i) {
    int64_t ip1 = floor_mod(i + 1, d + 1);
    w[ip1] = w[i].pow(par.q).div(delta[i]);
  }
  // cyclic closure and full re-verification
  for (int64_t i = 0; i <= d; ++i) {
    int64_t ip1 = floor_mod(i + 1, d + 1);
    if (!(delta[i] == w[i].pow(par.q).div(w[ip1]))) return std::nullopt;
  }
  return w;
}

XpidPresentation xpid_presentation(const Params& par, const SimplexPresentation& S) {
  XpidPresentation X;
  X.u = ui_family(S);
  X.coeffs.resize(par.d + 1);
  for (int64_t i = 0; i <= par.d; ++i)
    X.coeffs[i] = X.u[i].mul(SymbolUnit::symbol(x_symbol(par.d - i)));
  X.composite = SymbolUnit::one();
  for (int64_t i = 0; i <= par.d; ++i)
    X.composite = X.composite.mul(X.coeffs[i].pow(ipow(par.q, par.d - i)));
  X.composite_exponent = ipow(par.q, par.d + 1);
  return X;
}

bool verify_xpid_composite(const Params& par, const XpidPresentation& X) {
  // (a) y_1 elimination: V((coeffs)) = pi * Vt((u)) with pi spelled out as
  //     x_0 x_1 ... x_d.  Exact equality of exponent vectors.
  SymbolUnit lhs = V_invariant(par, X.coeffs);
  SymbolUnit rhs = Vtilde_invariant(par, X.u);
  for (int64_t j = 0; j <= par.d; ++j) rhs = rhs.mul(SymbolUnit::symbol(x_symbol(j)));
  if (!(lhs == rhs)) return false;

  // (b) y_0 elimination: composite = prod_j x_j^{q^j} * prod_i u_i^{q^{d-i}};
  //     after one rewrite x_0...x_d -> pi it must read pi * (nonnegative
  //     powers), the pi*(unit) normal form of the one-variable equation.
  SymbolUnit c = X.composite;
  c.pi_exp += 1;
  for (int64_t j = 0; j <= par.d; ++j) c = c.mul(SymbolUnit::symbol(x_symbol(j), -1));
  if (c.pi_exp != 1) return false;
  for (int64_t j = 0; j <= par.d; ++j)
    if (c.exponent(x_symbol(j)) != ipow(par.q, j) - 1) return false;
  return true;
}

bool verify_global_section(const Params& par, const XpidPresentation& X) {
  // prod u_i must cancel to 1 and prod x_{d-i} must be exactly x_0...x_d,
  // which the chart relation evaluates to pi.
  SymbolUnit all = SymbolUnit::one();
  for (const auto& u : X.u) all = all.mul(u);
  if (!all.is_one()) return false;

  SymbolUnit prod = SymbolUnit::one();
  for (const auto& c : X.coeffs) prod = prod.mul(c);
  if (prod.pi_exp != 0) return false;
  for (int64_t j = 0; j <= par.d; ++j)
    if (prod.exponent(x_symbol(j)) != 1) return false;
  for (const auto& [id, k] : prod.e)
    if (!is_x_symbol(id) && k != 0) return false;
  return true;
}

SymbolUnit genericfiber_class(const Params& par, const SimplexPresentation& S) {
  if (S.kind != SimplexKind::Maximal)
    throw NotMaximal("genericfiber_class: requires the maximal simplex");
  SymbolUnit out;
  out.pi_exp = 1;
  const int64_t base = par.q * (par.q - 1);  // exponent q(q-1) per point
  for (int64_t i = 0; i <= par.d; ++i) {
    int64_t mult = ipow(par.q, i);  // the c-tuples over this representative
    for (size_t r = 0; r < S.reps[i].size(); ++r)
      out.e[p_symbol(i, static_cast<int64_t>(r))] += base * mult;
    for (int64_t j = i; j < par.d; ++j)
      out.e[x_symbol(j)] += base * mult * static_cast<int64_t>(S.reps[i].size());
  }
  out.compact();
  return out;
}

bool genericfiber_bijection_ok(const Params& par, const SimplexPresentation& S,
                               const ResidueRing& ring2) {
  if (ring2.level() != 2) throw LevelMismatch("genericfiber_bijection_ok: need level 2");
  std::vector<HyperplaneClass> hit;
  for (int64_t i = 0; i <= par.d; ++i) {
    int64_t ctuples = ipow(par.q, i);
    for (size_t r = 0; r < S.reps[i].size(); ++r) {
      UnimodularVector b = materialize_rep(S, i, static_cast<int64_t>(r), ring2);
      for (int64_t ct = 0; ct < ctuples; ++ct) {
        UnimodularVector v = b;
        int64_t t = ct;
        for (int64_t j = 0; j < i; ++j) {
          auto c = static_cast<ResidueRing::Elem>(t % par.q);
          t /= par.q;
          v.a[j] = ring2.add(v.a[j], ring2.mul(ring2.pi(), ring2.teichmuller(c)));
        }
        hit.push_back(canonicalize(ring2, v));
      }
    }
  }
  std::sort(hit.begin(), hit.end());
  if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) return false;
  return hit == enumerate_hyperplanes(par, ring2);
}

LemeqReport verify_lemeqsigsig(const Params& par, const SimplexPresentation& S,
                               const ResidueRing& ring2) {
  LemeqReport rep;
  rep.lhs = genericfiber_class(par, S);
  rep.rhs = Vtilde_invariant(par, ui_family(S));
  rep.rhs.pi_exp += 1;
  rep.ok = rep.lhs.congruent_mod(rep.rhs, par.N);
  rep.bijection_ok = genericfiber_bijection_ok(par, S, ring2);
  rep.x_exponents_ok = true;
  for (int64_t j = 0; j < par.d; ++j) {
    int64_t want = floor_mod(ipow(par.q, j + 1) - 1, par.N);
    if (floor_mod(rep.lhs.exponent(x_symbol(j)), par.N) != want) rep.x_exponents_ok = false;
  }
  if (rep.lhs.exponent(x_symbol(par.d)) != 0) rep.x_exponents_ok = false;
  return rep;
}

UnitClass restrict_to_vertex(const Params& par, const SimplexPresentation& S,
                             const SymbolUnit& u, const ResidueRing& ring1) {
  if (S.kind != SimplexKind::Maximal)
    throw NotMaximal("restrict_to_vertex: requires the maximal simplex");
  if (ring1.level() != 1) throw LevelMismatch("restrict_to_vertex: need the level-1 ring");

  auto basis_class = [&](int64_t j) {
    UnimodularVector v;
    v.level = 1;
    v.a.assign(par.d + 1, ring1.zero());
    v.a[j] = ring1.one();
    return canonicalize(ring1, v);
  };

  UnitClass out;
  out.pi_exp = u.pi_exp;
  out.div.level = 1;
  out.div.modulus = 0;

  for (const auto& [id, k] : u.e) {
    if (k == 0) continue;
    if (is_x_symbol(id)) {
      int64_t j = id;
      if (j < par.d) {
        out.div.c[basis_class(j)] += k;
        out.div.c[basis_class(j + 1)] -= k;
      } else {
        // x_d = pi z_d / z_0
        out.pi_exp += k;
        out.div.c[basis_class(par.d)] += k;
        out.div.c[basis_class(0)] -= k;
      }
    } else {
      int64_t chart = p_symbol_chart(id);
      int64_t ridx = p_symbol_rep(id);
      // level-1 reduction of the representative: entries after the chart
      // carry pi and die; the rest are their residues.
      const SimplexRep& r = S.reps[chart][ridx];
      UnimodularVector abar;
      abar.level = 1;
      abar.a.assign(par.d + 1, ring1.zero());
      for (int64_t j = 0; j < chart; ++j) abar.a[j] = static_cast<ResidueRing::Elem>(r.a[j]);
      abar.a[chart] = ring1.one();
      out.div.c[canonicalize(ring1, abar)] += k;
      out.div.c[basis_class(chart)] -= k;
    }
  }
  out.div.compact();
  return out;
}

bool vertex_consistency_check(const Params& par, const SimplexPresentation& S,
                              const ResidueRing& ring1) {
  SymbolUnit vt = Vtilde_invariant(par, ui_family(S));
  vt.pi_exp += 1;
  UnitClass restricted = restrict_to_vertex(par, S, vt, ring1);

  // Target: the vertex equation class — pi-exponent 1, coefficient q-1 at
  // every level-1 class, mod N (the level-0 Kummer class of the covering).
  KummerClass target = kummer_class_sigma1(par, 0, ring1);
  if (floor_mod(restricted.pi_exp - target.pi_exp, par.N) != 0) return false;
  DivisorVector got = restricted.div;
  got.modulus = par.N;  // reinterpret the exact integers mod N
  return got.eq(target.div);
}

}  // namespace sigma1
