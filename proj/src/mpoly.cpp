#include "sigma1/mpoly.hpp"

#include <algorithm>
#include <map>

#include "sigma1/errors.hpp"

namespace sigma1 {

std::strong_ordering grlex(const Mono& a, const Mono& b) {
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  for (int i = 0; i < kMaxVars; ++i) {
    if (auto c = a.e[static_cast<size_t>(i)] <=> b.e[static_cast<size_t>(i)]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

struct GrlexDesc {
  bool operator()(const Mono& a, const Mono& b) const { return grlex(a, b) > 0; }
};

MPoly from_map(int nvars, const std::map<Mono, Fq::Elem, GrlexDesc>& m) {
  MPoly r;
  r.nvars = nvars;
  for (const auto& [mono, c] : m)
    if (c != 0) r.t.emplace_back(mono, c);
  return r;
}

void check_vars(const MPoly& a, const MPoly& b, const char* where) {
  if (a.nvars != b.nvars) throw BadParams(std::string(where) + ": variable-count mismatch");
}

}  // namespace

MPoly mp_zero(int nvars) {
  MPoly r;
  r.nvars = nvars;
  return r;
}

MPoly mp_const(int nvars, Fq::Elem c) {
  MPoly r;
  r.nvars = nvars;
  if (c != 0) r.t.emplace_back(Mono{}, c);
  return r;
}

MPoly mp_var(int nvars, int j) {
  if (j < 0 || j >= nvars || nvars > kMaxVars) throw BadParams("mp_var: index out of range");
  MPoly r;
  r.nvars = nvars;
  Mono m;
  m.e[static_cast<size_t>(j)] = 1;
  r.t.emplace_back(m, Fq::Elem{1});
  return r;
}

MPoly mp_add(const Fq& F, const MPoly& a, const MPoly& b) {
  check_vars(a, b, "mp_add");
  std::map<Mono, Fq::Elem, GrlexDesc> acc;
  for (const auto& [m, c] : a.t) acc[m] = c;
  for (const auto& [m, c] : b.t) {
    auto it = acc.find(m);
    if (it == acc.end()) {
      acc[m] = c;
    } else {
      it->second = F.add(it->second, c);
    }
  }
  return from_map(a.nvars, acc);
}

MPoly mp_neg(const Fq& F, const MPoly& a) {
  MPoly r = a;
  for (auto& [m, c] : r.t) c = F.neg(c);
  return r;
}

MPoly mp_sub(const Fq& F, const MPoly& a, const MPoly& b) { return mp_add(F, a, mp_neg(F, b)); }

MPoly mp_scale(const Fq& F, const MPoly& a, Fq::Elem c) {
  if (c == 0) return mp_zero(a.nvars);
  MPoly r = a;
  for (auto& [m, cc] : r.t) cc = F.mul(cc, c);
  return r;
}

MPoly mp_mul(const Fq& F, const MPoly& a, const MPoly& b) {
  check_vars(a, b, "mp_mul");
  std::map<Mono, Fq::Elem, GrlexDesc> acc;
  for (const auto& [ma, ca] : a.t) {
    for (const auto& [mb, cb] : b.t) {
      Mono m = ma * mb;
      Fq::Elem c = F.mul(ca, cb);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc[m] = c;
      } else {
        it->second = F.add(it->second, c);
      }
    }
  }
  return from_map(a.nvars, acc);
}

MPoly mp_pow(const Fq& F, const MPoly& a, int64_t k) {
  if (k < 0) throw BadParams("mp_pow: negative exponent");
  MPoly acc = mp_const(a.nvars, F.one());
  MPoly base = a;
  while (k > 0) {
    if (k & 1) acc = mp_mul(F, acc, base);
    base = mp_mul(F, base, base);
    k >>= 1;
  }
  return acc;
}

std::optional<MPoly> mp_exact_div(const Fq& F, const MPoly& a, const MPoly& b) {
  check_vars(a, b, "mp_exact_div");
  if (b.is_zero()) throw BadParams("mp_exact_div: division by zero");
  std::map<Mono, Fq::Elem, GrlexDesc> quot;
  MPoly r = a;
  const Mono& lm = b.t.front().first;
  const Fq::Elem lc_inv = F.inv(b.t.front().second);
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.t.front();
    if (!lm.divides(rm)) return std::nullopt;
    Mono qm = rm / lm;
    Fq::Elem qc = F.mul(rc, lc_inv);
    quot[qm] = F.add(quot[qm], qc);
    MPoly term;
    term.nvars = a.nvars;
    term.t.emplace_back(qm, qc);
    r = mp_sub(F, r, mp_mul(F, term, b));
  }
  return from_map(a.nvars, quot);
}

int64_t mp_multiplicity(const Fq& F, const MPoly& a, const MPoly& g) {
  if (a.is_zero()) throw ZeroElement("mp_multiplicity: zero polynomial");
  if (g.degree() < 1) throw BadParams("mp_multiplicity: divisor must be nonconstant");
  int64_t k = 0;
  MPoly cur = a;
  while (true) {
    auto q = mp_exact_div(F, cur, g);
    if (!q) return k;
    cur = *q;
    ++k;
  }
}

std::string mp_to_string(const Fq& F, const MPoly& a, const std::vector<std::string>& names) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.t) {
    std::string term;
    bool unit_coeff = (c == F.one()) && m.total() > 0;
    if (!unit_coeff) {
      std::string cs = F.to_string(c);
      term = cs.find('+') == std::string::npos ? cs : "(" + cs + ")";
    }
    for (int j = 0; j < a.nvars; ++j) {
      uint16_t e = m.e[static_cast<size_t>(j)];
      if (e == 0) continue;
      if (!term.empty()) term += "*";
      term += j < static_cast<int>(names.size()) ? names[static_cast<size_t>(j)]
                                                 : "X" + std::to_string(j);
      if (e > 1) term += "^" + std::to_string(e);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace sigma1
