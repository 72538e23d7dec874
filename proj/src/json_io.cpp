#include "sigma1/json_io.hpp"

namespace sigma1 {

std::string dec(int64_t v) { return std::to_string(v); }

ordered_json json_of(const Params& par) {
  ordered_json j;
  j["p"] = dec(par.p);
  j["f"] = dec(par.f);
  j["e"] = dec(par.e);
  j["d"] = dec(par.d);
  j["q"] = dec(par.q);
  j["N"] = dec(par.N);
  j["Nt"] = dec(par.Nt);
  return j;
}

ordered_json json_of(const HyperplaneClass& H) {
  ordered_json j;
  j["level"] = dec(H.level);
  ordered_json coords = ordered_json::array();
  for (auto c : H.a) coords.push_back(dec(static_cast<int64_t>(c)));
  j["a"] = coords;
  return j;
}

ordered_json json_of(const DivisorVector& D) {
  ordered_json j;
  j["level"] = dec(D.level);
  j["modulus"] = dec(D.modulus);
  ordered_json coeffs = ordered_json::array();
  for (const auto& [H, c] : D.c) {
    if (c == 0) continue;
    ordered_json entry;
    entry["class"] = json_of(H);
    entry["exp"] = dec(c);
    coeffs.push_back(entry);
  }
  j["coeffs"] = coeffs;
  return j;
}

ordered_json json_of(const UnitClass& u) {
  ordered_json j;
  j["pi_exp"] = dec(u.pi_exp);
  j["div"] = json_of(u.div);
  return j;
}

ordered_json json_of(const KummerClass& K) {
  ordered_json j;
  j["modulus"] = dec(K.modulus);
  j["pi_exp"] = dec(K.pi_exp);
  j["div"] = json_of(K.div);
  return j;
}

ordered_json json_of(const SymbolUnit& u) {
  ordered_json j;
  j["pi_exp"] = dec(u.pi_exp);
  ordered_json exps = ordered_json::array();
  for (const auto& [id, e] : u.e) {
    if (e == 0) continue;
    ordered_json entry;
    entry["symbol"] = symbol_name(id);
    entry["exp"] = dec(e);
    exps.push_back(entry);
  }
  j["exponents"] = exps;
  return j;
}

ordered_json json_of(const Params& par, const SimplexPresentation& S) {
  ordered_json j;
  j["params"] = json_of(par);
  ordered_json type = ordered_json::array();
  for (auto e : S.type.e) type.push_back(dec(e));
  j["type"] = type;
  switch (S.kind) {
    case SimplexKind::Vertex: j["kind"] = "vertex"; break;
    case SimplexKind::Maximal: j["kind"] = "maximal"; break;
    case SimplexKind::TypeOneD: j["kind"] = "type-1-d"; break;
    case SimplexKind::General: j["kind"] = "general"; break;
  }
  ordered_json dv = ordered_json::array();
  for (auto v : S.dvec) dv.push_back(dec(v));
  j["relation_indices"] = dv;
  ordered_json counts = ordered_json::array();
  for (auto v : S.rep_counts) counts.push_back(dec(v));
  j["rep_counts"] = counts;
  if (!S.reps.empty()) {
    ResidueRing F = ResidueRing::make(par, 1);
    ordered_json blocks = ordered_json::array();
    for (size_t i = 0; i < S.reps.size(); ++i) {
      ordered_json block = ordered_json::array();
      for (size_t r = 0; r < S.reps[i].size(); ++r) {
        ordered_json entry;
        entry["chart"] = dec(S.reps[i][r].chart);
        ordered_json codes = ordered_json::array();
        for (auto c : S.reps[i][r].a) codes.push_back(dec(static_cast<int64_t>(c)));
        entry["a"] = codes;
        entry["form"] = ppoly_to_string(F, S.ppolys[i][r]);
        block.push_back(entry);
      }
      blocks.push_back(block);
    }
    j["reps"] = blocks;
  }
  return j;
}

ordered_json json_of(const Params& par, const XpidPresentation& X) {
  ordered_json j;
  j["params"] = json_of(par);
  ordered_json us = ordered_json::array();
  for (const auto& u : X.u) us.push_back(json_of(u));
  j["u"] = us;
  ordered_json cs = ordered_json::array();
  for (const auto& c : X.coeffs) cs.push_back(json_of(c));
  j["coeffs"] = cs;
  j["composite"] = json_of(X.composite);
  j["composite_exponent"] = dec(X.composite_exponent);
  return j;
}

ordered_json json_of(const InvariantEnumeration& E) {
  ordered_json j;
  j["n_max"] = dec(E.n_max);
  ordered_json gen = ordered_json::array();
  for (auto g : E.generator) gen.push_back(dec(g));
  j["generator"] = gen;
  j["solution_count"] = dec(static_cast<int64_t>(E.solutions.size()));
  ordered_json sols = ordered_json::array();
  for (const auto& s : E.solutions) {
    ordered_json tup = ordered_json::array();
    for (auto v : s) tup.push_back(dec(v));
    sols.push_back(tup);
  }
  j["solutions"] = sols;
  j["cyclic_match"] = E.cyclic_match;
  return j;
}

ordered_json json_of(const Rat& r) {
  ordered_json j;
  j["num"] = dec(r.n);
  j["den"] = dec(r.d);
  return j;
}

ordered_json json_of(const Valuation& v) {
  ordered_json j;
  j["v"] = json_of(v.v);
  j["arg_comp"] = dec(v.arg_comp);
  j["unique"] = v.unique;
  return j;
}

ordered_json json_of(const IdempotentReport& rep) {
  ordered_json j;
  j["delta_ok"] = rep.delta_ok;
  j["orth_ok"] = rep.orth_ok;
  j["idem_ok"] = rep.idem_ok;
  j["sum_ok"] = rep.sum_ok;
  j["ok"] = rep.ok;
  return j;
}

ordered_json json_of(const LemeqReport& rep) {
  ordered_json j;
  j["ok"] = rep.ok;
  j["bijection_ok"] = rep.bijection_ok;
  j["x_exponents_ok"] = rep.x_exponents_ok;
  j["lhs"] = json_of(rep.lhs);
  j["rhs"] = json_of(rep.rhs);
  return j;
}

}  // namespace sigma1
