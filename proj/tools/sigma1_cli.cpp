// Command line front end: exact computations in the first cyclic covering of
// the p-adic symmetric space, reported as JSON (integers as decimal strings).
//
// Exit codes: 0 = success, 1 = a verification came back false, 2 = invalid
// parameters or usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sigma1/acceptance.hpp"
#include "sigma1/building.hpp"
#include "sigma1/cover_ring.hpp"
#include "sigma1/divisor.hpp"
#include "sigma1/errors.hpp"
#include "sigma1/json_io.hpp"
#include "sigma1/lagrange.hpp"
#include "sigma1/symbol_unit.hpp"

namespace {

using sigma1::ordered_json;

int emit(const ordered_json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    os << text;
  }
  return 0;
}

int emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    os << text;
  }
  return 0;
}

sigma1::SimplexType parse_type(const sigma1::Params& par, const std::string& text) {
  if (text == "vertex")
    return sigma1::SimplexType::make(par, {par.d + 1});
  if (text == "maximal")
    return sigma1::SimplexType::make(par,
                                     std::vector<int64_t>(static_cast<size_t>(par.d + 1), 1));
  std::vector<int64_t> blocks;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) throw sigma1::BadParams("empty block in --type");
      blocks.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return sigma1::SimplexType::make(par, blocks);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of the first cyclic covering of the p-adic symmetric space"};
  app.require_subcommand(1);

  int64_t p = 2, f = 1, e = 1, d = 1;
  int64_t level = -1;  // -1: use the subcommand's default
  uint64_t seed = 0;
  std::string out_path;
  std::string type_arg = "maximal";

  app.add_option("--p", p, "residue characteristic (prime)")->capture_default_str();
  app.add_option("--f", f, "residue degree")->capture_default_str();
  app.add_option("--e", e, "ramification index")->capture_default_str();
  app.add_option("--d", d, "dimension of the symmetric space")->capture_default_str();
  app.add_option("--level", level, "truncation level (subcommand-specific default)");
  app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  CLI::App* sc_hyper = app.add_subcommand("hyperplanes", "enumerate hyperplane classes");
  CLI::App* sc_simplex = app.add_subcommand("simplex", "standard simplex presentation");
  sc_simplex->add_option("--type", type_arg, "vertex | maximal | comma list of blocks")
      ->capture_default_str();
  CLI::App* sc_xpid = app.add_subcommand("xpid", "cyclic covering chart over the maximal simplex");
  CLI::App* sc_kummer = app.add_subcommand("kummer-class", "covering class over the level-n locus");
  CLI::App* sc_inv = app.add_subcommand("invariants", "invariant class enumeration up to a level");
  CLI::App* sc_pi0 = app.add_subcommand("pi0", "component counts of the covering");
  CLI::App* sc_lemeq =
      app.add_subcommand("verify-lemeqsigsig", "generic-fiber congruence on the maximal simplex");
  CLI::App* sc_vertex =
      app.add_subcommand("vertex-consistency", "restriction of the chart class to the vertex");
  CLI::App* sc_norm = app.add_subcommand("norm-lemma", "norm of t and valuation properties");
  CLI::App* sc_idem = app.add_subcommand("idempotents", "interpolation idempotent laws");
  CLI::App* sc_accept = app.add_subcommand("acceptance", "run the full verification battery");
  for (CLI::App* sc : {sc_hyper, sc_simplex, sc_xpid, sc_kummer, sc_inv, sc_pi0, sc_lemeq,
                       sc_vertex, sc_norm, sc_idem, sc_accept})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? 0 : 2;
  }

  try {
    using namespace sigma1;

    if (sc_accept->parsed()) {
      std::string text;
      bool all_pass = true;
      for (const CriterionResult& r : run_acceptance()) {
        char line[512];
        std::snprintf(line, sizeof line, "[%s] %02d %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                      r.id, r.name.c_str(), r.seconds, r.detail.empty() ? "" : ": ",
                      r.detail.c_str());
        text += line;
        all_pass = all_pass && r.pass;
      }
      text += all_pass ? "all criteria passed\n" : "some criteria FAILED\n";
      const int rc = emit_text(text, out_path);
      return rc != 0 ? rc : (all_pass ? 0 : 1);
    }

    const Params par = Params::make(p, f, e, d);

    if (sc_hyper->parsed()) {
      const int64_t n = level < 0 ? 1 : level;
      ResidueRing R = ResidueRing::make(par, n);
      std::vector<HyperplaneClass> classes = enumerate_hyperplanes(par, R);
      ordered_json j;
      j["params"] = json_of(par);
      j["level"] = dec(n);
      j["count"] = dec(static_cast<int64_t>(classes.size()));
      j["count_formula"] = dec(hyperplane_count(par, n));
      ordered_json arr = ordered_json::array();
      for (const auto& H : classes) {
        ordered_json entry = json_of(H);
        std::string s;
        for (size_t i = 0; i < H.a.size(); ++i) {
          if (i) s += ", ";
          s += R.to_string(H.a[i]);
        }
        entry["display"] = "[" + s + "]";
        arr.push_back(entry);
      }
      j["classes"] = arr;
      return emit(j, out_path);
    }

    if (sc_simplex->parsed()) {
      SimplexPresentation S = standard_simplex(par, parse_type(par, type_arg));
      return emit(json_of(par, S), out_path);
    }

    if (sc_xpid->parsed()) {
      SimplexPresentation S = standard_simplex(
          par, SimplexType::make(par, std::vector<int64_t>(static_cast<size_t>(par.d + 1), 1)));
      XpidPresentation X = xpid_presentation(par, S);
      ordered_json j = json_of(par, X);
      SymbolUnit prod = SymbolUnit::one();
      for (const auto& ui : X.u) prod = prod.mul(ui);
      const bool unit_product = prod.is_one();
      const bool composite_ok = verify_xpid_composite(par, X);
      const bool section_ok = verify_global_section(par, X);
      j["verified"] = ordered_json{{"unit_product", unit_product},
                                   {"composite", composite_ok},
                                   {"global_section", section_ok}};
      const int rc = emit(j, out_path);
      return rc != 0 ? rc : ((unit_product && composite_ok && section_ok) ? 0 : 1);
    }

    if (sc_kummer->parsed()) {
      const int64_t n = level < 0 ? 0 : level;
      ResidueRing R = ResidueRing::make(par, n + 1);
      KummerClass K = kummer_class_sigma1(par, n, R);
      ordered_json j;
      j["params"] = json_of(par);
      j["n"] = dec(n);
      j["class"] = json_of(K);
      return emit(j, out_path);
    }

    if (sc_inv->parsed()) {
      const int64_t n_max = level < 0 ? 2 : level;
      InvariantEnumeration E = invariant_class_enumeration(par, n_max);
      ordered_json j;
      j["params"] = json_of(par);
      j["enumeration"] = json_of(E);
      const int rc = emit(j, out_path);
      return rc != 0 ? rc : (E.cyclic_match ? 0 : 1);
    }

    if (sc_pi0->parsed()) {
      const int64_t n = level < 0 ? 0 : level;
      ResidueRing R = ResidueRing::make(par, n + 1);
      KummerClass K = kummer_class_sigma1(par, n, R);
      ordered_json j;
      j["params"] = json_of(par);
      j["n"] = dec(n);
      j["pi0_over_C"] = dec(pi0_over_C(K));
      j["pi0_over_Kbreve"] = dec(pi0_over_Kbreve(K));
      return emit(j, out_path);
    }

    if (sc_lemeq->parsed()) {
      SimplexPresentation S = standard_simplex(
          par, SimplexType::make(par, std::vector<int64_t>(static_cast<size_t>(par.d + 1), 1)));
      ResidueRing ring2 = ResidueRing::make(par, 2);
      LemeqReport rep = verify_lemeqsigsig(par, S, ring2);
      ordered_json j;
      j["params"] = json_of(par);
      j["report"] = json_of(rep);
      const int rc = emit(j, out_path);
      return rc != 0 ? rc : ((rep.ok && rep.bijection_ok && rep.x_exponents_ok) ? 0 : 1);
    }

    if (sc_vertex->parsed()) {
      SimplexPresentation S = standard_simplex(
          par, SimplexType::make(par, std::vector<int64_t>(static_cast<size_t>(par.d + 1), 1)));
      ResidueRing ring1 = ResidueRing::make(par, 1);
      const bool ok = vertex_consistency_check(par, S, ring1);
      ordered_json j;
      j["params"] = json_of(par);
      j["ok"] = ok;
      const int rc = emit(j, out_path);
      return rc != 0 ? rc : (ok ? 0 : 1);
    }

    if (sc_norm->parsed()) {
      CoverRing R = CoverRing::make(par);
      BaseFrac nt = ce_norm_det(R, ce_t(R));
      MPoly signedP = (R.Nt() % 2 == 0) ? mp_neg(R.F, R.P) : R.P;
      const bool norm_t_ok = bf_eq(nt, bf_poly(R, signedP));
      ordered_json j;
      j["params"] = json_of(par);
      j["norm_t"] = bf_to_string(R, nt);
      j["expected"] = bf_to_string(R, bf_poly(R, signedP));
      j["norm_t_ok"] = norm_t_ok;
      bool conj_ok = true;
      if (par.Nt <= 6) {
        Rng rng(seed);
        for (int t = 0; t < 8; ++t) {
          CoverElement fv = ce_random(R, rng);
          conj_ok = conj_ok && bf_eq(ce_norm_det(R, fv), ce_norm_conjugates(R, fv));
        }
        j["conjugate_cross_check"] = ordered_json{{"samples", dec(8)}, {"ok", conj_ok}};
      } else {
        j["conjugate_cross_check"] = ordered_json{{"skipped", true}};
      }
      bool val_ok = true;
      Rng rng(seed + 1);
      for (int t = 0; t < 25 && val_ok; ++t) {
        CoverElement fa = ce_random(R, rng);
        CoverElement fb = ce_random(R, rng);
        CoverElement fab = ce_mul(R, fa, fb);
        for (size_t idx : {size_t{0}, R.lforms.size() - 1}) {
          Valuation va = ce_val_hyperplane(R, fa, idx);
          Valuation vb = ce_val_hyperplane(R, fb, idx);
          Valuation vab = ce_val_hyperplane(R, fab, idx);
          val_ok = val_ok && va.unique && vb.unique && vab.unique && vab.v == va.v + vb.v;
        }
        Valuation ia = ce_val_infinity(R, fa);
        Valuation ib = ce_val_infinity(R, fb);
        Valuation iab = ce_val_infinity(R, fab);
        val_ok = val_ok && ia.unique && ib.unique && iab.unique && iab.v == ia.v + ib.v;
      }
      j["valuations"] = ordered_json{{"samples", dec(25)}, {"ok", val_ok}};
      const int rc = emit(j, out_path);
      return rc != 0 ? rc : ((norm_t_ok && conj_ok && val_ok) ? 0 : 1);
    }

    if (sc_idem->parsed()) {
      IdempotentReport rep = idempotent_check(par.q);
      ordered_json j;
      j["q"] = dec(par.q);
      j["report"] = json_of(rep);
      const int rc = emit(j, out_path);
      return rc != 0 ? rc : (rep.ok ? 0 : 1);
    }

    std::cerr << "no subcommand handled\n";
    return 2;
  } catch (const sigma1::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
