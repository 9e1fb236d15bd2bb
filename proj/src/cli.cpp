#include "ellfgl/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "CLI11.hpp"
#include "ellfgl/curve.hpp"
#include "ellfgl/fgl.hpp"
#include "ellfgl/genus.hpp"
#include "ellfgl/io.hpp"
#include "ellfgl/pde.hpp"
#include "ellfgl/reproduce.hpp"
#include "ellfgl/weierstrass.hpp"

namespace ellfgl {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// name=value pairs from --set; values are exact rationals.
std::map<std::string, SubstValue> parse_assignments(const std::vector<std::string>& items, const VarSpecPtr& ring) {
  std::map<std::string, SubstValue> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=value, got '" + item + "'");
    std::string name = item.substr(0, eq);
    if (!ring->find(name)) throw UsageError("unknown parameter '" + name + "'");
    try {
      out[name] = parse_rational(item.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

MPoly substitute(const MPoly& p, const std::map<std::string, SubstValue>& a) { return a.empty() ? p : specialize(p, a); }

MuParams mu_from(const std::vector<std::string>& items) {
  auto a = parse_assignments(items, mu_ring());
  return symbolic_mu().map([&](const MPoly& p) { return substitute(p, a); });
}

// Symbolic parameters of each genus, named as in the library.
std::pair<VarSpecPtr, std::vector<std::string>> genus_parameters(GenusKind k) {
  switch (k) {
    case GenusKind::Linear: return {make_spec({}), {}};
    case GenusKind::Multiplicative: return {make_spec({{"mu", -2}}), {"mu"}};
    case GenusKind::Todd2: return {make_spec({{"a", -2}, {"b", -4}}), {"a", "b"}};
    case GenusKind::Tanh: return {make_spec({{"mu2", -4}}), {"mu2"}};
    case GenusKind::Sine: return {make_spec({{"delta", -4}, {"eps", -8}}), {"delta", "eps"}};
    case GenusKind::GeneralElliptic: return {mu_ring(), mu_ring()->names()};
    case GenusKind::Krichever: return {krichever_ring(), krichever_ring()->names()};
    case GenusKind::GeneralKrichever: return {general_krichever_ring(), general_krichever_ring()->names()};
  }
  throw std::logic_error("unreachable");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> checks_from(const std::string& list, const std::vector<std::string>& allowed,
                                     const std::string& noun = "check") {
  auto items = split_list(list);
  for (const auto& c : items) {
    if (std::find(allowed.begin(), allowed.end(), c) == allowed.end()) throw UsageError("unknown " + noun + " '" + c + "'");
  }
  if (items.empty()) throw UsageError("empty " + noun + " list");
  return items;
}

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  int emit(const Json& j) {
    out_ << j.dump(2) << "\n";
    return 0;
  }
  // Reports go out in full; the exit code reflects their verdict.
  int emit_report(const std::string& command, const Report& r, Json extra = Json::object()) {
    Json j = to_json(r);
    j["command"] = command;
    for (auto& [k, v] : extra.items()) j[k] = v;
    out_ << j.dump(2) << "\n";
    return r.passed() ? 0 : 1;
  }
  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with elliptic formal group laws", "ellfgl"};
  app.require_subcommand(1);
  Runner run(out);
  std::function<int()> action;

  // Shared option storage; only one leaf subcommand is ever parsed. The
  // --order default differs per command and is applied after parsing.
  int order = 0;
  std::vector<std::string> sets;
  std::vector<std::tuple<CLI::App*, CLI::Option*, int>> order_defaults;
  auto order_opt = [&](CLI::App* c, int fallback, int min = 0) {
    auto* o = c->add_option("--order", order, "truncation order (default " + std::to_string(fallback) + ")")
                  ->check(CLI::Range(min, 1 << 20));
    order_defaults.emplace_back(c, o, fallback);
  };
  auto set_opt = [&](CLI::App* c) {
    c->add_option("--set,--mu", sets, "parameter assignment name=num/den (repeatable)");
  };

  // curve
  auto* curve = app.add_subcommand("curve", "Tate cubic expansion, discriminant, Weierstrass form");
  curve->require_subcommand(1);
  auto* curve_s = curve->add_subcommand("s", "s(t) from the cubic");
  set_opt(curve_s);
  order_opt(curve_s, 8, 3);
  curve_s->callback([&] { action = [&] { return run.emit(to_json(solve_tate_s(mu_from(sets), order))); }; });
  auto* curve_disc = curve->add_subcommand("disc", "discriminant");
  set_opt(curve_disc);
  curve_disc->callback([&] { action = [&] { return run.emit(to_json(discriminant(mu_from(sets)))); }; });
  auto* curve_reduce = curve->add_subcommand("reduce", "g2, g3 and Delta");
  set_opt(curve_reduce);
  curve_reduce->callback([&] {
    action = [&] {
      auto w = reduce_to_weierstrass(mu_from(sets));
      return run.emit({{"g2", to_json(w.g2)}, {"g3", to_json(w.g3)}, {"delta", to_json(w.delta)}});
    };
  });

  // fgl
  auto* fgl = app.add_subcommand("fgl", "the general elliptic formal group law");
  fgl->require_subcommand(1);
  std::string form = "fg";
  auto* fgl_build = fgl->add_subcommand("build", "F(t1, t2)");
  order_opt(fgl_build, 8);
  set_opt(fgl_build);
  fgl_build->add_option("--form", form, "closed form")->check(CLI::IsMember({"fg", "p", "m"}))->capture_default_str();
  fgl_build->callback([&] {
    action = [&] {
      GeneralForm f = form == "p" ? GeneralForm::PForm : form == "m" ? GeneralForm::MForm : GeneralForm::FG;
      return run.emit(to_json(build_general(mu_from(sets), order, f).F));
    };
  });

  std::string checks = "unit,comm,assoc,integrality";
  auto* fgl_verify = fgl->add_subcommand("verify", "axioms and integrality");
  order_opt(fgl_verify, 8);
  set_opt(fgl_verify);
  fgl_verify->add_option("--checks", checks, "comma-separated: unit,comm,assoc,integrality,grading")
      ->capture_default_str();
  fgl_verify->callback([&] {
    action = [&] {
      auto want = checks_from(checks, {"unit", "comm", "assoc", "integrality", "grading"});
      auto has = [&](const char* c) { return std::find(want.begin(), want.end(), c) != want.end(); };
      MuParams mu = mu_from(sets);
      FormalGroupLaw law = build_general(mu, order);
      Report all = verify_axioms(law, order);
      Report rep;
      for (const auto& c : all.checks) {
        if ((c.name == "unit" && has("unit")) || (c.name == "commutativity" && has("comm")) ||
            (c.name == "associativity" && has("assoc"))) {
          rep.checks.push_back(c);
        }
      }
      if (has("integrality")) {
        IntegralityResult r = verify_integrality(law.F, plain_domain(mu.ring()->names()));
        rep.add("integrality", r.integral, r.integral ? "" : "first failure at total degree " + std::to_string(r.k) +
                                                                  ": " + r.witness.to_string());
      }
      if (has("grading")) rep.merge(check_grading(law.F));
      return run.emit_report("fgl verify", rep, {{"order", order}});
    };
  });

  auto* fgl_logexp = fgl->add_subcommand("logexp", "logarithm and exponential");
  order_opt(fgl_logexp, 8);
  set_opt(fgl_logexp);
  fgl_logexp->callback([&] {
    action = [&] {
      ExpLogPair p = general_log_exp(mu_from(sets), order);
      return run.emit({{"exp", to_json(p.f)}, {"log", to_json(p.g)}});
    };
  });

  auto* fgl_ode = fgl->add_subcommand("ode-check", "differential equations for the exponential");
  order_opt(fgl_ode, 12);
  set_opt(fgl_ode);
  fgl_ode->callback([&] {
    action = [&] {
      if (sets.empty()) return run.emit_report("fgl ode-check", exponential_ode_suite(order));
      MuParams mu = mu_from(sets);
      return run.emit_report("fgl ode-check", check_exponential_ode(mu, general_log_exp(mu, order).f));
    };
  });

  int power_k = 2;
  auto* fgl_power = fgl->add_subcommand("power", "the power series [t]_k");
  order_opt(fgl_power, 8);
  set_opt(fgl_power);
  fgl_power->add_option("--k", power_k, "multiplier")->capture_default_str();
  fgl_power->callback([&] {
    action = [&] { return run.emit(to_json(power_system(build_general(mu_from(sets), order).F, power_k, order))); };
  });

  int h_mu1 = 0, h_mu3 = 0;
  auto* fgl_height = fgl->add_subcommand("height", "2-height of F(t, t)");
  order_opt(fgl_height, 12);
  fgl_height->add_option("--mu1", h_mu1, "0 or 1")->check(CLI::Range(0, 1))->capture_default_str();
  fgl_height->add_option("--mu3", h_mu3, "0 or 1")->check(CLI::Range(0, 1))->capture_default_str();
  fgl_height->callback([&] {
    action = [&] {
      MuParams mu = make_mu(mu_ring(), {std::to_string(h_mu1), "mu2", std::to_string(h_mu3), "mu4", "mu6"});
      HeightResult h = two_height(mu, order);
      Json j{{"order", h.order}, {"detail", h.detail}};
      j["height"] = h.height ? Json(*h.height) : Json("infinity");
      return run.emit(j);
    };
  });

  int aut_n = 2;
  auto* fgl_aut = fgl->add_subcommand("aut", "automorphisms of finite order");
  order_opt(fgl_aut, 12);
  fgl_aut->add_option("--n", aut_n, "order of the automorphism")->check(CLI::Range(2, 6))->required();
  fgl_aut->callback([&] {
    action = [&] {
      AutomorphismResult r = automorphism_check(aut_n, order);
      Report rep;
      rep.add("automorphism family", r.passed, r.detail);
      return run.emit_report("fgl aut", rep,
                             {{"n", aut_n}, {"forced_zero", r.forced_zero}, {"survivors", r.survivors}});
    };
  });

  // sigma
  auto* sigma = app.add_subcommand("sigma", "the Weierstrass sigma function");
  sigma->require_subcommand(1);
  int max_weight = 24;
  bool csv = false, json_flag = false;
  auto* sigma_table = sigma->add_subcommand("table", "integer coefficients a_{i,j}");
  sigma_table->add_option("--max-weight", max_weight, "largest 2i + 3j")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  auto* csv_opt = sigma_table->add_flag("--csv", csv, "CSV rows i,j,a_ij");
  sigma_table->add_flag("--json", json_flag, "JSON output (default)")->excludes(csv_opt);
  sigma_table->callback([&] {
    action = [&] {
      SigmaTable t(max_weight);
      if (csv) {
        run.raw() << "i,j,a_ij\n";
        for (const auto& [ij, a] : t.entries()) run.raw() << ij.first << "," << ij.second << "," << a.get_str() << "\n";
        return 0;
      }
      Json rows = Json::array();
      for (const auto& [ij, a] : t.entries()) rows.push_back({{"i", ij.first}, {"j", ij.second}, {"a", a.get_str()}});
      return run.emit({{"max_weight", max_weight}, {"entries", rows}});
    };
  });

  bool conj = false, hurwitz = false, recursion = false;
  int maxsum = 30;
  auto* sigma_check = sigma->add_subcommand("check", "valuation conjecture, Hurwitz theorems, b recursion");
  sigma_check->add_flag("--conjecture", conj, "2- and 3-adic valuation conjecture");
  sigma_check->add_flag("--hurwitz", hurwitz, "Hurwitz integrality theorems");
  sigma_check->add_flag("--recursion", recursion, "recursion for b_{i,j}");
  sigma_check->add_option("--maxsum", maxsum, "bound on i + j")->check(CLI::NonNegativeNumber)->capture_default_str();
  order_opt(sigma_check, 24);
  sigma_check->callback([&] {
    action = [&] {
      if (!conj && !hurwitz && !recursion) conj = true;
      Report rep;
      Json extra = Json::object();
      if (conj) {
        ConjectureReport c = conjecture_check(maxsum);
        Json bad = Json::array();
        for (auto [i, j] : c.counterexamples) bad.push_back({{"i", i}, {"j", j}});
        rep.add("valuation conjecture", c.passed(),
                std::to_string(c.checked) + " entries with i + j <= " + std::to_string(maxsum));
        extra["counterexamples"] = bad;
        extra["zero_entries"] = c.zero_entries;
      }
      if (recursion) rep.merge(bij_recursion_check(maxsum));
      if (hurwitz) rep.merge(hurwitz_certificates(SigmaTable(std::max(order, 1)), order));
      return run.emit_report("sigma check", rep, extra);
    };
  });

  auto* sigma_series_cmd = sigma->add_subcommand("series", "sigma(u) over Q[g2, g3]");
  order_opt(sigma_series_cmd, 24);
  sigma_series_cmd->callback([&] {
    action = [&] { return run.emit(to_json(sigma_series(SigmaTable(std::max(order, 1)), order))); };
  });

  // genus
  auto* genus = app.add_subcommand("genus", "Hirzebruch genera");
  genus->require_subcommand(1);
  std::string spec_name;
  int cpn_n = 8;
  auto* genus_cpn = genus->add_subcommand("cpn", "values on CP^n");
  genus_cpn->add_option("--spec", spec_name,
                        "linear, multiplicative, todd2, tanh, sine, general-elliptic, krichever, general-krichever")
      ->required();
  genus_cpn->add_option("--n", cpn_n, "number of values")->check(CLI::NonNegativeNumber)->capture_default_str();
  set_opt(genus_cpn);
  genus_cpn->callback([&] {
    action = [&] {
      auto kind = parse_genus_kind(spec_name);
      if (!kind) throw UsageError("unknown genus '" + spec_name + "'");
      auto [ring, names] = genus_parameters(*kind);
      auto a = parse_assignments(sets, ring);
      GenusSpec spec{*kind, {}};
      for (const auto& n : names) spec.params.push_back(substitute(MPoly::variable(ring, n), a));
      Json values = Json::array();
      for (const auto& v : cpn_values(spec, cpn_n)) values.push_back(to_json(v));
      return run.emit({{"genus", genus_name(*kind)}, {"values", values}});
    };
  });

  std::string kr_checks;
  auto* genus_kr = genus->add_subcommand("krichever", "Krichever genus checks");
  order_opt(genus_kr, 12);
  genus_kr->add_option("--check", kr_checks, "comma-separated: integrality,ode,link")->default_val("integrality,ode,link");
  genus_kr->callback([&] {
    action = [&] {
      Report rep;
      for (const auto& c : checks_from(kr_checks, {"integrality", "ode", "link"})) {
        if (c == "integrality") rep.merge(krichever_integrality(order));
        if (c == "ode") rep.merge(addition_ode_check(std::max(order, 8)).report);
        if (c == "link") rep.merge(krichever_fgl_link(order));
      }
      return run.emit_report("genus krichever", rep, {{"order", order}});
    };
  });

  std::string gk_checks;
  auto* genus_gk = genus->add_subcommand("general-krichever", "general Krichever genus checks");
  order_opt(genus_gk, 12);
  genus_gk->add_option("--check", gk_checks, "comma-separated: integrality,th30")->default_val("integrality,th30");
  genus_gk->callback([&] {
    action = [&] {
      Report rep;
      for (const auto& c : checks_from(gk_checks, {"integrality", "th30"})) {
        if (c == "integrality") rep.merge(general_krichever_integrality(order));
        if (c == "th30") rep.merge(th30_cross_check(order));
      }
      return run.emit_report("genus general-krichever", rep, {{"order", order}});
    };
  });

  // pde
  auto* pde = app.add_subcommand("pde", "Hopf equations and the associahedron");
  pde->require_subcommand(1);
  std::string path_kind = "cubic";
  auto* pde_hopf = pde->add_subcommand("hopf", "Hopf-type equation along a path of curves");
  order_opt(pde_hopf, 12);
  pde_hopf->add_option("--kind", path_kind, "cubic or linear")
      ->check(CLI::IsMember({"cubic", "linear"}))
      ->capture_default_str();
  pde_hopf->callback([&] {
    action = [&] {
      Report rep;
      if (path_kind == "cubic") {
        PathSpec p = symbolic_path(PathKind::Cubic);
        rep = hopf_check_cubic(p, order);
        rep.merge(invariant_weierstrass_check(p));
      } else {
        rep = hopf_check_linear(symbolic_path(PathKind::Linear), order);
      }
      return run.emit_report("pde hopf", rep, {{"kind", path_kind}, {"order", order}});
    };
  });

  int stasheff_n = 6;
  bool stasheff_json = false;
  auto* pde_stasheff = pde->add_subcommand("stasheff", "face numbers of associahedra");
  pde_stasheff->add_option("--n", stasheff_n, "largest dimension")->check(CLI::NonNegativeNumber)->capture_default_str();
  pde_stasheff->add_flag("--json", stasheff_json, "JSON output");
  pde_stasheff->callback([&] {
    action = [&] {
      AssociahedronData d = associahedron_gf(stasheff_n);
      if (stasheff_json) {
        Json rows = Json::array();
        for (const auto& f : d.faces) {
          Json row = Json::array();
          for (const auto& x : f) row.push_back(x.get_str());
          rows.push_back(row);
        }
        return run.emit_report("pde stasheff", d.report, {{"faces", rows}});
      }
      run.raw() << "n: f_0 f_1 ... f_n\n";
      for (std::size_t n = 0; n < d.faces.size(); ++n) {
        run.raw() << n << ":";
        for (const auto& x : d.faces[n]) run.raw() << " " << x.get_str();
        run.raw() << "\n";
      }
      return d.report.passed() ? 0 : 1;
    };
  });

  // reproduce
  std::string only;
  bool repro_json = false;
  auto* repro = app.add_subcommand("reproduce", "run every reference example as a named check");
  repro->add_option("--only", only, "comma-separated groups: ring,series,curve,fgl,sigma,genus,pde");
  repro->add_flag("--json", repro_json, "JSON report");
  repro->callback([&] {
    action = [&] {
      const std::vector<std::string> groups{"ring", "series", "curve", "fgl", "sigma", "genus", "pde"};
      auto filter = only.empty() ? std::vector<std::string>{} : checks_from(only, groups, "group");
      auto results = reproduce_anchors(filter);
      bool all = std::all_of(results.begin(), results.end(), [](const AnchorOutcome& o) { return o.passed; });
      if (repro_json) {
        Json rows = Json::array();
        for (const auto& o : results) {
          rows.push_back({{"group", o.group}, {"name", o.name}, {"passed", o.passed}, {"detail", o.detail}});
        }
        run.emit({{"passed", all}, {"anchors", rows}});
      } else {
        for (const auto& o : results) {
          run.raw() << (o.passed ? "PASS " : "FAIL ") << o.group << ": " << o.name;
          if (!o.passed && !o.detail.empty()) run.raw() << " (" << o.detail << ")";
          run.raw() << "\n";
        }
      }
      return all ? 0 : 1;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (auto [cmd, opt, fallback] : order_defaults) {
      if (cmd->parsed() && opt->count() == 0) order = fallback;
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ellfgl
