#include "ellfgl/reproduce.hpp"

#include <algorithm>
#include <exception>

#include "ellfgl/curve.hpp"
#include "ellfgl/fgl.hpp"
#include "ellfgl/genus.hpp"
#include "ellfgl/pde.hpp"
#include "ellfgl/weierstrass.hpp"

namespace ellfgl {

namespace {

CheckResult ok(bool passed, std::string detail = {}) { return {{}, passed, std::move(detail)}; }

CheckResult from_report(const Report& r) {
  if (const CheckResult* bad = r.first_failure()) return ok(false, bad->name + ": " + bad->detail);
  return ok(true, std::to_string(r.checks.size()) + " checks");
}

// The named checks of a report, all of which must be present and pass.
CheckResult pick(const Report& r, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.name == n; });
    if (it == r.checks.end()) return ok(false, "missing check '" + n + "'");
    if (!it->passed) return ok(false, n + ": " + it->detail);
  }
  return ok(true);
}

MPoly M(const std::string& text) { return parse_poly(mu_ring(), text); }

CheckResult poly_equals(const MPoly& got, const MPoly& want) {
  return ok(got == want, got == want ? std::string{} : "got " + got.to_string() + ", expected " + want.to_string());
}

CheckResult disc_anchor(const std::array<std::string, 5>& mu, const std::string& expected) {
  return poly_equals(discriminant(make_mu(mu_ring(), mu)), M(expected));
}

CheckResult ode_anchor(const std::array<std::string, 5>& entries, int order) {
  MuParams mu = make_mu(mu_ring(), entries);
  return from_report(check_exponential_ode(mu, general_log_exp(mu, order).f));
}

CheckResult height_anchor(const std::array<std::string, 5>& entries, std::optional<int> expected) {
  HeightResult h = two_height(make_mu(mu_ring(), entries), 12);
  return ok(h.height == expected, h.detail);
}

std::vector<Anchor> build_anchors() {
  std::vector<Anchor> a;
  auto add = [&](std::string group, std::string name, std::function<CheckResult()> fn) {
    a.push_back({std::move(group), std::move(name), std::move(fn)});
  };

  add("ring", "weight of mu3 is -6", [] { return ok(mu_ring()->weight(*mu_ring()->find("mu3")) == -6); });
  add("ring", "nu(2) = 2 and nu(7) = 7", [] { return ok(nu(2) == 2 && nu(7) == 7); });

  add("series", "reverse of the multiplicative logarithm", [] {
    auto R = make_spec({{"mu", -2}});
    MPoly mu = parse_poly(R, "mu");
    const int N = 10;
    USeries g(R, {"t"}, N);
    for (unsigned k = 1; k <= unsigned(N); ++k) g.set(k, pow(mu, k - 1) * ratio(1, k));
    USeries f = reverse(g);
    for (unsigned k = 1; k <= unsigned(N); ++k) {
      if (f.coeff(k) != pow(mu, k - 1) * ratio(k % 2 ? 1 : -1, factorial(k))) return ok(false, "u^" + std::to_string(k));
    }
    return ok(true);
  });

  add("curve", "Tate expansion through t^6", [] {
    USeries s = solve_tate_s(symbolic_mu(), 6);
    bool good = s.coeff(3) == M("1") && s.coeff(4) == M("mu1") && s.coeff(5) == M("mu1^2 + mu2") &&
                s.coeff(6) == M("mu3 + 2*mu2*mu1 + mu1^3");
    return ok(good);
  });
  add("curve", "Catalan numbers in the lemniscatic case", [] { return from_report(catalan_lemniscatic_check(10)); });
  add("curve", "Delta = -64 mu4^3", [] { return disc_anchor({"0", "0", "0", "mu4", "0"}, "-64*mu4^3"); });
  add("curve", "Delta = -27 mu3^4", [] { return disc_anchor({"0", "0", "mu3", "0", "0"}, "-27*mu3^4"); });
  add("curve", "Delta = -432 mu6^2", [] { return disc_anchor({"0", "0", "0", "0", "mu6"}, "-432*mu6^2"); });
  add("curve", "Delta = -27 (4 mu6 + mu3^2)^2",
      [] { return disc_anchor({"0", "0", "mu3", "0", "mu6"}, "-27*(4*mu6 + mu3^2)^2"); });
  add("curve", "g2 = -4 mu4, g3 = -4 mu6", [] {
    auto w = reduce_to_weierstrass(make_mu(mu_ring(), {"0", "0", "0", "mu4", "mu6"}));
    return ok(w.g2 == M("-4*mu4") && w.g3 == M("-4*mu6"));
  });
  add("curve", "g2, g3 when only mu1, mu2 are nonzero", [] {
    auto w = reduce_to_weierstrass(make_mu(mu_ring(), {"mu1", "mu2", "0", "0", "0"}));
    return ok(w.g2 == M("(mu1^2 + 4*mu2)^2/12") && w.g3 == M("-(mu1^2 + 4*mu2)^3/216"));
  });

  add("fgl", "general law modulo decomposables", [] {
    E1Data d = e1_reduction(build_general(symbolic_mu(), 8).F);
    return ok(!d.shape_failure && d.reduced == general_law_e1(8));
  });
  add("fgl", "two-parameter Todd law has t1 t2 coefficient -a", [] {
    auto R = make_spec({{"a", -2}, {"b", -4}});
    MPoly x = parse_poly(R, "a"), y = parse_poly(R, "b");
    return ok(build_classical(R, {LawKind::Todd2, {x, y}}, 6).F[{1, 1}] == -x);
  });
  add("fgl", "sine law equals the general law on (0, delta, 0, (delta^2 - eps)/4, 0)", [] {
    auto R = make_spec({{"delta", -4}, {"eps", -8}});
    MPoly d = parse_poly(R, "delta"), e = parse_poly(R, "eps"), z(R);
    BSeries sine = build_classical(R, {LawKind::Sine, {d, e}}, 10).F;
    return ok(!first_difference(sine, build_general({z, d, z, (d * d - e) * Coeff(1, 4), z}, 10).F, 10));
  });
  add("fgl", "general law is integral over Z[mu]", [] {
    return ok(verify_integrality(build_general(symbolic_mu(), 10).F, plain_domain(mu_ring()->names())).integral);
  });
  add("fgl", "sine law is integral over Z[mu2, mu4]", [] {
    auto R = make_spec({{"mu2", -4}, {"mu4", -8}});
    MPoly m2 = parse_poly(R, "mu2"), m4 = parse_poly(R, "mu4");
    BSeries F = build_classical(R, {LawKind::Sine, {m2, m2 * m2 - Coeff(4) * m4}}, 10).F;
    return ok(verify_integrality(F, plain_domain({"mu2", "mu4"})).integral);
  });
  add("fgl", "multiplicative logarithm and exponential", [] {
    auto R = make_spec({{"mu", -2}});
    MPoly mu = parse_poly(R, "mu");
    ExpLogPair p = log_exp(build_classical(R, {LawKind::Multiplicative, {mu}}, 8).F);
    for (unsigned k = 1; k <= 8; ++k) {
      if (p.g.coeff(k) != pow(mu, k - 1) * ratio(1, k)) return ok(false, "g at t^" + std::to_string(k));
      if (p.f.coeff(k) != pow(mu, k - 1) * ratio(k % 2 ? 1 : -1, factorial(k))) {
        return ok(false, "f at u^" + std::to_string(k));
      }
    }
    return ok(true);
  });
  add("fgl", "exponential modulo decomposables", [] {
    E1Data d = e1_reduction(build_general(symbolic_mu(), 8).F);
    bool good = d.b[0] == M("-mu1/2") && d.b[1] == M("-mu2/3") && d.b[2] == M("-mu3/2") &&
                d.b[3] == M("-2*mu4/5") && d.b[4].is_zero() && d.b[5] == M("-3*mu6/7");
    return ok(good);
  });
  add("fgl", "Riccati equation for (mu1, mu2, 0, 0, 0)", [] { return ode_anchor({"mu1", "mu2", "0", "0", "0"}, 14); });
  add("fgl", "f'^2 + 4 mu3 f^3 = 1 for (0, 0, mu3, 0, 0)", [] { return ode_anchor({"0", "0", "mu3", "0", "0"}, 14); });
  add("fgl", "27 mu6 f^6 = (1 - f')(2 + f')^2 for (0, 0, 0, 0, mu6)",
      [] { return ode_anchor({"0", "0", "0", "0", "mu6"}, 14); });
  add("fgl", "height 1 when mu1 = 1", [] { return height_anchor({"1", "mu2", "mu3", "mu4", "mu6"}, 1); });
  add("fgl", "height 2 when mu1 = 0, mu3 = 1", [] { return height_anchor({"0", "mu2", "1", "mu4", "mu6"}, 2); });
  add("fgl", "infinite height when mu1 = mu3 = 0",
      [] { return height_anchor({"0", "mu2", "0", "mu4", "mu6"}, std::nullopt); });
  for (int n : {2, 6, 5}) {
    add("fgl", "automorphisms of order " + std::to_string(n), [n] {
      AutomorphismResult r = automorphism_check(n, 12);
      bool good = r.passed && (n != 5 || r.survivors.empty());
      return ok(good, r.detail);
    });
  }
  add("fgl", "lemniscatic generator relations", [] {
    return pick(lemniscatic_generators(16),
                {"phi(a4) = -2 mu4", "2 alpha2 = -alpha1^2", "4 alpha3 = 3 alpha1^3 + 2 alpha2 alpha1 = 2 alpha1^3"});
  });
  add("fgl", "reduction to the standard curve is a homomorphism",
      [] { return from_report(verify_reduction(symbolic_mu(), 8)); });

  add("sigma", "explicit a_{i,j}", [] {
    SigmaTable t(10);
    bool good = t.at(0, 0) == 1 && t.at(1, 0) == -1 && t.at(2, 0) == -9 && t.at(0, 1) == -3 && t.at(1, 1) == -18 &&
                t.at(2, 1) == 513 && t.at(3, 0) == 69 && t.at(4, 0) == 321 && t.at(3, 1) == 33588 &&
                t.at(0, 2) == -54 && t.at(1, 2) == 4968;
    return ok(good);
  });
  add("sigma", "initial segment of sigma", [] {
    auto R = g_ring();
    USeries s = sigma_series(SigmaTable(6), 11);
    bool good = s.coeff(1) == parse_poly(R, "1") && s.coeff(5) == parse_poly(R, "-g2/240") &&
                s.coeff(7) == parse_poly(R, "-6*g3/5040") && s.coeff(9) == parse_poly(R, "-g2^2/(4*40320)") &&
                s.coeff(11) == parse_poly(R, "-18*g2*g3/39916800");
    return ok(good);
  });
  add("sigma", "Weierstrass equation for wp", [] {
    auto R = g_ring();
    SigmaSeries s = sigma_family(sigma_series(SigmaTable(13), 26));
    USeries r = weierstrass_ode_residual(s, MPoly::variable(R, "g2"), MPoly::variable(R, "g3"));
    return ok(r.is_zero());
  });
  add("sigma", "sigma is Hurwitz over Z[g2/2, 2 g3]", [] {
    auto R = g_ring();
    USeries s = sigma_series(SigmaTable(12), 24);
    IntegralityDomain d{{{"g2", ratio(1, 2)}, {"g3", Coeff(2)}}, {}, "Z[g2/2, 2 g3]"};
    IntegralityResult r = hurwitz_integral(s, d);
    return ok(r.integral, r.integral ? "" : "u^" + std::to_string(r.k) + ": " + r.witness.to_string());
  });
  add("sigma", "exponential of the (0, 0, 0, mu4, mu6) law from wp", [] {
    MuParams mu = make_mu(mu_ring(), {"0", "0", "0", "mu4", "mu6"});
    USeries f = weier_exponential(SigmaTable(8), mu, 14);
    return ok(f == general_log_exp(mu, 14).f);
  });
  add("sigma", "mu1 f = 1 - exp(-mu1 u) for (mu1, 0, 0, 0, 0)", [] {
    MuParams mu = make_mu(mu_ring(), {"mu1", "0", "0", "0", "0"});
    USeries f = weier_exponential(SigmaTable(8), mu, 14);
    for (unsigned k = 1; k <= 14; ++k) {
      if (f.coeff(k) != pow(mu.mu1, k - 1) * ratio(k % 2 ? 1 : -1, factorial(k))) return ok(false);
    }
    return ok(true);
  });
  add("sigma", "valuation conjecture for i + j <= 30", [] {
    ConjectureReport r = conjecture_check(30);
    return ok(r.passed(), std::to_string(r.checked) + " entries");
  });

  add("genus", "Todd genus at b = 0", [] { return pick(todd2_exponential_check(9), {"b = 0 gives the multiplicative exponential"}); });
  add("genus", "p2 = a2 and p3 = a3", [] {
    auto e = psi_expansion(6);
    return ok(e.p[2] == parse_poly(e.ring, "a2") && e.p[3] == parse_poly(e.ring, "b3"));
  });
  add("genus", "Krichever exponential is Hurwitz over Z[a1, a2, a3, a4]",
      [] { return from_report(krichever_integrality(16)); });
  add("genus", "a1 = 0: (ln Phi)' = -1/f", [] {
    return from_report(th30_cross_check(make_mu(mu_ring(), {"0", "mu2", "mu3", "mu4", "0"}), 10));
  });
  add("genus", "general Krichever exponential is Hurwitz over Z[a1, a2, a3, a4, a6]",
      [] { return from_report(general_krichever_integrality(14)); });
  add("genus", "mu6 = 0: (ln Phi)' = -1/f", [] {
    return from_report(th30_cross_check(make_mu(mu_ring(), {"mu1", "mu2", "mu3", "mu4", "0"}), 10));
  });
  add("genus", "sine exponential satisfies the addition equation", [] { return from_report(sine_addition_check(14)); });

  add("pde", "S(t, 0) = s0(t)", [] {
    return pick(hopf_check_cubic(symbolic_path(PathKind::Cubic), 10), {"initial condition S(t,0) = s0(t)"});
  });
  add("pde", "g2 and g3 constant along the cubic path",
      [] { return from_report(invariant_weierstrass_check(symbolic_path(PathKind::Cubic))); });
  return a;
}

}  // namespace

const std::vector<Anchor>& reference_anchors() {
  static const std::vector<Anchor> anchors = build_anchors();
  return anchors;
}

std::vector<AnchorOutcome> reproduce_anchors(const std::vector<std::string>& only) {
  std::vector<AnchorOutcome> out;
  for (const auto& a : reference_anchors()) {
    if (!only.empty() && std::find(only.begin(), only.end(), a.group) == only.end()) continue;
    AnchorOutcome o{a.group, a.name, false, {}};
    try {
      CheckResult r = a.run();
      o.passed = r.passed;
      o.detail = r.detail;
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace ellfgl
