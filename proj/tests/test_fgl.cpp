#include "doctest.h"
#include "ellfgl/fgl.hpp"
#include "support.hpp"

using namespace ellfgl;
using ellfgl::testing::Gen;
using ellfgl::testing::P;

namespace {

// Logarithm from the textbook invariant differential dx/(2y + mu1 x + mu3)
// written in t = -x/y, s = -1/y. With v = s/t^3 it equals
// (2v + t v') / (2v - mu1 t v - mu3 t^3 v^2) dt. Nothing here uses the
// closed forms of the group law.
USeries invariant_log(const MuParams& mu, int order) {
  USeries s = solve_tate_s(mu, order + 3);
  USeries v = shift_down(s, 3).truncated(order);
  USeries t = variable_series<1>(mu.ring(), {"t"}, 0, order);
  USeries tv = shift_up(differentiate(v), 1);
  USeries num = Coeff(2) * v + tv;
  USeries t3v2 = shift_up(v * v, 3).truncated(order);
  USeries den = Coeff(2) * v - mu.mu1 * (t * v) - mu.mu3 * t3v2;
  return integrate((num / den).truncated(order - 1));
}

// f(g(t1) + g(t2)) for a logarithm g.
BSeries law_from_log(const USeries& g) {
  const int n = g.order();
  USeries f = reverse(g);
  BSeries x = variable_series<2>(g.ring(), kLawVars, 0, n);
  BSeries y = variable_series<2>(g.ring(), kLawVars, 1, n);
  BSeries sum = compose<2>(g, x) + compose<2>(g, y);
  return compose<2>(f, sum);
}

MuParams random_int_mu(Gen& gen) {
  auto R = mu_ring();
  auto c = [&]() { return MPoly::constant(R, gen.small(-3, 3)); };
  return {c(), c(), c(), c(), c()};
}

}  // namespace

TEST_CASE("chord data") {
  auto R = mu_ring();
  ChordData c = build_chord(symbolic_mu(), 5);
  CHECK(c.m[{2, 0}] == P(R, "1"));
  CHECK(c.m[{1, 1}] == P(R, "1"));
  CHECK(c.m[{0, 2}] == P(R, "1"));
  CHECK(c.m[{2, 1}] == P(R, "mu1"));
  // b = -t1 t2 (t1 + t2) - mu1 t1 t2 (t1^2 + t1 t2 + t2^2) + O(6)
  CHECK(c.b[{2, 1}] == P(R, "-1"));
  CHECK(c.b[{1, 2}] == P(R, "-1"));
  CHECK(c.b[{3, 1}] == P(R, "-mu1"));
  CHECK(c.b[{2, 2}] == P(R, "-mu1"));
  CHECK(c.b[{3, 0}].is_zero());

  ChordData z = build_chord(make_mu(R, {"0", "0", "0", "0", "0"}), 6);
  CHECK(z.n == z.m + z.p);
  CHECK_THROWS_AS(build_chord(symbolic_mu(), 1), std::invalid_argument);
}

TEST_CASE("general law at mu = 0 is additive") {
  auto R = mu_ring();
  FormalGroupLaw law = build_general(make_mu(R, {"0", "0", "0", "0", "0"}), 7);
  FormalGroupLaw lin = build_classical(R, {LawKind::Linear, {}}, 7);
  CHECK(law.F == lin.F);
}

TEST_CASE("three closed forms agree symbolically") {
  auto mu = symbolic_mu();
  const int N = 7;
  BSeries fg = build_general(mu, N, GeneralForm::FG).F;
  BSeries pf = build_general(mu, N, GeneralForm::PForm).F;
  BSeries mf = build_general(mu, N, GeneralForm::MForm).F;
  CHECK_FALSE(first_difference(fg, pf, N).has_value());
  CHECK_FALSE(first_difference(fg, mf, N).has_value());
  CHECK(fg[{1, 1}] == P(mu_ring(), "-mu1"));
}

TEST_CASE("closed form equals the law of the invariant differential") {
  auto mu = symbolic_mu();
  const int N = 6;
  BSeries F = build_general(mu, N).F;
  CHECK_FALSE(first_difference(F, law_from_log(invariant_log(mu, N)), N).has_value());

  Gen gen(41);
  for (int trial = 0; trial < 6; ++trial) {
    MuParams m = random_int_mu(gen);
    const int M = 10;
    BSeries Fm = build_general(m, M).F;
    CHECK_FALSE(first_difference(Fm, law_from_log(invariant_log(m, M)), M).has_value());
  }
}

TEST_CASE("axioms, grading, symmetry and integrality of the general law") {
  auto mu = symbolic_mu();
  FormalGroupLaw law = build_general(mu, 6);
  Report rep = verify_axioms(law, 6);
  CHECK(rep.passed());
  CHECK(law.certified.size() == 3);
  CHECK(check_grading(law.F).passed());
  CHECK(verify_integrality(law.F, plain_domain({"mu1", "mu2", "mu3", "mu4", "mu6"})).integral);
}

TEST_CASE("associativity catches a corrupted coefficient") {
  auto mu = symbolic_mu();
  FormalGroupLaw law = build_general(mu, 5);
  law.F.at({2, 1}) += P(mu_ring(), "1");
  law.F.at({1, 2}) += P(mu_ring(), "1");
  Report rep = verify_axioms(law, 5);
  REQUIRE_FALSE(rep.passed());
  CHECK(rep.first_failure()->name == "associativity");
  CHECK(law.certified.empty());
}

TEST_CASE("classical laws") {
  auto R = make_spec({{"a", -2}, {"b", -4}});
  MPoly a = P(R, "a"), b = P(R, "b");
  FormalGroupLaw todd = build_classical(R, {LawKind::Todd2, {a, b}}, 6);
  CHECK(todd.F[{1, 1}] == -a);
  CHECK(todd.F[{2, 2}] == -(a * b));
  CHECK(todd.F[{2, 1}] == b);  // (t1 + t2) b t1 t2 from the geometric series
  CHECK(verify_axioms(todd, 6).passed());

  FormalGroupLaw tanh = build_classical(R, {LawKind::Tanh, {b}}, 6);
  CHECK(tanh.F[{1, 1}].is_zero());
  CHECK(tanh.F[{2, 1}] == -b);
  CHECK(verify_axioms(tanh, 6).passed());

  FormalGroupLaw mult = build_classical(R, {LawKind::Multiplicative, {a}}, 6);
  CHECK(verify_axioms(mult, 6).passed());
  CHECK_THROWS_AS(build_classical(R, {LawKind::Tanh, {}}, 6), std::invalid_argument);
}

TEST_CASE("sine law equals the general law on its family") {
  auto R = make_spec({{"delta", -4}, {"eps", -8}});
  MPoly d = P(R, "delta"), e = P(R, "eps"), z(R);
  BSeries sine = build_classical(R, {LawKind::Sine, {d, e}}, 10).F;
  MuParams mu{z, d, z, (d * d - e) * Coeff(1, 4), z};
  BSeries gen = build_general(mu, 10).F;
  CHECK_FALSE(first_difference(sine, gen, 10).has_value());
  auto R2 = make_spec({{"mu2", -4}, {"mu4", -8}});
  MPoly m2 = P(R2, "mu2"), m4 = P(R2, "mu4");
  BSeries sine2 = build_classical(R2, {LawKind::Sine, {m2, m2 * m2 - Coeff(4) * m4}}, 10).F;
  CHECK(verify_integrality(sine2, plain_domain({"mu2", "mu4"})).integral);
}

TEST_CASE("special forms F3, F1 and Fg") {
  auto R = mu_ring();
  MPoly z(R), m3 = P(R, "mu3"), m4 = P(R, "mu4"), m6 = P(R, "mu6");
  BSeries f3 = build_classical(R, {LawKind::F3, {m3}}, 8).F;
  CHECK(f3 == build_general({z, z, m3, z, z}, 8).F);
  // (t1 + t2) - mu3 t1 t2 (2 t1^2 + 3 t1 t2 + 2 t2^2) + O(t^7)
  CHECK(f3[{3, 1}] == Coeff(-2) * m3);
  CHECK(f3[{2, 2}] == Coeff(-3) * m3);
  for (unsigned i = 0; i <= 6; ++i) {
    for (unsigned j = 0; i + j <= 6; ++j) {
      if (i + j >= 2 && i + j != 4) CHECK(f3[{i, j}].is_zero());
    }
  }
  BSeries f1 = build_classical(R, {LawKind::F1, {m4, m6}}, 8).F;
  CHECK(f1 == build_general({z, z, z, m4, m6}, 8).F);
  BSeries fg = build_classical(R, {LawKind::Fg, {Coeff(-4) * m4, Coeff(-4) * m6}}, 8).F;
  CHECK(fg == f1);
}

TEST_CASE("m-form special case with mu1 = mu3 = 0") {
  auto R = mu_ring();
  MPoly z(R);
  MuParams mu{z, P(R, "mu2"), z, P(R, "mu4"), P(R, "mu6")};
  const int N = 8;
  ChordData c = build_chord(mu, N);
  BSeries I = constant_series<2>(R, kLawVars, P(R, "1"), N);
  BSeries xi = I + mu.mu2 * c.m + mu.mu4 * (c.m * c.m) + mu.mu6 * (c.m * c.m * c.m);
  BSeries top = mu.mu2 * I + Coeff(2) * (mu.mu4 * c.m) + Coeff(3) * (mu.mu6 * (c.m * c.m));
  BSeries S = variable_series<2>(R, kLawVars, 0, N) + variable_series<2>(R, kLawVars, 1, N);
  CHECK(build_general(mu, N, GeneralForm::MForm).F == S + c.b * top / xi);
}

TEST_CASE("logarithm and exponential of the multiplicative law") {
  auto R = make_spec({{"mu", -2}});
  MPoly mu = P(R, "mu");
  ExpLogPair p = log_exp(build_classical(R, {LawKind::Multiplicative, {mu}}, 8).F);
  for (unsigned k = 1; k <= 8; ++k) {
    CHECK(p.g.coeff(k) == pow(mu, k - 1) * Coeff(1, k));
    // (1 - e^{-mu u})/mu = sum (-1)^(k-1) mu^(k-1) u^k / k!
    CHECK(p.f.coeff(k) == pow(mu, k - 1) * ratio(k % 2 ? 1 : -1, factorial(k)));
  }
  ExpLogPair lin = log_exp(build_classical(R, {LawKind::Linear, {}}, 5).F);
  CHECK(lin.f == variable_series<1>(R, {"u"}, 0, 5));
  CHECK(lin.g == variable_series<1>(R, {"t"}, 0, 5));
}

TEST_CASE("rho computed from F and from the curve agree") {
  auto mu = symbolic_mu();
  BSeries F = build_general(mu, 8).F;
  ExpLogPair a = log_exp(F);
  USeries rho = rho_from_curve(mu, 7);
  CHECK(a.rho == rho);
  ExpLogPair b = general_log_exp(mu, 8);
  CHECK(a.f == b.f);
  CHECK(a.g == b.g);
  CHECK(compose<1>(b.f, b.g.renamed({"u"})) == variable_series<1>(mu.ring(), {"u"}, 0, 8));
}

TEST_CASE("exponential ODE examples") {
  auto R = mu_ring();
  MPoly z(R);
  MuParams ric{P(R, "mu1"), P(R, "mu2"), z, z, z};
  USeries f = general_log_exp(ric, 10).f;
  Report r = check_exponential_ode(ric, f);
  CHECK(r.passed());
  CHECK(r.checks.size() == 2);  // riccati, mu6 = 0

  MuParams only3{z, z, P(R, "mu3"), z, z};
  CHECK(ode_residual(OdeCase::F3, only3, general_log_exp(only3, 10).f).is_zero());
  MuParams only6{z, z, z, z, P(R, "mu6")};
  CHECK(ode_residual(OdeCase::Equianharmonic6, only6, general_log_exp(only6, 10).f).is_zero());

  // A perturbed exponential fails.
  USeries bad = f;
  bad.at({5}) += P(R, "1");
  CHECK_FALSE(check_exponential_ode(ric, bad).passed());
}

TEST_CASE("exponential ODE suite at moderate order") {
  Report r = exponential_ode_suite(10);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  CHECK(r.checks.size() == 10);
}

TEST_CASE("exponential is odd with 2-local coefficients when mu1 = mu3 = 0") {
  auto R = mu_ring();
  MPoly z(R);
  MuParams mu{z, P(R, "mu2"), z, P(R, "mu4"), P(R, "mu6")};
  ExpLogPair p = general_log_exp(mu, 13);
  for (unsigned k = 0; k <= 13; ++k) {
    if (k % 2 == 0) CHECK(p.f.coeff(k).is_zero());
    for (const auto& t : p.f.coeff(k).terms()) CHECK(mpz_odd_p(t.coeff.get_den_mpz_t()));
    for (const auto& t : p.g.coeff(k).terms()) CHECK(mpz_odd_p(t.coeff.get_den_mpz_t()));
  }
}

TEST_CASE("exponential of the general law is not integral") {
  ExpLogPair p = general_log_exp(symbolic_mu(), 6);
  IntegralityResult r = check_integral_coeffs(
      {p.f.coeff(0), p.f.coeff(1), p.f.coeff(2), p.f.coeff(3)}, plain_domain({"mu1", "mu2", "mu3", "mu4", "mu6"}));
  CHECK_FALSE(r.integral);
  CHECK(r.k == 2);  // -mu1/2 u^2
}

TEST_CASE("power systems") {
  auto R = make_spec({{"mu", -2}});
  MPoly mu = P(R, "mu");
  BSeries mult = build_classical(R, {LawKind::Multiplicative, {mu}}, 8).F;
  USeries two = power_system(mult, 2, 8);
  USeries expected(R, {"t"}, 8);
  expected.set(1u, P(R, "2"));
  expected.set(2u, -mu);
  CHECK(two == expected);
  CHECK(power_system(mult, 1, 8) == variable_series<1>(R, {"t"}, 0, 8));
  CHECK(power_system(mult, 0, 8).is_zero());

  auto M = symbolic_mu();
  const int N = 7;
  BSeries F = build_general(M, N).F;
  ExpLogPair el = log_exp(F);
  for (int a = -3; a <= 3; ++a) {
    USeries ta = power_system(F, a, N);
    // [t]_a = f(a g(t))
    USeries via_log = compose<1>(el.f, (Coeff(a) * el.g).renamed({"u"}).renamed({"t"}));
    CHECK(ta == via_log);
    for (int b = -3; b <= 3; ++b) {
      if (std::abs(a + b) > 3) continue;
      CHECK(compose<1>(F, ta, power_system(F, b, N)) == power_system(F, a + b, N));
    }
  }
  USeries tbar = inverse_series(F, N);
  CHECK(compose<1>(F, variable_series<1>(M.ring(), {"t"}, 0, N), tbar).is_zero());
}

TEST_CASE("doubling from the diagonal chord agrees with the bivariate law") {
  auto mu = symbolic_mu();
  BSeries F = build_general(mu, 8).F;
  CHECK(general_doubling(mu, 8) == diagonal(F, "t"));
}

TEST_CASE("two-height classification") {
  auto R = mu_ring();
  MuParams h1 = make_mu(R, {"1", "mu2", "mu3", "mu4", "mu6"});
  CHECK(two_height(h1, 12).height == 0 + 1);
  MuParams h2 = make_mu(R, {"0", "mu2", "1", "mu4", "mu6"});
  CHECK(two_height(h2, 12).height == 2);
  MuParams hinf = make_mu(R, {"0", "mu2", "0", "mu4", "mu6"});
  HeightResult r = two_height(hinf, 12);
  CHECK_FALSE(r.height.has_value());
  CHECK(two_height_lemma(symbolic_mu(), 10).passed());
  CHECK_THROWS_AS(two_height(make_mu(R, {"1/3", "0", "0", "0", "0"}), 6), std::invalid_argument);
}

TEST_CASE("automorphism families") {
  for (int n : {2, 3, 4, 6}) {
    AutomorphismResult r = automorphism_check(n, 12);
    INFO("n = " << n << ": " << r.detail);
    CHECK(r.passed);
  }
  AutomorphismResult five = automorphism_check(5, 12);
  CHECK(five.passed);
  CHECK(five.survivors.empty());
  CHECK(five.forced_zero.size() == 5);
  AutomorphismResult two = automorphism_check(2, 12);
  CHECK(two.forced_zero == std::vector<std::string>{"mu1", "mu3"});
}

TEST_CASE("general law modulo decomposables") {
  const int N = 8;
  BSeries F = build_general(symbolic_mu(), N).F;
  E1Data d = e1_reduction(F);
  CHECK_FALSE(d.shape_failure.has_value());
  CHECK(d.reduced == general_law_e1(N));
  auto R = mu_ring();
  CHECK(d.b[0] == P(R, "-mu1/2"));
  CHECK(d.b[1] == P(R, "-mu2/3"));
  CHECK(d.b[2] == P(R, "-mu3/2"));
  CHECK(d.b[3] == P(R, "-2*mu4/5"));
  CHECK(d.b[4].is_zero());
  CHECK(d.b[5] == P(R, "-3*mu6/7"));

  // The exponential modulo decomposables has the same coefficients.
  USeries f = log_exp(F).f;
  Decomposables dec{R->names()};
  for (unsigned n = 1; n < unsigned(N); ++n) CHECK(quotient_map(f.coeff(n + 1), dec) == d.b[n - 1]);

  BSeries lin = build_classical(R, {LawKind::Linear, {}}, 6).F;
  for (const auto& b : e1_reduction(lin).b) CHECK(b.is_zero());
  CHECK(d.reduced[{2, 1}] == d.reduced[{1, 2}]);
}

TEST_CASE("generator data and the lemniscatic relations") {
  Report r = lemniscatic_generators(16);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  auto R = make_spec({{"mu", -2}});
  BSeries mult = build_classical(R, {LawKind::Multiplicative, {P(R, "mu")}}, 6).F;
  TpData d = tp_data(mult, 2, 5);
  CHECK(d.c[0] == P(R, "1"));
  CHECK(d.c[1] == P(R, "-mu"));
  CHECK(d.c_hat[0] == P(R, "2"));
  CHECK(d.c_hat[1] == P(R, "-mu"));
}

TEST_CASE("reduction to the standard curve is a homomorphism") {
  CHECK(verify_reduction(symbolic_mu(), 6).passed());
  Gen gen(3);
  for (int trial = 0; trial < 3; ++trial) CHECK(verify_reduction(random_int_mu(gen), 9).passed());
}
