#include "doctest.h"
#include "ellfgl/fgl.hpp"
#include "ellfgl/weierstrass.hpp"
#include "support.hpp"

using namespace ellfgl;
using ellfgl::testing::Gen;
using ellfgl::testing::P;

namespace {

// Laurent coefficients of wp from the classical recurrence
// c_2 = g2/20, c_3 = g3/28, c_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m},
// wp = u^-2 + sum c_k u^(2k-2), so u^2 wp = 1 + sum c_k u^(2k). Independent of sigma.
std::vector<MPoly> wp_laurent(int kmax) {
  auto R = g_ring();
  std::vector<MPoly> c(std::size_t(kmax) + 1, MPoly(R));
  if (kmax >= 2) c[2] = P(R, "g2/20");
  if (kmax >= 3) c[3] = P(R, "g3/28");
  for (int k = 4; k <= kmax; ++k) {
    MPoly s(R);
    for (int m = 2; m <= k - 2; ++m) s += c[std::size_t(m)] * c[std::size_t(k - m)];
    c[std::size_t(k)] = s * ratio(3, Integer((2 * k + 1) * (k - 3)));
  }
  return c;
}

}  // namespace

TEST_CASE("sigma table entries") {
  SigmaTable t(14);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 0) == -1);
  CHECK(t.at(2, 0) == -9);
  CHECK(t.at(3, 0) == 69);
  CHECK(t.at(4, 0) == 321);
  CHECK(t.at(0, 1) == -3);
  CHECK(t.at(1, 1) == -18);
  CHECK(t.at(2, 1) == 513);
  CHECK(t.at(3, 1) == 4 * 27 * 311);
  CHECK(t.at(4, 1) == 27 * 5 * 20807);
  CHECK(t.at(0, 2) == -54);
  CHECK(t.at(1, 2) == 8 * 27 * 23);
  CHECK(t.at(2, 2) == 4 * 243 * 5 * 53);
  CHECK(t.at(3, 2) == 8 * 81 * 5 * 37 * 167);
  CHECK(t.at(4, 2) == -2 * 729 * 5 * 17 * 3037);
  CHECK(t.at(-1, 0) == 0);
  CHECK(t.at(40, 0) == 0);  // outside the table
}

TEST_CASE("sigma through u^11") {
  auto R = g_ring();
  USeries s = sigma_series(SigmaTable(8), 11);
  CHECK(s.coeff(1) == P(R, "1"));
  CHECK(s.coeff(5) == P(R, "-g2/240"));
  CHECK(s.coeff(7) == P(R, "-6*g3/5040"));
  CHECK(s.coeff(9) == P(R, "-g2^2/161280"));
  CHECK(s.coeff(11) == P(R, "-18*g2*g3/39916800"));
  for (unsigned k : {0u, 2u, 3u, 4u, 6u, 8u, 10u}) CHECK(s.coeff(k).is_zero());
  CHECK_THROWS_AS(sigma_series(SigmaTable(2), 11), std::invalid_argument);
}

TEST_CASE("table sigma equals the sigma solved from Q2") {
  CHECK(sigma_series(SigmaTable(15), 31) == sigma_from_q2(31));
}

TEST_CASE("annihilators") {
  USeries s = sigma_series(SigmaTable(13), 27);
  CHECK(q0_residual(s).is_zero());
  CHECK(q2_residual(s).is_zero());
  // A single wrong coefficient is caught by both.
  USeries bad = s;
  bad.set(13u, s.coeff(13) + P(g_ring(), "g2^3/1000"));
  CHECK_FALSE(q2_residual(bad).is_zero());
  USeries off = s;
  off.set(9u, s.coeff(9) + P(g_ring(), "g3"));
  CHECK_FALSE(q0_residual(off).is_zero());
}

TEST_CASE("grading: coefficient of u^k has weight 2 - 2k") {
  USeries s = sigma_series(SigmaTable(14), 29);
  for (unsigned k = 1; k <= 29; ++k) {
    if (s.coeff(k).is_zero()) continue;
    CHECK(weight_of(s.coeff(k)) == 2 - 2 * int(k));
  }
}

TEST_CASE("u^2 wp from sigma matches the Laurent recurrence") {
  auto fam = sigma_family(sigma_series(SigmaTable(16), 33));
  auto c = wp_laurent(16);
  REQUIRE(fam.wp_reg.order() == 32);
  CHECK(fam.wp_reg.coeff(0) == P(g_ring(), "1"));
  for (unsigned k = 1; k <= 32; ++k) {
    MPoly expected = (k % 2 == 0 && k >= 4) ? c[k / 2] : MPoly(g_ring());
    CHECK(fam.wp_reg.coeff(k) == expected);
  }
}

TEST_CASE("Weierstrass equation for wp") {
  auto R = g_ring();
  auto fam = sigma_family(sigma_series(SigmaTable(15), 31));
  CHECK(weierstrass_ode_residual(fam, P(R, "g2"), P(R, "g3")).is_zero());
  CHECK_FALSE(weierstrass_ode_residual(fam, P(R, "g2"), P(R, "g3 + 1")).is_zero());
  // u zeta starts 1 - g2 u^4/60.
  CHECK(fam.zeta_reg.coeff(4) == P(R, "-g2/60"));
}

TEST_CASE("Hurwitz certificates") {
  Report r = hurwitz_certificates(SigmaTable(15), 31);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  CHECK(r.checks.size() == 6);
}

TEST_CASE("exponential through wp equals the exponential of the general law") {
  SigmaTable t(10);
  auto mu = symbolic_mu();
  USeries f = weier_exponential(t, mu, 16);
  CHECK(f == general_log_exp(mu, 16).f);
  CHECK(shift_up(inverse(weier_reciprocal(t, mu, 16)), 1) == f);
}

TEST_CASE("exponential through wp at random integer mu") {
  Gen gen(303);
  SigmaTable t(12);
  auto R = mu_ring();
  for (int trial = 0; trial < 5; ++trial) {
    auto c = [&]() { return std::to_string(gen.small(-3, 3)); };
    MuParams mu = make_mu(R, {c(), c(), c(), c(), c()});
    CHECK(weier_exponential(t, mu, 22) == general_log_exp(mu, 22).f);
  }
}

TEST_CASE("odd exponential when mu1 = mu3 = 0") {
  auto R = mu_ring();
  MuParams mu = make_mu(R, {"0", "mu2", "0", "mu4", "mu6"});
  USeries f = weier_exponential(SigmaTable(9), mu, 18);
  CHECK(scale_var(f, P(R, "-1")) == -f);
}

TEST_CASE("Delta = 0 family") {
  Report r = degenerate_check(SigmaTable(10), 18);
  INFO(r.checks.front().detail);
  CHECK(r.passed());
}

TEST_CASE("valuation conjecture on a_{i,j}") {
  auto rep = conjecture_check(30);
  CHECK(rep.passed());
  CHECK(rep.checked + rep.zero_entries == 31 * 32 / 2);
}

TEST_CASE("b_{i,j} recursion") {
  SigmaTable t(6);
  CHECK(b_entry(t, 0, 0) == 1);
  CHECK(b_entry(t, 1, 0) == ratio(-24, 120));
  Report r = bij_recursion_check(20);
  INFO(r.checks.front().detail);
  CHECK(r.passed());
}

TEST_CASE("p-adic valuation") {
  CHECK(valuation(Coeff(48), 2) == 4);
  CHECK(valuation(ratio(5, 27), 3) == -3);
  CHECK(valuation(Coeff(-7), 2) == 0);
  CHECK_THROWS(valuation(Coeff(0), 2));
}
