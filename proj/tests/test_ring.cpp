#include <cstdint>
#include <numeric>

#include "doctest.h"
#include "support.hpp"

using namespace ellfgl;
using ellfgl::testing::Gen;
using ellfgl::testing::mu_spec;
using ellfgl::testing::P;

TEST_CASE("poly arithmetic examples") {
  auto S = mu_spec();
  CHECK((P(S, "mu1 + mu2") * MPoly(S)).is_zero());
  CHECK(P(S, "mu1") * P(S, "mu1") == P(S, "mu1^2"));
  // Hand expansion of (mu1 + 2 mu2)^2.
  MPoly sq = pow(P(S, "mu1 + 2*mu2"), 2);
  CHECK(sq.size() == 3);
  Monomial m11, m12, m22;
  m11.set(0, 2);
  m12.set(0, 1);
  m12.set(1, 1);
  m22.set(1, 2);
  CHECK(sq.coeff(m11) == 1);
  CHECK(sq.coeff(m12) == 4);
  CHECK(sq.coeff(m22) == 4);
  CHECK(pow(P(S, "mu3"), 0) == MPoly::constant(S, 1));
  CHECK_THROWS_AS(P(S, "mu1") + P(make_spec({{"x", 1}}), "x"), std::invalid_argument);
}

TEST_CASE("canonical text form") {
  auto S = mu_spec();
  CHECK(P(S, "mu2 - 1/2*mu1^2 + 3").to_string() == "-1/2*mu1^2 + mu2 + 3");
  CHECK(MPoly(S).to_string() == "0");
  CHECK(P(S, "-mu1*mu3^2").to_string() == "-mu1*mu3^2");
  CHECK(P(S, "(2*mu1 + mu2)/4").to_string() == "1/2*mu1 + 1/4*mu2");
}

TEST_CASE("weight_of") {
  auto S = mu_spec();
  CHECK(weight_of(P(S, "mu3")) == -6);
  CHECK(weight_of(P(S, "mu1*mu2")) == -6);
  CHECK_FALSE(weight_of(P(S, "mu1 + mu2")).has_value());
  CHECK(weight_of(P(S, "mu1^2 + 7*mu2")) == -4);
}

TEST_CASE("specialize") {
  auto S = mu_spec();
  MPoly p = P(S, "mu1^2*mu4 - 3*mu6 + mu2");
  CHECK(specialize(p, {}) == p);
  CHECK(specialize(p, {{"mu1", Coeff(2)}}) == P(S, "4*mu4 - 3*mu6 + mu2"));
  CHECK(specialize(p, {{"mu6", P(S, "mu3^2")}}) == P(S, "mu1^2*mu4 - 3*mu3^2 + mu2"));
  CHECK_THROWS_AS(specialize(p, {{"nu", Coeff(1)}}), std::invalid_argument);

  auto T = make_spec({{"x", 1}});
  MPoly q = specialize(P(S, "mu1*mu2 + mu3"), {{"mu1", P(T, "x")}, {"mu2", P(T, "x^2")}, {"mu3", Coeff(5)}}, T);
  CHECK(q == P(T, "x^3 + 5"));
  CHECK_THROWS_AS(specialize(P(S, "mu1"), {}, T), std::invalid_argument);
}

TEST_CASE("quotient_map examples") {
  auto S = mu_spec();
  Decomposables dec{{"mu1", "mu2", "mu3", "mu4", "mu6"}};
  CHECK(quotient_map(P(S, "mu1*mu2"), dec).is_zero());
  CHECK(quotient_map(P(S, "mu1^2"), dec).is_zero());
  CHECK(quotient_map(P(S, "mu1 + 7 + mu1*mu6"), dec) == P(S, "mu1 + 7"));

  auto A = make_spec({{"a6", -12}, {"b3", -6}});
  Relation rel{"b3", std::make_shared<const MPoly>(P(A, "a6"))};
  CHECK(quotient_map(P(A, "b3^3"), rel) == P(A, "a6*b3"));
  CHECK(quotient_map(P(A, "b3^4 + b3"), rel) == P(A, "a6^2 + b3"));

  CHECK(quotient_map(P(S, "3*mu1 + 2*mu3"), ModPrime{2}) == P(S, "mu1"));
  CHECK(quotient_map(P(S, "-mu1"), ModPrime{2}) == P(S, "mu1"));
  CHECK_THROWS_AS(quotient_map(P(S, "mu1/2"), ModPrime{2}), std::domain_error);
  CHECK_THROWS_AS(quotient_map(P(S, "mu1"), ModPrime{4}), std::invalid_argument);
}

TEST_CASE("nu values") {
  CHECK(nu(2) == 2);
  CHECK(nu(7) == 7);
  CHECK(nu(6) == 1);
  CHECK_THROWS_AS(nu(1), std::invalid_argument);
}

TEST_CASE("nu of prime powers equals the prime (direct gcd oracle)") {
  // Pascal's triangle in 64-bit integers is exact up to row 64.
  std::vector<std::vector<std::uint64_t>> pascal(65);
  for (int n = 0; n <= 64; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (int n = 2; n <= 64; ++n) {
    std::uint64_t g = 0;
    for (int k = 1; k < n; ++k) g = std::gcd(g, pascal[n][k]);
    CHECK(nu(n) == Integer(static_cast<unsigned long>(g)));
  }
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    for (long q = p; q <= 64; q *= p) CHECK(nu(q) == p);
  }
}

TEST_CASE("ring axioms on random triples") {
  auto S = mu_spec();
  Gen gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    MPoly a = gen.poly(S), b = gen.poly(S), c = gen.poly(S);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == MPoly(S));
    CHECK(pow(a, 3) == a * a * a);
  }
}

TEST_CASE("weight is additive on homogeneous products") {
  auto S = mu_spec();
  Gen gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    MPoly a = gen.homogeneous(S), b = gen.homogeneous(S);
    auto wa = weight_of(a), wb = weight_of(b);
    REQUIRE(wa.has_value());
    REQUIRE(wb.has_value());
    CHECK(weight_of(a * b) == *wa + *wb);
  }
}

TEST_CASE("quotient maps are idempotent ring homomorphisms") {
  auto S = mu_spec();
  auto R = make_spec({{"a1", -2}, {"a6", -12}, {"b3", -6}});
  Gen gen(23);
  std::vector<std::pair<VarSpecPtr, QuotientSpec>> cases = {
      {S, Decomposables{{"mu1", "mu2", "mu3", "mu4", "mu6"}}},
      {S, ModPrime{2}},
      {S, ModPrime{3}},
      {R, Relation{"b3", std::make_shared<const MPoly>(P(R, "a6"))}},
  };
  for (auto& [spec, q] : cases) {
    bool modp = std::holds_alternative<ModPrime>(q);
    for (int trial = 0; trial < 40; ++trial) {
      MPoly a = gen.poly(spec, 4, 3), b = gen.poly(spec, 4, 3);
      if (modp) {
        // Integer coefficients only.
        a = a * Coeff(12);
        b = b * Coeff(12);
      }
      MPoly qa = quotient_map(a, q), qb = quotient_map(b, q);
      CHECK(quotient_map(qa, q) == qa);
      CHECK(quotient_map(a * b, q) == quotient_map(qa * qb, q));
      CHECK(quotient_map(a + b, q) == quotient_map(qa + qb, q));
    }
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Coeff(-3, 2));
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(mu_spec(), "0.5*mu1"), std::invalid_argument);
}
