#include "doctest.h"
#include "support.hpp"

using namespace ellfgl;
using ellfgl::testing::Gen;
using ellfgl::testing::mu_spec;
using ellfgl::testing::P;

namespace {

VarSpecPtr Q() {
  static const VarSpecPtr spec = make_spec({{"x", 1}});
  return spec;
}

USeries useries(const VarSpecPtr& spec, const std::vector<std::string>& coeffs, int order, const std::string& var = "t") {
  USeries s(spec, {var}, order);
  for (unsigned k = 0; k < coeffs.size() && int(k) <= order; ++k) s.set(k, P(spec, coeffs[k]));
  return s;
}

// Naive rational univariate polynomials, used as an independent oracle.
using Vec = std::vector<Coeff>;
Vec vmul(const Vec& a, const Vec& b, std::size_t n) {
  Vec r(n + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}
Vec vcompose(const Vec& outer, const Vec& inner, std::size_t n) {
  Vec r(n + 1, 0), pw(n + 1, 0);
  pw[0] = 1;
  for (std::size_t k = 0; k < outer.size() && k <= n; ++k) {
    for (std::size_t i = 0; i <= n; ++i) r[i] += outer[k] * pw[i];
    pw = vmul(pw, inner, n);
  }
  return r;
}
USeries from_vec(const Vec& v, int order) {
  USeries s(Q(), {"t"}, order);
  for (unsigned k = 0; int(k) <= order && k < v.size(); ++k) s.set(k, MPoly::constant(Q(), v[k]));
  return s;
}

}  // namespace

TEST_CASE("slot indexing agrees with the enumeration order") {
  auto check_dim = [](auto tag, int order) {
    using S = decltype(tag);
    auto ex = S::exponents(order);
    CHECK(ex.size() == S::slots(order));
    for (std::size_t i = 0; i < ex.size(); ++i) CHECK(S::index(ex[i]) == i);
  };
  check_dim(USeries{}, 9);
  check_dim(BSeries{}, 9);
  check_dim(TSeries{}, 7);
  CHECK(BSeries::index({2, 1}) == 3 * 4 / 2 + 1);
}

TEST_CASE("out of range access is an error") {
  USeries s(Q(), {"t"}, 3);
  CHECK_THROWS_AS(s.coeff(4), std::out_of_range);
  CHECK_THROWS_AS(USeries(Q(), {"t"}, -1), std::invalid_argument);
  BSeries b(Q(), {"t1", "t2"}, 2);
  CHECK_THROWS_AS((b[{2, 1}]), std::out_of_range);
}

TEST_CASE("series arithmetic examples") {
  auto q = Q();
  CHECK(useries(q, {"1", "1"}, 5) * useries(q, {"1", "-1"}, 5) == useries(q, {"1", "0", "-1"}, 5));
  CHECK(inverse(useries(q, {"1", "-1"}, 3)) == useries(q, {"1", "1", "1", "1"}, 3));
  auto S = mu_spec();
  USeries r = useries(S, {"1", "mu1"}, 2) / useries(S, {"1", "mu2"}, 2);
  CHECK(r == useries(S, {"1", "mu1 - mu2", "mu2^2 - mu1*mu2"}, 2));
  CHECK_THROWS_AS(inverse(useries(S, {"mu1", "1"}, 2)), std::domain_error);
  CHECK_THROWS_AS(inverse(useries(q, {"0", "1"}, 2)), std::domain_error);
  // Result order is the minimum of the operand orders.
  CHECK((useries(q, {"1"}, 4) * useries(q, {"1"}, 2)).order() == 2);
  CHECK_THROWS_AS(useries(q, {"1"}, 2) + useries(q, {"1"}, 2, "u"), std::invalid_argument);
}

TEST_CASE("bivariate inverse and multiplication") {
  auto q = Q();
  BSeries one = constant_series<2>(q, {"t1", "t2"}, MPoly::constant(q, 1), 6);
  BSeries p = mul_to(variable_series<2>(q, {"t1", "t2"}, 0, 6), variable_series<2>(q, {"t1", "t2"}, 1, 6), 6);
  BSeries a = one - p;  // 1 - t1 t2
  BSeries inv = inverse(a);
  CHECK(a * inv == one);
  CHECK(inv[{2, 2}] == MPoly::constant(q, 1));
  CHECK(inv[{3, 3}] == MPoly::constant(q, 1));
  CHECK(inv[{2, 1}].is_zero());
}

TEST_CASE("compose examples") {
  auto q = Q();
  std::array<std::string, 2> tv{"t1", "t2"};
  BSeries sum = variable_series<2>(q, tv, 0, 2) + variable_series<2>(q, tv, 1, 2);
  BSeries sq = compose(useries(q, {"0", "0", "1"}, 2), sum);
  CHECK(sq[{2, 0}] == MPoly::constant(q, 1));
  CHECK(sq[{1, 1}] == MPoly::constant(q, 2));
  CHECK(sq[{0, 2}] == MPoly::constant(q, 1));
  CHECK(compose(useries(q, {"0", "1"}, 6), sum.truncated(2)) == sum.truncated(2));

  Vec outer{0, 1, 1}, inner{0, 1, -1};
  CHECK(compose(from_vec(outer, 3), from_vec(inner, 3)) == from_vec(vcompose(outer, inner, 3), 3));
  CHECK(compose(from_vec(outer, 3), from_vec(inner, 3)) == useries(q, {"0", "1", "0", "-2"}, 3));
  CHECK_THROWS_AS(compose(from_vec(outer, 3), useries(q, {"1", "1"}, 3)), std::invalid_argument);
}

TEST_CASE("compose agrees with the naive oracle on random rational series") {
  Gen gen(3);
  auto q = Q();
  for (int trial = 0; trial < 20; ++trial) {
    Vec a(9), b(9);
    for (auto& x : a) x = gen.rational();
    for (std::size_t i = 1; i < b.size(); ++i) b[i] = gen.rational();
    b[0] = 0;
    CHECK(compose(from_vec(a, 8), from_vec(b, 8)) == from_vec(vcompose(a, b, 8), 8));
    CHECK(from_vec(a, 8) * from_vec(b, 8) == from_vec(vmul(a, b, 8), 8));
  }
  (void)q;
}

TEST_CASE("reverse examples") {
  auto q = Q();
  CHECK(reverse(useries(q, {"0", "1"}, 7)) == useries(q, {"0", "1"}, 7));
  // u = t/(1-t) solves to t = u/(1+u).
  USeries f(q, {"t"}, 8), expected(q, {"t"}, 8);
  for (unsigned k = 1; k <= 8; ++k) {
    f.set(k, MPoly::constant(q, 1));
    expected.set(k, MPoly::constant(q, (k % 2) ? 1 : -1));
  }
  CHECK(reverse(f) == expected);

  // -ln(1 - mu t)/mu reverses to (1 - exp(-mu u))/mu.
  auto M = make_spec({{"mu", -2}});
  USeries g(M, {"t"}, 9), e(M, {"t"}, 9);
  Coeff fact = 1;
  for (unsigned k = 1; k <= 9; ++k) {
    fact *= k;
    g.set(k, P(M, "mu^" + std::to_string(k - 1) + "/" + std::to_string(k)));
    Coeff sign = (k % 2) ? 1 : -1;
    e.set(k, pow(P(M, "mu"), k - 1) * Coeff(sign / fact));
  }
  CHECK(reverse(g) == e);
  CHECK_THROWS_AS(reverse(useries(M, {"0", "mu"}, 3)), std::domain_error);
  CHECK_THROWS_AS(reverse(useries(M, {"1", "1"}, 3)), std::invalid_argument);
}

TEST_CASE("reverse is a two-sided inverse over Q[mu]") {
  Gen gen(17);
  auto S = mu_spec();
  for (int trial = 0; trial < 12; ++trial) {
    USeries f = gen.series(S, "t", 7, true, true);
    USeries g = reverse(f);
    USeries id = variable_series<1>(S, {"t"}, 0, 7);
    CHECK(compose(f, g) == id);
    CHECK(compose(g, f) == id);
  }
}

TEST_CASE("divided differences") {
  auto S = mu_spec();
  std::array<std::string, 2> tv{"t1", "t2"};
  BSeries d = divided_difference(useries(S, {"0", "0", "0", "1"}, 3), tv);
  CHECK(d.order() == 2);
  CHECK(d[{2, 0}] == MPoly::constant(S, 1));
  CHECK(d[{1, 1}] == MPoly::constant(S, 1));
  CHECK(d[{0, 2}] == MPoly::constant(S, 1));
  CHECK(d[{1, 0}].is_zero());
  BSeries one = divided_difference(useries(S, {"0", "1"}, 1), tv);
  CHECK(one == constant_series<2>(S, tv, MPoly::constant(S, 1), 0));

  BSeries e = divided_difference(useries(S, {"0", "0", "0", "1", "mu1"}, 4), tv);
  for (unsigned i = 0; i <= 3; ++i) CHECK(e[{i, 3 - i}] == P(S, "mu1"));

  // Property: dd(s) * (t1 - t2) = s(t1) - s(t2).
  Gen gen(29);
  for (int trial = 0; trial < 10; ++trial) {
    USeries s = gen.series(S, "t", 8, false, false);
    BSeries dd = divided_difference(s, tv);
    BSeries diff = variable_series<2>(S, tv, 0, 8) - variable_series<2>(S, tv, 1, 8);
    BSeries lhs = mul_to(dd, diff, 8);
    BSeries rhs = embed(s, 0, tv) - embed(s, 1, tv);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("calculus") {
  auto S = mu_spec();
  CHECK(differentiate(useries(S, {"0", "0", "0", "1"}, 3)) == useries(S, {"0", "0", "3"}, 2));
  CHECK(integrate(useries(S, {"1"}, 0)) == useries(S, {"0", "1"}, 1));
  CHECK(integrate(useries(S, {"1", "mu1"}, 1)) == useries(S, {"0", "1", "mu1/2"}, 2));
  Gen gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    USeries f = gen.series(S, "t", 6, true, false);
    CHECK(differentiate(integrate(f)) == f);
    CHECK(integrate(differentiate(f)) == f);
  }
}

TEST_CASE("square roots, exp and log") {
  auto S = mu_spec();
  auto T = make_spec({{"d", -4}, {"e", -8}});
  CHECK(sqrt_unit(useries(S, {"1"}, 4)) == useries(S, {"1"}, 4));
  CHECK(sqrt_unit(useries(S, {"1", "-4"}, 2)) == useries(S, {"1", "-2", "-2"}, 2));
  USeries r = useries(T, {"1", "0", "-2*d", "0", "e"}, 10);
  USeries root = sqrt_unit(r);
  CHECK(root * root == r);
  CHECK_THROWS_AS(sqrt_unit(useries(S, {"4"}, 2)), std::domain_error);

  Gen gen(37);
  for (int trial = 0; trial < 10; ++trial) {
    USeries f = gen.series(S, "t", 7, true, false);
    USeries one_plus = f;
    one_plus.set(0u, MPoly::constant(S, 1));
    USeries h = sqrt_unit(one_plus);
    CHECK(h * h == one_plus);
    CHECK(log_series(exp_series(f)) == f);
    CHECK(exp_series(f + f) == exp_series(f) * exp_series(f));
  }
}

TEST_CASE("hurwitz integrality") {
  auto q = Q();
  USeries e(q, {"u"}, 10);
  for (unsigned k = 0; k <= 10; ++k) e.set(k, MPoly::constant(q, Coeff(1, factorial(k))));
  CHECK(hurwitz_integral(e, plain_domain({})).integral);
  auto res = hurwitz_integral(useries(q, {"0", "1", "1/3"}, 2, "u"), plain_domain({}));
  CHECK_FALSE(res.integral);
  CHECK(res.k == 2);
  CHECK(res.witness == MPoly::constant(q, Coeff(2, 3)));

  auto G = make_spec({{"g2", -8}, {"g3", -12}});
  IntegralityDomain dom{{{"g2", Coeff(1, 2)}, {"g3", Coeff(2)}}, {}, "Z[g2/2,2g3]"};
  CHECK(is_integral_in(P(G, "g2/2"), dom));
  CHECK(is_integral_in(P(G, "g2^2/4 + 2*g3"), dom));
  CHECK_FALSE(is_integral_in(P(G, "g2/4"), dom));
  CHECK_FALSE(is_integral_in(P(G, "g3"), dom));
  IntegralityDomain half{{{"g2", Coeff(1)}, {"g3", Coeff(1)}}, {2}, "Z[1/2][g2,g3]"};
  CHECK(is_integral_in(P(G, "g3/8"), half));
  CHECK_FALSE(is_integral_in(P(G, "g3/3"), half));
  CHECK_FALSE(is_integral_in(P(G, "g3"), plain_domain({"g2"})));

  // Property: agrees with brute-force factorial multiplication.
  Gen gen(41);
  for (int trial = 0; trial < 30; ++trial) {
    USeries f = gen.series(q, "u", 6, false, false);
    bool brute = true;
    int first = -1;
    for (unsigned k = 0; k <= 6 && brute; ++k) {
      for (const auto& t : f.coeff(k).terms()) {
        if (Coeff(t.coeff * Coeff(factorial(k))).get_den() != 1) {
          brute = false;
          first = int(k);
          break;
        }
      }
    }
    auto hv = hurwitz_integral(f, plain_domain({"x"}));
    CHECK(hv.integral == brute);
    if (!brute) CHECK(hv.k == first);
  }
}
