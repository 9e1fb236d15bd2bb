#include "ellfgl/weierstrass.hpp"

#include <stdexcept>

namespace ellfgl {

namespace {

MPoly one(const VarSpecPtr& ring) { return MPoly::constant(ring, 1); }

USeries uvar(const VarSpecPtr& ring, int order) { return variable_series<1>(ring, {"u"}, 0, order); }

USeries unit(const VarSpecPtr& ring, int order) { return constant_series<1>(ring, {"u"}, one(ring), order); }

USeries monomial_series(const VarSpecPtr& ring, const MPoly& c, unsigned k, int order) {
  USeries r(ring, {"u"}, order);
  if (int(k) <= order) r.set(k, c);
  return r;
}

// u * f' at the order of f.
USeries euler(const USeries& f) {
  if (f.order() == 0) return USeries(f.ring(), f.vars(), 0);
  return shift_up(differentiate(f), 1);
}

std::string first_nonzero(const USeries& r) {
  for (unsigned k = 0; int(k) <= r.order(); ++k) {
    if (!r.coeff(k).is_zero()) return "u^" + std::to_string(k) + ": " + r.coeff(k).to_string();
  }
  return {};
}

int legendre(unsigned long n, unsigned long p) {
  int v = 0;
  for (unsigned long q = p; q <= n; q *= p) v += int(n / q);
  return v;
}

}  // namespace

VarSpecPtr g_ring() {
  static const VarSpecPtr spec = make_spec({{"g2", -8}, {"g3", -12}});
  return spec;
}

SigmaTable::SigmaTable(int max_weight) : max_weight_(max_weight) {
  if (max_weight < 0) throw std::invalid_argument("SigmaTable: negative weight");
  entries_[{0, 0}] = 1;
  for (int m = 1; m <= max_weight; ++m) {
    for (int j = 0; 3 * j <= m; ++j) {
      if ((m - 3 * j) % 2 != 0) continue;
      int i = (m - 3 * j) / 2;
      // 3 a_{i,j} = 9(i+1) a_{i+1,j-1} + 16(j+1) a_{i-2,j+1} - (4i+6j-1)(2i+3j-1) a_{i-1,j}
      Integer three_a = 9 * Integer(i + 1) * at(i + 1, j - 1) + 16 * Integer(j + 1) * at(i - 2, j + 1) -
                        Integer(4 * i + 6 * j - 1) * Integer(2 * i + 3 * j - 1) * at(i - 1, j);
      if (three_a % 3 != 0) {
        throw NonIntegralEntry(i, j,
                               "a_{" + std::to_string(i) + "," + std::to_string(j) + "} = " + three_a.get_str() + "/3");
      }
      Integer a = three_a / 3;
      if (a != 0) entries_[{i, j}] = a;
    }
  }
}

const Integer& SigmaTable::at(int i, int j) const {
  static const Integer zero = 0;
  if (i < 0 || j < 0) return zero;
  auto it = entries_.find({i, j});
  return it == entries_.end() ? zero : it->second;
}

USeries sigma_series(const SigmaTable& table, const MPoly& g2, const MPoly& g3, int order) {
  if (order < 1) throw std::invalid_argument("sigma_series: order must be at least 1");
  if (2 * table.max_weight() < order - 1) throw std::invalid_argument("sigma_series: table too small for order");
  const VarSpecPtr& ring = g2.spec();
  int imax = (order - 1) / 4, jmax = (order - 1) / 6;
  std::vector<MPoly> p2{one(ring)}, p3{one(ring)};
  MPoly h2 = g2 * ratio(1, 2), h3 = g3 * Coeff(2);
  for (int i = 1; i <= imax; ++i) p2.push_back(p2.back() * h2);
  for (int j = 1; j <= jmax; ++j) p3.push_back(p3.back() * h3);
  USeries s(ring, {"u"}, order);
  for (const auto& [ij, a] : table.entries()) {
    auto [i, j] = ij;
    int k = 4 * i + 6 * j + 1;
    if (k > order) continue;
    s.at({unsigned(k)}) += p2[std::size_t(i)] * p3[std::size_t(j)] * ratio(a, factorial(unsigned(k)));
  }
  return s;
}

USeries sigma_series(const SigmaTable& table, int order) {
  return sigma_series(table, MPoly::variable(g_ring(), "g2"), MPoly::variable(g_ring(), "g3"), order);
}

SigmaSeries sigma_family(const USeries& sigma) {
  if (sigma.order() < 2) throw std::invalid_argument("sigma_family: order must be at least 2");
  USeries st = shift_down(sigma, 1);
  USeries z = unit(sigma.ring(), st.order()) + shift_up(differentiate(st) * inverse(st.truncated(st.order() - 1)), 1);
  USeries w = z - euler(z);
  return {sigma, z, w};
}

USeries weierstrass_ode_residual(const SigmaSeries& s, const MPoly& g2, const MPoly& g3) {
  const USeries& W = s.wp_reg;
  int n = W.order();
  USeries d = euler(W) - Coeff(2) * W;  // u^3 wp'
  return d * d - Coeff(4) * (W * W * W) + g2 * shift_up(W, 4).truncated(n) +
         monomial_series(W.ring(), g3, 6, n);
}

USeries q0_residual(const USeries& sigma) {
  USeries r(sigma.ring(), sigma.vars(), sigma.order());
  for (unsigned k = 0; int(k) <= sigma.order(); ++k) {
    const MPoly& c = sigma.coeff(k);
    if (c.is_zero()) continue;
    MPoly g2 = MPoly::variable(sigma.ring(), "g2"), g3 = MPoly::variable(sigma.ring(), "g3");
    r.set(k, Coeff(4) * (g2 * derivative(c, "g2")) + Coeff(6) * (g3 * derivative(c, "g3")) + c * Coeff(1 - int(k)));
  }
  return r;
}

USeries q2_residual(const USeries& sigma) {
  const VarSpecPtr& ring = sigma.ring();
  int n = sigma.order() - 2;
  if (n < 0) throw std::invalid_argument("q2_residual: order must be at least 2");
  MPoly g2 = MPoly::variable(ring, "g2"), g3 = MPoly::variable(ring, "g3");
  USeries dg2 = sigma.map(ring, [](const MPoly& c) { return derivative(c, "g2"); });
  USeries dg3 = sigma.map(ring, [](const MPoly& c) { return derivative(c, "g3"); });
  USeries second = differentiate(differentiate(sigma));
  return (Coeff(6) * g3) * dg2.truncated(n) + (ratio(1, 3) * (g2 * g2)) * dg3.truncated(n) -
         ratio(1, 2) * second - (ratio(1, 24) * g2) * shift_up(sigma, 2).truncated(n);
}

USeries sigma_from_q2(int order) {
  VarSpecPtr ring = g_ring();
  MPoly g2 = MPoly::variable(ring, "g2"), g3 = MPoly::variable(ring, "g3");
  std::vector<MPoly> c(std::size_t(order) + 1, MPoly(ring));
  if (order >= 1) c[1] = one(ring);
  for (int k = 1; k + 2 <= order; k += 2) {
    MPoly rhs = Coeff(6) * (g3 * derivative(c[std::size_t(k)], "g2")) +
                ratio(1, 3) * (g2 * g2 * derivative(c[std::size_t(k)], "g3"));
    if (k >= 2) rhs -= ratio(1, 24) * (g2 * c[std::size_t(k - 2)]);
    c[std::size_t(k + 2)] = rhs * ratio(2, Integer(k + 2) * Integer(k + 1));
  }
  USeries s(ring, {"u"}, order);
  for (int k = 0; k <= order; ++k) s.set(unsigned(k), c[std::size_t(k)]);
  return s;
}

Report hurwitz_certificates(const SigmaTable& table, int order) {
  Report rep;
  USeries sigma = sigma_series(table, order);
  IntegralityDomain half{{{"g2", 1}, {"g3", 1}}, {2}, "Z[1/2][g2, g3]"};
  IntegralityDomain third{{{"g2", ratio(1, 2)}, {"g3", 2}}, {3}, "Z[1/3][g2/2, 2 g3]"};
  IntegralityDomain sharp{{{"g2", ratio(1, 2)}, {"g3", 2}}, {}, "Z[g2/2, 2 g3]"};
  IntegralityDomain plain{{{"g2", 1}, {"g3", 1}}, {}, "Z[g2, g3]"};
  auto certify = [&](const std::string& what, const USeries& f, const IntegralityDomain& d) {
    IntegralityResult r = hurwitz_integral(f, d);
    rep.add(what + " Hurwitz over " + d.label, r.integral,
            r.integral ? "through u^" + std::to_string(f.order())
                       : "phi_" + std::to_string(r.k) + " = " + r.witness.to_string());
  };
  certify("sigma", sigma, half);
  certify("sigma", sigma, third);
  certify("sigma", sigma, sharp);

  // Over Z[g2, g3] the first failure is phi_5 = -g2/2.
  IntegralityResult w = hurwitz_integral(sigma, plain);
  bool expected = !w.integral && w.k == 5 && w.witness == MPoly::variable(sigma.ring(), "g2") * ratio(-1, 2);
  rep.add("sigma not Hurwitz over Z[g2, g3]", expected,
          w.integral ? "no witness found" : "phi_" + std::to_string(w.k) + " = " + w.witness.to_string());

  USeries d1 = differentiate(sigma);
  certify("1/zeta", sigma.truncated(d1.order()) * inverse(d1), sharp);
  USeries d2 = differentiate(d1);
  USeries den = d1.truncated(d2.order()) * d1.truncated(d2.order()) - d2 * sigma.truncated(d2.order());
  certify("1/wp", sigma.truncated(d2.order()) * sigma.truncated(d2.order()) * inverse(den), sharp);
  return rep;
}

namespace {

struct WeierPieces {
  USeries W;       // u^2 wp
  USeries dW;      // u^3 wp'
  MPoly c;         // wp(v)
  VarSpecPtr ring;
};

WeierPieces weier_pieces(const SigmaTable& table, const MuParams& mu, int order) {
  WeierstrassParams g = reduce_to_weierstrass(mu);
  SigmaSeries fam = sigma_family(sigma_series(table, g.g2, g.g3, order));
  USeries W = fam.wp_reg;
  return {W, euler(W) - Coeff(2) * W, wp_shift(mu), mu.ring()};
}

}  // namespace

USeries weier_exponential(const SigmaTable& table, const MuParams& mu, int order) {
  if (order < 2) throw std::invalid_argument("weier_exponential: order must be at least 2");
  WeierPieces p = weier_pieces(table, mu, order);
  int n = p.W.order();
  USeries u3 = monomial_series(p.ring, one(p.ring), 3, n);
  // Numerator and denominator both multiplied by u^3; the numerator keeps a factor u.
  USeries num = Coeff(-2) * (p.W - p.c * monomial_series(p.ring, one(p.ring), 2, n));
  USeries den = p.dW - mu.mu1 * shift_up(p.W, 1).truncated(n) + (mu.mu1 * p.c - mu.mu3) * u3;
  return shift_up(num * inverse(den), 1);
}

USeries weier_reciprocal(const SigmaTable& table, const MuParams& mu, int order) {
  if (order < 2) throw std::invalid_argument("weier_reciprocal: order must be at least 2");
  WeierPieces p = weier_pieces(table, mu, order);
  int n = p.W.order();
  USeries num = p.dW - mu.mu3 * monomial_series(p.ring, one(p.ring), 3, n);
  USeries den = p.W - p.c * monomial_series(p.ring, one(p.ring), 2, n);
  return ratio(-1, 2) * (num * inverse(den)) + (ratio(1, 2) * mu.mu1) * uvar(p.ring, n);
}

Coeff b_entry(const SigmaTable& table, int i, int j) {
  if (i < 0 || j < 0) return 0;
  Integer scale = Integer(1) << unsigned(3 * i + 4 * j);
  Integer three;
  mpz_ui_pow_ui(three.get_mpz_t(), 3, unsigned(i + j));
  scale *= three * factorial(unsigned(i)) * factorial(unsigned(j));
  return ratio(scale * table.at(i, j), factorial(unsigned(4 * i + 6 * j + 1)));
}

int valuation(const Coeff& x, unsigned long p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  auto count = [p](Integer z) {
    int v = 0;
    while (mpz_divisible_ui_p(z.get_mpz_t(), p)) {
      z /= p;
      ++v;
    }
    return v;
  };
  return count(abs(x.get_num())) - count(x.get_den());
}

ConjectureReport conjecture_check(int maxsum) {
  ConjectureReport rep;
  SigmaTable table(3 * maxsum);
  for (int i = 0; i <= maxsum; ++i) {
    for (int j = 0; i + j <= maxsum; ++j) {
      const Integer& a = table.at(i, j);
      if (a == 0) {
        ++rep.zero_entries;
        continue;
      }
      ++rep.checked;
      unsigned long n = unsigned(4 * i + 6 * j + 1);
      int t2 = legendre(n, 2) - (3 * i + 4 * j) - legendre(unsigned(i), 2) - legendre(unsigned(j), 2);
      int t3 = legendre(n, 3) - (i + j) - legendre(unsigned(i), 3) - legendre(unsigned(j), 3);
      if (valuation(Coeff(a), 2) != t2 || valuation(Coeff(a), 3) != t3) rep.counterexamples.push_back({i, j});
    }
  }
  return rep;
}

Report bij_recursion_check(int maxsum) {
  Report rep;
  SigmaTable table(3 * maxsum);
  int checked = 0;
  for (int i = 0; i <= maxsum; ++i) {
    for (int j = 0; i + j <= maxsum; ++j) {
      if (i == 0 && j == 0) continue;
      Coeff lhs = Coeff((4 * i + 6 * j + 1) * (2 * i + 3 * j)) * b_entry(table, i, j);
      Coeff rhs = Coeff(3 * j) * b_entry(table, i + 1, j - 1) - Coeff(2 * i) * b_entry(table, i - 1, j) +
                  Coeff(32 * i * (i - 1)) * b_entry(table, i - 2, j + 1);
      ++checked;
      if (lhs != rhs) {
        rep.add("b recursion", false, "fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        return rep;
      }
    }
  }
  rep.add("b recursion", true, std::to_string(checked) + " index pairs with i + j <= " + std::to_string(maxsum));
  return rep;
}

Report degenerate_check(const SigmaTable& table, int order) {
  Report rep;
  VarSpecPtr ring = make_spec({{"mu1", -2}, {"mu2", -4}});
  MPoly mu1 = MPoly::variable(ring, "mu1"), mu2 = MPoly::variable(ring, "mu2"), z(ring);
  MuParams mu{mu1, mu2, z, z, z};
  USeries f = weier_exponential(table, mu, order);
  MPoly gamma2 = (mu1 * mu1 + Coeff(4) * mu2) * ratio(1, 4);
  USeries S(ring, {"u"}, order), C(ring, {"u"}, order);
  MPoly gk = one(ring);
  for (unsigned k = 0; 2 * k <= unsigned(order); ++k) {
    C.set(2 * k, gk * ratio(1, factorial(2 * k)));
    if (2 * k + 1 <= unsigned(order)) S.set(2 * k + 1, gk * ratio(1, factorial(2 * k + 1)));
    gk = gk * gamma2;
  }
  USeries r = f * (C + (ratio(1, 2) * mu1) * S) - S;
  rep.add("Delta = 0 exponential", r.is_zero(),
          r.is_zero() ? "f (cosh + mu1 sinh/2) = sinh through u^" + std::to_string(order) : first_nonzero(r));
  return rep;
}

}  // namespace ellfgl
