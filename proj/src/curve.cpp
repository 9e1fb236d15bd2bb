#include "ellfgl/curve.hpp"

#include <stdexcept>

namespace ellfgl {

VarSpecPtr mu_ring() {
  static const VarSpecPtr spec =
      make_spec({{"mu1", -2}, {"mu2", -4}, {"mu3", -6}, {"mu4", -8}, {"mu6", -12}});
  return spec;
}

MuParams symbolic_mu() { return make_mu(mu_ring(), {"mu1", "mu2", "mu3", "mu4", "mu6"}); }

MuParams make_mu(const VarSpecPtr& ring, const std::array<std::string, 5>& e) {
  return {parse_poly(ring, e[0]), parse_poly(ring, e[1]), parse_poly(ring, e[2]), parse_poly(ring, e[3]),
          parse_poly(ring, e[4])};
}

namespace {

// t^3 + (mu1 t + mu2 t^2) s + (mu3 + mu4 t) s^2 + mu6 s^3 to the given order.
USeries tate_rhs(const MuParams& mu, const USeries& s, int order) {
  const VarSpecPtr& ring = mu.ring();
  USeries r(ring, s.vars(), order);
  r.set(3u, MPoly::constant(ring, 1));
  USeries lin = mu.mu1 * shift_up(s, 1).truncated(order) + mu.mu2 * shift_up(s, 2).truncated(order);
  r += lin;
  if (!mu.mu3.is_zero() || !mu.mu4.is_zero() || !mu.mu6.is_zero()) {
    USeries s2 = mul_to(s, s, order);
    r += mu.mu3 * s2 + mu.mu4 * shift_up(s2, 1).truncated(order);
    if (!mu.mu6.is_zero()) r += mu.mu6 * mul_to(s2, s, order);
  }
  return r;
}

}  // namespace

USeries solve_tate_s(const MuParams& mu, int order, const std::string& var) {
  if (order < 3) throw std::invalid_argument("solve_tate_s: order must be at least 3");
  USeries s(mu.ring(), {var}, 3);
  s.set(3u, MPoly::constant(mu.ring(), 1));
  // Each pass fixes one more coefficient, so pass n works at order n.
  for (int n = 4; n <= order; ++n) s = tate_rhs(mu, s.with_order(n), n);
  return s;
}

USeries tate_residual(const MuParams& mu, const USeries& s) { return s - tate_rhs(mu, s, s.order()); }

MPoly discriminant(const MuParams& mu) {
  MPoly A = mu.mu1 * mu.mu3 + Coeff(2) * mu.mu4;
  MPoly B = Coeff(4) * mu.mu2 + mu.mu1 * mu.mu1;
  MPoly C = Coeff(4) * mu.mu6 + mu.mu3 * mu.mu3;
  MPoly four_delta = A * A * B * B - Coeff(32) * pow(A, 3) - Coeff(108) * C * C + Coeff(36) * A * B * C -
                     pow(B, 3) * C;
  bool integral_input = true;
  for (const MPoly* m : mu.all()) integral_input = integral_input && m->has_integer_coeffs();
  MPoly delta = four_delta * Coeff(1, 4);
  if (integral_input && !delta.has_integer_coeffs()) {
    throw std::logic_error("discriminant: right side of the 4*Delta formula is not divisible by 4");
  }
  return delta;
}

MPoly wp_shift(const MuParams& mu) { return (Coeff(4) * mu.mu2 + mu.mu1 * mu.mu1) * Coeff(1, 12); }

WeierstrassParams reduce_to_weierstrass(const MuParams& mu) {
  MPoly A = mu.mu1 * mu.mu3 + Coeff(2) * mu.mu4;
  MPoly B = Coeff(4) * mu.mu2 + mu.mu1 * mu.mu1;
  MPoly g2 = B * B * Coeff(1, 12) - Coeff(2) * A;
  MPoly g3 = A * B * Coeff(1, 6) - pow(B, 3) * Coeff(1, 216) - Coeff(4) * mu.mu6 - mu.mu3 * mu.mu3;
  MPoly delta = pow(g2, 3) - Coeff(27) * g3 * g3;
  return {g2, g3, delta};
}

USeries tate_transform(const MuParams& mu, int order) {
  if (order < 1) throw std::invalid_argument("tate_transform: order must be at least 1");
  const VarSpecPtr& ring = mu.ring();
  USeries s = solve_tate_s(mu, std::max(order, 3)).truncated(order);
  USeries t = variable_series<1>(ring, {"t"}, 0, order);
  USeries num = t + wp_shift(mu) * s;
  USeries den = constant_series<1>(ring, {"t"}, MPoly::constant(ring, 1), order) -
                (mu.mu1 * Coeff(1, 2)) * t - (mu.mu3 * Coeff(1, 2)) * s;
  return num / den;
}

MuParams e_form(const MPoly& mu1, const MPoly& mu3, const MPoly& e1, const MPoly& e2, const MPoly& e3) {
  MuParams m;
  m.mu1 = mu1;
  m.mu3 = mu3;
  m.mu2 = -(e1 + e2 + e3) - mu1 * mu1 * Coeff(1, 4);
  m.mu4 = e1 * e2 + e1 * e3 + e2 * e3 - mu1 * mu3 * Coeff(1, 2);
  m.mu6 = -(e1 * e2 * e3) - mu3 * mu3 * Coeff(1, 4);
  return m;
}

Report catalan_binom_identity(int order) {
  auto ring = make_spec({{"gamma1", -4}, {"gamma2", -4}, {"gamma3", -4}});
  MPoly g1 = MPoly::variable(ring, "gamma1"), g2 = MPoly::variable(ring, "gamma2"),
        g3 = MPoly::variable(ring, "gamma3");
  MPoly zero(ring);
  MuParams mu{zero, g1 + g2 + g3, zero, g1 * g2 + g1 * g3 + g2 * g3, g1 * g2 * g3};
  USeries s = solve_tate_s(mu, std::max(order, 3));
  Report rep;
  for (int k = 0; k <= order; ++k) {
    MPoly expected(ring);
    if (k % 2 == 1 && k >= 3) {
      unsigned n = unsigned(k - 1) / 2;
      std::vector<Term> terms;
      for (unsigned j1 = 0; j1 <= n - 1; ++j1) {
        for (unsigned j2 = 0; j1 + j2 <= n - 1; ++j2) {
          unsigned j3 = n - 1 - j1 - j2;
          Monomial m;
          m.set(0, j1);
          m.set(1, j2);
          m.set(2, j3);
          Integer c = binomial(n, j1) * binomial(n, j2) * binomial(n, j3);
          terms.push_back({m, ratio(c, n)});
        }
      }
      expected = MPoly::from_terms(ring, std::move(terms));
    }
    if (!(s.coeff(unsigned(k)) == expected)) {
      rep.add("catalan_binom", false,
              "t^" + std::to_string(k) + ": " + s.coeff(unsigned(k)).to_string() + " vs " + expected.to_string());
      return rep;
    }
  }
  rep.add("catalan_binom", true, "s(t) matches the binomial closed form to order " + std::to_string(order));
  return rep;
}

Report catalan_lemniscatic_check(int nmax) {
  auto ring = make_spec({{"mu4", -8}});
  MPoly zero(ring);
  MuParams mu{zero, zero, zero, MPoly::variable(ring, "mu4"), zero};
  int order = 4 * nmax + 3;
  USeries s = solve_tate_s(mu, order);
  Report rep;
  for (int k = 0; k <= order; ++k) {
    MPoly expected(ring);
    if (k >= 3 && (k - 3) % 4 == 0) {
      unsigned n = unsigned(k - 3) / 4;
      expected = pow(MPoly::variable(ring, "mu4"), n) * ratio(binomial(2 * n, n), n + 1);
    }
    if (!(s.coeff(unsigned(k)) == expected)) {
      rep.add("catalan_lemniscatic", false, "t^" + std::to_string(k) + ": " + s.coeff(unsigned(k)).to_string());
      return rep;
    }
  }
  rep.add("catalan_lemniscatic", true, "Catalan numbers through n=" + std::to_string(nmax));
  return rep;
}

}  // namespace ellfgl
