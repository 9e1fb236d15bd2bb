#pragma once

#include <array>
#include <string>

#include "ellfgl/report.hpp"
#include "ellfgl/ring.hpp"
#include "ellfgl/series.hpp"

namespace ellfgl {

// Coefficients of y^2 + mu1 xy + mu3 y = x^3 + mu2 x^2 + mu4 x + mu6.
struct MuParams {
  MPoly mu1, mu2, mu3, mu4, mu6;

  const VarSpecPtr& ring() const { return mu1.spec(); }
  std::array<const MPoly*, 5> all() const { return {&mu1, &mu2, &mu3, &mu4, &mu6}; }
  // Apply a coefficient map (for example a specialization) to every entry.
  template <class F>
  MuParams map(F&& f) const {
    return {f(mu1), f(mu2), f(mu3), f(mu4), f(mu6)};
  }
};

// Z[mu1, mu2, mu3, mu4, mu6] with weights -2, -4, -6, -8, -12.
VarSpecPtr mu_ring();
MuParams symbolic_mu();
// Parse the five entries as polynomials over `ring`.
MuParams make_mu(const VarSpecPtr& ring, const std::array<std::string, 5>& entries);

struct WeierstrassParams {
  MPoly g2, g3, delta;
};

// s(t) with s = t^3 + mu1 t s + mu2 t^2 s + mu3 s^2 + mu4 t s^2 + mu6 s^3, by
// fixed-point iteration from s = t^3.
USeries solve_tate_s(const MuParams& mu, int order, const std::string& var = "t");
// Right side minus left side of the Tate cubic evaluated on s.
USeries tate_residual(const MuParams& mu, const USeries& s);

MPoly discriminant(const MuParams& mu);
WeierstrassParams reduce_to_weierstrass(const MuParams& mu);
// The x-shift (4 mu2 + mu1^2)/12 that appears throughout the reduction.
MPoly wp_shift(const MuParams& mu);

// psi(t) = (t + (4 mu2 + mu1^2) s / 12) / (1 - mu1 t / 2 - mu3 s / 2).
USeries tate_transform(const MuParams& mu, int order);

// mu2, mu4, mu6 expressed through the roots e1, e2, e3 (mu1 and mu3 kept).
MuParams e_form(const MPoly& mu1, const MPoly& mu3, const MPoly& e1, const MPoly& e2, const MPoly& e3);

// s(t) over Z[g1, g2, g3] with mu2, mu4, mu6 the elementary symmetric
// functions, against the trinomial-binomial closed form.
Report catalan_binom_identity(int order);
// mu = (0,0,0,mu4,0): s = sum_n Catalan(n) mu4^n t^(4n+3) for n <= nmax.
Report catalan_lemniscatic_check(int nmax);

}  // namespace ellfgl
