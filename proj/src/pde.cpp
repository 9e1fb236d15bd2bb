#include "ellfgl/pde.hpp"

#include <stdexcept>
#include <string>

namespace ellfgl {

namespace {

MPoly dv(const MPoly& p) { return derivative(p, "v"); }

USeries dv(const USeries& s) {
  return s.map(s.ring(), [](const MPoly& c) { return dv(c); });
}

USeries one(const VarSpecPtr& ring, const std::string& var, int order) {
  return constant_series<1>(ring, {var}, MPoly::constant(ring, 1), order);
}

std::string first_bad(const USeries& r) {
  int k = r.valuation();
  if (k > r.order()) return {};
  return "first nonzero residual at degree " + std::to_string(k) + ": " + r.coeff(unsigned(k)).to_string();
}

void require(const PathSpec& path, PathKind kind, const char* who) {
  if (path.kind != kind) throw std::invalid_argument(std::string(who) + ": wrong path kind");
  if (!path.ring || !path.ring->find("v")) throw std::invalid_argument(std::string(who) + ": ring has no v");
}

// 1 - mu1 t - mu2 t^2 - 2 mu3 s - 2 mu4 t s - 3 mu6 s^2, the common factor of
// both partial derivatives of the cubic.
USeries cubic_denominator(const MuParams& mu, const USeries& t, const USeries& s) {
  int n = s.order();
  return one(s.ring(), s.vars()[0], n) - mu.mu1 * t - mu.mu2 * (t * t) - Coeff(2) * mu.mu3 * s -
         Coeff(2) * mu.mu4 * (t * s) - Coeff(3) * mu.mu6 * (s * s);
}

}  // namespace

VarSpecPtr path_ring(PathKind kind) {
  static const VarSpecPtr cubic = make_spec({{"v", -4}, {"c2", -4}, {"c3", -6}, {"c4", -8}, {"c6", -12}});
  static const VarSpecPtr linear = make_spec({{"v", -2}, {"alpha", -4}, {"beta", -10}, {"c3", -6}, {"c6", -12}});
  return kind == PathKind::Cubic ? cubic : linear;
}

PathSpec cubic_path(const VarSpecPtr& ring, MPoly c2, MPoly c3, MPoly c4, MPoly c6) {
  PathSpec p;
  p.kind = PathKind::Cubic;
  p.ring = ring;
  p.c2 = rebase(c2, ring);
  p.c3 = rebase(c3, ring);
  p.c4 = rebase(c4, ring);
  p.c6 = rebase(c6, ring);
  p.alpha = p.beta = MPoly(ring);
  return p;
}

PathSpec linear_path(const VarSpecPtr& ring, MPoly alpha, MPoly beta, MPoly c3, MPoly c6) {
  PathSpec p;
  p.kind = PathKind::Linear;
  p.ring = ring;
  p.alpha = rebase(alpha, ring);
  p.beta = rebase(beta, ring);
  p.c3 = rebase(c3, ring);
  p.c6 = rebase(c6, ring);
  p.c2 = p.c4 = MPoly(ring);
  return p;
}

PathSpec symbolic_path(PathKind kind) {
  auto R = path_ring(kind);
  auto x = [&](const char* name) { return MPoly::variable(R, name); };
  if (kind == PathKind::Cubic) return cubic_path(R, x("c2"), x("c3"), x("c4"), x("c6"));
  return linear_path(R, x("alpha"), x("beta"), x("c3"), x("c6"));
}

MuParams path_mu(const PathSpec& path) {
  const auto& R = path.ring;
  MPoly v = MPoly::variable(R, "v");
  MPoly zero(R);
  if (path.kind == PathKind::Cubic) {
    return {zero, Coeff(3) * v + path.c2, path.c3, Coeff(3) * v * v + Coeff(2) * path.c2 * v + path.c4,
            v * v * v + path.c2 * v * v + path.c4 * v + path.c6};
  }
  return {zero, zero, path.alpha * v + path.c3, zero, path.beta * v + path.c6};
}

USeries path_solution(const PathSpec& path, int order) { return solve_tate_s(path_mu(path), order); }

USeries path_solution_tau(const PathSpec& path, int order) {
  require(path, PathKind::Linear, "path_solution_tau");
  USeries s = solve_tate_s(path_mu(path), 3 * order);
  USeries S(path.ring, {"tau"}, order);
  for (int k = 0; k <= 3 * order; ++k) {
    if (k % 3 == 0) {
      S.set(unsigned(k / 3), s.coeff(unsigned(k)));
    } else if (!s.coeff(unsigned(k)).is_zero()) {
      throw std::logic_error("path_solution_tau: s has a term t^" + std::to_string(k));
    }
  }
  return S;
}

Report hopf_check_cubic(const PathSpec& path, int order) {
  require(path, PathKind::Cubic, "hopf_check_cubic");
  Report rep;
  MuParams mu = path_mu(path);
  MuParams dmu = mu.map([](const MPoly& m) { return dv(m); });
  // One extra degree so that dS/dt is known through t^order.
  USeries S1 = solve_tate_s(mu, order + 1);
  USeries S = S1.truncated(order);
  USeries St = differentiate(S1);
  USeries Sv = dv(S);

  auto at_zero = [&](const MPoly& c) { return specialize(c, {{"v", Coeff(0)}}); };
  MuParams mu0 = mu.map(at_zero);
  rep.add("initial condition S(t,0) = s0(t)", S.map(path.ring, at_zero) == solve_tate_s(mu0, order));

  USeries t = variable_series<1>(path.ring, {"t"}, 0, order);
  USeries D = cubic_denominator(mu, t, S);
  USeries num_v = dmu.mu1 * (t * S) + dmu.mu2 * (t * t * S) + dmu.mu3 * (S * S) + dmu.mu4 * (t * S * S) +
                  dmu.mu6 * (S * S * S);
  USeries num_t = Coeff(3) * (t * t) + mu.mu1 * S + Coeff(2) * mu.mu2 * (t * S) + mu.mu4 * (S * S);
  USeries Sv_implicit = num_v / D;
  USeries St_implicit = num_t / D;
  rep.add("dS/dv: series against implicit form", Sv == Sv_implicit, first_bad(Sv - Sv_implicit));
  rep.add("dS/dt: series against implicit form", St.truncated(order) == St_implicit,
          first_bad(St.truncated(order) - St_implicit));
  // The v-numerator is S times the t-numerator.
  USeries lift = num_v - S * num_t;
  rep.add("numerator identity", lift.is_zero(), first_bad(lift));
  USeries residual = Sv - S * St.truncated(order);
  rep.add("Hopf equation through t^" + std::to_string(order), residual.is_zero(), first_bad(residual));
  return rep;
}

Report hopf_check_linear(const PathSpec& path, int order) {
  require(path, PathKind::Linear, "hopf_check_linear");
  Report rep;
  MuParams mu = path_mu(path);
  USeries S1;
  try {
    S1 = path_solution_tau(path, order + 1);
  } catch (const std::logic_error& e) {
    rep.add("s depends on t only through tau", false, e.what());
    return rep;
  }
  rep.add("s depends on t only through tau", true);
  USeries S = S1.truncated(order);
  USeries Stau = differentiate(S1);
  USeries Sv = dv(S);
  USeries S2 = S * S;
  USeries S3 = S2 * S;
  USeries D = one(path.ring, "tau", order) - Coeff(2) * mu.mu3 * S - Coeff(3) * mu.mu6 * S2;
  USeries lhs_tau = Stau.truncated(order) * D - one(path.ring, "tau", order);
  rep.add("dS/dtau (1 - 2 mu3 S - 3 mu6 S^2) = 1", lhs_tau.is_zero(), first_bad(lhs_tau));
  USeries G = path.alpha * S2 + path.beta * S3;
  USeries lhs_v = Sv * D - G;
  rep.add("dS/dv (1 - 2 mu3 S - 3 mu6 S^2) = alpha S^2 + beta S^3", lhs_v.is_zero(), first_bad(lhs_v));
  USeries residual = Sv - G * Stau.truncated(order);
  rep.add("Hopf equation through tau^" + std::to_string(order), residual.is_zero(), first_bad(residual));
  return rep;
}

Report invariant_weierstrass_check(const PathSpec& path) {
  require(path, PathKind::Cubic, "invariant_weierstrass_check");
  Report rep;
  auto w = reduce_to_weierstrass(path_mu(path));
  auto at_zero = [](const MPoly& c) { return specialize(c, {{"v", Coeff(0)}}); };
  MPoly d2 = w.g2 - at_zero(w.g2);
  MPoly d3 = w.g3 - at_zero(w.g3);
  rep.add("g2(mu(v)) = g2(mu(0))", d2.is_zero(), d2.to_string());
  rep.add("g3(mu(v)) = g3(mu(0))", d3.is_zero(), d3.to_string());
  return rep;
}

AssociahedronData associahedron_gf(int nmax) {
  if (nmax < 0) throw std::invalid_argument("associahedron_gf: nmax must be nonnegative");
  AssociahedronData out;
  auto R = make_spec({{"alpha", -2}, {"upsilon", -2}});
  out.ring = R;
  MPoly a = MPoly::variable(R, "alpha");
  MPoly y = MPoly::variable(R, "upsilon");
  MPoly lin = a + Coeff(2) * y;
  MPoly quad = y * (a + y);
  const int N = nmax + 2;

  // U = tau^2 + (alpha + 2 upsilon) tau U + upsilon (alpha + upsilon) U^2; the
  // right side at degree n only sees coefficients of degree < n.
  auto rhs = [&](const USeries& U) {
    USeries tau = variable_series<1>(R, {"tau"}, 0, U.order());
    return tau * tau + lin * (tau * U) + quad * (U * U);
  };
  USeries U(R, {"tau"}, 2);
  U.set(2u, MPoly::constant(R, 1));
  for (int n = 3; n <= N; ++n) U = rhs(U.with_order(n));
  out.U = U.truncated(N);
  USeries tau = variable_series<1>(R, {"tau"}, 0, N);
  USeries quadratic = quad * (U * U) - (one(R, "tau", N) - lin * tau) * U + tau * tau;
  out.report.add("quadratic equation", quadratic.is_zero(), first_bad(quadratic));

  // Hopf equation needs dU/dtau through tau^N, so extend by one more pass.
  USeries U1 = rhs(U.with_order(N + 1));
  USeries Uy = U.map(R, [](const MPoly& c) { return derivative(c, "upsilon"); });
  USeries hopf = Uy - U * differentiate(U1).truncated(N);
  out.report.add("dU/dupsilon = U dU/dtau", hopf.is_zero(), first_bad(hopf));

  bool init = true;
  for (int n = 0; n <= nmax; ++n) {
    MPoly c0 = specialize(U.coeff(unsigned(n + 2)), {{"upsilon", Coeff(0)}});
    init = init && c0 == pow(a, unsigned(n));
  }
  bool low = U.coeff(0u).is_zero() && U.coeff(1u).is_zero();
  out.report.add("U(tau, 0) = tau^2 / (1 - alpha tau)", init && low);

  bool homogeneous = true;
  bool euler = true;
  std::size_t ia = *R->find("alpha");
  std::size_t iy = *R->find("upsilon");
  for (int n = 0; n <= nmax; ++n) {
    const MPoly& c = U.coeff(unsigned(n + 2));
    std::vector<Integer> f(std::size_t(n) + 1, 0);
    for (const auto& term : c.terms()) {
      unsigned k = term.mono.exp[ia];
      if (int(k + term.mono.exp[iy]) != n || term.coeff.get_den() != 1) {
        homogeneous = false;
        continue;
      }
      f[k] = term.coeff.get_num();
    }
    Integer alt = 0;
    for (int k = 0; k <= n; ++k) alt += (k % 2 ? -1 : 1) * f[std::size_t(k)];
    euler = euler && alt == 1;
    out.faces.push_back(std::move(f));
  }
  out.report.add("coefficients are integral forms of degree n", homogeneous);
  out.report.add("Euler relation sum (-1)^k f_k = 1", euler);
  return out;
}

}  // namespace ellfgl
