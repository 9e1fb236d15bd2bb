#pragma once

#include <vector>

#include "ellfgl/curve.hpp"
#include "ellfgl/report.hpp"
#include "ellfgl/series.hpp"

namespace ellfgl {

// Two-variable objects such as S(t, v) are USeries in t whose coefficients
// are polynomials in v (and the path constants).

enum class PathKind { Cubic, Linear };

// Cubic: mu(v) = (0, 3v + c2, c3, 3v^2 + 2 c2 v + c4, v^3 + c2 v^2 + c4 v + c6).
// Linear: mu(v) = (0, 0, alpha v + c3, 0, beta v + c6).
// Every entry lives over `ring`, which must contain a variable named "v".
struct PathSpec {
  PathKind kind = PathKind::Cubic;
  VarSpecPtr ring;
  MPoly c2, c3, c4, c6;
  MPoly alpha, beta;
};

// Q[v, c2, c3, c4, c6] or Q[v, alpha, beta, c3, c6].
VarSpecPtr path_ring(PathKind kind);
PathSpec symbolic_path(PathKind kind);
PathSpec cubic_path(const VarSpecPtr& ring, MPoly c2, MPoly c3, MPoly c4, MPoly c6);
PathSpec linear_path(const VarSpecPtr& ring, MPoly alpha, MPoly beta, MPoly c3, MPoly c6);
MuParams path_mu(const PathSpec& path);

// S(t, v) = s(t, mu(v)) to order N in t.
USeries path_solution(const PathSpec& path, int order);
// For the linear path, S as a series in tau = t^3 (throws if s has a term
// t^k with 3 not dividing k).
USeries path_solution_tau(const PathSpec& path, int order);

// dS/dv = S dS/dt through t^order. The v-derivative is taken both from the
// series and from the implicit-function form of the cubic.
Report hopf_check_cubic(const PathSpec& path, int order);
// dS/dv = (alpha S^2 + beta S^3) dS/dtau through tau^order.
Report hopf_check_linear(const PathSpec& path, int order);
// g2 and g3 of mu(v) do not depend on v.
Report invariant_weierstrass_check(const PathSpec& path);

struct AssociahedronData {
  VarSpecPtr ring;  // alpha, upsilon
  USeries U;        // in tau
  // faces[n][k] = number of k-dimensional faces of the n-dimensional associahedron.
  std::vector<std::vector<Integer>> faces;
  Report report;
};
// Root U = tau^2 + ... of upsilon (alpha + upsilon) U^2 - (1 - (alpha + 2 upsilon) tau) U + tau^2 = 0,
// solved coefficient by coefficient for n = 0..nmax, with the Hopf equation,
// the initial condition U(tau, 0) = tau^2 / (1 - alpha tau) and Euler's relation checked.
AssociahedronData associahedron_gf(int nmax);

}  // namespace ellfgl
