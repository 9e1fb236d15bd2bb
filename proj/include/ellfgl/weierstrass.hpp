#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellfgl/curve.hpp"
#include "ellfgl/report.hpp"
#include "ellfgl/series.hpp"

namespace ellfgl {

// Z[g2, g3] with weights -8 and -12.
VarSpecPtr g_ring();

// Integer coefficients a_{i,j} of
//   sigma(u) = u sum a_{i,j} / (4i+6j+1)! (g2 u^4 / 2)^i (2 g3 u^6)^j
// for all 2i + 3j <= max_weight.
class SigmaTable {
 public:
  explicit SigmaTable(int max_weight);

  int max_weight() const { return max_weight_; }
  // Zero outside the index set and for negative indices.
  const Integer& at(int i, int j) const;
  const std::map<std::pair<int, int>, Integer>& entries() const { return entries_; }

 private:
  int max_weight_;
  std::map<std::pair<int, int>, Integer> entries_;
};

// Thrown when the recursion produces a non-integer entry.
struct NonIntegralEntry : std::runtime_error {
  int i, j;
  NonIntegralEntry(int i_, int j_, const std::string& what) : std::runtime_error(what), i(i_), j(j_) {}
};

// sigma(u) to order `order` with g2, g3 replaced by the given polynomials
// (any ring). The table must cover weight (order - 1) / 2.
USeries sigma_series(const SigmaTable& table, const MPoly& g2, const MPoly& g3, int order);
// Symbolic sigma over Q[g2, g3].
USeries sigma_series(const SigmaTable& table, int order);

// No Laurent series: zeta and wp are carried as u*zeta and u^2*wp.
struct SigmaSeries {
  USeries sigma;     // order N
  USeries zeta_reg;  // u sigma'/sigma, order N - 1
  USeries wp_reg;    // u^2 wp = zeta_reg - u zeta_reg', order N - 2
};
SigmaSeries sigma_family(const USeries& sigma);

// (u^3 wp')^2 - 4 (u^2 wp)^3 + g2 u^4 (u^2 wp) + g3 u^6.
USeries weierstrass_ode_residual(const SigmaSeries& s, const MPoly& g2, const MPoly& g3);

// Q0 sigma and Q2 sigma for sigma over the g ring (uses d/dg2 and d/dg3).
USeries q0_residual(const USeries& sigma);
USeries q2_residual(const USeries& sigma);
// Second construction: coefficients solved directly from Q2 sigma = 0.
USeries sigma_from_q2(int order);

// The three Hurwitz theorems, the Z[g2, g3] witness, and 1/zeta, 1/wp.
Report hurwitz_certificates(const SigmaTable& table, int order);

// -2 (wp - c) / (wp' - mu1 wp + mu1 c - mu3) with c = (4 mu2 + mu1^2)/12.
USeries weier_exponential(const SigmaTable& table, const MuParams& mu, int order);
// u / f from the reciprocal form -1/2 (wp' + wp'(w)) / (wp - wp(v)) + mu1 / 2.
USeries weier_reciprocal(const SigmaTable& table, const MuParams& mu, int order);

// b_{i,j} = 2^(3i+4j) 3^(i+j) i! j! / (4i+6j+1)! a_{i,j}.
Coeff b_entry(const SigmaTable& table, int i, int j);

struct ConjectureReport {
  int checked = 0;
  int zero_entries = 0;
  std::vector<std::pair<int, int>> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};
// 2- and 3-adic valuations of a_{i,j} against (4i+6j+1)! / (2^(3i+4j) 3^(i+j) i! j!) for i + j <= maxsum.
ConjectureReport conjecture_check(int maxsum);
// (4i+6j+1)(2i+3j) b_{i,j} = 3j b_{i+1,j-1} - 2i b_{i-1,j} + 32 i(i-1) b_{i-2,j+1}.
Report bij_recursion_check(int maxsum);

// p-adic valuation of a nonzero rational.
int valuation(const Coeff& x, unsigned long p);

// Delta = 0 family mu = (mu1, mu2, 0, 0, 0): f (C + mu1 S / 2) = S with
// S = sinh(gamma u)/gamma, C = cosh(gamma u), gamma^2 = (mu1^2 + 4 mu2)/4.
Report degenerate_check(const SigmaTable& table, int order);

}  // namespace ellfgl
