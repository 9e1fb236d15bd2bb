#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellfgl/curve.hpp"
#include "ellfgl/report.hpp"
#include "ellfgl/series.hpp"

namespace ellfgl {

enum class GenusKind { Linear, Multiplicative, Todd2, Tanh, Sine, GeneralElliptic, Krichever, GeneralKrichever };
std::string genus_name(GenusKind k);
std::optional<GenusKind> parse_genus_kind(const std::string& name);

// Parameters by kind: Multiplicative {mu}, Todd2 {a, b}, Tanh {mu2}, Sine {delta, eps},
// GeneralElliptic {mu1, mu2, mu3, mu4, mu6}, Krichever {a1, a2, a3, a4},
// GeneralKrichever {a1, a2, a3, a4, a6}, Linear {}.
struct GenusSpec {
  GenusKind kind = GenusKind::Linear;
  std::vector<MPoly> params;
};

// Z[a1, a2, a3, a4] and Z[a1, a2, a3, a4, a6] with weights -2k.
VarSpecPtr krichever_ring();
VarSpecPtr general_krichever_ring();

USeries genus_exponential(const GenusSpec& spec, int order);
USeries genus_logarithm(const GenusSpec& spec, int order);
// L([CP^n]) = (n+1) * coefficient of t^(n+1) in the logarithm, n = 0..count-1.
std::vector<MPoly> cpn_values(const GenusSpec& spec, int count);
// The general elliptic values lie in Z[mu] although the logarithm does not.
Report cpn_integrality(int count);

// Brute-force descent counts A_{n,k} over permutations of n+1 letters.
std::vector<Integer> eulerian_row(int n);
// Exponential of the Todd two-parameter law against the exponential ratio,
// the descent formula, and the b = 0 reduction.
Report todd2_exponential_check(int order);

// Bernoulli numbers B_0..B_n by the Akiyama-Tanigawa recurrence (B_1 = +1/2).
std::vector<Coeff> bernoulli(int n);
// Multiplicative: (n+1)! f_n = (-mu)^n. Tanh: Bernoulli coefficient formula through k = kmax.
Report multiplicative_relations(int order);
Report tanh_relations(int kmax);

// p_k(a2, b3, a4), k = 2..N, from p_2 = a2 and the derivation
// b3 d/da2 + (6 a2^2 - a4) d/db3.
struct PsiExpansion {
  VarSpecPtr ring;         // a2, b3, a4
  VarSpecPtr split_ring;   // a2, a6, a4 with a6 = b3^2
  std::vector<MPoly> p;    // index k; entries 0 and 1 unused
  std::vector<MPoly> r;    // r_k for even k: p_k with b3^2 -> a6
  std::vector<MPoly> q;    // q_k for even k: p_{k+3} / b3 with b3^2 -> a6
};
PsiExpansion psi_expansion(int N);
Report psi_parity_check(const PsiExpansion& e);

// sigma(u) exp(a1 u) exp(psi(u, v)) over Q[a1..a4], with g2 = 2 a4 and
// g3 = 4 a2^3 - 2 a2 a4 - a3^2.
USeries krichever_exponential(int order);
// sigma(u) exp(a1 u) exp(psi) with the parity-split psi over Q[a1, a2, a3, a4, a6].
USeries general_krichever_exponential(int order);
Report krichever_integrality(int order);
Report general_krichever_integrality(int order);

// The mu attached to Krichever parameters: (2a1, 3a2 - a1^2, -a3, 3a2^2 + a1 a3 - a4/2, 0).
MuParams krichever_mu(const VarSpecPtr& ring);
// f / f' of the Krichever exponential against the exponential of that law.
Report krichever_fgl_link(int order);
// u (ln phi)' = u / f with phi the general Krichever exponential written in mu.
Report th30_cross_check(const MuParams& mu, int order);
Report th30_cross_check(int order);

struct AdditionOdeResult {
  Report report;
  MPoly a2, a3, a4;  // constants measured from f with a1 = 0
  // Whether the variant with a3 psi in place of 2 a3 psi is also constant.
  bool single_a3_constant = false;
};
AdditionOdeResult addition_ode_check(int order);
// (f')^2 - f f''/2 - f_2 f^2/2 = 1 for the sine exponential.
Report sine_addition_check(int order);

}  // namespace ellfgl
