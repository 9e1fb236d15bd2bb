#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellfgl/curve.hpp"
#include "ellfgl/report.hpp"
#include "ellfgl/series.hpp"

namespace ellfgl {

inline const std::array<std::string, 2> kLawVars{"t1", "t2"};

// Secant data of the Tate cubic through (t1, s(t1)) and (t2, s(t2)).
struct ChordData {
  BSeries m;         // slope
  BSeries b;         // intercept
  BSeries b_over_p;  // b / (t1 t2)
  BSeries n;         // slope of the line through O and the third point
  BSeries p;         // t1 t2
};

ChordData build_chord(const MuParams& mu, int order);

enum class LawKind { General, PForm, MForm, Multiplicative, Linear, Todd2, Tanh, Sine, F3, F1, Fg, Custom };
std::string law_name(LawKind k);

struct FormalGroupLaw {
  BSeries F;
  LawKind kind = LawKind::Custom;
  // (check name, order) pairs that have been verified on F.
  std::vector<std::pair<std::string, int>> certified;
};

enum class GeneralForm { FG, PForm, MForm };

FormalGroupLaw build_general(const MuParams& mu, int order, GeneralForm form = GeneralForm::FG);

// Parameters by kind: Multiplicative {mu}, Todd2 {a, b}, Tanh {mu2}, Sine {delta, eps},
// F3 {mu3}, F1 {mu4, mu6}, Fg {g2, g3}, Linear {}.
struct ClassicalSpec {
  LawKind kind;
  std::vector<MPoly> params;
};
FormalGroupLaw build_classical(const VarSpecPtr& ring, const ClassicalSpec& spec, int order);

// Unit, commutativity and associativity to total order `order`.
Report verify_axioms(FormalGroupLaw& law, int order);
IntegralityResult verify_integrality(const BSeries& F, const IntegralityDomain& d);
// alpha_{i,j} homogeneous of weight -2(i+j-1).
Report check_grading(const BSeries& F);

struct ExpLogPair {
  USeries f;    // exponential, variable u
  USeries g;    // logarithm, variable t
  USeries rho;  // dF/dt2 at t2 = 0, equal to 1/g'
};

// From an arbitrary law: rho = dF/dt2|0, g = integral of 1/rho, f = reverse(g).
// f and g have the order of F.
ExpLogPair log_exp(const BSeries& F);
// The general law through rho = 1 - mu1 t - mu2 t^2 - 2 mu3 s - 2 mu4 t s - 3 mu6 s^2,
// which only needs s(t). Result of the given order.
USeries rho_from_curve(const MuParams& mu, int order);
ExpLogPair general_log_exp(const MuParams& mu, int order);

enum class OdeCase { General, Riccati, Erm, Eq46, Fcub, F36, F3, Cube, Lemniscatic, Equianharmonic6 };
std::string ode_name(OdeCase c);
// The residual of the named equation for f over the given mu, as a series in u.
USeries ode_residual(OdeCase c, const MuParams& mu, const USeries& f);
// The parameter family on which the named equation is stated (symbolic in the survivors).
MuParams ode_family(OdeCase c);
// Case selection by the vanishing pattern of (mu3, mu4, mu6), then the residuals.
Report check_exponential_ode(const MuParams& mu, const USeries& f);
// Every case on its own family, exponential computed to `order`.
Report exponential_ode_suite(int order);

// [t]_k for any integer k; k < 0 goes through the inverse series.
USeries power_system(const BSeries& F, int k, int order);
// tbar with F(t, tbar) = 0, solved order by order.
USeries inverse_series(const BSeries& F, int order);

// F(t, t) of the general law from the diagonal chord data, with m = s', b = s - t s'.
USeries general_doubling(const MuParams& mu, int order);

struct HeightResult {
  std::optional<int> height;  // nullopt means no nonzero term mod 2 up to `order`
  int order = 0;
  USeries doubling_mod2;
  std::string detail;
};
// mu must have integer coefficients.
HeightResult two_height(const MuParams& mu, int order);
// The mod 2 lemma for F(t,t) on the given mu.
Report two_height_lemma(const MuParams& mu, int order);

struct AutomorphismResult {
  bool passed = false;
  std::vector<std::string> forced_zero;  // generators forced to vanish
  std::vector<std::string> survivors;
  std::string detail;
};
// Elimination on rho(alpha t) = rho(t) for alpha of order n, then a support
// check of the logarithm on the surviving family.
AutomorphismResult automorphism_check(int n, int order);

struct E1Data {
  BSeries reduced;           // F modulo decomposables
  std::vector<MPoly> b;      // b_n, n = 1..order-1
  std::optional<std::array<unsigned, 2>> shape_failure;
};
E1Data e1_reduction(const BSeries& F);
// The closed form of the general law modulo decomposables.
BSeries general_law_e1(int order);

struct TpData {
  std::vector<MPoly> c;      // coefficients of dF/dt2|0
  std::vector<MPoly> c_hat;  // [t]_p = sum c_hat_n t^(n+1)
};
TpData tp_data(const BSeries& F, unsigned p, int order);
// The lemniscatic example: dF/dt2|0 = 2t^3/s - 1, phi(a4) = -2 mu4 and the m = 2, 3, 4 relations.
Report lemniscatic_generators(int order);

// psi(F_mu(t1, t2)) = F_g(psi(t1), psi(t2)).
Report verify_reduction(const MuParams& mu, int order);

}  // namespace ellfgl
