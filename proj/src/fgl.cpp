#include "ellfgl/fgl.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellfgl {

namespace {

MPoly one(const VarSpecPtr& ring) { return MPoly::constant(ring, 1); }

template <std::size_t K>
Series<K> unit_like(const Series<K>& x) {
  return constant_series<K>(x.ring(), x.vars(), one(x.ring()), x.order());
}

// c[0] + c[1] x + c[2] x^2 + ... by Horner.
template <std::size_t K>
Series<K> polyval(const std::vector<MPoly>& c, const Series<K>& x) {
  Series<K> r = constant_series<K>(x.ring(), x.vars(), c.back(), x.order());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    r = r * x;
    r += c[k];
  }
  return r;
}

template <std::size_t K>
Series<K> xi0(const MuParams& mu, const Series<K>& x) {
  return polyval<K>({one(mu.ring()), mu.mu2, mu.mu4, mu.mu6}, x);
}

template <std::size_t K>
Series<K> eta0(const MuParams& mu, const Series<K>& b) {
  return polyval<K>({one(mu.ring()), -mu.mu3, -mu.mu6}, b);
}

BSeries tvar(const VarSpecPtr& ring, std::size_t i, int order) { return variable_series<2>(ring, kLawVars, i, order); }

BSeries t_sum(const VarSpecPtr& ring, int order) { return tvar(ring, 0, order) + tvar(ring, 1, order); }

BSeries t_prod(const VarSpecPtr& ring, int order) {
  BSeries p(ring, kLawVars, order);
  if (order >= 2) p.set({1, 1}, one(ring));
  return p;
}

MuParams zero_mu(const VarSpecPtr& ring) {
  MPoly z(ring);
  return {z, z, z, z, z};
}

bool is_zero_series(const USeries& r, std::string* where) {
  for (unsigned k = 0; int(k) <= r.order(); ++k) {
    if (!r.coeff(k).is_zero()) {
      if (where) *where = "u^" + std::to_string(k) + ": " + r.coeff(k).to_string();
      return false;
    }
  }
  return true;
}

std::string exp_text(const std::array<unsigned, 2>& e) {
  return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")";
}

}  // namespace

std::string law_name(LawKind k) {
  switch (k) {
    case LawKind::General: return "general";
    case LawKind::PForm: return "p-form";
    case LawKind::MForm: return "m-form";
    case LawKind::Multiplicative: return "multiplicative";
    case LawKind::Linear: return "linear";
    case LawKind::Todd2: return "todd2";
    case LawKind::Tanh: return "tanh";
    case LawKind::Sine: return "sine";
    case LawKind::F3: return "F3";
    case LawKind::F1: return "F1";
    case LawKind::Fg: return "Fg";
    case LawKind::Custom: return "custom";
  }
  return "custom";
}

ChordData build_chord(const MuParams& mu, int order) {
  if (order < 2) throw std::invalid_argument("build_chord: order must be at least 2");
  const VarSpecPtr& ring = mu.ring();
  USeries s = solve_tate_s(mu, order + 2);
  ChordData c;
  c.m = divided_difference(s, kLawVars).truncated(order);
  // b = (t1 s2 - t2 s1)/(t1 - t2) = -t1 t2 * DD(s/t).
  c.b_over_p = -divided_difference(shift_down(s, 1), kLawVars).truncated(order);
  c.b = shift_up(c.b_over_p, 1, 1).truncated(order);
  // Independent route through the line equation: b = s(t1) - m t1.
  BSeries direct = embed(s, 0, kLawVars).truncated(order) - c.m * tvar(ring, 0, order);
  if (!(direct == c.b)) throw std::logic_error("build_chord: intercept is inconsistent with the slope");
  c.p = t_prod(ring, order);
  c.n = c.m + c.p * xi0(mu, c.m) / eta0(mu, c.b);
  return c;
}

FormalGroupLaw build_general(const MuParams& mu, int order, GeneralForm form) {
  const VarSpecPtr& ring = mu.ring();
  ChordData c = build_chord(mu, order);
  BSeries S = t_sum(ring, order);
  const BSeries& m = c.m;
  const BSeries& b = c.b;
  const BSeries& p = c.p;
  BSeries xm = xi0(mu, m);
  BSeries eta = eta0(mu, b);
  FormalGroupLaw law;
  switch (form) {
    case GeneralForm::FG: {
      BSeries Sb_pm = S * b + p * m;
      BSeries num = S - mu.mu1 * p - mu.mu3 * Sb_pm - mu.mu4 * (p * b) -
                    mu.mu6 * (b * (S * b + Coeff(2) * (p * m)));
      law.F = num * xm / (xi0(mu, c.n) * eta * eta);
      law.kind = LawKind::General;
      break;
    }
    case GeneralForm::PForm: {
      BSeries eta1 = constant_series<2>(ring, kLawVars, mu.mu1, order) + mu.mu3 * m + mu.mu4 * b +
                     Coeff(2) * (mu.mu6 * (b * m));
      BSeries num = S * eta - p * eta1;
      BSeries r = xm / eta;
      BSeries inner = eta + p * (constant_series<2>(ring, kLawVars, mu.mu2, order) + Coeff(2) * (mu.mu4 * m) +
                                 Coeff(3) * (mu.mu6 * (m * m))) +
                      (constant_series<2>(ring, kLawVars, mu.mu4, order) + Coeff(3) * (mu.mu6 * m)) * (p * p) * r +
                      mu.mu6 * (p * p * p * r * r);
      law.F = num / (eta * inner);
      law.kind = LawKind::PForm;
      break;
    }
    case GeneralForm::MForm: {
      BSeries lin = constant_series<2>(ring, kLawVars, mu.mu1, order) + mu.mu3 * m;
      BSeries num = S * xm + m * lin +
                    b * (constant_series<2>(ring, kLawVars, mu.mu2, order) + Coeff(2) * (mu.mu4 * m) +
                         Coeff(3) * (mu.mu6 * (m * m)));
      BSeries den = xm * (unit_like(b) - mu.mu3 * b) - c.b_over_p * lin * eta;
      law.F = num / den;
      law.kind = LawKind::MForm;
      break;
    }
  }
  return law;
}

FormalGroupLaw build_classical(const VarSpecPtr& ring, const ClassicalSpec& spec, int order) {
  if (order < 2) throw std::invalid_argument("build_classical: order must be at least 2");
  auto need = [&](std::size_t n) {
    if (spec.params.size() != n) {
      throw std::invalid_argument("build_classical: " + law_name(spec.kind) + " takes " + std::to_string(n) +
                                  " parameters");
    }
  };
  BSeries S = t_sum(ring, order);
  BSeries p = t_prod(ring, order);
  BSeries I = unit_like(S);
  FormalGroupLaw law;
  law.kind = spec.kind;
  const auto& a = spec.params;
  switch (spec.kind) {
    case LawKind::Linear:
      need(0);
      law.F = S;
      break;
    case LawKind::Multiplicative:
      need(1);
      law.F = S - a[0] * p;
      break;
    case LawKind::Todd2:
      need(2);
      law.F = (S - a[0] * p) / (I - a[1] * p);
      break;
    case LawKind::Tanh:
      need(1);
      law.F = S / (I + a[0] * p);
      break;
    case LawKind::Sine: {
      need(2);
      // R(t) = 1 - 2 delta t^2 + eps t^4.
      USeries R(ring, {"t"}, order);
      R.set(0u, one(ring));
      if (order >= 2) R.set(2u, Coeff(-2) * a[0]);
      if (order >= 4) R.set(4u, a[1]);
      USeries root = sqrt_unit(R);
      BSeries num = tvar(ring, 0, order) * embed(root, 1, kLawVars) + tvar(ring, 1, order) * embed(root, 0, kLawVars);
      law.F = num / (I - a[1] * (p * p));
      break;
    }
    case LawKind::F3: {
      need(1);
      MuParams mu = zero_mu(ring);
      mu.mu3 = a[0];
      ChordData c = build_chord(mu, order);
      BSeries den = I - a[0] * c.b;
      law.F = (S - a[0] * (S * c.b) - a[0] * (p * c.m)) / (den * den);
      break;
    }
    case LawKind::F1: {
      need(2);
      MuParams mu = zero_mu(ring);
      mu.mu4 = a[0];
      mu.mu6 = a[1];
      ChordData c = build_chord(mu, order);
      BSeries m2 = c.m * c.m;
      BSeries num = c.b * c.m * (Coeff(2) * a[0] * I + Coeff(3) * (a[1] * c.m));
      law.F = S + num / (I + a[0] * m2 + a[1] * (m2 * c.m));
      break;
    }
    case LawKind::Fg: {
      need(2);
      // Tate chart of y^2 = 4x^3 - g2 x - g3: mu4 = -g2/4, mu6 = -g3/4.
      MuParams mu = zero_mu(ring);
      mu.mu4 = a[0] * Coeff(-1, 4);
      mu.mu6 = a[1] * Coeff(-1, 4);
      ChordData c = build_chord(mu, order);
      BSeries m2 = c.m * c.m;
      BSeries num = c.b * c.m * (Coeff(2) * a[0] * I + Coeff(3) * (a[1] * c.m));
      law.F = S - num / (Coeff(4) * I - a[0] * m2 - a[1] * (m2 * c.m));
      break;
    }
    default:
      throw std::invalid_argument("build_classical: " + law_name(spec.kind) + " is not a classical law");
  }
  return law;
}

Report verify_axioms(FormalGroupLaw& law, int order) {
  Report rep;
  const BSeries& F0 = law.F;
  if (order > F0.order()) throw std::out_of_range("verify_axioms: order beyond the truncation of F");
  BSeries F = F0.truncated(order);
  const VarSpecPtr& ring = F.ring();

  bool unit = true;
  for (std::size_t w = 0; w < 2; ++w) {
    USeries r = restrict_zero(F, w);
    USeries t = variable_series<1>(ring, r.vars(), 0, order);
    if (!(r == t)) unit = false;
  }
  rep.add("unit", unit, unit ? "F(t,0) = F(0,t) = t" : "F(t,0) differs from t");

  auto comm = first_difference(swap_vars(F), F, order);
  rep.add("commutativity", !comm, comm ? "first asymmetric coefficient at " + exp_text(*comm) : "");

  const std::array<std::string, 3> v3{"t1", "t2", "t3"};
  TSeries x = variable_series<3>(ring, v3, 0, order);
  TSeries y = variable_series<3>(ring, v3, 1, order);
  TSeries z = variable_series<3>(ring, v3, 2, order);
  TSeries left = compose<3>(F, compose<3>(F, x, y), z);
  TSeries right = compose<3>(F, x, compose<3>(F, y, z));
  auto assoc = first_difference(left, right, order);
  std::string detail;
  if (assoc) {
    const auto& e = *assoc;
    detail = "witness (" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) +
             "): " + (left[e] - right[e]).to_string();
  }
  rep.add("associativity", !assoc, detail);

  if (rep.passed()) {
    law.certified.push_back({"unit", order});
    law.certified.push_back({"commutativity", order});
    law.certified.push_back({"associativity", order});
  }
  return rep;
}

IntegralityResult verify_integrality(const BSeries& F, const IntegralityDomain& d) {
  auto ex = BSeries::exponents(F.order());
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (!is_integral_in(F.data()[i], d)) return {false, int(i), F.data()[i]};
  }
  return {};
}

Report check_grading(const BSeries& F) {
  Report rep;
  auto ex = BSeries::exponents(F.order());
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const MPoly& a = F.data()[i];
    if (a.is_zero()) continue;
    int d = int(ex[i][0] + ex[i][1]);
    auto w = weight_of(a);
    if (!w || *w != -2 * (d - 1)) {
      rep.add("grading", false, "alpha" + exp_text(ex[i]) + " = " + a.to_string());
      return rep;
    }
  }
  rep.add("grading", true, "alpha_{i,j} has weight -2(i+j-1)");
  return rep;
}

ExpLogPair log_exp(const BSeries& F) {
  if (F.order() < 2) throw std::invalid_argument("log_exp: order must be at least 2");
  USeries rho = linear_part(F, 1).renamed({"t"});
  USeries g = integrate(inverse(rho));
  USeries f = reverse(g).renamed({"u"});
  return {f, g, rho};
}

USeries rho_from_curve(const MuParams& mu, int order) {
  const VarSpecPtr& ring = mu.ring();
  USeries s = solve_tate_s(mu, std::max(order, 3)).truncated(order);
  USeries t = variable_series<1>(ring, {"t"}, 0, order);
  USeries r = unit_like(t) - mu.mu1 * t - mu.mu2 * (t * t) - Coeff(2) * (mu.mu3 * s) -
              Coeff(2) * (mu.mu4 * (t * s)) - Coeff(3) * (mu.mu6 * (s * s));
  return r;
}

ExpLogPair general_log_exp(const MuParams& mu, int order) {
  if (order < 1) throw std::invalid_argument("general_log_exp: order must be at least 1");
  USeries rho = rho_from_curve(mu, order - 1);
  USeries g = integrate(inverse(rho));
  USeries f = reverse(g).renamed({"u"});
  return {f, g, rho};
}

std::string ode_name(OdeCase c) {
  switch (c) {
    case OdeCase::General: return "general";
    case OdeCase::Riccati: return "riccati";
    case OdeCase::Erm: return "mu6=0";
    case OdeCase::Eq46: return "mu1=mu2=mu3=0";
    case OdeCase::Fcub: return "mu1=mu3=0";
    case OdeCase::F36: return "equianharmonic";
    case OdeCase::F3: return "mu3 only";
    case OdeCase::Cube: return "cube";
    case OdeCase::Lemniscatic: return "lemniscatic";
    case OdeCase::Equianharmonic6: return "mu6 only";
  }
  return "?";
}

USeries ode_residual(OdeCase c, const MuParams& mu, const USeries& f_in) {
  if (f_in.order() < 1) throw std::invalid_argument("ode_residual: order must be at least 1");
  const VarSpecPtr& ring = mu.ring();
  const int n = f_in.order() - 1;
  USeries fp = differentiate(f_in);
  USeries f = f_in.truncated(n);
  USeries I = unit_like(f);
  USeries f2 = f * f, f3 = f2 * f, f4 = f2 * f2, f6 = f3 * f3;
  USeries fp2 = fp * fp, fp3 = fp2 * fp;
  const MPoly &m1 = mu.mu1, &m2 = mu.mu2, &m3 = mu.mu3, &m4 = mu.mu4, &m6 = mu.mu6;
  USeries M = I - m1 * f - m2 * f2;
  switch (c) {
    case OdeCase::General: {
      USeries N = constant_series<1>(ring, f.vars(), m3, n) + m4 * f;
      USeries left =
          m6 * (fp3 + Coeff(3) * (M * fp2) - Coeff(4) * (M * M * M) + Coeff(18) * (M * N * f3) + Coeff(27) * (m6 * f6));
      USeries right = -(N * N * (fp2 - M * M + Coeff(4) * (N * f3)));
      return left - right;
    }
    case OdeCase::Riccati:
      return fp - M;
    case OdeCase::Erm:
      return fp2 - (I - Coeff(2) * (m1 * f) + (m1 * m1 - Coeff(2) * m2) * f2 +
                    (Coeff(2) * m1 * m2 - Coeff(4) * m3) * f3 + (m2 * m2 - Coeff(4) * m4) * f4);
    case OdeCase::Eq46:
      return m6 * fp3 + (m4 * m4 * f2 + Coeff(3) * (m6 * I)) * fp2 +
             (Coeff(4) * pow(m4, 3) + Coeff(27) * m6 * m6) * f6 + (Coeff(18) * m4 * m6) * f4 - (m4 * m4) * f2 -
             Coeff(4) * (m6 * I);
    case OdeCase::Fcub:
      return m6 * fp3 + (Coeff(3) * (m6 * I) + (m4 * m4 - Coeff(3) * m2 * m6) * f2) * fp2 +
             (Coeff(27) * m6 * m6 - m2 * m2 * m4 * m4 + Coeff(4) * pow(m2, 3) * m6 - Coeff(18) * m2 * m4 * m6 +
              Coeff(4) * pow(m4, 3)) *
                 f6 +
             (Coeff(18) * m4 * m6 - Coeff(12) * m2 * m2 * m6 + Coeff(2) * m2 * m4 * m4) * f4 +
             (Coeff(12) * m2 * m6 - m4 * m4) * f2 - Coeff(4) * (m6 * I);
    case OdeCase::F36:
      return m6 * (fp3 + Coeff(3) * fp2 + Coeff(27) * (m6 * f6) + Coeff(18) * (m3 * f3) - Coeff(4) * I) +
             (m3 * m3) * (fp2 + Coeff(4) * (m3 * f3) - I);
    case OdeCase::F3:
      return fp2 + Coeff(4) * (m3 * f3) - I;
    case OdeCase::Cube: {
      USeries lin = I - (m1 * Coeff(1, 2)) * f;
      USeries inner = lin * lin * lin - Coeff(3) * (m3 * f3);
      return fp3 - inner * inner;
    }
    case OdeCase::Lemniscatic:
      return fp2 - (I - Coeff(4) * (m4 * f4));
    case OdeCase::Equianharmonic6: {
      USeries a = I - fp;
      USeries b = Coeff(2) * I + fp;
      return Coeff(27) * (m6 * f6) - a * b * b;
    }
  }
  throw std::invalid_argument("ode_residual: unknown case");
}

MuParams ode_family(OdeCase c) {
  MuParams mu = symbolic_mu();
  const VarSpecPtr ring = mu.ring();
  MPoly z(ring);
  switch (c) {
    case OdeCase::General: break;
    case OdeCase::Riccati: mu.mu3 = mu.mu4 = mu.mu6 = z; break;
    case OdeCase::Erm: mu.mu6 = z; break;
    case OdeCase::Eq46: mu.mu1 = mu.mu2 = mu.mu3 = z; break;
    case OdeCase::Fcub: mu.mu1 = mu.mu3 = z; break;
    case OdeCase::F36: mu.mu1 = mu.mu2 = mu.mu4 = z; break;
    case OdeCase::F3: mu.mu1 = mu.mu2 = mu.mu4 = mu.mu6 = z; break;
    case OdeCase::Cube:
      // The only solutions of mu3^2 = -3 mu6, 2 mu3 mu4 = 3 mu1 mu6, mu4^2 = 3 mu2 mu6 with mu6 != 0.
      mu.mu2 = mu.mu1 * mu.mu1 * Coeff(-1, 4);
      mu.mu4 = mu.mu1 * mu.mu3 * Coeff(-1, 2);
      mu.mu6 = mu.mu3 * mu.mu3 * Coeff(-1, 3);
      break;
    case OdeCase::Lemniscatic: mu.mu1 = mu.mu2 = mu.mu3 = mu.mu6 = z; break;
    case OdeCase::Equianharmonic6: mu.mu1 = mu.mu2 = mu.mu3 = mu.mu4 = z; break;
  }
  return mu;
}

namespace {

bool ode_applies(OdeCase c, const MuParams& mu) {
  bool z1 = mu.mu1.is_zero(), z2 = mu.mu2.is_zero(), z3 = mu.mu3.is_zero(), z4 = mu.mu4.is_zero(),
       z6 = mu.mu6.is_zero();
  switch (c) {
    case OdeCase::General: return !(z3 && z4 && z6);
    case OdeCase::Riccati: return z3 && z4 && z6;
    case OdeCase::Erm: return z6;
    case OdeCase::Eq46: return z1 && z2 && z3;
    case OdeCase::Fcub: return z1 && z3;
    case OdeCase::F36: return z1 && z2 && z4;
    case OdeCase::F3: return z1 && z2 && z4 && z6;
    case OdeCase::Cube:
      return !z6 && mu.mu3 * mu.mu3 == Coeff(-3) * mu.mu6 && Coeff(2) * mu.mu3 * mu.mu4 == Coeff(3) * mu.mu1 * mu.mu6 &&
             mu.mu4 * mu.mu4 == Coeff(3) * mu.mu2 * mu.mu6;
    case OdeCase::Lemniscatic: return z1 && z2 && z3 && z6;
    case OdeCase::Equianharmonic6: return z1 && z2 && z3 && z4;
  }
  return false;
}

constexpr OdeCase kAllOdes[] = {OdeCase::General, OdeCase::Riccati, OdeCase::Erm,   OdeCase::Eq46,
                                OdeCase::Fcub,    OdeCase::F36,     OdeCase::F3,    OdeCase::Cube,
                                OdeCase::Lemniscatic, OdeCase::Equianharmonic6};

}  // namespace

Report check_exponential_ode(const MuParams& mu, const USeries& f) {
  Report rep;
  for (OdeCase c : kAllOdes) {
    if (!ode_applies(c, mu)) continue;
    std::string where;
    bool ok = is_zero_series(ode_residual(c, mu, f), &where);
    rep.add("ode " + ode_name(c), ok,
            ok ? "residual vanishes to order " + std::to_string(f.order() - 1) : "residual at " + where);
  }
  return rep;
}

Report exponential_ode_suite(int order) {
  Report rep;
  for (OdeCase c : kAllOdes) {
    MuParams mu = ode_family(c);
    USeries f = general_log_exp(mu, order).f;
    std::string where;
    bool ok = is_zero_series(ode_residual(c, mu, f), &where);
    rep.add("ode " + ode_name(c), ok,
            ok ? "residual vanishes to order " + std::to_string(order - 1) : "residual at " + where);
  }
  return rep;
}

USeries inverse_series(const BSeries& F, int order) {
  if (order > F.order()) throw std::out_of_range("inverse_series: order beyond the truncation of F");
  const VarSpecPtr& ring = F.ring();
  USeries t = variable_series<1>(ring, {"t"}, 0, order);
  USeries tb = -t;
  // F(t, tb + d) = F(t, tb) + d (1 + O(t)), so each pass fixes one more order.
  for (int k = 2; k <= order; ++k) tb -= compose<1>(F, t, tb);
  return tb;
}

USeries power_system(const BSeries& F, int k, int order) {
  if (order > F.order()) throw std::out_of_range("power_system: order beyond the truncation of F");
  const VarSpecPtr& ring = F.ring();
  if (k == 0) return USeries(ring, {"t"}, order);
  USeries step = k > 0 ? variable_series<1>(ring, {"t"}, 0, order) : inverse_series(F, order);
  USeries cur = step;
  for (int i = 1; i < std::abs(k); ++i) cur = compose<1>(F, step, cur);
  return cur;
}

namespace {

struct Diagonal {
  USeries m, b, n, p, S;
};

Diagonal diagonal_chord(const MuParams& mu, int order) {
  const VarSpecPtr& ring = mu.ring();
  USeries s = solve_tate_s(mu, order + 1);
  USeries t = variable_series<1>(ring, {"t"}, 0, order);
  Diagonal d;
  d.m = differentiate(s);
  d.b = s.truncated(order) - t * d.m;
  d.p = t * t;
  d.S = Coeff(2) * t;
  d.n = d.m + d.p * xi0(mu, d.m) / eta0(mu, d.b);
  return d;
}

USeries mod2(const USeries& f) {
  return f.map(f.ring(), [](const MPoly& c) { return quotient_map(c, ModPrime{2}); });
}

}  // namespace

USeries general_doubling(const MuParams& mu, int order) {
  if (order < 2) throw std::invalid_argument("general_doubling: order must be at least 2");
  Diagonal d = diagonal_chord(mu, order);
  const USeries &S = d.S, &m = d.m, &b = d.b, &p = d.p;
  USeries num = S - mu.mu1 * p - mu.mu3 * (S * b + p * m) - mu.mu4 * (p * b) -
                mu.mu6 * (b * (S * b + Coeff(2) * (p * m)));
  USeries eta = eta0(mu, b);
  return num * xi0(mu, m) / (xi0(mu, d.n) * eta * eta);
}

HeightResult two_height(const MuParams& mu, int order) {
  for (const MPoly* m : mu.all()) {
    if (!m->has_integer_coeffs()) throw std::invalid_argument("two_height: mu must have integer coefficients");
  }
  HeightResult r;
  r.order = order;
  r.doubling_mod2 = mod2(general_doubling(mu, order));
  for (unsigned k = 0; int(k) <= order; ++k) {
    const MPoly& c = r.doubling_mod2.coeff(k);
    if (c.is_zero()) continue;
    int h = 0;
    while ((1u << (h + 1)) <= k) ++h;
    if ((1u << h) == k) {
      r.height = h;
      r.detail = "F(t,t) = (" + c.to_string() + ") t^" + std::to_string(k) + " + ... mod 2";
    } else {
      r.detail = "lowest term mod 2 at t^" + std::to_string(k) + " is not a power of two";
    }
    return r;
  }
  r.detail = "F(t,t) = 0 mod 2 through t^" + std::to_string(order);
  return r;
}

Report two_height_lemma(const MuParams& mu, int order) {
  Report rep;
  Diagonal d = diagonal_chord(mu, order);
  USeries eta = eta0(mu, d.b);
  USeries lemma = (mu.mu1 * d.p + mu.mu3 * (d.p * d.m) + mu.mu4 * (d.p * d.b)) * xi0(mu, d.m) /
                  (xi0(mu, d.n) * eta * eta);
  USeries direct = general_doubling(mu, order);
  auto diff = first_difference(mod2(lemma), mod2(direct), order);
  rep.add("two-height lemma", !diff, diff ? "differs at t^" + std::to_string((*diff)[0]) : "holds mod 2");
  return rep;
}

AutomorphismResult automorphism_check(int n, int order) {
  if (n < 2) throw std::invalid_argument("automorphism_check: n must be at least 2");
  MuParams mu = symbolic_mu();
  const VarSpecPtr ring = mu.ring();
  USeries rho = rho_from_curve(mu, order);
  AutomorphismResult res;
  std::map<std::string, SubstValue> zeros;
  // rho(alpha t) = rho(t) kills every coefficient of t^k with n not dividing k.
  for (unsigned k = 1; int(k) <= order; ++k) {
    if (k % unsigned(n) == 0) continue;
    MPoly c = specialize(rho.coeff(k), zeros);
    if (c.is_zero()) continue;
    if (c.size() == 1 && c.total_degree() == 1) {
      const Monomial& mono = c.terms()[0].mono;
      for (std::size_t v = 0; v < ring->size(); ++v) {
        if (mono[v] == 1) {
          res.forced_zero.push_back(ring->name(v));
          zeros[ring->name(v)] = Coeff(0);
        }
      }
      continue;
    }
    res.detail = "non-linear constraint at t^" + std::to_string(k) + ": " + c.to_string();
    return res;
  }
  for (const auto& name : ring->names()) {
    if (!zeros.count(name)) res.survivors.push_back(name);
  }
  std::vector<std::string> expected;
  switch (n) {
    case 2: expected = {"mu2", "mu4", "mu6"}; break;
    case 3: expected = {"mu3", "mu6"}; break;
    case 4: expected = {"mu4"}; break;
    case 6: expected = {"mu6"}; break;
    default: break;
  }
  if (res.survivors != expected) {
    res.detail = "surviving parameters differ from the expected family";
    return res;
  }
  if (!expected.empty()) {
    MuParams fam = mu.map([&](const MPoly& p) { return specialize(p, zeros); });
    USeries g = general_log_exp(fam, order).g;
    for (unsigned k = 0; int(k) <= order; ++k) {
      if (k % unsigned(n) != 1 && !g.coeff(k).is_zero()) {
        res.detail = "logarithm has a term at t^" + std::to_string(k);
        return res;
      }
    }
    res.detail = "logarithm supported on exponents 1 mod " + std::to_string(n) + " through t^" + std::to_string(order);
  } else {
    res.detail = "every parameter is forced to vanish by t^" + std::to_string(order);
  }
  res.passed = true;
  return res;
}

E1Data e1_reduction(const BSeries& F) {
  const VarSpecPtr& ring = F.ring();
  Decomposables dec{ring->names()};
  E1Data out;
  out.reduced = F.map(ring, [&](const MPoly& c) { return quotient_map(c, dec); });
  const int N = F.order();
  BSeries S = t_sum(ring, N);
  BSeries shape = S;
  BSeries x = tvar(ring, 0, N), y = tvar(ring, 1, N);
  BSeries Sk = S, xk = x, yk = y;
  for (int n = 1; n < N; ++n) {
    Sk = Sk * S;
    xk = xk * x;
    yk = yk * y;
    MPoly bn = out.reduced[{unsigned(n), 1u}] * Coeff(1, n + 1);
    out.b.push_back(bn);
    shape += bn * (Sk - xk - yk);
  }
  if (auto d = first_difference(out.reduced, shape, N)) out.shape_failure = *d;
  return out;
}

BSeries general_law_e1(int order) {
  VarSpecPtr ring = mu_ring();
  MuParams mu = symbolic_mu();
  BSeries S = t_sum(ring, order);
  BSeries p = t_prod(ring, order);
  BSeries x = tvar(ring, 0, order), y = tvar(ring, 1, order);
  BSeries q = x * x + p + y * y;
  BSeries bracket = constant_series<2>(ring, kLawVars, mu.mu1, order) + mu.mu2 * S +
                    mu.mu3 * (Coeff(2) * (x * x) + Coeff(3) * p + Coeff(2) * (y * y)) +
                    Coeff(2) * (mu.mu4 * (S * q)) + Coeff(3) * (mu.mu6 * (S * q * q));
  return S - p * bracket;
}

TpData tp_data(const BSeries& F, unsigned p, int order) {
  if (order + 1 > F.order()) throw std::out_of_range("tp_data: F must be known to order + 1");
  TpData d;
  USeries rho = linear_part(F, 1).truncated(order);
  for (unsigned k = 0; int(k) <= order; ++k) d.c.push_back(rho.coeff(k));
  USeries tp = power_system(F, int(p), order);
  for (unsigned k = 1; int(k) <= order; ++k) d.c_hat.push_back(tp.coeff(k));
  return d;
}

Report lemniscatic_generators(int order) {
  Report rep;
  if (order < 16) throw std::invalid_argument("lemniscatic_generators: order must be at least 16");
  VarSpecPtr ring = make_spec({{"mu4", -8}});
  MuParams mu = zero_mu(ring);
  mu.mu4 = MPoly::variable(ring, "mu4");
  FormalGroupLaw law = build_general(mu, order + 1);
  TpData d = tp_data(law.F, 2, order);

  USeries s = solve_tate_s(mu, order + 3);
  USeries v = shift_down(s, 3);  // s / t^3
  USeries rho(ring, {"t"}, order);
  for (unsigned k = 0; int(k) <= order; ++k) rho.set(k, d.c[k]);
  USeries expected = Coeff(2) * inverse(v.truncated(order)) - unit_like(v.truncated(order));
  rep.add("dF/dt2 = 2t^3/s - 1", rho == expected);

  USeries t = variable_series<1>(ring, {"t"}, 0, order);
  USeries I = unit_like(t);
  USeries dbl = (Coeff(2) * t) * (I - Coeff(2) * (mu.mu4 * (t * s.truncated(order)))) /
                (I + Coeff(4) * (mu.mu4 * pow(t, 4)));
  rep.add("F(t,t) closed form", diagonal(law.F.truncated(order), "t") == dbl);

  bool support = true;
  for (unsigned k = 1; int(k) <= order; ++k) {
    if (k % 4 != 0 && !d.c[k].is_zero()) support = false;
  }
  rep.add("phi(a_i) = 0 for 4 not dividing i", support);

  MPoly a1 = d.c[4], a2 = d.c[8], a3 = d.c[12], a4 = d.c[16];
  rep.add("phi(a4) = -2 mu4", a1 == Coeff(-2) * mu.mu4, a1.to_string());
  rep.add("2 alpha2 = -alpha1^2", Coeff(2) * a2 == -(a1 * a1));
  rep.add("4 alpha3 = 3 alpha1^3 + 2 alpha2 alpha1 = 2 alpha1^3",
          Coeff(4) * a3 == Coeff(3) * pow(a1, 3) + Coeff(2) * a2 * a1 && Coeff(4) * a3 == Coeff(2) * pow(a1, 3));
  rep.add("8 alpha4 = -9 alpha1^4 - 4 alpha2 alpha1^2 + 4 alpha3 alpha1 = -5 alpha1^4",
          Coeff(8) * a4 == Coeff(-9) * pow(a1, 4) - Coeff(4) * a2 * a1 * a1 + Coeff(4) * a3 * a1 &&
              Coeff(8) * a4 == Coeff(-5) * pow(a1, 4));

  // sum_q phi(a_{4(m-q)}) C_q mu4^q = 0 with phi(a_0) = 2.
  bool rec = true;
  for (unsigned m = 1; 4 * m <= unsigned(order); ++m) {
    MPoly sum(ring);
    for (unsigned q = 0; q <= m; ++q) {
      MPoly a = q == m ? MPoly::constant(ring, 2) : d.c[4 * (m - q)];
      sum += a * pow(mu.mu4, q) * ratio(binomial(2 * q, q), q + 1);
    }
    if (!sum.is_zero()) rec = false;
  }
  rep.add("Catalan recursion for phi(a_4m)", rec);
  return rep;
}

Report verify_reduction(const MuParams& mu, int order) {
  Report rep;
  const VarSpecPtr& ring = mu.ring();
  BSeries F = build_general(mu, order).F;
  USeries psi = tate_transform(mu, order);
  VarSpecPtr gring = make_spec({{"g2", -8}, {"g3", -12}});
  BSeries Fg_sym =
      build_classical(gring, {LawKind::Fg, {MPoly::variable(gring, "g2"), MPoly::variable(gring, "g3")}}, order).F;
  WeierstrassParams w = reduce_to_weierstrass(mu);
  BSeries Fg = Fg_sym.map(ring, [&](const MPoly& c) { return specialize(c, {{"g2", w.g2}, {"g3", w.g3}}, ring); });
  BSeries lhs = compose<2>(psi, F);
  BSeries p1 = compose<2>(psi, tvar(ring, 0, order));
  BSeries p2 = compose<2>(psi, tvar(ring, 1, order));
  BSeries rhs = compose<2>(Fg, p1, p2);
  auto diff = first_difference(lhs, rhs, order);
  rep.add("reduction homomorphism", !diff,
          diff ? "differs at " + exp_text(*diff) : "psi(F_mu) = F_g(psi, psi) to order " + std::to_string(order));
  return rep;
}

}  // namespace ellfgl
