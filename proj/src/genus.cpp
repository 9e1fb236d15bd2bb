#include "ellfgl/genus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ellfgl/fgl.hpp"
#include "ellfgl/weierstrass.hpp"

namespace ellfgl {

namespace {

MPoly one(const VarSpecPtr& ring) { return MPoly::constant(ring, 1); }

MPoly var(const VarSpecPtr& ring, const char* name) { return MPoly::variable(ring, name); }

USeries uvar(const VarSpecPtr& ring, int order) { return variable_series<1>(ring, {"u"}, 0, order); }

// u f'/f for f = u + ..., at order f.order() - 1.
USeries log_derivative_reg(const USeries& f) {
  USeries h = shift_down(f, 1);
  USeries unit = constant_series<1>(f.ring(), {"u"}, one(f.ring()), h.order());
  if (h.order() == 0) return unit;
  return unit + shift_up(differentiate(h) * inverse(h.truncated(h.order() - 1)), 1);
}

std::string first_nonzero(const USeries& r) {
  for (unsigned k = 0; int(k) <= r.order(); ++k) {
    if (!r.coeff(k).is_zero()) return "u^" + std::to_string(k) + ": " + r.coeff(k).to_string();
  }
  return {};
}

void need(const GenusSpec& s, std::size_t n) {
  if (s.params.size() != n) {
    throw std::invalid_argument("genus " + genus_name(s.kind) + " takes " + std::to_string(n) + " parameters");
  }
}

LawKind classical_kind(GenusKind k) {
  switch (k) {
    case GenusKind::Multiplicative: return LawKind::Multiplicative;
    case GenusKind::Todd2: return LawKind::Todd2;
    case GenusKind::Tanh: return LawKind::Tanh;
    case GenusKind::Sine: return LawKind::Sine;
    default: return LawKind::Custom;
  }
}

std::size_t param_count(GenusKind k) {
  switch (k) {
    case GenusKind::Linear: return 0;
    case GenusKind::Multiplicative:
    case GenusKind::Tanh: return 1;
    case GenusKind::Todd2:
    case GenusKind::Sine: return 2;
    case GenusKind::Krichever: return 4;
    case GenusKind::GeneralElliptic:
    case GenusKind::GeneralKrichever: return 5;
  }
  return 0;
}

MuParams as_mu(const GenusSpec& s) {
  const auto& p = s.params;
  return {p[0], p[1], p[2], p[3], p[4]};
}

// Substitute the generators of `from` by the spec parameters, in order.
USeries specialize_series(const USeries& f, const VarSpecPtr& from, const std::vector<MPoly>& values) {
  const VarSpecPtr& target = values.front().spec();
  std::map<std::string, SubstValue> a;
  for (std::size_t i = 0; i < from->size(); ++i) a[from->name(i)] = values[i];
  return f.map(target, [&](const MPoly& c) { return specialize(c, a, target); });
}

// Rewrite b3^e as a6^(e/2) (after dividing by b3 when `odd`).
MPoly split_b3(const MPoly& p, const VarSpecPtr& split, bool odd) {
  const VarSpec& src = *p.spec();
  std::size_t ib3 = src.index("b3");
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    unsigned e = t.mono[ib3];
    if ((e % 2 == 1) != odd) throw std::logic_error("psi expansion: mixed b3 parity in " + p.to_string());
    Monomial m;
    m.set(split->index("a2"), t.mono[src.index("a2")]);
    m.set(split->index("a4"), t.mono[src.index("a4")]);
    m.set(split->index("a6"), (odd ? e - 1 : e) / 2);
    out.push_back({m, t.coeff});
  }
  return MPoly::from_terms(split, std::move(out));
}

}  // namespace

std::string genus_name(GenusKind k) {
  switch (k) {
    case GenusKind::Linear: return "linear";
    case GenusKind::Multiplicative: return "multiplicative";
    case GenusKind::Todd2: return "todd2";
    case GenusKind::Tanh: return "tanh";
    case GenusKind::Sine: return "sine";
    case GenusKind::GeneralElliptic: return "general-elliptic";
    case GenusKind::Krichever: return "krichever";
    case GenusKind::GeneralKrichever: return "general-krichever";
  }
  return "?";
}

std::optional<GenusKind> parse_genus_kind(const std::string& name) {
  for (GenusKind k : {GenusKind::Linear, GenusKind::Multiplicative, GenusKind::Todd2, GenusKind::Tanh, GenusKind::Sine,
                      GenusKind::GeneralElliptic, GenusKind::Krichever, GenusKind::GeneralKrichever}) {
    if (genus_name(k) == name) return k;
  }
  return std::nullopt;
}

VarSpecPtr krichever_ring() {
  static const VarSpecPtr spec = make_spec({{"a1", -2}, {"a2", -4}, {"a3", -6}, {"a4", -8}});
  return spec;
}

VarSpecPtr general_krichever_ring() {
  static const VarSpecPtr spec = make_spec({{"a1", -2}, {"a2", -4}, {"a3", -6}, {"a4", -8}, {"a6", -12}});
  return spec;
}

USeries genus_exponential(const GenusSpec& spec, int order) {
  need(spec, param_count(spec.kind));
  switch (spec.kind) {
    case GenusKind::Linear:
      return uvar(mu_ring(), order);
    case GenusKind::Multiplicative:
    case GenusKind::Todd2:
    case GenusKind::Tanh:
    case GenusKind::Sine: {
      VarSpecPtr ring = spec.params.front().spec();
      return log_exp(build_classical(ring, {classical_kind(spec.kind), spec.params}, order).F).f;
    }
    case GenusKind::GeneralElliptic:
      return general_log_exp(as_mu(spec), order).f;
    case GenusKind::Krichever:
      return specialize_series(krichever_exponential(order), krichever_ring(), spec.params);
    case GenusKind::GeneralKrichever:
      return specialize_series(general_krichever_exponential(order), general_krichever_ring(), spec.params);
  }
  throw std::invalid_argument("genus_exponential: unknown genus");
}

USeries genus_logarithm(const GenusSpec& spec, int order) {
  need(spec, param_count(spec.kind));
  switch (spec.kind) {
    case GenusKind::Linear:
      return variable_series<1>(mu_ring(), {"t"}, 0, order);
    case GenusKind::Multiplicative:
    case GenusKind::Todd2:
    case GenusKind::Tanh:
    case GenusKind::Sine: {
      VarSpecPtr ring = spec.params.front().spec();
      return log_exp(build_classical(ring, {classical_kind(spec.kind), spec.params}, order).F).g;
    }
    case GenusKind::GeneralElliptic:
      return general_log_exp(as_mu(spec), order).g;
    default:
      return reverse(genus_exponential(spec, order)).renamed({"t"});
  }
}

std::vector<MPoly> cpn_values(const GenusSpec& spec, int count) {
  if (count < 1) throw std::invalid_argument("cpn_values: need at least one value");
  USeries g = genus_logarithm(spec, std::max(count, 2));
  std::vector<MPoly> v;
  for (int n = 0; n < count; ++n) v.push_back(g.coeff(unsigned(n + 1)) * Coeff(n + 1));
  return v;
}

Report cpn_integrality(int count) {
  Report rep;
  GenusSpec s{GenusKind::GeneralElliptic, {}};
  MuParams mu = symbolic_mu();
  for (const MPoly* p : mu.all()) s.params.push_back(*p);
  USeries g = genus_logarithm(s, std::max(count, 2));
  int first_fractional = -1;
  for (int n = 0; n < count; ++n) {
    const MPoly& c = g.coeff(unsigned(n + 1));
    if (first_fractional < 0 && !c.has_integer_coeffs()) first_fractional = n + 1;
    MPoly v = c * Coeff(n + 1);
    if (!v.has_integer_coeffs()) {
      rep.add("CP^n values in Z[mu]", false, "n = " + std::to_string(n) + ": " + v.to_string());
      return rep;
    }
  }
  rep.add("CP^n values in Z[mu]", true,
          "n < " + std::to_string(count) +
              (first_fractional > 0 ? "; logarithm first fractional at t^" + std::to_string(first_fractional) : ""));
  return rep;
}

std::vector<Integer> eulerian_row(int n) {
  if (n < 0 || n > 10) throw std::invalid_argument("eulerian_row: brute force needs 0 <= n <= 10");
  std::vector<int> perm(std::size_t(n) + 1);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Integer> row(std::size_t(n) + 1, 0);
  do {
    int d = 0;
    for (std::size_t l = 0; l + 1 < perm.size(); ++l) d += perm[l] > perm[l + 1];
    row[std::size_t(d)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return row;
}

Report todd2_exponential_check(int order) {
  Report rep;
  VarSpecPtr ring = make_spec({{"alpha", -2}, {"beta", -2}});
  MPoly al = var(ring, "alpha"), be = var(ring, "beta");
  USeries f = log_exp(build_classical(ring, {LawKind::Todd2, {al + be, al * be}}, order).F).f;

  // f (alpha e^{alpha u} - beta e^{beta u}) = e^{alpha u} - e^{beta u}
  USeries num(ring, {"u"}, order), den(ring, {"u"}, order);
  for (unsigned k = 0; int(k) <= order; ++k) {
    Coeff inv = ratio(1, factorial(k));
    num.set(k, (pow(al, k) - pow(be, k)) * inv);
    den.set(k, (pow(al, k + 1) - pow(be, k + 1)) * inv);
  }
  USeries r = f * den - num;
  rep.add("Todd exponential ratio", r.is_zero(), r.is_zero() ? "" : first_nonzero(r));

  // Coefficient of u^(n+1) is (-1)^n sum_k A_{n,k} alpha^k beta^(n-k) / (n+1)!.
  bool ok = true;
  std::string where;
  for (int n = 0; n + 1 <= order && n <= 8 && ok; ++n) {
    auto A = eulerian_row(n);
    MPoly s(ring);
    for (int k = 0; k <= n; ++k) s += pow(al, unsigned(k)) * pow(be, unsigned(n - k)) * Coeff(A[std::size_t(k)]);
    s *= ratio(n % 2 ? -1 : 1, factorial(unsigned(n + 1)));
    if (!(s == f.coeff(unsigned(n + 1)))) {
      ok = false;
      where = "n = " + std::to_string(n);
    }
  }
  rep.add("descent-number formula", ok, where);

  USeries fb = f.map(ring, [&](const MPoly& c) { return specialize(c, {{"beta", Coeff(0)}}, ring); });
  USeries fm = log_exp(build_classical(ring, {LawKind::Multiplicative, {al}}, order).F).f;
  rep.add("b = 0 gives the multiplicative exponential", fb == fm);
  return rep;
}

std::vector<Coeff> bernoulli(int n) {
  std::vector<Coeff> B, A(std::size_t(n) + 1);
  for (int m = 0; m <= n; ++m) {
    A[std::size_t(m)] = ratio(1, m + 1);
    for (int j = m; j >= 1; --j) A[std::size_t(j - 1)] = Coeff(j) * (A[std::size_t(j - 1)] - A[std::size_t(j)]);
    B.push_back(A[0]);
  }
  return B;
}

Report multiplicative_relations(int order) {
  Report rep;
  VarSpecPtr ring = make_spec({{"mu", -2}});
  MPoly mu = var(ring, "mu");
  USeries f = genus_exponential({GenusKind::Multiplicative, {mu}}, order);
  bool coeffs = true, rel = true;
  MPoly b1 = f.coeff(2);
  for (int n = 0; n + 1 <= order; ++n) {
    MPoly fn = f.coeff(unsigned(n + 1));
    MPoly scaled = fn * Coeff(factorial(unsigned(n + 1)));
    if (!(scaled == pow(-mu, unsigned(n)))) coeffs = false;
    if (n >= 1 && !(scaled - pow(b1, unsigned(n)) * Coeff(Integer(1) << unsigned(n))).is_zero()) rel = false;
  }
  rep.add("(n+1)! f_n = (-mu)^n", coeffs);
  rep.add("(n+1)! b_n - 2^n b_1^n vanishes", rel);
  return rep;
}

Report tanh_relations(int kmax) {
  Report rep;
  VarSpecPtr ring = make_spec({{"mu2", -4}});
  MPoly mu2 = var(ring, "mu2");
  int order = 2 * kmax;
  USeries f = genus_exponential({GenusKind::Tanh, {mu2}}, order);
  auto B = bernoulli(order);
  bool coeffs = true, even_zero = true, rel = true;
  MPoly b2 = f.coeff(3);
  for (int k = 1; k <= kmax; ++k) {
    Integer p = Integer(1) << unsigned(2 * k);
    Coeff c = Coeff(p * (p - 1)) * B[std::size_t(2 * k)] / Coeff(factorial(unsigned(2 * k)));
    if (!(f.coeff(unsigned(2 * k - 1)) == pow(mu2, unsigned(k - 1)) * c)) coeffs = false;
    if (!f.coeff(unsigned(2 * k)).is_zero()) even_zero = false;
    MPoly lhs = f.coeff(unsigned(2 * k - 1)) * Coeff(factorial(unsigned(2 * k)));
    MPoly rhs = pow(b2 * Coeff(-3), unsigned(k - 1)) * (Coeff(p * (p - 1)) * B[std::size_t(2 * k)]);
    if (!(lhs == rhs)) rel = false;
  }
  rep.add("Bernoulli formula for the tanh exponential", coeffs, "k <= " + std::to_string(kmax));
  rep.add("odd-index coefficients vanish", even_zero);
  rep.add("f_0 = 1 and f_2 = -mu2/3", f.coeff(1) == one(ring) && f.coeff(3) == mu2 * ratio(-1, 3));
  rep.add("(2k)! b_{2k-2} relation", rel);
  auto v = cpn_values({GenusKind::Tanh, {one(ring)}}, order);
  bool alt = true;
  for (std::size_t n = 0; n < v.size(); ++n) alt = alt && v[n] == MPoly::constant(ring, n % 2 == 0 ? 1 : 0);
  rep.add("tanh CP^n values 1, 0, 1, 0, ...", alt);
  return rep;
}

PsiExpansion psi_expansion(int N) {
  if (N < 2) throw std::invalid_argument("psi_expansion: N must be at least 2");
  PsiExpansion e;
  e.ring = make_spec({{"a2", -4}, {"b3", -6}, {"a4", -8}});
  e.split_ring = make_spec({{"a2", -4}, {"a6", -12}, {"a4", -8}});
  MPoly a2 = var(e.ring, "a2"), b3 = var(e.ring, "b3"), a4 = var(e.ring, "a4");
  MPoly sec = Coeff(6) * (a2 * a2) - a4;
  e.p.assign(std::size_t(N) + 1, MPoly(e.ring));
  e.p[2] = a2;
  for (int k = 2; k < N; ++k) {
    const MPoly& pk = e.p[std::size_t(k)];
    e.p[std::size_t(k + 1)] = b3 * derivative(pk, "a2") + sec * derivative(pk, "b3");
  }
  e.r.assign(std::size_t(N) + 1, MPoly(e.split_ring));
  e.q.assign(std::size_t(N) + 1, MPoly(e.split_ring));
  for (int k = 2; k <= N; ++k) {
    if (k % 2 == 0) {
      e.r[std::size_t(k)] = split_b3(e.p[std::size_t(k)], e.split_ring, false);
    } else {
      e.q[std::size_t(k - 3)] = split_b3(e.p[std::size_t(k)], e.split_ring, true);
    }
  }
  return e;
}

Report psi_parity_check(const PsiExpansion& e) {
  Report rep;
  std::size_t ib3 = e.ring->index("b3");
  for (std::size_t k = 2; k < e.p.size(); ++k) {
    for (const Term& t : e.p[k].terms()) {
      if (t.mono[ib3] % 2 != k % 2) {
        rep.add("b3 parity", false, "p_" + std::to_string(k));
        return rep;
      }
    }
    if (!e.p[k].has_integer_coeffs() || weight_of(e.p[k]) != -2 * int(k)) {
      rep.add("integral and homogeneous", false, "p_" + std::to_string(k));
      return rep;
    }
  }
  rep.add("b3 parity", true);
  rep.add("integral and homogeneous", true);
  return rep;
}

USeries krichever_exponential(int order) {
  if (order < 1) throw std::invalid_argument("krichever_exponential: order must be at least 1");
  VarSpecPtr K = krichever_ring();
  MPoly a1 = var(K, "a1"), a2 = var(K, "a2"), a3 = var(K, "a3"), a4 = var(K, "a4");
  USeries sigma = sigma_series(SigmaTable(order / 2 + 1), Coeff(2) * a4,
                               Coeff(4) * pow(a2, 3) - Coeff(2) * (a2 * a4) - a3 * a3, order);
  PsiExpansion e = psi_expansion(std::max(order, 2));
  USeries expo = a1 * uvar(K, order);
  std::map<std::string, SubstValue> sub{{"a2", a2}, {"b3", a3}, {"a4", a4}};
  for (int k = 2; k <= order; ++k) {
    MPoly pk = specialize(e.p[std::size_t(k)], sub, K);
    expo.at({unsigned(k)}) += pk * ratio(k % 2 ? -1 : 1, factorial(unsigned(k)));
  }
  return sigma * exp_series(expo);
}

USeries general_krichever_exponential(int order) {
  if (order < 1) throw std::invalid_argument("general_krichever_exponential: order must be at least 1");
  VarSpecPtr G = general_krichever_ring();
  MPoly a1 = var(G, "a1"), a2 = var(G, "a2"), a3 = var(G, "a3"), a4 = var(G, "a4"), a6 = var(G, "a6");
  USeries sigma =
      sigma_series(SigmaTable(order / 2 + 1), Coeff(2) * a4, Coeff(4) * pow(a2, 3) - Coeff(2) * (a2 * a4) - a6, order);
  PsiExpansion e = psi_expansion(std::max(order, 2));
  USeries expo = a1 * uvar(G, order);
  for (int m = 2; m <= order; ++m) {
    Coeff inv = ratio(1, factorial(unsigned(m)));
    if (m % 2 == 0) {
      expo.at({unsigned(m)}) += rebase(e.r[std::size_t(m)], G) * inv;
    } else {
      expo.at({unsigned(m)}) -= a3 * rebase(e.q[std::size_t(m - 3)], G) * inv;
    }
  }
  return sigma * exp_series(expo);
}

Report krichever_integrality(int order) {
  Report rep;
  USeries f = krichever_exponential(order);
  IntegralityResult r = hurwitz_integral(f, plain_domain({"a1", "a2", "a3", "a4"}));
  rep.add("Krichever exponential Hurwitz over Z[a1, a2, a3, a4]", r.integral,
          r.integral ? "through u^" + std::to_string(order)
                     : "phi_" + std::to_string(r.k) + " = " + r.witness.to_string());
  return rep;
}

Report general_krichever_integrality(int order) {
  Report rep;
  USeries f = general_krichever_exponential(order);
  IntegralityResult r = hurwitz_integral(f, plain_domain({"a1", "a2", "a3", "a4", "a6"}));
  rep.add("general Krichever exponential Hurwitz over Z[a1, a2, a3, a4, a6]", r.integral,
          r.integral ? "through u^" + std::to_string(order)
                     : "phi_" + std::to_string(r.k) + " = " + r.witness.to_string());
  USeries spec = f.map(general_krichever_ring(), [](const MPoly& c) {
    return specialize(c, {{"a6", MPoly::variable(general_krichever_ring(), "a3") *
                                     MPoly::variable(general_krichever_ring(), "a3")}});
  });
  USeries kr = krichever_exponential(order).map(general_krichever_ring(),
                                                [](const MPoly& c) { return rebase(c, general_krichever_ring()); });
  rep.add("a6 = a3^2 gives the Krichever exponential", spec == kr);
  return rep;
}

MuParams krichever_mu(const VarSpecPtr& ring) {
  MPoly a1 = var(ring, "a1"), a2 = var(ring, "a2"), a3 = var(ring, "a3"), a4 = var(ring, "a4");
  return {Coeff(2) * a1, Coeff(3) * a2 - a1 * a1, -a3, Coeff(3) * (a2 * a2) + a1 * a3 - a4 * ratio(1, 2), MPoly(ring)};
}

Report krichever_fgl_link(int order) {
  Report rep;
  USeries f = krichever_exponential(order + 1);
  USeries T = f.truncated(order) * inverse(differentiate(f));
  USeries e = general_log_exp(krichever_mu(krichever_ring()), order).f;
  USeries d = T - e;
  rep.add("f/f' of the Krichever exponential is an elliptic exponential", d.is_zero(),
          d.is_zero() ? "order " + std::to_string(order) : first_nonzero(d));
  return rep;
}

Report th30_cross_check(const MuParams& mu, int order) {
  Report rep;
  WeierstrassParams w = reduce_to_weierstrass(mu);
  std::vector<MPoly> a{mu.mu1 * ratio(1, 2), wp_shift(mu), -mu.mu3, w.g2 * ratio(1, 2),
                       Coeff(4) * mu.mu6 + mu.mu3 * mu.mu3};
  USeries phi = specialize_series(general_krichever_exponential(order), general_krichever_ring(), a);
  USeries lhs = log_derivative_reg(phi);
  USeries f = general_log_exp(mu, order).f;
  USeries rhs = inverse(shift_down(f, 1));
  USeries d = lhs - rhs;
  rep.add("(ln 1/Psi)' = 1/f", d.is_zero(), d.is_zero() ? "order " + std::to_string(order) : first_nonzero(d));
  return rep;
}

Report th30_cross_check(int order) { return th30_cross_check(symbolic_mu(), order); }

AdditionOdeResult addition_ode_check(int order) {
  if (order < 8) throw std::invalid_argument("addition_ode_check: order must be at least 8");
  AdditionOdeResult res;
  VarSpecPtr K = krichever_ring();
  USeries f = krichever_exponential(order).map(K, [&](const MPoly& c) { return specialize(c, {{"a1", Coeff(0)}}); });
  USeries f1 = differentiate(f), f2 = differentiate(f1), f3 = differentiate(f2);
  int n3 = f3.order();
  res.a2 = f.coeff(3) * Coeff(6);
  USeries R0 = (f3 + (Coeff(2) * res.a2) * f1.truncated(n3)) * f.truncated(n3) - Coeff(3) * (f2.truncated(n3) * f1.truncated(n3));
  res.a3 = R0.coeff(2);
  USeries ode = R0 - res.a3 * (f.truncated(n3) * f.truncated(n3));
  res.report.add("(f''' + 2 a2 f' - a3 f) f - 3 f'' f' = 0", ode.is_zero(),
                 ode.is_zero() ? "order " + std::to_string(n3) : first_nonzero(ode));

  // Integrating psi'' - 2 psi^3 + 2 a2 psi - a3 = 0 against 2 psi' gives
  // (psi')^2 = psi^4 - 2 a2 psi^2 + 2 a3 psi - a4. With Q = u psi everything
  // is multiplied by u^4, so the constant shows up at u^4.
  USeries Q = log_derivative_reg(f);
  int nq = Q.order();
  USeries u = uvar(K, nq);
  USeries dQ = shift_up(differentiate(Q), 1) - Q;
  USeries Q2 = Q * Q;
  USeries base = dQ * dQ - Q2 * Q2 + Coeff(2) * res.a2 * (u * u * Q2);
  USeries uuuQ = u * u * u * Q;
  USeries C = base - Coeff(2) * res.a3 * uuuQ;
  res.a4 = -C.coeff(4);
  C.set(4u, MPoly(K));
  res.report.add("(psi')^2 - psi^4 + 2 a2 psi^2 - 2 a3 psi is constant", C.is_zero(),
                 C.is_zero() ? "order " + std::to_string(nq) : first_nonzero(C));
  USeries single = base - res.a3 * uuuQ;
  single.set(4u, MPoly(K));
  res.single_a3_constant = single.is_zero();

  // f(u+v) [f(u) xi2(v) - f(v) xi2(u)] = f(u)^2 xi1(v) - f(v)^2 xi1(u).
  const int n = 6;
  std::array<std::string, 2> uv{"u", "v"};
  USeries h = shift_down(f, 1);
  USeries xi1 = h * inverse(scale_var(h, MPoly::constant(K, -1)));
  USeries xi2 = f1;
  BSeries U = variable_series<2>(K, uv, 0, n), V = variable_series<2>(K, uv, 1, n);
  auto at = [&](const USeries& s, const BSeries& x) { return compose<2>(s.truncated(n), x); };
  auto c0 = [&](const USeries& s, const BSeries& x) {
    // Series with a constant term: s(x) = s(0) + (s - s(0))(x).
    USeries t = s.truncated(n);
    MPoly c = t.coeff(0);
    t.set(0u, MPoly(K));
    BSeries r = compose<2>(t, x);
    r += c;
    return r;
  };
  BSeries fu = at(f, U), fv = at(f, V), fuv = at(f, U + V);
  BSeries lhs = fuv * (fu * c0(xi2, V) - fv * c0(xi2, U));
  BSeries rhs = fu * fu * c0(xi1, V) - fv * fv * c0(xi1, U);
  auto diff = first_difference(lhs, rhs, n);
  res.report.add("addition theorem with xi1 = -f(u)/f(-u), xi2 = f'", !diff, "total order 6");
  return res;
}

Report sine_addition_check(int order) {
  Report rep;
  VarSpecPtr ring = make_spec({{"delta", -4}, {"eps", -8}});
  USeries f = genus_exponential({GenusKind::Sine, {var(ring, "delta"), var(ring, "eps")}}, order);
  USeries f1 = differentiate(f), f2 = differentiate(f1);
  int n = f2.order();
  MPoly h2 = f.coeff(3) * Coeff(6);
  USeries ft = f.truncated(n);
  USeries r = f1.truncated(n) * f1.truncated(n) - ratio(1, 2) * (ft * f2) - (ratio(1, 2) * h2) * (ft * ft);
  r.at({0u}) -= one(ring);
  rep.add("(f')^2 - f f''/2 - f_2 f^2/2 = 1", r.is_zero(), r.is_zero() ? "" : first_nonzero(r));
  return rep;
}

}  // namespace ellfgl
