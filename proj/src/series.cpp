#include "ellfgl/series.hpp"

#include <algorithm>

namespace ellfgl {

template class Series<1>;
template class Series<2>;
template class Series<3>;

namespace {

template <std::size_t K>
void require_compatible(const Series<K>& a, const Series<K>& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("series: variable mismatch");
  if (!same_spec(a.ring(), b.ring())) throw std::invalid_argument("series: coefficient ring mismatch");
}

template <std::size_t K>
typename Series<K>::Exp add_exp(const typename Series<K>::Exp& a, const typename Series<K>::Exp& b) {
  typename Series<K>::Exp r{};
  for (std::size_t i = 0; i < K; ++i) r[i] = a[i] + b[i];
  return r;
}

// If s has exactly one nonzero coefficient and it is a rational constant,
// return its slot and value.
template <std::size_t K>
std::optional<std::pair<std::size_t, Coeff>> single_constant_term(const Series<K>& s) {
  std::optional<std::pair<std::size_t, Coeff>> found;
  const auto& d = s.data();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) continue;
    if (found || !d[i].is_constant()) return std::nullopt;
    found = std::make_pair(i, d[i].constant_term());
  }
  return found;
}

template <std::size_t K>
Series<K> shift_scale(const Series<K>& a, const typename Series<K>::Exp& by, const Coeff& c, int order) {
  Series<K> r(a.ring(), a.vars(), order);
  auto ex = Series<K>::exponents(std::min(order, a.order()));
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const MPoly& x = a.data()[i];
    if (x.is_zero()) continue;
    auto e = add_exp<K>(ex[i], by);
    if (int(Series<K>::degree(e)) > order) continue;
    r.data()[Series<K>::index(e)] = x * c;
  }
  return r;
}

}  // namespace

template <std::size_t K>
Series<K> mul_to(const Series<K>& a, const Series<K>& b, int order) {
  require_compatible(a, b);
  if (order < 0) throw std::invalid_argument("series order underflow (order < 0)");
  auto all = Series<K>::exponents(order);
  if (auto sb = single_constant_term(b)) return shift_scale(a, all[sb->first], sb->second, order);
  if (auto sa = single_constant_term(a)) return shift_scale(b, all[sa->first], sa->second, order);
  Series<K> r(a.ring(), a.vars(), order);
  std::vector<std::size_t> nza, nzb;
  for (std::size_t i = 0; i < std::min(a.data().size(), all.size()); ++i) {
    if (!a.data()[i].is_zero()) nza.push_back(i);
  }
  for (std::size_t i = 0; i < std::min(b.data().size(), all.size()); ++i) {
    if (!b.data()[i].is_zero()) nzb.push_back(i);
  }
  std::vector<std::vector<std::pair<const MPoly*, const MPoly*>>> pending(all.size());
  for (auto ia : nza) {
    unsigned da = Series<K>::degree(all[ia]);
    for (auto ib : nzb) {
      if (int(da + Series<K>::degree(all[ib])) > order) break;  // nzb is sorted by degree
      pending[Series<K>::index(add_exp<K>(all[ia], all[ib]))].push_back({&a.data()[ia], &b.data()[ib]});
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!pending[i].empty()) r.data()[i] = MPoly::sum_of_products(a.ring(), pending[i]);
  }
  return r;
}

template <std::size_t K>
Series<K> inverse(const Series<K>& a) {
  const MPoly& c0 = a.constant_term();
  if (c0.is_zero() || !c0.is_constant()) {
    throw std::domain_error("series inverse: constant term is not a unit");
  }
  Coeff inv0 = 1 / c0.constant_term();
  Coeff neg_inv0 = -inv0;
  Series<K> r(a.ring(), a.vars(), a.order());
  auto ex = Series<K>::exponents(a.order());
  std::vector<std::size_t> nza;
  for (std::size_t i = 1; i < ex.size(); ++i) {
    if (!a.data()[i].is_zero()) nza.push_back(i);
  }
  r.data()[0] = MPoly::constant(a.ring(), inv0);
  std::vector<std::pair<const MPoly*, const MPoly*>> pairs;
  for (std::size_t m = 1; m < ex.size(); ++m) {
    pairs.clear();
    for (auto n : nza) {
      if (Series<K>::degree(ex[n]) > Series<K>::degree(ex[m])) break;
      typename Series<K>::Exp rest{};
      bool ok = true;
      for (std::size_t i = 0; i < K; ++i) {
        if (ex[n][i] > ex[m][i]) {
          ok = false;
          break;
        }
        rest[i] = ex[m][i] - ex[n][i];
      }
      if (!ok) continue;
      const MPoly& bm = r.data()[Series<K>::index(rest)];
      if (!bm.is_zero()) pairs.push_back({&a.data()[n], &bm});
    }
    if (!pairs.empty()) r.data()[m] = MPoly::sum_of_products(a.ring(), pairs) * neg_inv0;
  }
  return r;
}

template <std::size_t K>
Series<K> pow(const Series<K>& a, unsigned e) {
  Series<K> result = constant_series<K>(a.ring(), a.vars(), MPoly::constant(a.ring(), 1), a.order());
  Series<K> base = a;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <std::size_t K>
Series<K> variable_series(const VarSpecPtr& ring, const std::array<std::string, K>& vars, std::size_t i, int order) {
  Series<K> r(ring, vars, order);
  typename Series<K>::Exp e{};
  e[i] = 1;
  if (order >= 1) r.set(e, MPoly::constant(ring, 1));
  return r;
}

template <std::size_t K>
Series<K> constant_series(const VarSpecPtr& ring, const std::array<std::string, K>& vars, const MPoly& c, int order) {
  Series<K> r(ring, vars, order);
  r.set(typename Series<K>::Exp{}, c);
  return r;
}

template <std::size_t K>
Series<K> compose(const USeries& outer, const Series<K>& inner) {
  if (!inner.constant_term().is_zero()) throw std::invalid_argument("compose: inner series has nonzero constant term");
  if (!same_spec(outer.ring(), inner.ring())) throw std::invalid_argument("compose: coefficient ring mismatch");
  const int n = std::min(outer.order(), inner.order());
  // Horner scheme; the partial result multiplying inner^k only needs order n-k.
  Series<K> r = constant_series<K>(inner.ring(), inner.vars(), outer.coeff(unsigned(n)), 0);
  for (int k = n - 1; k >= 0; --k) {
    r = mul_to(r, inner, n - k);
    r += outer.coeff(unsigned(k));
  }
  return r;
}

template <std::size_t K>
Series<K> compose(const BSeries& outer, const Series<K>& x, const Series<K>& y) {
  require_compatible(x, y);
  if (!x.constant_term().is_zero() || !y.constant_term().is_zero()) {
    throw std::invalid_argument("compose: inner series has nonzero constant term");
  }
  if (!same_spec(outer.ring(), x.ring())) throw std::invalid_argument("compose: coefficient ring mismatch");
  const int n = std::min({outer.order(), x.order(), y.order()});
  std::vector<Series<K>> ypow;
  ypow.push_back(constant_series<K>(y.ring(), y.vars(), MPoly::constant(y.ring(), 1), n));
  for (int j = 1; j <= n; ++j) ypow.push_back(mul_to(ypow.back(), y, n));
  auto column = [&](int i) {
    // C_i(y) = sum_j a_{ij} y^j, needed to order n - i.
    Series<K> c(x.ring(), x.vars(), n - i);
    std::vector<std::pair<const MPoly*, const MPoly*>> pairs;
    for (std::size_t s = 0; s < c.data().size(); ++s) {
      pairs.clear();
      for (int j = 0; j <= n - i; ++j) {
        const MPoly& a = outer[{unsigned(i), unsigned(j)}];
        const MPoly& yp = ypow[std::size_t(j)].data()[s];
        if (!a.is_zero() && !yp.is_zero()) pairs.push_back({&a, &yp});
      }
      if (!pairs.empty()) c.data()[s] = MPoly::sum_of_products(x.ring(), pairs);
    }
    return c;
  };
  Series<K> r = column(n);
  for (int i = n - 1; i >= 0; --i) {
    r = mul_to(r, x, n - i);
    r += column(i);
  }
  return r;
}

template <std::size_t K>
Series<K> partial(const Series<K>& a, std::size_t var) {
  if (a.order() < 1) throw std::invalid_argument("series order underflow (order < 0)");
  Series<K> r(a.ring(), a.vars(), a.order() - 1);
  auto ex = Series<K>::exponents(a.order() - 1);
  for (std::size_t i = 0; i < ex.size(); ++i) {
    auto e = ex[i];
    e[var] += 1;
    const MPoly& c = a[e];
    if (!c.is_zero()) r.data()[i] = c * Coeff(e[var]);
  }
  return r;
}

template <std::size_t K>
std::optional<typename Series<K>::Exp> first_difference(const Series<K>& a, const Series<K>& b, int order) {
  if (order > a.order() || order > b.order()) throw std::out_of_range("first_difference: order beyond truncation");
  auto ex = Series<K>::exponents(order);
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (!(a.data()[i] == b.data()[i])) return ex[i];
  }
  return std::nullopt;
}

#define ELLFGL_INSTANTIATE(K)                                                                                  \
  template Series<K> mul_to<K>(const Series<K>&, const Series<K>&, int);                                       \
  template Series<K> inverse<K>(const Series<K>&);                                                             \
  template Series<K> pow<K>(const Series<K>&, unsigned);                                                       \
  template Series<K> variable_series<K>(const VarSpecPtr&, const std::array<std::string, K>&, std::size_t, int); \
  template Series<K> constant_series<K>(const VarSpecPtr&, const std::array<std::string, K>&, const MPoly&, int); \
  template Series<K> compose<K>(const USeries&, const Series<K>&);                                             \
  template Series<K> compose<K>(const BSeries&, const Series<K>&, const Series<K>&);                           \
  template Series<K> partial<K>(const Series<K>&, std::size_t);                                                \
  template std::optional<typename Series<K>::Exp> first_difference<K>(const Series<K>&, const Series<K>&, int);
ELLFGL_INSTANTIATE(1)
ELLFGL_INSTANTIATE(2)
ELLFGL_INSTANTIATE(3)
#undef ELLFGL_INSTANTIATE

USeries reverse(const USeries& f) {
  const int n = f.order();
  if (!f.coeff(0).is_zero()) throw std::invalid_argument("reverse: f(0) must be 0");
  if (n < 1) return f;
  const MPoly& a1 = f.coeff(1);
  if (a1.is_zero() || !a1.is_constant()) throw std::domain_error("reverse: f'(0) is not a unit");
  const VarSpecPtr& ring = f.ring();
  Coeff inv1 = 1 / a1.constant_term();
  std::vector<MPoly> g(std::size_t(n) + 1, MPoly(ring));
  g[1] = MPoly::constant(ring, inv1);
  // powers[k][m] = [t^m] g^k, filled as soon as g_1..g_{m-1} are known.
  std::vector<std::vector<MPoly>> powers(std::size_t(n) + 1, std::vector<MPoly>(std::size_t(n) + 1, MPoly(ring)));
  std::vector<std::pair<const MPoly*, const MPoly*>> pairs;
  for (int m = 2; m <= n; ++m) {
    for (int k = 2; k <= m; ++k) {
      pairs.clear();
      for (int i = k - 1; i <= m - 1; ++i) {
        const MPoly& lower = k == 2 ? g[std::size_t(i)] : powers[std::size_t(k) - 1][std::size_t(i)];
        const MPoly& gi = g[std::size_t(m - i)];
        if (!lower.is_zero() && !gi.is_zero()) pairs.push_back({&lower, &gi});
      }
      powers[std::size_t(k)][std::size_t(m)] = MPoly::sum_of_products(ring, pairs);
    }
    pairs.clear();
    for (int k = 2; k <= m; ++k) {
      const MPoly& ak = f.coeff(unsigned(k));
      const MPoly& pk = powers[std::size_t(k)][std::size_t(m)];
      if (!ak.is_zero() && !pk.is_zero()) pairs.push_back({&ak, &pk});
    }
    g[std::size_t(m)] = MPoly::sum_of_products(ring, pairs) * Coeff(-inv1);
  }
  USeries r(ring, f.vars(), n);
  for (int k = 1; k <= n; ++k) r.set(unsigned(k), g[std::size_t(k)]);
  return r;
}

BSeries divided_difference(const USeries& s, const std::array<std::string, 2>& vars) {
  if (s.order() < 1) throw std::invalid_argument("series order underflow (order < 0)");
  BSeries r(s.ring(), vars, s.order() - 1);
  for (unsigned d = 0; int(d) <= r.order(); ++d) {
    const MPoly& c = s.coeff(d + 1);
    if (c.is_zero()) continue;
    for (unsigned i = 0; i <= d; ++i) r.set({i, d - i}, c);
  }
  return r;
}

USeries differentiate(const USeries& f) { return partial(f, 0); }

USeries integrate(const USeries& f, const MPoly& constant) {
  USeries r(f.ring(), f.vars(), f.order() + 1);
  r.set(0u, constant);
  for (unsigned k = 0; int(k) <= f.order(); ++k) {
    if (!f.coeff(k).is_zero()) r.set(k + 1, f.coeff(k) * Coeff(1, k + 1));
  }
  return r;
}

USeries integrate(const USeries& f) { return integrate(f, MPoly(f.ring())); }

USeries sqrt_unit(const USeries& f) {
  const MPoly& c0 = f.coeff(0);
  if (!(c0.is_constant() && c0.constant_term() == 1)) throw std::domain_error("sqrt_unit: constant term must be 1");
  const VarSpecPtr& ring = f.ring();
  USeries g(ring, f.vars(), f.order());
  g.set(0u, MPoly::constant(ring, 1));
  std::vector<std::pair<const MPoly*, const MPoly*>> pairs;
  for (unsigned n = 1; int(n) <= f.order(); ++n) {
    pairs.clear();
    for (unsigned i = 1; i < n; ++i) {
      const MPoly& a = g.coeff(i);
      const MPoly& b = g.coeff(n - i);
      if (!a.is_zero() && !b.is_zero()) pairs.push_back({&a, &b});
    }
    MPoly cross = MPoly::sum_of_products(ring, pairs);
    g.set(n, (f.coeff(n) - cross) * Coeff(1, 2));
  }
  return g;
}

USeries exp_series(const USeries& f) {
  if (!f.coeff(0).is_zero()) throw std::domain_error("exp_series: constant term must be 0");
  const VarSpecPtr& ring = f.ring();
  USeries e(ring, f.vars(), f.order());
  e.set(0u, MPoly::constant(ring, 1));
  std::vector<MPoly> kf(std::size_t(f.order()) + 1, MPoly(ring));
  for (unsigned k = 1; int(k) <= f.order(); ++k) kf[k] = f.coeff(k) * Coeff(k);
  std::vector<std::pair<const MPoly*, const MPoly*>> pairs;
  for (unsigned n = 1; int(n) <= f.order(); ++n) {
    pairs.clear();
    for (unsigned k = 1; k <= n; ++k) {
      const MPoly& b = e.coeff(n - k);
      if (!kf[k].is_zero() && !b.is_zero()) pairs.push_back({&kf[k], &b});
    }
    e.set(n, MPoly::sum_of_products(ring, pairs) * Coeff(1, n));
  }
  return e;
}

USeries log_series(const USeries& f) {
  const MPoly& c0 = f.coeff(0);
  if (!(c0.is_constant() && c0.constant_term() == 1)) throw std::domain_error("log_series: constant term must be 1");
  if (f.order() == 0) return USeries(f.ring(), f.vars(), 0);
  return integrate(differentiate(f) * inverse(f.truncated(f.order() - 1)));
}

USeries shift_up(const USeries& f, unsigned k) {
  USeries r(f.ring(), f.vars(), f.order() + int(k));
  for (unsigned i = 0; int(i) <= f.order(); ++i) r.set(i + k, f.coeff(i));
  return r;
}

USeries shift_down(const USeries& f, unsigned k) {
  for (unsigned i = 0; i < k && int(i) <= f.order(); ++i) {
    if (!f.coeff(i).is_zero()) throw std::domain_error("shift_down: series is not divisible by the requested power");
  }
  USeries r(f.ring(), f.vars(), f.order() - int(k));
  for (unsigned i = 0; int(i) <= r.order(); ++i) r.set(i, f.coeff(i + k));
  return r;
}

USeries scale_var(const USeries& f, const MPoly& c) {
  USeries r(f.ring(), f.vars(), f.order());
  MPoly cp = MPoly::constant(f.ring(), 1);
  for (unsigned i = 0; int(i) <= f.order(); ++i) {
    if (!f.coeff(i).is_zero()) r.set(i, f.coeff(i) * cp);
    cp = cp * c;
  }
  return r;
}

BSeries embed(const USeries& f, std::size_t which, const std::array<std::string, 2>& vars) {
  BSeries r(f.ring(), vars, f.order());
  for (unsigned k = 0; int(k) <= f.order(); ++k) {
    BSeries::Exp e{};
    e[which] = k;
    r.set(e, f.coeff(k));
  }
  return r;
}

USeries diagonal(const BSeries& F, const std::string& var) {
  USeries r(F.ring(), {var}, F.order());
  auto ex = BSeries::exponents(F.order());
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (F.data()[i].is_zero()) continue;
    r.data()[ex[i][0] + ex[i][1]] += F.data()[i];
  }
  return r;
}

USeries restrict_zero(const BSeries& F, std::size_t keep) {
  USeries r(F.ring(), {F.vars()[keep]}, F.order());
  for (unsigned k = 0; int(k) <= F.order(); ++k) {
    BSeries::Exp e{};
    e[keep] = k;
    r.set(k, F[e]);
  }
  return r;
}

BSeries swap_vars(const BSeries& F) {
  BSeries r(F.ring(), F.vars(), F.order());
  auto ex = BSeries::exponents(F.order());
  for (std::size_t i = 0; i < ex.size(); ++i) r.set({ex[i][1], ex[i][0]}, F.data()[i]);
  return r;
}

BSeries shift_up(const BSeries& F, unsigned i, unsigned j) {
  BSeries r(F.ring(), F.vars(), F.order() + int(i + j));
  auto ex = BSeries::exponents(F.order());
  for (std::size_t s = 0; s < ex.size(); ++s) r.set({ex[s][0] + i, ex[s][1] + j}, F.data()[s]);
  return r;
}

BSeries shift_down(const BSeries& F, unsigned i, unsigned j) {
  auto ex = BSeries::exponents(F.order());
  BSeries r(F.ring(), F.vars(), F.order() - int(i + j));
  for (std::size_t s = 0; s < ex.size(); ++s) {
    if (F.data()[s].is_zero()) continue;
    if (ex[s][0] < i || ex[s][1] < j) throw std::domain_error("shift_down: series is not divisible by the monomial");
    r.set({ex[s][0] - i, ex[s][1] - j}, F.data()[s]);
  }
  return r;
}

USeries linear_part(const BSeries& F, std::size_t which) {
  std::size_t other = 1 - which;
  USeries r(F.ring(), {F.vars()[other]}, F.order() - 1);
  for (unsigned k = 0; int(k) <= r.order(); ++k) {
    BSeries::Exp e{};
    e[which] = 1;
    e[other] = k;
    r.set(k, F[e]);
  }
  return r;
}

HurwitzView hurwitz_view(const USeries& f) {
  HurwitzView v{f, {}};
  for (unsigned k = 0; int(k) <= f.order(); ++k) v.phi.push_back(f.coeff(k) * Coeff(factorial(k)));
  return v;
}

USeries from_hurwitz(const VarSpecPtr& ring, const std::string& var, const std::vector<MPoly>& phi) {
  if (phi.empty()) throw std::invalid_argument("from_hurwitz: empty coefficient list");
  USeries r(ring, {var}, int(phi.size()) - 1);
  for (unsigned k = 0; k < phi.size(); ++k) r.set(k, phi[k] * Coeff(1, factorial(k)));
  return r;
}

IntegralityDomain plain_domain(const std::vector<std::string>& vars, std::string label) {
  IntegralityDomain d;
  for (const auto& v : vars) d.generators.push_back({v, Coeff(1)});
  d.label = std::move(label);
  return d;
}

bool is_integral_in(const MPoly& p, const IntegralityDomain& d) {
  const VarSpecPtr& spec = p.spec();
  std::vector<const Coeff*> scale(spec ? spec->size() : 0, nullptr);
  for (const auto& [name, s] : d.generators) {
    if (auto i = spec ? spec->find(name) : std::nullopt) scale[*i] = &s;
  }
  for (const auto& t : p.terms()) {
    Coeff c = t.coeff;
    for (std::size_t v = 0; v < scale.size(); ++v) {
      unsigned e = t.mono.exp[v];
      if (e == 0) continue;
      if (!scale[v]) return false;
      for (unsigned r = 0; r < e; ++r) c /= *scale[v];
    }
    Integer den = c.get_den();
    for (auto prime : d.inverted_primes) {
      while (mpz_divisible_ui_p(den.get_mpz_t(), prime)) den /= prime;
    }
    if (den != 1) return false;
  }
  return true;
}

IntegralityResult check_integral_coeffs(const std::vector<MPoly>& coeffs, const IntegralityDomain& d) {
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!is_integral_in(coeffs[k], d)) return {false, int(k), coeffs[k]};
  }
  return {};
}

IntegralityResult hurwitz_integral(const USeries& f, const IntegralityDomain& d) {
  for (unsigned k = 0; int(k) <= f.order(); ++k) {
    MPoly phi = f.coeff(k) * Coeff(factorial(k));
    if (!is_integral_in(phi, d)) return {false, int(k), phi};
  }
  return {};
}

}  // namespace ellfgl
