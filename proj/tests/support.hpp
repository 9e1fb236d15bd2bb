#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "ellfgl/ring.hpp"
#include "ellfgl/series.hpp"

namespace ellfgl::testing {

inline VarSpecPtr mu_spec() {
  static const VarSpecPtr spec =
      make_spec({{"mu1", -2}, {"mu2", -4}, {"mu3", -6}, {"mu4", -8}, {"mu6", -12}});
  return spec;
}

inline MPoly P(const VarSpecPtr& spec, const std::string& text) { return parse_poly(spec, text); }

// Direct coefficient recurrence for s over Q with integer mu: the degree-n
// coefficient of the right side only involves s_k for k < n.
inline std::vector<Coeff> s_oracle(const std::array<long, 5>& m, int order) {
  std::vector<Coeff> s(std::size_t(order) + 1, 0);
  auto conv = [&](const std::vector<Coeff>& a, const std::vector<Coeff>& b, int n) {
    Coeff r = 0;
    for (int i = 0; i <= n; ++i) r += a[std::size_t(i)] * b[std::size_t(n - i)];
    return r;
  };
  std::vector<Coeff> s2(s.size(), 0), s3(s.size(), 0);
  for (int n = 0; n <= order; ++n) {
    Coeff v = (n == 3) ? 1 : 0;
    if (n >= 1) v += Coeff(m[0]) * s[std::size_t(n - 1)];
    if (n >= 2) v += Coeff(m[1]) * s[std::size_t(n - 2)];
    v += Coeff(m[2]) * s2[std::size_t(n)];
    if (n >= 1) v += Coeff(m[3]) * s2[std::size_t(n - 1)];
    v += Coeff(m[4]) * s3[std::size_t(n)];
    s[std::size_t(n)] = v;
    // s2 and s3 at degree n + k only need s up to degree n + k - 3.
    for (int k = n; k <= order; ++k) {
      if (k - 3 <= n && k >= 6) {
        s2[std::size_t(k)] = conv(s, s, k);
        if (k >= 9) s3[std::size_t(k)] = conv(s2, s, k);
      }
    }
  }
  return s;
}

// Deterministic generator of small random polynomials and series.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Coeff rational() {
    int num = small(-5, 5);
    int den = small(1, 4);
    Coeff c(num, den);
    c.canonicalize();
    return c;
  }

  MPoly poly(const VarSpecPtr& spec, int max_terms = 4, int max_exp = 2) {
    std::vector<Term> terms;
    int n = small(0, max_terms);
    for (int i = 0; i < n; ++i) {
      Monomial m;
      for (std::size_t v = 0; v < spec->size(); ++v) m.set(v, unsigned(small(0, max_exp)));
      terms.push_back({m, rational()});
    }
    return MPoly::from_terms(spec, std::move(terms));
  }

  MPoly homogeneous(const VarSpecPtr& spec, int tries = 4) {
    // Random monomials sharing the weight of the first one (x-power padding).
    std::vector<Term> terms;
    Monomial first;
    for (std::size_t v = 0; v < spec->size(); ++v) first.set(v, unsigned(small(0, 2)));
    terms.push_back({first, rational() + 6});
    for (int i = 0; i < tries; ++i) {
      Monomial m = first;
      // Swap weight between two variables when their weights allow it.
      std::size_t a = std::size_t(small(0, int(spec->size()) - 1));
      std::size_t b = std::size_t(small(0, int(spec->size()) - 1));
      int wa = spec->weight(a), wb = spec->weight(b);
      if (a == b || m.exp[a] == 0 || wa == 0 || wb == 0 || (wa % wb) != 0) continue;
      m.set(a, m.exp[a] - 1u);
      m.set(b, m.exp[b] + unsigned(wa / wb));
      terms.push_back({m, rational()});
    }
    return MPoly::from_terms(spec, std::move(terms));
  }

  USeries series(const VarSpecPtr& spec, const std::string& var, int order, bool zero_const, bool unit_linear) {
    USeries s(spec, {var}, order);
    for (unsigned k = 0; int(k) <= order; ++k) s.set(k, poly(spec, 2, 1));
    if (zero_const) s.set(0u, MPoly(spec));
    if (unit_linear) s.set(1u, MPoly::constant(spec, Coeff(small(1, 3)) * (small(0, 1) ? 1 : -1)));
    return s;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace ellfgl::testing
