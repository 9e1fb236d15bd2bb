#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellfgl/ring.hpp"

namespace ellfgl {

// Truncated power series in K formal variables with MPoly coefficients.
// Truncation is by total degree: coefficients of degree <= order are known,
// anything beyond is unknown and asking for it is an error.
//
// Coefficients are stored densely in graded order. The slot of an exponent
// vector e of degree d is C(d+K-1, K) + rank of (e_2..e_K) among tuples of
// degree <= d, so for K = 2 the slot of (i, j) is d(d+1)/2 + j.
template <std::size_t K>
class Series {
 public:
  using Exp = std::array<unsigned, K>;

  Series() = default;
  Series(VarSpecPtr ring, std::array<std::string, K> vars, int order)
      : ring_(std::move(ring)), vars_(std::move(vars)), order_(order) {
    if (order < 0) throw std::invalid_argument("series order underflow (order < 0)");
    coeffs_.assign(slots(order), MPoly(ring_));
  }

  const VarSpecPtr& ring() const { return ring_; }
  const std::array<std::string, K>& vars() const { return vars_; }
  int order() const { return order_; }

  static unsigned degree(const Exp& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  // Number of exponent vectors of total degree <= n.
  static std::size_t slots(int n) {
    if (n < 0) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= K; ++i) r = r * (std::size_t(n) + i) / i;
    return r;
  }
  static std::size_t index(const Exp& e) {
    std::size_t idx = 0;
    unsigned rem = degree(e);
    for (std::size_t k = 0; k < K; ++k) {
      // Rank contribution of the leading entry among tuples of length K-k.
      idx += slots_dim(K - k, int(rem) - 1);
      rem -= e[k];
    }
    return idx;
  }
  // All exponent vectors of degree <= n in slot order.
  static std::vector<Exp> exponents(int n) {
    std::vector<Exp> out;
    out.reserve(slots(n));
    for (int d = 0; d <= n; ++d) append_exact(out, Exp{}, 0, unsigned(d));
    return out;
  }

  bool in_range(const Exp& e) const { return int(degree(e)) <= order_; }
  const MPoly& operator[](const Exp& e) const {
    check(e);
    return coeffs_[index(e)];
  }
  MPoly& at(const Exp& e) {
    check(e);
    return coeffs_[index(e)];
  }
  void set(const Exp& e, MPoly value) {
    check(e);
    coeffs_[index(e)] = rebase_coeff(std::move(value));
  }

  // Convenience for K = 1.
  const MPoly& coeff(unsigned k) const
    requires(K == 1)
  {
    return (*this)[Exp{k}];
  }
  void set(unsigned k, MPoly value)
    requires(K == 1)
  {
    set(Exp{k}, std::move(value));
  }

  std::vector<MPoly>& data() { return coeffs_; }
  const std::vector<MPoly>& data() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  // Smallest total degree with a nonzero coefficient, or order+1 if none.
  int valuation() const {
    auto ex = exponents(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) return int(degree(ex[i]));
    }
    return order_ + 1;
  }
  const MPoly& constant_term() const { return coeffs_[0]; }

  Series truncated(int n) const {
    if (n > order_) throw std::invalid_argument("cannot raise the truncation order of a series");
    Series r(ring_, vars_, n);
    std::copy(coeffs_.begin(), coeffs_.begin() + std::ptrdiff_t(slots(n)), r.coeffs_.begin());
    return r;
  }

  // Truncate or zero-extend to order n. Zero-extension is only meaningful when
  // the caller knows the missing coefficients are irrelevant.
  Series with_order(int n) const {
    if (n <= order_) return truncated(n);
    Series r(ring_, vars_, n);
    std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin());
    return r;
  }

  bool operator==(const Series& o) const {
    return order_ == o.order_ && vars_ == o.vars_ && coeffs_ == o.coeffs_;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Series& operator+=(const Series& o) { return combine(o, false); }
  Series& operator-=(const Series& o) { return combine(o, true); }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const MPoly& c, Series a) {
    for (auto& x : a.coeffs_) {
      if (!x.is_zero()) x = c * x;
    }
    return a;
  }
  friend Series operator*(const Coeff& c, Series a) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }
  Series& operator+=(const MPoly& c) {
    coeffs_[0] += c;
    return *this;
  }

  // Apply f to every coefficient, producing a series over another ring.
  Series map(const VarSpecPtr& ring, const std::function<MPoly(const MPoly&)>& f) const {
    Series r(ring, vars_, order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) r.coeffs_[i] = rebase(f(coeffs_[i]), ring);
    }
    return r;
  }
  Series renamed(std::array<std::string, K> vars) const {
    Series r = *this;
    r.vars_ = std::move(vars);
    return r;
  }

 private:
  static std::size_t slots_dim(std::size_t dim, int n) {
    if (n < 0) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= dim; ++i) r = r * (std::size_t(n) + i) / i;
    return r;
  }
  static void append_exact(std::vector<Exp>& out, Exp e, std::size_t pos, unsigned d) {
    if (pos + 1 == K) {
      e[pos] = d;
      out.push_back(e);
      return;
    }
    for (unsigned rest = 0; rest <= d; ++rest) {
      e[pos] = d - rest;
      append_exact(out, e, pos + 1, rest);
    }
  }
  void check(const Exp& e) const {
    if (int(degree(e)) > order_) {
      throw std::out_of_range("series coefficient beyond truncation order " + std::to_string(order_));
    }
  }
  MPoly rebase_coeff(MPoly v) const {
    if (v.spec() && !same_spec(v.spec(), ring_)) throw std::invalid_argument("series: coefficient ring mismatch");
    return v.is_zero() ? MPoly(ring_) : v;
  }
  Series& combine(const Series& o, bool subtract) {
    if (vars_ != o.vars_) throw std::invalid_argument("series: variable mismatch");
    if (!same_spec(ring_, o.ring_)) throw std::invalid_argument("series: coefficient ring mismatch");
    if (o.order_ < order_) *this = truncated(o.order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (subtract) {
        coeffs_[i] -= o.coeffs_[i];
      } else {
        coeffs_[i] += o.coeffs_[i];
      }
    }
    return *this;
  }

  VarSpecPtr ring_;
  std::array<std::string, K> vars_{};
  int order_ = 0;
  std::vector<MPoly> coeffs_;
};

using USeries = Series<1>;
using BSeries = Series<2>;
using TSeries = Series<3>;

// Product computed only up to total degree `order`. The caller vouches that
// the operands determine the result to that order.
template <std::size_t K>
Series<K> mul_to(const Series<K>& a, const Series<K>& b, int order);

template <std::size_t K>
Series<K> operator*(const Series<K>& a, const Series<K>& b) {
  return mul_to(a, b, std::min(a.order(), b.order()));
}

template <std::size_t K>
Series<K> inverse(const Series<K>& a);

template <std::size_t K>
Series<K> operator/(const Series<K>& a, const Series<K>& b) {
  return a * inverse(b);
}

template <std::size_t K>
Series<K> pow(const Series<K>& a, unsigned e);

// The series x_i (i-th formal variable) at the given order.
template <std::size_t K>
Series<K> variable_series(const VarSpecPtr& ring, const std::array<std::string, K>& vars, std::size_t i, int order);

template <std::size_t K>
Series<K> constant_series(const VarSpecPtr& ring, const std::array<std::string, K>& vars, const MPoly& c, int order);

// outer(inner) for a univariate outer series; inner must have zero constant term.
template <std::size_t K>
Series<K> compose(const USeries& outer, const Series<K>& inner);

// outer(x, y) for a bivariate outer series; both inners must have zero constant term.
template <std::size_t K>
Series<K> compose(const BSeries& outer, const Series<K>& x, const Series<K>& y);

template <std::size_t K>
Series<K> partial(const Series<K>& a, std::size_t var);

// First exponent (in slot order, up to `order`) where a and b differ.
template <std::size_t K>
std::optional<typename Series<K>::Exp> first_difference(const Series<K>& a, const Series<K>& b, int order);

// Univariate operations.
USeries reverse(const USeries& f);
BSeries divided_difference(const USeries& s, const std::array<std::string, 2>& vars);
USeries differentiate(const USeries& f);
USeries integrate(const USeries& f, const MPoly& constant);
USeries integrate(const USeries& f);
USeries sqrt_unit(const USeries& f);
USeries exp_series(const USeries& f);
USeries log_series(const USeries& f);
// Multiply by var^k (raises the order by k).
USeries shift_up(const USeries& f, unsigned k);
// Divide by var^k; the lowest k coefficients must vanish.
USeries shift_down(const USeries& f, unsigned k);
// f(c * var) for a polynomial c.
USeries scale_var(const USeries& f, const MPoly& c);

// Bivariate helpers.
BSeries embed(const USeries& f, std::size_t which, const std::array<std::string, 2>& vars);
USeries diagonal(const BSeries& F, const std::string& var);
USeries restrict_zero(const BSeries& F, std::size_t keep);
BSeries swap_vars(const BSeries& F);
BSeries shift_up(const BSeries& F, unsigned i, unsigned j);
BSeries shift_down(const BSeries& F, unsigned i, unsigned j);
// Coefficient of var_{which}^1 as a univariate series in the other variable.
USeries linear_part(const BSeries& F, std::size_t which);

// Hurwitz view: phi_k = k! * coeff_k.
struct HurwitzView {
  USeries base;
  std::vector<MPoly> phi;
};
HurwitzView hurwitz_view(const USeries& f);
USeries from_hurwitz(const VarSpecPtr& ring, const std::string& var, const std::vector<MPoly>& phi);

// Integrality domain Z[1/p : p in inverted][scale_1 x_1, ..., scale_r x_r].
struct IntegralityDomain {
  std::vector<std::pair<std::string, Coeff>> generators;
  std::vector<unsigned long> inverted_primes;
  std::string label;
};
IntegralityDomain plain_domain(const std::vector<std::string>& vars, std::string label = {});

struct IntegralityResult {
  bool integral = true;
  int k = -1;
  MPoly witness;
};
bool is_integral_in(const MPoly& p, const IntegralityDomain& d);
IntegralityResult check_integral_coeffs(const std::vector<MPoly>& coeffs, const IntegralityDomain& d);
IntegralityResult hurwitz_integral(const USeries& f, const IntegralityDomain& d);

extern template class Series<1>;
extern template class Series<2>;
extern template class Series<3>;

}  // namespace ellfgl
