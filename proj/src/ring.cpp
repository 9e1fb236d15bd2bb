#include "ellfgl/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace ellfgl {

VarSpec::VarSpec(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) {
    throw std::invalid_argument("VarSpec: names and weights differ in length");
  }
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("VarSpec: at most 16 variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("VarSpec: empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("VarSpec: duplicate variable " + n);
  }
}

std::optional<std::size_t> VarSpec::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarSpec::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown variable: " + std::string(name));
  return *i;
}

VarSpecPtr make_spec(std::vector<std::pair<std::string, int>> vars) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (auto& [n, w] : vars) {
    names.push_back(n);
    weights.push_back(w);
  }
  return std::make_shared<const VarSpec>(std::move(names), std::move(weights));
}

bool same_spec(const VarSpecPtr& a, const VarSpecPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
  degree = degree - exp[i] + e;
  exp[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(e);
  }
  r.degree = degree + o.degree;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > o.exp[i]) return false;
  }
  return true;
}

namespace {

const VarSpecPtr& merge_spec(const VarSpecPtr& a, const VarSpecPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (!same_spec(a, b)) throw std::invalid_argument("MPoly: VarSpec mismatch");
  return a;
}

struct Prod {
  Monomial m;
  const Coeff* a;
  const Coeff* b;
};

}  // namespace

MPoly MPoly::constant(VarSpecPtr spec, const Coeff& c) {
  MPoly p(std::move(spec));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

MPoly MPoly::variable(VarSpecPtr spec, std::string_view name) {
  Monomial m;
  m.set(spec->index(name), 1);
  return monomial(std::move(spec), m, 1);
}

MPoly MPoly::monomial(VarSpecPtr spec, const Monomial& m, const Coeff& c) {
  MPoly p(std::move(spec));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(VarSpecPtr spec, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  MPoly p(std::move(spec));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0);
}

Coeff MPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].mono.degree == 0) return terms_[0].coeff;
  return 0;
}

Coeff MPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono < x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

bool MPoly::has_integer_coeffs() const {
  for (const auto& t : terms_) {
    if (t.coeff.get_den() != 1) return false;
  }
  return true;
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[var]);
  return d;
}

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.back().mono.degree;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  spec_ = merge_spec(spec_, o.spec_);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono < o.terms_[j].mono)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].mono < terms_[i].mono) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) out.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const Coeff& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  std::pair<const MPoly*, const MPoly*> pr{&a, &b};
  return MPoly::sum_of_products(merge_spec(a.spec_, b.spec_), {&pr, 1});
}

MPoly MPoly::sum_of_products(const VarSpecPtr& spec,
                             std::span<const std::pair<const MPoly*, const MPoly*>> pairs) {
  std::size_t total = 0;
  for (const auto& [a, b] : pairs) {
    merge_spec(spec, merge_spec(a->spec_, b->spec_));
    total += a->terms_.size() * b->terms_.size();
  }
  MPoly r(spec);
  if (total == 0) return r;
  if (pairs.size() == 1 && pairs[0].first->terms_.size() == 1) {
    const Term& s = pairs[0].first->terms_[0];
    r.terms_.reserve(total);
    for (const auto& t : pairs[0].second->terms_) r.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return r;
  }
  std::vector<Prod> prods;
  prods.reserve(total);
  for (const auto& [a, b] : pairs) {
    for (const auto& x : a->terms_) {
      for (const auto& y : b->terms_) prods.push_back({x.mono * y.mono, &x.coeff, &y.coeff});
    }
  }
  std::sort(prods.begin(), prods.end(), [](const Prod& x, const Prod& y) { return x.m < y.m; });
  Coeff acc, tmp;
  for (std::size_t i = 0; i < prods.size();) {
    std::size_t j = i;
    mpq_mul(acc.get_mpq_t(), prods[i].a->get_mpq_t(), prods[i].b->get_mpq_t());
    for (++j; j < prods.size() && prods[j].m == prods[i].m; ++j) {
      mpq_mul(tmp.get_mpq_t(), prods[j].a->get_mpq_t(), prods[j].b->get_mpq_t());
      mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
    }
    if (acc != 0) r.terms_.push_back({prods[i].m, acc});
    i = j;
  }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty() && !same_spec(spec_, o.spec_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Coeff c = it->coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < spec_->size(); ++v) {
      unsigned e = it->mono.exp[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += spec_->name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += rational_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += rational_string(c) + "*" + mono;
    }
  }
  return out;
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly result = MPoly::constant(p.spec(), 1);
  MPoly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<int> weight_of(const MPoly& p) {
  std::optional<int> w;
  for (const auto& t : p.terms()) {
    int tw = 0;
    for (std::size_t v = 0; v < p.spec()->size(); ++v) tw += int(t.mono.exp[v]) * p.spec()->weight(v);
    if (w && *w != tw) return std::nullopt;
    w = tw;
  }
  return w.value_or(0);
}

MPoly derivative(const MPoly& p, std::size_t var) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exp[var];
    if (e == 0) continue;
    Term d{t.mono, t.coeff * e};
    d.mono.set(var, e - 1);
    out.push_back(std::move(d));
  }
  return MPoly::from_terms(p.spec(), std::move(out));
}

MPoly derivative(const MPoly& p, std::string_view var) {
  return derivative(p, p.spec()->index(var));
}

MPoly specialize(const MPoly& p, const std::map<std::string, SubstValue>& assignment,
                 const VarSpecPtr& target_in) {
  const VarSpecPtr& src = p.spec();
  const VarSpecPtr target = target_in ? target_in : src;
  if (!src) return MPoly(target);
  for (const auto& [name, value] : assignment) {
    if (!src->find(name)) throw std::invalid_argument("specialize: unknown variable " + name);
    if (const auto* q = std::get_if<MPoly>(&value); q && q->spec() && !same_spec(q->spec(), target)) {
      throw std::invalid_argument("specialize: value for " + name + " lives over another VarSpec");
    }
  }
  // For every source variable: either a target index it maps to, or a substitution.
  const std::size_t n = src->size();
  std::vector<int> keep(n, -1);
  std::vector<const SubstValue*> subst(n, nullptr);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = assignment.find(src->name(v));
    if (it != assignment.end()) {
      subst[v] = &it->second;
    } else {
      bool used = p.degree_in(v) > 0;
      auto ti = target->find(src->name(v));
      if (!ti) {
        if (used) throw std::invalid_argument("specialize: variable " + src->name(v) + " missing in target");
        continue;
      }
      keep[v] = int(*ti);
    }
  }
  // Group terms by the exponents of substituted variables.
  std::map<std::vector<unsigned>, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    std::vector<unsigned> key(n, 0);
    Monomial km;
    for (std::size_t v = 0; v < n; ++v) {
      unsigned e = t.mono.exp[v];
      if (e == 0) continue;
      if (subst[v]) {
        key[v] = e;
      } else {
        km.set(std::size_t(keep[v]), km.exp[std::size_t(keep[v])] + e);
      }
    }
    groups[key].push_back({km, t.coeff});
  }
  std::vector<std::vector<MPoly>> powers(n);
  auto power_of = [&](std::size_t v, unsigned e) -> const MPoly& {
    auto& cache = powers[v];
    if (cache.empty()) {
      cache.push_back(MPoly::constant(target, 1));
      if (const auto* c = std::get_if<Coeff>(subst[v])) {
        cache.push_back(MPoly::constant(target, *c));
      } else {
        MPoly q = std::get<MPoly>(*subst[v]);
        cache.push_back(rebase(q, target));
      }
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  MPoly result(target);
  for (auto& [key, terms] : groups) {
    MPoly part = MPoly::from_terms(target, std::move(terms));
    for (std::size_t v = 0; v < n; ++v) {
      if (key[v] > 0) part = part * power_of(v, key[v]);
      if (part.is_zero()) break;
    }
    result += part;
  }
  return result;
}

MPoly rebase(const MPoly& p, const VarSpecPtr& target) {
  if (!p.spec() || same_spec(p.spec(), target)) {
    return MPoly::from_terms(target, std::vector<Term>(p.terms().begin(), p.terms().end()));
  }
  std::vector<int> map(p.spec()->size(), -1);
  for (std::size_t v = 0; v < p.spec()->size(); ++v) {
    if (auto ti = target->find(p.spec()->name(v))) map[v] = int(*ti);
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < p.spec()->size(); ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (map[v] < 0) throw std::invalid_argument("rebase: variable " + p.spec()->name(v) + " missing in target");
      m.set(std::size_t(map[v]), t.mono.exp[v]);
    }
    out.push_back({m, t.coeff});
  }
  return MPoly::from_terms(target, std::move(out));
}

MPoly quotient_map(const MPoly& p, const QuotientSpec& q) {
  const VarSpecPtr& spec = p.spec();
  if (const auto* mp = std::get_if<ModPrime>(&q)) {
    if (mp->p < 2) throw std::invalid_argument("quotient_map: modulus must be prime");
    for (unsigned long d = 2; d * d <= mp->p; ++d) {
      if (mp->p % d == 0) throw std::invalid_argument("quotient_map: modulus must be prime");
    }
    std::vector<Term> out;
    Integer modulus = static_cast<unsigned long>(mp->p);
    for (const auto& t : p.terms()) {
      if (t.coeff.get_den() != 1) {
        throw std::domain_error("quotient_map: mod-prime applied to non-integer coefficient " +
                                rational_string(t.coeff));
      }
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), modulus.get_mpz_t());
      if (r != 0) out.push_back({t.mono, Coeff(r)});
    }
    return MPoly::from_terms(spec, std::move(out));
  }
  if (const auto* dec = std::get_if<Decomposables>(&q)) {
    std::vector<std::size_t> gens;
    for (const auto& g : dec->generators) {
      std::size_t i = spec->index(g);
      if (spec->weight(i) >= 0) {
        throw std::invalid_argument("quotient_map: decomposables generator " + g + " must have negative weight");
      }
      gens.push_back(i);
    }
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
      unsigned count = 0;
      for (auto g : gens) count += t.mono.exp[g];
      if (count <= 1) out.push_back(t);
    }
    return MPoly::from_terms(spec, std::move(out));
  }
  const auto& rel = std::get<Relation>(q);
  std::size_t v = spec->index(rel.variable);
  MPoly repl = rebase(*rel.replacement, spec);
  if (repl.degree_in(v) > 0) {
    throw std::invalid_argument("quotient_map: relation replacement must not contain " + rel.variable);
  }
  std::map<unsigned, std::vector<Term>> by_half;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exp[v];
    Term r = t;
    r.mono.set(v, e % 2);
    by_half[e / 2].push_back(std::move(r));
  }
  MPoly result(spec);
  MPoly rp = MPoly::constant(spec, 1);
  unsigned have = 0;
  for (auto& [half, terms] : by_half) {
    while (have < half) {
      rp = rp * repl;
      ++have;
    }
    result += MPoly::from_terms(spec, std::move(terms)) * rp;
  }
  return result;
}

MPoly coefficient_in(const MPoly& p, std::size_t var, unsigned k) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono.exp[var] != k) continue;
    Term r = t;
    r.mono.set(var, 0);
    out.push_back(std::move(r));
  }
  return MPoly::from_terms(p.spec(), std::move(out));
}

Coeff ratio(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("ratio: zero denominator");
  Coeff c(n, d);
  c.canonicalize();
  return c;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer nu(long n) {
  if (n < 2) throw std::invalid_argument("nu: n must be at least 2");
  Integer g = 0;
  for (long k = 1; k < n; ++k) {
    Integer b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
  }
  return g;
}

Coeff parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Coeff c(n, d);
  c.canonicalize();
  return neg ? Coeff(-c) : c;
}

std::string rational_string(const Coeff& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace ellfgl

namespace ellfgl {
namespace {

class PolyParser {
 public:
  PolyParser(const VarSpecPtr& spec, std::string_view text) : spec_(spec), text_(text) {}

  MPoly parse() {
    MPoly r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at position " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  MPoly expr() {
    MPoly r(spec_);
    bool neg = eat('-');
    if (!neg) eat('+');
    r = term();
    if (neg) r = -r;
    while (true) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }
  MPoly term() {
    MPoly r = factor();
    while (true) {
      if (eat('*')) {
        r = r * factor();
      } else if (eat('/')) {
        MPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        r *= Coeff(1 / d.constant_term());
      } else {
        return r;
      }
    }
  }
  MPoly factor() {
    MPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, unsigned(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }
  MPoly atom() {
    skip();
    if (eat('(')) {
      MPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (eat('-')) return -factor();
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
        fail("floating point values are not accepted");
      }
      return MPoly::constant(spec_, Coeff(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number, variable or '('");
    return MPoly::variable(spec_, text_.substr(start, pos_ - start));
  }

  const VarSpecPtr& spec_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const VarSpecPtr& spec, std::string_view text) { return PolyParser(spec, text).parse(); }

}  // namespace ellfgl
