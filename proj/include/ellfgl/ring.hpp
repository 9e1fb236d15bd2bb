#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ellfgl {

using Coeff = mpq_class;
using Integer = mpz_class;

inline constexpr std::size_t kMaxVars = 16;

// Ordered list of variable names with one integer weight each. The list order
// is the tiebreak of the monomial order.
class VarSpec {
 public:
  VarSpec(std::vector<std::string> names, std::vector<int> weights);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws std::invalid_argument when the name is unknown.
  std::size_t index(std::string_view name) const;

  bool operator==(const VarSpec&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using VarSpecPtr = std::shared_ptr<const VarSpec>;

VarSpecPtr make_spec(std::vector<std::pair<std::string, int>> vars);
bool same_spec(const VarSpecPtr& a, const VarSpecPtr& b);

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  std::uint16_t operator[](std::size_t i) const { return exp[i]; }
  void set(std::size_t i, unsigned e);
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  // grlex: total degree first, then lexicographic in variable order.
  bool operator<(const Monomial& o) const {
    if (degree != o.degree) return degree < o.degree;
    return exp < o.exp;
  }
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

class MPoly;

// Value of a substitution: a rational constant or a polynomial over the target spec.
using SubstValue = std::variant<Coeff, MPoly>;

struct ModPrime {
  unsigned long p;
};
struct Decomposables {
  std::vector<std::string> generators;
};
struct Relation {
  std::string variable;  // eliminated variable v
  // Rewrites v^2 -> replacement, where the relation is v^2 - replacement.
  std::shared_ptr<const MPoly> replacement;
};
using QuotientSpec = std::variant<ModPrime, Decomposables, Relation>;

// Sparse multivariate polynomial with rational coefficients. Terms are kept
// sorted ascending in grlex order with no zero coefficients.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(VarSpecPtr spec) : spec_(std::move(spec)) {}

  static MPoly constant(VarSpecPtr spec, const Coeff& c);
  static MPoly variable(VarSpecPtr spec, std::string_view name);
  static MPoly monomial(VarSpecPtr spec, const Monomial& m, const Coeff& c);
  // Build from arbitrary (possibly unsorted, duplicated, zero) terms.
  static MPoly from_terms(VarSpecPtr spec, std::vector<Term> terms);

  const VarSpecPtr& spec() const { return spec_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Coeff constant_term() const;
  Coeff coeff(const Monomial& m) const;
  bool has_integer_coeffs() const;
  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Coeff& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Coeff& c) { return a *= c; }
  friend MPoly operator*(const Coeff& c, MPoly a) { return a *= c; }

  bool operator==(const MPoly& o) const;

  // Sum of products a_k * b_k computed in one pass.
  static MPoly sum_of_products(const VarSpecPtr& spec,
                               std::span<const std::pair<const MPoly*, const MPoly*>> pairs);

  std::string to_string() const;

 private:
  VarSpecPtr spec_;
  std::vector<Term> terms_;
};

MPoly pow(const MPoly& p, unsigned e);

// Weight of a homogeneous polynomial; nullopt when inhomogeneous. The zero
// polynomial reports weight 0.
std::optional<int> weight_of(const MPoly& p);

MPoly derivative(const MPoly& p, std::size_t var);
MPoly derivative(const MPoly& p, std::string_view var);

// Substitute variables by name. Unassigned variables are carried over by name
// into the target spec (which defaults to the source spec).
MPoly specialize(const MPoly& p, const std::map<std::string, SubstValue>& assignment,
                 const VarSpecPtr& target = nullptr);
// Re-express p over another spec containing all variables p uses.
MPoly rebase(const MPoly& p, const VarSpecPtr& target);

MPoly quotient_map(const MPoly& p, const QuotientSpec& q);

// Coefficient of var^k viewed as a polynomial in the remaining variables.
MPoly coefficient_in(const MPoly& p, std::size_t var, unsigned k);

// n/d in lowest terms.
Coeff ratio(const Integer& n, const Integer& d);

Integer nu(long n);
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// Parse a polynomial expression such as "3*mu1^2 - (mu2 + 1/2)*mu3". Supports
// + - * ^, parentheses, integers, and division by rational constants.
MPoly parse_poly(const VarSpecPtr& spec, std::string_view text);

// Parse "a", "-a", "a/b" into an exact rational. Rejects floats.
Coeff parse_rational(std::string_view text);
std::string rational_string(const Coeff& c);

}  // namespace ellfgl
