#include "ellfgl/io.hpp"

#include <stdexcept>

namespace ellfgl {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("malformed JSON: " + what);
}

template <std::size_t K>
Json series_json(const Series<K>& s, const char* kind) {
  Json j;
  j["kind"] = kind;
  j["vars"] = s.vars();
  j["order"] = s.order();
  j["ring"] = {{"vars", s.ring()->names()}, {"weights", s.ring()->weights()}};
  Json terms = Json::array();
  auto ex = Series<K>::exponents(s.order());
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const MPoly& c = s.data()[i];
    if (c.is_zero()) continue;
    terms.push_back({{"exp", ex[i]}, {"coeff", to_json(c)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

template <std::size_t K>
Series<K> series_from(const Json& j, const char* kind) {
  expect(j.is_object() && j.value("kind", "") == kind, std::string("expected kind ") + kind);
  auto vars = j.at("vars").get<std::vector<std::string>>();
  expect(vars.size() == K, "wrong number of series variables");
  std::array<std::string, K> names;
  std::copy(vars.begin(), vars.end(), names.begin());
  int order = j.at("order").get<int>();
  expect(order >= 0, "negative order");
  const Json& terms = j.at("terms");
  expect(terms.is_array(), "terms must be an array");
  VarSpecPtr ring = mpoly_from_json({{"vars", j.at("ring").at("vars")}, {"weights", j.at("ring").at("weights")}, {"terms", Json::array()}}).spec();
  std::vector<std::pair<typename Series<K>::Exp, MPoly>> parsed;
  for (const auto& t : terms) {
    auto e = t.at("exp").get<std::vector<unsigned>>();
    expect(e.size() == K, "exponent length");
    typename Series<K>::Exp exp{};
    std::copy(e.begin(), e.end(), exp.begin());
    MPoly c = mpoly_from_json(t.at("coeff"));
    expect(same_spec(ring, c.spec()), "coefficient ring differs from the series ring");
    parsed.emplace_back(exp, rebase(c, ring));
  }
  Series<K> s(ring, names, order);
  for (auto& [e, c] : parsed) {
    expect(int(Series<K>::degree(e)) <= order, "term beyond order");
    s.set(e, std::move(c));
  }
  return s;
}

}  // namespace

Json to_json(const MPoly& p) {
  Json j;
  const auto& spec = *p.spec();
  j["vars"] = spec.names();
  j["weights"] = spec.weights();
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e(spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i) e[i] = t.mono.exp[i];
    terms.push_back({{"exp", e}, {"num", t.coeff.get_num().get_str()}, {"den", t.coeff.get_den().get_str()}});
  }
  j["terms"] = std::move(terms);
  return j;
}

MPoly mpoly_from_json(const Json& j) {
  expect(j.is_object(), "polynomial must be an object");
  auto names = j.at("vars").get<std::vector<std::string>>();
  auto weights = j.at("weights").get<std::vector<int>>();
  expect(names.size() == weights.size(), "vars and weights differ in length");
  std::vector<std::pair<std::string, int>> vars;
  for (std::size_t i = 0; i < names.size(); ++i) vars.emplace_back(names[i], weights[i]);
  VarSpecPtr spec = make_spec(std::move(vars));
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<std::vector<unsigned>>();
    expect(e.size() == names.size(), "exponent length");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m.set(i, e[i]);
    Coeff c = parse_rational(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
    terms.push_back({m, c});
  }
  return MPoly::from_terms(spec, std::move(terms));
}

Json to_json(const USeries& s) { return series_json(s, "useries"); }
Json to_json(const BSeries& s) { return series_json(s, "bseries"); }
USeries useries_from_json(const Json& j) { return series_from<1>(j, "useries"); }
BSeries bseries_from_json(const Json& j) { return series_from<2>(j, "bseries"); }

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace ellfgl
