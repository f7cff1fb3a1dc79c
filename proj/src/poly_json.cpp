#include "octabasic/poly_json.hpp"

#include <stdexcept>

namespace octabasic {

nlohmann::json poly_to_json(const Poly& f) {
  auto out = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    auto exps = nlohmann::json::object();
    for (auto v : kAllVars)
      if (int e = t.mono.exp(v); e != 0) exps[std::string(var_name(v))] = e;
    out.push_back({{"coeff", t.coeff.str()}, {"exps", std::move(exps)}});
  }
  return out;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& item : j) {
    Monomial m;
    for (const auto& [name, e] : item.at("exps").items()) {
      auto v = parse_var(name);
      if (!v) throw std::invalid_argument("unknown variable '" + name + "'");
      m.set_exp(*v, m.exp(*v) + e.get<int>());
    }
    terms.push_back({m, BigInt(item.at("coeff").get<std::string>())});
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace octabasic
