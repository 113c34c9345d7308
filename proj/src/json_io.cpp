#include "ckp/json_io.hpp"

#include <regex>
#include <stdexcept>

namespace ckp {

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& s) {
  static const std::regex form(R"(^-?[0-9]+(/[1-9][0-9]*)?$)");
  if (!std::regex_match(s, form)) throw std::invalid_argument("bad rational literal: " + s);
  Rational r(s);
  r.canonicalize();
  return r;
}

json to_json(const Monomial& m) {
  json parts = json::array();
  for (const auto& [idx, mult] : m.parts()) parts.push_back(json::array({idx, mult}));
  return parts;
}

Monomial monomial_from_json(const json& j) {
  std::vector<Monomial::Part> parts;
  for (const auto& p : j) parts.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  return Monomial(std::move(parts));
}

json to_json(const FockVector& v) {
  json out = json::array();
  for (const auto& [m, c] : v.terms()) out.push_back(json::array({rational_to_string(c), to_json(m)}));
  return out;
}

FockVector fock_vector_from_json(const json& j) {
  FockVector v;
  for (const auto& t : j)
    v.add_term(monomial_from_json(t.at(1)), rational_from_string(t.at(0).get<std::string>()));
  return v;
}

json to_json(const TensorVector& t) {
  json out = json::array();
  for (const auto& [k, c] : t.terms())
    out.push_back(json::array({rational_to_string(c), to_json(k.first), to_json(k.second)}));
  return out;
}

TensorVector tensor_vector_from_json(const json& j) {
  TensorVector t;
  for (const auto& e : j)
    t.add_term(monomial_from_json(e.at(1)), monomial_from_json(e.at(2)),
               rational_from_string(e.at(0).get<std::string>()));
  return t;
}

long parse_half_integer(const std::string& s) {
  static const std::regex whole(R"(^(-?[0-9]+)$)");
  static const std::regex half(R"(^(-?[0-9]+)/2$)");
  std::smatch m;
  if (std::regex_match(s, m, whole)) return 2 * std::stol(m[1]);
  if (std::regex_match(s, m, half)) {
    long num = std::stol(m[1]);
    if (num % 2 == 0) throw std::invalid_argument("half-integer literal not in lowest terms: " + s);
    return num;
  }
  throw std::invalid_argument("expected a half-integer literal like \"3\" or \"13/2\", got: " + s);
}

std::string format_half_integer(long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

}  // namespace ckp
