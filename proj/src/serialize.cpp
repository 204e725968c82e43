#include "cbt/serialize.hpp"

#include <stdexcept>
#include <string>

namespace cbt {

ordered_json poly_to_json(const LaurentPoly& p) {
  ordered_json j = ordered_json::object();
  for (const auto& t : p.terms()) j[std::to_string(t.exp)] = t.coeff;
  return j;
}

LaurentPoly poly_from_json(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const int exp = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent '" + key + "'");
    std::int64_t coeff = 0;
    if (value.is_number_integer()) {
      coeff = value.get<std::int64_t>();
    } else if (value.is_string()) {
      const std::string s = value.get<std::string>();
      coeff = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("bad coefficient '" + s + "'");
    } else {
      throw std::invalid_argument("coefficient must be an integer");
    }
    terms.push_back({exp, coeff});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

ordered_json partition_to_json(const Partition& p) { return ordered_json(p.parts()); }

Partition partition_from_json(const ordered_json& j) {
  return Partition(j.get<std::vector<int>>());
}

ordered_json fock_to_json(const FockVector& x) {
  ordered_json j = ordered_json::object();
  for (const auto& [la, p] : x.entries()) j[la.to_string()] = poly_to_json(p);
  return j;
}

FockVector fock_from_json(const ordered_json& j, Context ctx) {
  if (!j.is_object()) throw std::invalid_argument("Fock vector must be a JSON object");
  FockVector x(ctx);
  for (const auto& [key, value] : j.items()) x.add(parse_partition(key), poly_from_json(value));
  return x;
}

}  // namespace cbt
