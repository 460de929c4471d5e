#include "elc/fielddoc.hpp"

#include <nlohmann/json.hpp>

#include "elc/error.hpp"

namespace elc {

using nlohmann::json;

TensorField field_from_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("field document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw parse_error("field document needs an integer \"dim\"");
  if (!doc.contains("order") || !doc["order"].is_number_integer())
    throw parse_error("field document needs an integer \"order\"");
  const int dim = doc["dim"].get<int>();
  const int order = doc["order"].get<int>();
  if (dim < 1 || dim > 9) throw parse_error("\"dim\" out of range");
  if (order < 0 || order > 8) throw parse_error("\"order\" out of range");

  std::vector<Variance> variance(order, Variance::covariant);
  if (doc.contains("variance")) {
    if (!doc["variance"].is_string()) throw parse_error("\"variance\" must be a string of c/v flags");
    const std::string v = doc["variance"].get<std::string>();
    if (static_cast<int>(v.size()) != order)
      throw parse_error("\"variance\" length must equal the order");
    for (int i = 0; i < order; ++i) {
      if (v[i] == 'c')
        variance[i] = Variance::covariant;
      else if (v[i] == 'v')
        variance[i] = Variance::contravariant;
      else
        throw parse_error("variance flags must be 'c' or 'v'");
    }
  } else if (order > 0) {
    throw parse_error("field document needs a \"variance\" string");
  }

  TensorField t(dim, std::move(variance));
  if (!doc.contains("components")) return t;
  if (!doc["components"].is_object()) throw parse_error("\"components\" must be an object");
  std::vector<int> idx(order);
  for (const auto& [key, value] : doc["components"].items()) {
    if (static_cast<int>(key.size()) != order)
      throw parse_error("component key \"" + key + "\" must have one digit per slot");
    for (int i = 0; i < order; ++i) {
      if (key[i] < '1' || key[i] > '0' + dim)
        throw parse_error("component key \"" + key + "\" has an index outside 1.." +
                          std::to_string(dim));
      idx[i] = key[i] - '1';
    }
    if (!value.is_string()) throw parse_error("component values must be polynomial strings");
    Polynomial p = Polynomial::parse(dim, value.get<std::string>());
    std::size_t flat = t.flatten(idx);
    if (!t[flat].is_zero()) throw parse_error("duplicate component key \"" + key + "\"");
    t[flat] = std::move(p);
  }
  return t;
}

std::string field_to_json(const TensorField& t, bool pretty) {
  json doc;
  doc["dim"] = t.dim();
  doc["order"] = t.order();
  std::string v;
  for (Variance var : t.variance()) v += (var == Variance::covariant ? 'c' : 'v');
  doc["variance"] = v;
  json comps = json::object();
  std::vector<int> idx(t.order());
  for (std::size_t flat = 0; flat < t.component_count(); ++flat) {
    if (t[flat].is_zero()) continue;
    t.unflatten(flat, idx);
    std::string key;
    for (int i : idx) key += static_cast<char>('1' + i);
    comps[key] = t[flat].str();
  }
  doc["components"] = comps;
  return pretty ? doc.dump(2) : doc.dump();
}

} // namespace elc
