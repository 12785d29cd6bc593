#include "malle/polyjson.hpp"

#include <stdexcept>

namespace malle {

using nlohmann::json;

json bipoly_to_json(const BiPoly& p) {
  json rows = json::array();
  for (int i = 0; i <= p.deg_T(); ++i) {
    json row = json::array();
    for (int j = 0; j <= p.deg_Y(); ++j) row.push_back(p.coeff(i, j).get_str());
    rows.push_back(row);
  }
  return json{{"coeffs", rows}, {"var_order", "T,Y"}};
}

BiPoly bipoly_from_json(const json& j) {
  if (!j.contains("coeffs")) throw std::invalid_argument("BiPoly JSON: missing coeffs");
  if (j.value("var_order", "T,Y") != "T,Y")
    throw std::invalid_argument("BiPoly JSON: unsupported var_order");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j.at("coeffs")) {
    std::vector<Int> r;
    for (const auto& c : row) {
      if (c.is_string())
        r.emplace_back(c.get<std::string>());
      else
        r.emplace_back(static_cast<long>(c.get<long long>()));
    }
    rows.push_back(std::move(r));
  }
  return BiPoly(std::move(rows));
}

json unipoly_to_json(const UniPoly& p) {
  json c = json::array();
  for (int i = 0; i <= p.degree(); ++i) c.push_back(rat_to_json(p.coeff(static_cast<size_t>(i))));
  return json{{"coeffs", c}};
}

UniPoly unipoly_from_json(const json& j) {
  std::vector<Rat> c;
  for (const auto& v : j.at("coeffs")) c.push_back(rat_from_json(v));
  return UniPoly(std::move(c));
}

json rat_to_json(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_json(const json& j) {
  std::string s;
  if (j.is_string())
    s = j.get<std::string>();
  else
    s = std::to_string(j.get<long long>());
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace malle
