#include "lorentz/chain_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lorentz {

namespace {

using nlohmann::json;

HalfInt half_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw std::invalid_argument(where + ": missing \"" + key + "\"");
  const json& v = j.at(key);
  if (v.is_string()) return HalfInt::parse(v.get<std::string>());
  if (v.is_number_integer()) return HalfInt(v.get<int>());
  throw std::invalid_argument(where + ": \"" + key + "\" must be a string such as \"1/2\"");
}

double number_field(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw std::invalid_argument(std::string("\"") + key + "\" must be a number");
  return j.at(key).get<double>();
}

cplx complex_pair(const json& v, const char* key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw std::invalid_argument(std::string("\"") + key + "\" must be a two-element array [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

CoeffTable coeff_table(const json& arr, const char* key) {
  if (!arr.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array");
  CoeffTable out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& e = arr[i];
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!e.is_object()) throw std::invalid_argument(where + ": expected an object");
    for (const char* k : {"from", "to"})
      if (!e.contains(k) || !e.at(k).is_number_integer())
        throw std::invalid_argument(where + ": \"" + k + "\" must be an integer member index");
    out.push_back({e.at("to").get<int>(), e.at("from").get<int>(), half_field(e, "lp", where), half_field(e, "l", where),
                   {number_field(e, "re", 0.0), number_field(e, "im", 0.0)}});
  }
  return out;
}

}  // namespace

ChainConfig dirac_preset() {
  ChainConfig c;
  c.chain.reps = {{kHalf, HalfInt(0)}, {HalfInt(0), kHalf}};
  c.coeffs = {{2, 1, kHalf, kHalf, 1.0}, {1, 2, kHalf, kHalf, 1.0}};
  c.coeffs_dot = c.coeffs;
  return c;
}

ChainConfig parse_chain_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("chain config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("chain config must be a JSON object");
  ChainConfig c;
  if (!j.contains("reps") || !j.at("reps").is_array()) throw std::invalid_argument("chain config needs a \"reps\" array");
  for (std::size_t i = 0; i < j.at("reps").size(); ++i) {
    const json& r = j.at("reps")[i];
    const std::string where = "reps[" + std::to_string(i) + "]";
    const RepLabel label{half_field(r, "l1", where), half_field(r, "l2", where)};
    if (label.l1 < HalfInt(0) || label.l2 < HalfInt(0)) throw std::invalid_argument(where + ": negative weight");
    c.chain.reps.push_back(label);
  }
  if (c.chain.reps.empty()) throw std::invalid_argument("chain config: empty chain");
  c.coeffs = j.contains("coeffs") ? coeff_table(j.at("coeffs"), "coeffs") : CoeffTable{};
  c.coeffs_dot = j.contains("coeffs_dot") ? coeff_table(j.at("coeffs_dot"), "coeffs_dot") : c.coeffs;
  if (j.contains("kappa")) c.kappa = complex_pair(j.at("kappa"), "kappa");
  c.kappa_dot = j.contains("kappa_dot") ? complex_pair(j.at("kappa_dot"), "kappa_dot") : c.kappa;
  validate_coefficients(c.chain, c.coeffs);
  validate_coefficients(c.chain, c.coeffs_dot);
  return c;
}

ChainConfig load_chain_config(const std::string& source) {
  if (source == "dirac") return dirac_preset();
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("cannot open chain file " + source);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_chain_config(ss.str());
}

}  // namespace lorentz
