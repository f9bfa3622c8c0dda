#pragma once
// JSON form of a multivector: {"m": 2, "coeffs": [[re, im], ...]} with the
// coefficient list in blade-bitmask order (length 2^m).

#include <json.hpp>

#include "clifft/algebra.hpp"

namespace clifft {

inline nlohmann::json multivector_to_json(const Multivector& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& x : a.c) coeffs.push_back({x.real(), x.imag()});
  return nlohmann::json{{"m", a.m}, {"coeffs", coeffs}};
}

inline Multivector multivector_from_json(const nlohmann::json& j) {
  if (!j.contains("m") || !j.contains("coeffs")) throw std::invalid_argument("multivector JSON needs \"m\" and \"coeffs\"");
  const int m = j.at("m").get<int>();
  Multivector out(make_algebra(m));
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != size_t(1) << m)
    throw std::invalid_argument("multivector JSON: coeffs must hold 2^m [re, im] pairs");
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const auto& p = coeffs[i];
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("multivector JSON: coefficient entries are [re, im] pairs");
    out.c[i] = cplx{p[0].get<double>(), p[1].get<double>()};
  }
  return out;
}

}  // namespace clifft
