#pragma once

#include <json.hpp>

#include "fraction.hpp"

namespace qhowe {

// JSON scheme: a polynomial is {"terms":[{"exp":[e_q,e_1,...,e_M],
// "num":"...","den":"..."}]}, integers as decimal strings so arbitrary
// precision round-trips bit-exactly. spectral_slots fixes the padded width of
// every exponent vector (1 + M entries).

inline nlohmann::json exp_to_json(const ExpVec& e, int spectral_slots) {
  if (static_cast<int>(e.size()) > spectral_slots + 1)
    throw std::invalid_argument("exp_to_json: exponent vector wider than declared arity");
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i <= spectral_slots; ++i)
    arr.push_back(i < static_cast<int>(e.size()) ? e[i] : 0);
  return arr;
}

inline ExpVec exp_from_json(const nlohmann::json& j) {
  ExpVec e;
  for (const auto& v : j) e.push_back(v.get<int>());
  trim_exp(e);
  return e;
}

inline nlohmann::json poly_to_json(const MultiLaurentPoly& p, int spectral_slots) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms) {
    nlohmann::json t;
    t["exp"] = exp_to_json(e, spectral_slots);
    t["num"] = int_to_string(rat_num(c));
    t["den"] = int_to_string(rat_den(c));
    terms.push_back(t);
  }
  return nlohmann::json{{"terms", terms}};
}

inline MultiLaurentPoly poly_from_json(const nlohmann::json& j) {
  MultiLaurentPoly p;
  for (const auto& t : j.at("terms")) {
    BigRational c(int_from_string(t.at("num").get<std::string>()),
                  int_from_string(t.at("den").get<std::string>()));
    p.add_term(exp_from_json(t.at("exp")), c);
  }
  return p;
}

inline nlohmann::json fraction_to_json(const TrackedFraction& f, int spectral_slots) {
  nlohmann::json j = poly_to_json(f.num, spectral_slots);
  nlohmann::json denoms = nlohmann::json::array();
  for (const auto& [e, mult] : f.den) {
    nlohmann::json d;
    d["a"] = e.empty() ? 0 : e[0];
    nlohmann::json m = nlohmann::json::array();
    for (int i = 1; i <= spectral_slots; ++i)
      m.push_back(i < static_cast<int>(e.size()) ? e[i] : 0);
    d["m"] = m;
    for (int c = 0; c < mult; ++c) denoms.push_back(d);
  }
  j["denoms"] = denoms;
  return j;
}

inline TrackedFraction fraction_from_json(const nlohmann::json& j) {
  MultiLaurentPoly num = poly_from_json(j);
  std::vector<DenomFactor> factors;
  if (j.contains("denoms")) {
    for (const auto& d : j.at("denoms")) {
      if (d.contains("monomial")) {
        factors.push_back(DenomFactor::monomial(exp_from_json(d.at("monomial"))));
      } else {
        ExpVec e{d.at("a").get<int>()};
        for (const auto& v : d.at("m")) e.push_back(v.get<int>());
        trim_exp(e);
        factors.push_back(DenomFactor::one_minus(std::move(e)));
      }
    }
  }
  return TrackedFraction::with_denominators(std::move(num), factors);
}

inline nlohmann::json matrix_to_json(const std::vector<std::vector<TrackedFraction>>& m,
                                     int spectral_slots) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& f : row) r.push_back(fraction_to_json(f, spectral_slots));
    rows.push_back(r);
  }
  return nlohmann::json{{"rows", m.size()},
                        {"cols", m.empty() ? 0 : m[0].size()},
                        {"entries", rows}};
}

inline std::vector<std::vector<TrackedFraction>> matrix_from_json(const nlohmann::json& j) {
  std::vector<std::vector<TrackedFraction>> m;
  for (const auto& row : j.at("entries")) {
    std::vector<TrackedFraction> r;
    for (const auto& f : row) r.push_back(fraction_from_json(f));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace qhowe
