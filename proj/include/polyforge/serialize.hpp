#pragma once

#include <polyforge/basespoly.hpp>
#include <polyforge/bipoly.hpp>
#include <polyforge/matroid.hpp>
#include <polyforge/poly.hpp>

#include <json.hpp>

#include <string>

namespace polyforge {

using json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits, as decimal
// strings beyond that.
inline json big_to_json(const BigInt& z) {
  if (z >= std::numeric_limits<int64_t>::min() && z <= std::numeric_limits<int64_t>::max())
    return json(int64_t(z));
  return json(z.str());
}

inline BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected integer or numeric string");
}

inline json poly_to_json(const Poly& p, const std::string& basis = "power") {
  json coeffs = json::array();
  for (int i = 0; i <= p.degree(); ++i)
    coeffs.push_back(json::array({big_to_json(num(p.coeff(i))), big_to_json(den(p.coeff(i)))}));
  return json{{"basis", basis}, {"coeffs", coeffs}};
}

inline Poly poly_from_json(const json& j) {
  std::vector<Rat> c;
  for (const auto& pair : j.at("coeffs"))
    c.push_back(Rat(big_from_json(pair.at(0)), big_from_json(pair.at(1))));
  return Poly(std::move(c));
}

inline json bipoly_to_json(const BiPoly& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back(json::array(
        {k.first, k.second, big_to_json(num(c)), big_to_json(den(c))}));
  return json{{"terms", terms}};
}

inline BiPoly bipoly_from_json(const json& j) {
  BiPoly out;
  for (const auto& t : j.at("terms"))
    out.add_term(t.at(0).get<int>(), t.at(1).get<int>(),
                 Rat(big_from_json(t.at(2)), big_from_json(t.at(3))));
  return out;
}

inline json coeff_vector_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& c : v) out.push_back(json::array({big_to_json(num(c)), big_to_json(den(c))}));
  return out;
}

inline json census_to_json(const CensusRow& row, bool witnesses) {
  json j{{"order", row.order},
         {"graphs_scanned", row.graphs_scanned},
         {"sigma_unreal", row.sigma_unreal},
         {"w_unreal", row.w_unreal},
         {"tau_unreal", row.tau_unreal}};
  if (witnesses) {
    j["sigma_witnesses"] = row.sigma_witnesses;
    j["w_witnesses"] = row.w_witnesses;
    j["tau_witnesses"] = row.tau_witnesses;
  }
  return j;
}

// Matroid test fixtures: {n_elements, kind, params}; explicit kind stores the
// whole rank table.
inline json matroid_to_json(const Matroid& m, const std::string& kind, const json& params) {
  return json{{"n_elements", m.ground_size()}, {"kind", kind}, {"params", params}};
}

inline Matroid matroid_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  int n = j.at("n_elements").get<int>();
  const json& params = j.at("params");
  if (kind == "uniform") return Matroid::uniform(params.at("k").get<int>(), n);
  if (kind == "graphic" || kind == "cographic") {
    Multigraph g(params.at("n").get<int>());
    for (const auto& e : params.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return kind == "graphic" ? Matroid::cycle_matroid(g) : Matroid::cocycle_matroid(g);
  }
  if (kind == "dual") return Matroid::dual(matroid_from_json(params));
  if (kind == "explicit") {
    std::vector<int> table;
    for (const auto& v : params.at("rank_table")) table.push_back(v.get<int>());
    if (int(table.size()) != (1 << n)) throw std::invalid_argument("rank table size mismatch");
    return Matroid(n, [table](uint32_t a) { return table[a]; });
  }
  throw std::invalid_argument("unknown matroid kind: " + kind);
}

}  // namespace polyforge
