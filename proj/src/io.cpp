#include "moy/io.hpp"

#include <string>

namespace moy {

namespace {

std::string coeff_text(const Integer& c) { return c.str(); }
Integer coeff_value(const Json& j) { return Integer(j.get<std::string>()); }

}  // namespace

Json to_json(const Integer& c) { return coeff_text(c); }

Json to_json(const QLaurent& p) {
  Json terms = Json::array();
  for (const auto& [v, c] : p.terms()) terms.push_back({{"v", v}, {"c", coeff_text(c)}});
  return terms;
}

Json to_json(const QALaurent& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back({{"v", k.first}, {"b", k.second}, {"c", coeff_text(c)}});
  return terms;
}

Json to_json(const TruncatedRSeries& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back({{"b", k.first}, {"v", k.second}, {"c", coeff_text(c)}});
  return {{"q_order", p.q_order()}, {"terms", terms}};
}

Json to_json(const Coloring& c) {
  Json edges = Json::object();
  for (const auto& [id, v] : c.edges) edges[std::to_string(id)] = v;
  Json circles = Json::object();
  for (const auto& [id, v] : c.circles) circles[std::to_string(id)] = v;
  return {{"edges", edges}, {"circles", circles}};
}

QLaurent qlaurent_from_json(const Json& j) {
  QLaurent p;
  for (const Json& t : j) p += QLaurent::monomial(t.at("v").get<int>(), coeff_value(t.at("c")));
  return p;
}

QALaurent qalaurent_from_json(const Json& j) {
  QALaurent p;
  for (const Json& t : j) p += QALaurent::monomial(t.at("v").get<int>(), t.at("b").get<int>(), coeff_value(t.at("c")));
  return p;
}

TruncatedRSeries rseries_from_json(const Json& j) {
  const int q = j.at("q_order").get<int>();
  TruncatedRSeries p(q);
  for (const Json& t : j.at("terms"))
    p += TruncatedRSeries::monomial(q, t.at("b").get<int>(), t.at("v").get<int>(), coeff_value(t.at("c")));
  return p;
}

Coloring coloring_from_json(const Json& j) {
  Coloring c;
  for (const auto& [id, v] : j.at("edges").items()) c.edges[std::stoi(id)] = v.get<std::uint64_t>();
  for (const auto& [id, v] : j.at("circles").items()) c.circles[std::stoi(id)] = v.get<std::uint64_t>();
  return c;
}

std::map<Coloring, QLaurent> qlaurent_table_from_json(const Json& j) {
  std::map<Coloring, QLaurent> t;
  for (const Json& row : j) t.emplace(coloring_from_json(row.at("coloring")), qlaurent_from_json(row.at("value")));
  return t;
}

std::map<Coloring, TruncatedRSeries> rseries_table_from_json(const Json& j) {
  std::map<Coloring, TruncatedRSeries> t;
  for (const Json& row : j) t.emplace(coloring_from_json(row.at("coloring")), rseries_from_json(row.at("value")));
  return t;
}

Json cycles_to_json(const CycleSet& cs) {
  Json cycles = Json::array();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Cycle& c = cs[i];
    cycles.push_back({{"index", i},
                      {"edges", c.edges},
                      {"circles", c.circles},
                      {"components", c.components.size()},
                      {"rot", c.rot}});
  }
  Json pairing = Json::array();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < cs.size(); ++j) row.push_back(intersection_pairing_halves(cs[i], cs[j]));
    pairing.push_back(row);
  }
  return {{"cycles", cycles}, {"pairing_halves", pairing}};
}

}  // namespace moy
