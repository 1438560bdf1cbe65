#pragma once

// Structured (JSON) forms of polynomials, colorings and tables. Exponents are
// raw quarter-power units; coefficients are decimal strings.

#include <algorithm>
#include <map>
#include <vector>

#include "json.hpp"
#include "moy/cycles.hpp"
#include "moy/diagram.hpp"
#include "moy/qexact.hpp"

namespace moy {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& c);
Json to_json(const QLaurent& p);
Json to_json(const QALaurent& p);
Json to_json(const TruncatedRSeries& p);
Json to_json(const Coloring& c);

QLaurent qlaurent_from_json(const Json& j);
QALaurent qalaurent_from_json(const Json& j);
TruncatedRSeries rseries_from_json(const Json& j);
Coloring coloring_from_json(const Json& j);

/// Keys of a coloring table ordered by total flow, then lexicographically.
template <class Value>
std::vector<Coloring> display_order(const std::map<Coloring, Value>& table) {
  std::vector<Coloring> keys;
  for (const auto& [gamma, value] : table) keys.push_back(gamma);
  std::stable_sort(keys.begin(), keys.end(),
                   [](const Coloring& a, const Coloring& b) { return a.total() < b.total(); });
  return keys;
}

/// [{"coloring": ..., "value": ...}, ...] in display order.
template <class Value>
Json table_to_json(const std::map<Coloring, Value>& table) {
  Json rows = Json::array();
  for (const Coloring& gamma : display_order(table))
    rows.push_back({{"coloring", to_json(gamma)}, {"value", to_json(table.at(gamma))}});
  return rows;
}

std::map<Coloring, QLaurent> qlaurent_table_from_json(const Json& j);
std::map<Coloring, TruncatedRSeries> rseries_table_from_json(const Json& j);

/// Index, edges, circles, components, rot per cycle plus the pairing in half-units.
Json cycles_to_json(const CycleSet& cs);

}  // namespace moy
