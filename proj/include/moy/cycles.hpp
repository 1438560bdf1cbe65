#pragma once

// Cycles of a MOY graph: consistently oriented 2-regular subgraphs.

#include <cstddef>
#include <optional>
#include <vector>

#include "moy/diagram.hpp"

namespace moy {

/// One connected component of a cycle: a vertex-simple directed circuit
/// (edges in flow order) or a single circle.
struct Circuit {
  std::vector<int> edges;
  std::optional<int> circle;
  int rot = 0;
};

struct Cycle {
  std::vector<int> edges;       ///< sorted ids
  std::vector<int> circles;     ///< sorted ids
  std::vector<Flag> halfedges;  ///< sorted
  std::vector<int> vertices;    ///< sorted ids
  std::vector<Circuit> components;
  int rot = 0;

  bool empty() const { return edges.empty() && circles.empty(); }
  std::size_t size() const { return edges.size() + circles.size(); }
  bool contains(const Flag& f) const;
  bool contains_edge(int id) const;
  bool contains_circle(int id) const;
  /// Indicator flow of this cycle.
  Coloring flow(const PlanarDiagram& d) const;
};

/// Canonical order: by size, then sorted edge ids, then sorted circle ids.
bool canonical_less(const Cycle& a, const Cycle& b);

/// All cycles of a diagram in canonical order; index 0 is the empty cycle.
struct CycleSet {
  std::vector<Cycle> cycles;

  std::size_t size() const { return cycles.size(); }
  const Cycle& operator[](std::size_t i) const { return cycles[i]; }
  /// Index of the cycle with exactly this edge/circle content.
  std::optional<std::size_t> find(const std::vector<int>& edges, const std::vector<int>& circles) const;
};

/// Connected cycles: every vertex-simple directed circuit plus one per circle.
std::vector<Cycle> elementary_circuits(const PlanarDiagram& d);

CycleSet all_cycles(const PlanarDiagram& d);

/// +1 for a counter-clockwise closed polyline, -1 for clockwise. Throws
/// std::domain_error when the traced polygon has zero signed area.
int rotation_number(const PlanarDiagram& d, const Circuit& c);

/// 2<C,C'> = #{v : (v,l) in C, (v,r) in C'} - #{v : (v,r) in C, (v,l) in C'}
int intersection_pairing_halves(const Cycle& c, const Cycle& c2);

/// Every nonempty cycle has positive rotation number.
bool is_positive(const PlanarDiagram& d);
bool is_positive(const CycleSet& cs);

}  // namespace moy
