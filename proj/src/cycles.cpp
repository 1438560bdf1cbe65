#include "moy/cycles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace moy {

bool Cycle::contains(const Flag& f) const { return std::binary_search(halfedges.begin(), halfedges.end(), f); }
bool Cycle::contains_edge(int id) const { return std::binary_search(edges.begin(), edges.end(), id); }
bool Cycle::contains_circle(int id) const { return std::binary_search(circles.begin(), circles.end(), id); }

Coloring Cycle::flow(const PlanarDiagram& d) const {
  Coloring c = zero_coloring(d);
  for (int e : edges) c.edges[e] = 1;
  for (int k : circles) c.circles[k] = 1;
  return c;
}

bool canonical_less(const Cycle& a, const Cycle& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.edges != b.edges) return a.edges < b.edges;
  return a.circles < b.circles;
}

std::optional<std::size_t> CycleSet::find(const std::vector<int>& edges, const std::vector<int>& circles) const {
  for (std::size_t i = 0; i < cycles.size(); ++i)
    if (cycles[i].edges == edges && cycles[i].circles == circles) return i;
  return std::nullopt;
}

int rotation_number(const PlanarDiagram& d, const Circuit& c) {
  if (c.circle) return d.circle(*c.circle).orientation == Orientation::ccw ? 1 : -1;
  std::vector<Point> poly;
  for (int id : c.edges) {
    const Edge& e = d.edge(id);
    poly.push_back(d.vertex(e.tail.vertex).pos);
    poly.insert(poly.end(), e.waypoints.begin(), e.waypoints.end());
  }
  double twice_area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    twice_area += p.x * q.y - q.x * p.y;
  }
  if (twice_area == 0) {
    std::string ids;
    for (int id : c.edges) ids += (ids.empty() ? "" : ",") + std::to_string(id);
    throw std::domain_error("circuit through edges " + ids + " has zero signed area; refine the waypoints");
  }
  return twice_area > 0 ? 1 : -1;
}

namespace {

Cycle from_circuit(const PlanarDiagram& d, Circuit circuit) {
  Cycle c;
  if (circuit.circle) {
    c.circles = {*circuit.circle};
  } else {
    for (int id : circuit.edges) {
      const Edge& e = d.edge(id);
      c.edges.push_back(id);
      c.halfedges.push_back(e.tail);
      c.halfedges.push_back(e.head);
      c.vertices.push_back(e.tail.vertex);
    }
    std::sort(c.edges.begin(), c.edges.end());
    std::sort(c.halfedges.begin(), c.halfedges.end());
    std::sort(c.vertices.begin(), c.vertices.end());
  }
  circuit.rot = rotation_number(d, circuit);
  c.rot = circuit.rot;
  c.components.push_back(std::move(circuit));
  return c;
}

bool vertex_disjoint(const Cycle& a, const Cycle& b) {
  std::vector<int> common;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(common));
  return common.empty();
}

template <class T>
std::vector<T> merged(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Cycle disjoint_union(const Cycle& a, const Cycle& b) {
  Cycle c;
  c.edges = merged(a.edges, b.edges);
  c.circles = merged(a.circles, b.circles);
  c.halfedges = merged(a.halfedges, b.halfedges);
  c.vertices = merged(a.vertices, b.vertices);
  c.components = a.components;
  c.components.insert(c.components.end(), b.components.begin(), b.components.end());
  c.rot = a.rot + b.rot;
  return c;
}

}  // namespace

std::vector<Cycle> elementary_circuits(const PlanarDiagram& d) {
  const auto& vs = d.vertices();
  // outgoing[i] = edges leaving vertex index i, by edge id
  std::vector<std::vector<const Edge*>> outgoing(vs.size());
  for (const Edge& e : d.edges()) outgoing[d.vertex_index(e.tail.vertex)].push_back(&e);

  std::vector<Cycle> found;
  std::vector<int> path;
  std::vector<bool> on_path(vs.size(), false);

  // Each circuit is found once, from its lowest-ordered vertex.
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t at) {
    for (const Edge* e : outgoing[at]) {
      const std::size_t next = d.vertex_index(e->head.vertex);
      if (next == start) {
        path.push_back(e->id);
        found.push_back(from_circuit(d, Circuit{path, std::nullopt, 0}));
        path.pop_back();
      } else if (next > start && !on_path[next]) {
        on_path[next] = true;
        path.push_back(e->id);
        walk(start, next);
        path.pop_back();
        on_path[next] = false;
      }
    }
  };
  for (std::size_t s = 0; s < vs.size(); ++s) {
    on_path[s] = true;
    walk(s, s);
    on_path[s] = false;
  }
  for (const Circle& k : d.circles()) found.push_back(from_circuit(d, Circuit{{}, k.id, 0}));
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

CycleSet all_cycles(const PlanarDiagram& d) {
  const std::vector<Cycle> circuits = elementary_circuits(d);
  CycleSet set;
  set.cycles.push_back(Cycle{});
  // Independent sets of the "shares a vertex" conflict graph.
  std::function<void(std::size_t, const Cycle&)> extend = [&](std::size_t from, const Cycle& acc) {
    for (std::size_t i = from; i < circuits.size(); ++i) {
      if (!vertex_disjoint(acc, circuits[i])) continue;
      Cycle next = disjoint_union(acc, circuits[i]);
      set.cycles.push_back(next);
      extend(i + 1, next);
    }
  };
  extend(0, Cycle{});
  std::sort(set.cycles.begin(), set.cycles.end(), canonical_less);
  return set;
}

int intersection_pairing_halves(const Cycle& c, const Cycle& c2) {
  int halves = 0;
  for (int v : c.vertices) {
    if (c.contains({v, FlagPos::l}) && c2.contains({v, FlagPos::r})) ++halves;
    if (c.contains({v, FlagPos::r}) && c2.contains({v, FlagPos::l})) --halves;
  }
  return halves;
}

bool is_positive(const CycleSet& cs) {
  return std::all_of(cs.cycles.begin(), cs.cycles.end(), [](const Cycle& c) { return c.empty() || c.rot >= 1; });
}

bool is_positive(const PlanarDiagram& d) {
  const auto circuits = elementary_circuits(d);
  return std::all_of(circuits.begin(), circuits.end(), [](const Cycle& c) { return c.rot == 1; });
}

}  // namespace moy
