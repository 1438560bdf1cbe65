#include <cmath>
#include <numbers>
#include <string>

#include "doctest.h"
#include "moy/diagram.hpp"

using namespace moy;

namespace {

// Direction in which the edge at flag f leaves its vertex.
double leaving_angle(const PlanarDiagram& d, const Flag& f) {
  const Edge& e = d.edge(d.edge_at(f));
  const Point p = d.vertex(f.vertex).pos;
  Point q;
  if (e.tail == f)
    q = e.waypoints.empty() ? d.vertex(e.head.vertex).pos : e.waypoints.front();
  else
    q = e.waypoints.empty() ? d.vertex(e.tail.vertex).pos : e.waypoints.back();
  return std::atan2(q.y - p.y, q.x - p.x);
}

// Counter-clockwise angle from the m branch, in (0, 2 pi).
double ccw_from_m(const PlanarDiagram& d, int vertex, FlagPos pos) {
  double a = leaving_angle(d, {vertex, pos}) - leaving_angle(d, {vertex, FlagPos::m});
  while (a <= 0) a += 2 * std::numbers::pi;
  return a;
}

DiagramError::Kind parse_kind(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const DiagramError& e) {
    return e.kind();
  }
  FAIL("diagram parsed without error");
  return DiagramError::Kind::syntax;
}

const char* kTheta = R"({
  "vertices": [{"id": 0, "kind": "split", "pos": [0, 2]}, {"id": 1, "kind": "merge", "pos": [0, 0]}],
  "edges": [
    {"id": 0, "tail": [1, "m"], "head": [0, "m"], "waypoints": []},
    {"id": 1, "tail": [0, "r"], "head": [1, "r"], "waypoints": [[-1, 3], [-3, 1], [-1, -1]]},
    {"id": 2, "tail": [0, "l"], "head": [1, "l"], "waypoints": [[-1, 1]]}
  ],
  "circles": []
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST_CASE("builtin fixtures round-trip through the file format") {
  for (const std::string& name : builtin_names()) {
    const PlanarDiagram d = builtin(name);
    CHECK(parse_diagram(builtin_text(name)) == d);
    CHECK(parse_diagram(serialize_diagram(d)) == d);
  }
  CHECK(parse_diagram(kTheta) == builtin("theta"));
}

TEST_CASE("fixture branches: l is on the left seen along the flow") {
  for (const std::string& name : {"theta", "tetrahedron"}) {
    const PlanarDiagram d = builtin(name);
    for (const Vertex& v : d.vertices()) {
      const double l = ccw_from_m(d, v.id, FlagPos::l);
      const double r = ccw_from_m(d, v.id, FlagPos::r);
      CAPTURE(name);
      CAPTURE(v.id);
      if (v.kind == VertexKind::split)
        CHECK(r < l);
      else
        CHECK(l < r);
    }
  }
}

TEST_CASE("malformed diagrams are rejected with a specific kind") {
  using K = DiagramError::Kind;
  CHECK(parse_kind("[1, 2]") == K::syntax);
  CHECK(parse_kind("{not json") == K::syntax);
  CHECK(parse_kind(replace(kTheta, "\"split\"", "\"fork\"")) == K::syntax);
  CHECK(parse_kind(replace(kTheta, "{\"id\": 1, \"kind\"", "{\"id\": 0, \"kind\"")) == K::duplicate_id);
  CHECK(parse_kind(replace(kTheta, "\"head\": [0, \"m\"]", "\"head\": [5, \"m\"]")) == K::dangling_endpoint);
  CHECK(parse_kind(replace(kTheta, "\"head\": [1, \"r\"]", "\"head\": [1, \"l\"]")) == K::duplicate_flag);
  CHECK(parse_kind(replace(kTheta, "\"waypoints\": [[-1, 1]]", "\"waypoints\": [[-4, 1]]")) == K::crossing);
}

TEST_CASE("coloring parser") {
  const PlanarDiagram d = builtin("theta");
  const Coloring c = parse_coloring(d, "e0=2,1=1,e2=1");
  CHECK(c.edges.at(0) == 2);
  CHECK(c.edges.at(1) == 1);
  CHECK(c.total() == 4);
  CHECK(validate_coloring(d, c).ok());
  CHECK(parse_coloring(d, "e0=1").edges.at(2) == 0);
  CHECK_FALSE(validate_coloring(d, parse_coloring(d, "e0=1")).ok());
  CHECK_THROWS(parse_coloring(d, "e7=1"));
  CHECK_THROWS(parse_coloring(d, "e0=x"));
  CHECK(format_coloring(c) == "e0=2,e1=1,e2=1");
}
