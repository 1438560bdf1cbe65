#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "doctest.h"
#include "moy/cycles.hpp"

using namespace moy;

namespace {

using Content = std::pair<std::vector<int>, std::vector<int>>;

// Every 0/1 assignment that is conserved at all vertices.
std::set<Content> brute_force_cycles(const PlanarDiagram& d) {
  const std::size_t ne = d.edges().size(), nc = d.circles().size();
  std::set<Content> out;
  for (unsigned mask = 0; mask < (1u << (ne + nc)); ++mask) {
    std::map<int, int> balance;
    Content c;
    for (std::size_t i = 0; i < ne; ++i) {
      if (!(mask >> i & 1)) continue;
      const Edge& e = d.edges()[i];
      --balance[e.tail.vertex];
      ++balance[e.head.vertex];
      c.first.push_back(e.id);
    }
    for (std::size_t i = 0; i < nc; ++i)
      if (mask >> (ne + i) & 1) c.second.push_back(d.circles()[i].id);
    bool ok = true;
    for (const auto& [v, b] : balance) ok = ok && b == 0;
    if (ok) out.insert(c);
  }
  return out;
}

// Total turning of the closed polyline through the circuit, in full turns.
int turning_number(const PlanarDiagram& d, const Circuit& c) {
  if (c.circle) return d.circle(*c.circle).orientation == Orientation::ccw ? 1 : -1;
  std::vector<Point> pts;
  for (int id : c.edges) {
    const Edge& e = d.edge(id);
    pts.push_back(d.vertex(e.tail.vertex).pos);
    for (const Point& p : e.waypoints) pts.push_back(p);
  }
  double total = 0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = pts[i], b = pts[(i + 1) % n], c2 = pts[(i + 2) % n];
    const double t = std::atan2(b.y - a.y, b.x - a.x);
    const double u = std::atan2(c2.y - b.y, c2.x - b.x);
    double turn = u - t;
    while (turn > std::numbers::pi) turn -= 2 * std::numbers::pi;
    while (turn < -std::numbers::pi) turn += 2 * std::numbers::pi;
    total += turn;
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

const char* kTwoCircles = R"({"vertices": [], "edges": [],
  "circles": [{"id": 3, "orientation": "ccw"}, {"id": 7, "orientation": "cw"}]})";

}  // namespace

TEST_CASE("cycles agree with brute-force enumeration") {
  std::vector<PlanarDiagram> diagrams;
  for (const std::string& name : builtin_names()) diagrams.push_back(builtin(name));
  diagrams.push_back(parse_diagram(kTwoCircles));
  for (const PlanarDiagram& d : diagrams) {
    const CycleSet cs = all_cycles(d);
    std::set<Content> got;
    for (const Cycle& c : cs.cycles) got.insert({c.edges, c.circles});
    CHECK(got.size() == cs.size());
    CHECK(got == brute_force_cycles(d));
    CHECK(cs[0].empty());
    for (std::size_t i = 1; i < cs.size(); ++i) CHECK(canonical_less(cs[i - 1], cs[i]));
  }
}

TEST_CASE("rotation numbers match the turning of the traced polyline") {
  for (const std::string& name : builtin_names()) {
    const PlanarDiagram d = builtin(name);
    for (const Cycle& c : all_cycles(d).cycles) {
      int sum = 0;
      for (const Circuit& k : c.components) {
        CHECK(rotation_number(d, k) == turning_number(d, k));
        sum += k.rot;
      }
      CHECK(c.rot == sum);
    }
  }
  const CycleSet two = all_cycles(parse_diagram(kTwoCircles));
  REQUIRE(two.size() == 4);
  CHECK(two[3].rot == 0);
  CHECK(two[3].components.size() == 2);
  CHECK_FALSE(is_positive(two));
}

TEST_CASE("intersection pairing is antisymmetric and counts flags") {
  for (const std::string& name : builtin_names()) {
    const CycleSet cs = all_cycles(builtin(name));
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) {
        CHECK(intersection_pairing_halves(cs[i], cs[j]) == -intersection_pairing_halves(cs[j], cs[i]));
        int expected = 0;
        for (const Flag& f : cs[i].halfedges) {
          const Flag other{f.vertex, f.pos == FlagPos::l ? FlagPos::r : FlagPos::l};
          if (f.pos == FlagPos::m || !cs[j].contains(other)) continue;
          expected += f.pos == FlagPos::l ? 1 : -1;
        }
        CHECK(intersection_pairing_halves(cs[i], cs[j]) == expected);
      }
  }
}

TEST_CASE("theta and unknot are positive, tetrahedron is not") {
  CHECK(is_positive(builtin("unknot")));
  CHECK(is_positive(builtin("theta")));
  CHECK_FALSE(is_positive(builtin("tetrahedron")));
}
