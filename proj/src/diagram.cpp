#include "moy/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "json.hpp"

namespace moy {

using json = nlohmann::json;
using Kind = DiagramError::Kind;

std::string_view to_string(FlagPos p) {
  switch (p) {
    case FlagPos::l: return "l";
    case FlagPos::m: return "m";
    case FlagPos::r: return "r";
  }
  return "?";
}

std::string_view to_string(DiagramError::Kind k) {
  switch (k) {
    case Kind::syntax: return "syntax";
    case Kind::duplicate_id: return "duplicate-id";
    case Kind::dangling_endpoint: return "dangling-endpoint";
    case Kind::duplicate_flag: return "duplicate-flag";
    case Kind::missing_flag: return "missing-flag";
    case Kind::sink: return "sink";
    case Kind::source: return "source";
    case Kind::flag_direction: return "flag-direction";
    case Kind::crossing: return "crossing";
    case Kind::degenerate: return "degenerate";
  }
  return "?";
}

namespace {

std::string flag_text(const Flag& f) {
  return "(" + std::to_string(f.vertex) + "," + std::string(to_string(f.pos)) + ")";
}

template <class T>
std::size_t index_of(const std::vector<T>& items, int id, const char* what) {
  auto it = std::lower_bound(items.begin(), items.end(), id, [](const T& t, int k) { return t.id < k; });
  if (it == items.end() || it->id != id) throw std::out_of_range(std::string("no ") + what + " with id " + std::to_string(id));
  return static_cast<std::size_t>(it - items.begin());
}

template <class T>
void check_unique_ids(const std::vector<T>& items, const char* what) {
  for (std::size_t i = 1; i < items.size(); ++i)
    if (items[i].id == items[i - 1].id)
      throw DiagramError(Kind::duplicate_id, std::string("duplicate ") + what + " id " + std::to_string(items[i].id));
}

// ---- plane geometry ---------------------------------------------------------

int orient(const Point& a, const Point& b, const Point& c) {
  const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

bool within_box(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_meet(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
  const int d1 = orient(p3, p4, p1);
  const int d2 = orient(p3, p4, p2);
  const int d3 = orient(p1, p2, p3);
  const int d4 = orient(p1, p2, p4);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && within_box(p3, p4, p1)) return true;
  if (d2 == 0 && within_box(p3, p4, p2)) return true;
  if (d3 == 0 && within_box(p1, p2, p3)) return true;
  if (d4 == 0 && within_box(p1, p2, p4)) return true;
  return false;
}

// Two segments leaving the common point p towards a and b overlap iff they
// are collinear and point the same way.
bool overlap_from(const Point& p, const Point& a, const Point& b) {
  if (orient(p, a, b) != 0) return false;
  return (a.x - p.x) * (b.x - p.x) + (a.y - p.y) * (b.y - p.y) > 0;
}

struct Segment {
  Point a;
  Point b;
  bool a_is_vertex;
  bool b_is_vertex;
};

std::vector<Segment> segments_of(const std::vector<Point>& pts) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    segs.push_back({pts[i], pts[i + 1], i == 0, i + 2 == pts.size()});
  return segs;
}

// Segments may only touch at a shared vertex endpoint, and must not run
// along each other from there.
bool segments_conflict(const Segment& s, const Segment& t) {
  if (!segments_meet(s.a, s.b, t.a, t.b)) return false;
  const std::pair<const Point*, bool> s_ends[] = {{&s.a, s.a_is_vertex}, {&s.b, s.b_is_vertex}};
  const std::pair<const Point*, bool> t_ends[] = {{&t.a, t.a_is_vertex}, {&t.b, t.b_is_vertex}};
  for (const auto& [sp, sv] : s_ends) {
    for (const auto& [tp, tv] : t_ends) {
      if (!(*sp == *tp) || !sv || !tv) continue;
      const Point& s_other = sp == &s.a ? s.b : s.a;
      const Point& t_other = tp == &t.a ? t.b : t.a;
      if (overlap_from(*sp, s_other, t_other)) return true;
      // Two segments sharing an endpoint meet nowhere else unless they overlap.
      return false;
    }
  }
  return true;
}

std::string coloring_key(const char* prefix, int id) { return prefix + std::to_string(id); }

}  // namespace

// ---- PlanarDiagram ----------------------------------------------------------

PlanarDiagram::PlanarDiagram(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Circle> circles)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), circles_(std::move(circles)) {
  auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
  std::sort(vertices_.begin(), vertices_.end(), by_id);
  std::sort(edges_.begin(), edges_.end(), by_id);
  std::sort(circles_.begin(), circles_.end(), by_id);
  validate();
}

const Vertex& PlanarDiagram::vertex(int id) const { return vertices_[vertex_index(id)]; }
const Edge& PlanarDiagram::edge(int id) const { return edges_[edge_index(id)]; }
const Circle& PlanarDiagram::circle(int id) const { return circles_[circle_index(id)]; }
std::size_t PlanarDiagram::vertex_index(int id) const { return index_of(vertices_, id, "vertex"); }
std::size_t PlanarDiagram::edge_index(int id) const { return index_of(edges_, id, "edge"); }
std::size_t PlanarDiagram::circle_index(int id) const { return index_of(circles_, id, "circle"); }

int PlanarDiagram::edge_at(const Flag& f) const {
  auto it = flag_edge_.find(f);
  if (it == flag_edge_.end()) throw std::out_of_range("no edge at flag " + flag_text(f));
  return it->second;
}

bool PlanarDiagram::operator==(const PlanarDiagram& o) const {
  auto same_v = [](const Vertex& a, const Vertex& b) { return a.id == b.id && a.kind == b.kind && a.pos == b.pos; };
  auto same_e = [](const Edge& a, const Edge& b) {
    return a.id == b.id && a.tail == b.tail && a.head == b.head && a.waypoints == b.waypoints;
  };
  auto same_c = [](const Circle& a, const Circle& b) { return a.id == b.id && a.orientation == b.orientation; };
  return std::equal(vertices_.begin(), vertices_.end(), o.vertices_.begin(), o.vertices_.end(), same_v) &&
         std::equal(edges_.begin(), edges_.end(), o.edges_.begin(), o.edges_.end(), same_e) &&
         std::equal(circles_.begin(), circles_.end(), o.circles_.begin(), o.circles_.end(), same_c);
}

void PlanarDiagram::validate() {
  check_unique_ids(vertices_, "vertex");
  check_unique_ids(edges_, "edge");
  check_unique_ids(circles_, "circle");
  for (const Vertex& v : vertices_)
    if (v.id < 0) throw DiagramError(Kind::syntax, "negative vertex id " + std::to_string(v.id));

  std::set<int> vertex_ids;
  for (const Vertex& v : vertices_) vertex_ids.insert(v.id);
  flag_edge_.clear();
  // true = the edge leaves the vertex at this flag
  std::map<Flag, bool> outgoing;
  for (const Edge& e : edges_) {
    for (const Flag& f : {e.tail, e.head}) {
      if (!vertex_ids.contains(f.vertex))
        throw DiagramError(Kind::dangling_endpoint, "edge " + std::to_string(e.id) + " ends at unknown vertex " +
                                                        std::to_string(f.vertex));
    }
    for (const auto& [f, out] : {std::pair{e.tail, true}, std::pair{e.head, false}}) {
      auto [it, inserted] = flag_edge_.emplace(f, e.id);
      if (!inserted)
        throw DiagramError(Kind::duplicate_flag, "flag " + flag_text(f) + " used by edges " +
                                                     std::to_string(it->second) + " and " + std::to_string(e.id));
      outgoing[f] = out;
    }
  }

  for (const Vertex& v : vertices_) {
    int n_out = 0;
    for (FlagPos p : {FlagPos::l, FlagPos::m, FlagPos::r}) {
      auto it = outgoing.find({v.id, p});
      if (it == outgoing.end())
        throw DiagramError(Kind::missing_flag, "vertex " + std::to_string(v.id) + " has no edge at flag " +
                                                   std::string(to_string(p)));
      n_out += it->second ? 1 : 0;
    }
    if (n_out == 0) throw DiagramError(Kind::sink, "vertex " + std::to_string(v.id) + " is a sink");
    if (n_out == 3) throw DiagramError(Kind::source, "vertex " + std::to_string(v.id) + " is a source");
    const bool m_out = outgoing.at({v.id, FlagPos::m});
    const bool l_out = outgoing.at({v.id, FlagPos::l});
    const bool r_out = outgoing.at({v.id, FlagPos::r});
    const bool ok = v.kind == VertexKind::merge ? (m_out && !l_out && !r_out) : (!m_out && l_out && r_out);
    if (!ok)
      throw DiagramError(Kind::flag_direction,
                         "vertex " + std::to_string(v.id) + " (" + (v.kind == VertexKind::merge ? "merge" : "split") +
                             ") has edge directions inconsistent with its kind");
  }
  validate_geometry();
}

void PlanarDiagram::validate_geometry() const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (vertices_[i].pos == vertices_[j].pos)
        throw DiagramError(Kind::degenerate, "vertices " + std::to_string(vertices_[i].id) + " and " +
                                                 std::to_string(vertices_[j].id) + " share a position");

  std::vector<std::vector<Segment>> segs;
  for (const Edge& e : edges_) {
    std::vector<Point> pts{vertex(e.tail.vertex).pos};
    pts.insert(pts.end(), e.waypoints.begin(), e.waypoints.end());
    pts.push_back(vertex(e.head.vertex).pos);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (pts[i] == pts[i + 1])
        throw DiagramError(Kind::degenerate, "edge " + std::to_string(e.id) + " has a zero-length segment");
    if (e.tail.vertex == e.head.vertex && pts.size() < 4)
      throw DiagramError(Kind::degenerate, "loop edge " + std::to_string(e.id) + " needs at least two waypoints");
    segs.push_back(segments_of(pts));
  }

  for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
    const auto& s = segs[ei];
    const bool loop = edges_[ei].tail.vertex == edges_[ei].head.vertex;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        bool bad;
        if (j == i + 1) {
          bad = overlap_from(s[i].b, s[i].a, s[j].b);
        } else if (loop && i == 0 && j + 1 == s.size()) {
          bad = segments_conflict(s[i], s[j]);
        } else {
          bad = segments_meet(s[i].a, s[i].b, s[j].a, s[j].b);
        }
        if (bad) throw DiagramError(Kind::crossing, "edge " + std::to_string(edges_[ei].id) + " crosses itself");
      }
    }
    for (std::size_t ej = ei + 1; ej < edges_.size(); ++ej)
      for (const Segment& a : s)
        for (const Segment& b : segs[ej])
          if (segments_conflict(a, b))
            throw DiagramError(Kind::crossing, "edges " + std::to_string(edges_[ei].id) + " and " +
                                                   std::to_string(edges_[ej].id) + " cross");
  }
}

// ---- colorings --------------------------------------------------------------

std::uint64_t Coloring::total() const {
  std::uint64_t s = 0;
  for (const auto& [id, v] : edges) s += v;
  for (const auto& [id, v] : circles) s += v;
  return s;
}

bool Coloring::is_zero() const { return total() == 0; }

Coloring zero_coloring(const PlanarDiagram& d) {
  Coloring c;
  for (const Edge& e : d.edges()) c.edges[e.id] = 0;
  for (const Circle& k : d.circles()) c.circles[k.id] = 0;
  return c;
}

std::string ColoringCheck::message() const {
  std::ostringstream out;
  for (const auto& p : problems) out << p << "\n";
  for (const auto& v : violations)
    out << "flow not conserved at vertex " << v.vertex << ": incoming " << v.incoming << ", outgoing " << v.outgoing
        << "\n";
  std::string m = out.str();
  if (!m.empty()) m.pop_back();
  return m;
}

ColoringCheck validate_coloring(const PlanarDiagram& d, const Coloring& c) {
  ColoringCheck check;
  for (const Edge& e : d.edges())
    if (!c.edges.contains(e.id)) check.problems.push_back("edge " + std::to_string(e.id) + " has no value");
  for (const Circle& k : d.circles())
    if (!c.circles.contains(k.id)) check.problems.push_back("circle " + std::to_string(k.id) + " has no value");
  std::set<int> edge_ids, circle_ids;
  for (const Edge& e : d.edges()) edge_ids.insert(e.id);
  for (const Circle& k : d.circles()) circle_ids.insert(k.id);
  for (const auto& [id, v] : c.edges)
    if (!edge_ids.contains(id)) check.problems.push_back("coloring names unknown edge " + std::to_string(id));
  for (const auto& [id, v] : c.circles)
    if (!circle_ids.contains(id)) check.problems.push_back("coloring names unknown circle " + std::to_string(id));
  if (!check.problems.empty()) return check;

  for (const Vertex& v : d.vertices()) {
    auto flow = [&](FlagPos p) { return c.edges.at(d.edge_at({v.id, p})); };
    const std::uint64_t thin = flow(FlagPos::l) + flow(FlagPos::r);
    const std::uint64_t thick = flow(FlagPos::m);
    if (thin != thick) {
      if (v.kind == VertexKind::merge)
        check.violations.push_back({v.id, thin, thick});
      else
        check.violations.push_back({v.id, thick, thin});
    }
  }
  return check;
}

Coloring parse_coloring(const PlanarDiagram& d, std::string_view text) {
  Coloring c = zero_coloring(d);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("coloring entry without '=': " + std::string(item));
    std::string_view key = item.substr(0, eq);
    std::string_view val = item.substr(eq + 1);
    char prefix = 0;
    if (!key.empty() && (key.front() == 'e' || key.front() == 'c')) {
      prefix = key.front();
      key.remove_prefix(1);
    }
    int id = 0;
    std::uint64_t value = 0;
    auto [p1, e1] = std::from_chars(key.data(), key.data() + key.size(), id);
    auto [p2, e2] = std::from_chars(val.data(), val.data() + val.size(), value);
    if (e1 != std::errc{} || p1 != key.data() + key.size() || e2 != std::errc{} || p2 != val.data() + val.size())
      throw std::invalid_argument("malformed coloring entry: " + std::string(item));
    const bool is_edge = c.edges.contains(id);
    const bool is_circle = c.circles.contains(id);
    if (prefix == 'e' || (prefix == 0 && is_edge && !is_circle)) {
      if (!is_edge) throw std::invalid_argument("no edge with id " + std::to_string(id));
      c.edges[id] = value;
    } else if (prefix == 'c' || (prefix == 0 && is_circle && !is_edge)) {
      if (!is_circle) throw std::invalid_argument("no circle with id " + std::to_string(id));
      c.circles[id] = value;
    } else if (is_edge && is_circle) {
      throw std::invalid_argument("id " + std::to_string(id) + " names both an edge and a circle; use e/c prefix");
    } else {
      throw std::invalid_argument("no edge or circle with id " + std::to_string(id));
    }
  }
  return c;
}

std::string format_coloring(const Coloring& c) {
  std::string out;
  auto emit = [&](const char* prefix, int id, std::uint64_t v) {
    if (!out.empty()) out += ",";
    out += coloring_key(prefix, id) + "=" + std::to_string(v);
  };
  for (const auto& [id, v] : c.edges) emit("e", id, v);
  for (const auto& [id, v] : c.circles) emit("c", id, v);
  return out;
}

// ---- file format ------------------------------------------------------------

namespace {

FlagPos parse_pos(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "l") return FlagPos::l;
  if (s == "m") return FlagPos::m;
  if (s == "r") return FlagPos::r;
  throw DiagramError(Kind::syntax, "unknown flag position '" + s + "'");
}

Point parse_point(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DiagramError(Kind::syntax, "point must be [x, y], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

Flag parse_flag(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer())
    throw DiagramError(Kind::syntax, "flag must be [vertex-id, \"l\"|\"m\"|\"r\"], got " + j.dump());
  return {j[0].get<int>(), parse_pos(j[1])};
}

const json& member(const json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key))
    throw DiagramError(Kind::syntax, std::string(what) + " is missing field '" + key + "'");
  return obj.at(key);
}

json point_json(const Point& p) { return json::array({p.x, p.y}); }

}  // namespace

PlanarDiagram parse_diagram(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DiagramError(Kind::syntax, std::string("malformed diagram file: ") + e.what());
  }
  if (!doc.is_object()) throw DiagramError(Kind::syntax, "diagram file must be an object");
  for (const auto& [key, val] : doc.items())
    if (key != "vertices" && key != "edges" && key != "circles")
      throw DiagramError(Kind::syntax, "unknown top-level field '" + key + "'");

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Circle> circles;
  try {
    for (const json& jv : doc.value("vertices", json::array())) {
      Vertex v;
      v.id = member(jv, "id", "vertex").get<int>();
      const std::string kind = member(jv, "kind", "vertex").get<std::string>();
      if (kind == "merge")
        v.kind = VertexKind::merge;
      else if (kind == "split")
        v.kind = VertexKind::split;
      else
        throw DiagramError(Kind::syntax, "vertex " + std::to_string(v.id) + " has unknown kind '" + kind + "'");
      v.pos = parse_point(member(jv, "pos", "vertex"));
      vertices.push_back(v);
    }
    for (const json& je : doc.value("edges", json::array())) {
      Edge e;
      e.id = member(je, "id", "edge").get<int>();
      e.tail = parse_flag(member(je, "tail", "edge"));
      e.head = parse_flag(member(je, "head", "edge"));
      if (je.contains("waypoints"))
        for (const json& p : je.at("waypoints")) e.waypoints.push_back(parse_point(p));
      edges.push_back(e);
    }
    for (const json& jc : doc.value("circles", json::array())) {
      Circle c;
      c.id = member(jc, "id", "circle").get<int>();
      const std::string o = member(jc, "orientation", "circle").get<std::string>();
      if (o == "ccw")
        c.orientation = Orientation::ccw;
      else if (o == "cw")
        c.orientation = Orientation::cw;
      else
        throw DiagramError(Kind::syntax, "circle " + std::to_string(c.id) + " has unknown orientation '" + o + "'");
      circles.push_back(c);
    }
  } catch (const json::exception& e) {
    throw DiagramError(Kind::syntax, std::string("malformed diagram file: ") + e.what());
  }
  return PlanarDiagram(std::move(vertices), std::move(edges), std::move(circles));
}

std::string serialize_diagram(const PlanarDiagram& d) {
  json doc;
  doc["vertices"] = json::array();
  for (const Vertex& v : d.vertices())
    doc["vertices"].push_back(
        {{"id", v.id}, {"kind", v.kind == VertexKind::merge ? "merge" : "split"}, {"pos", point_json(v.pos)}});
  doc["edges"] = json::array();
  for (const Edge& e : d.edges()) {
    json wp = json::array();
    for (const Point& p : e.waypoints) wp.push_back(point_json(p));
    doc["edges"].push_back({{"id", e.id},
                            {"tail", json::array({e.tail.vertex, to_string(e.tail.pos)})},
                            {"head", json::array({e.head.vertex, to_string(e.head.pos)})},
                            {"waypoints", wp}});
  }
  doc["circles"] = json::array();
  for (const Circle& c : d.circles())
    doc["circles"].push_back({{"id", c.id}, {"orientation", c.orientation == Orientation::ccw ? "ccw" : "cw"}});
  return doc.dump(2) + "\n";
}

// ---- fixtures ---------------------------------------------------------------

namespace {

constexpr std::string_view kUnknot = R"({
  "vertices": [],
  "edges": [],
  "circles": [ { "id": 0, "orientation": "ccw" } ]
})";

// Split vertex 0 on top, merge vertex 1 below; thick edge 0 runs up the
// middle, both thin edges bend round to the left so each circuit is ccw.
constexpr std::string_view kTheta = R"({
  "vertices": [
    { "id": 0, "kind": "split", "pos": [0, 2] },
    { "id": 1, "kind": "merge", "pos": [0, 0] }
  ],
  "edges": [
    { "id": 0, "tail": [1, "m"], "head": [0, "m"], "waypoints": [] },
    { "id": 1, "tail": [0, "r"], "head": [1, "r"], "waypoints": [[-1, 3], [-3, 1], [-1, -1]] },
    { "id": 2, "tail": [0, "l"], "head": [1, "l"], "waypoints": [[-1, 1]] }
  ],
  "circles": []
})";

// Edges 0..5 carry the flows a+b+c, a+b, c, a, b+c, b. Vertices 1,0,3,2
// sit on a square; edge 3 goes round the outside. In both fixtures l and r
// are the left and right branches seen along the flow.
constexpr std::string_view kTetrahedron = R"({
  "vertices": [
    { "id": 0, "kind": "split", "pos": [2, 0] },
    { "id": 1, "kind": "merge", "pos": [0, 0] },
    { "id": 2, "kind": "merge", "pos": [0, 2] },
    { "id": 3, "kind": "split", "pos": [2, 2] }
  ],
  "edges": [
    { "id": 0, "tail": [1, "m"], "head": [0, "m"], "waypoints": [] },
    { "id": 1, "tail": [0, "r"], "head": [3, "m"], "waypoints": [] },
    { "id": 2, "tail": [0, "l"], "head": [2, "l"], "waypoints": [] },
    { "id": 3, "tail": [3, "r"], "head": [1, "r"], "waypoints": [[3, 3], [3, -1], [-1, -1]] },
    { "id": 4, "tail": [2, "m"], "head": [1, "l"], "waypoints": [] },
    { "id": 5, "tail": [3, "l"], "head": [2, "r"], "waypoints": [] }
  ],
  "circles": []
})";

}  // namespace

std::vector<std::string> builtin_names() { return {"unknot", "theta", "tetrahedron"}; }

std::string builtin_text(std::string_view name) {
  if (name == "unknot") return std::string(kUnknot) + "\n";
  if (name == "theta") return std::string(kTheta) + "\n";
  if (name == "tetrahedron") return std::string(kTetrahedron) + "\n";
  throw std::invalid_argument("unknown builtin diagram '" + std::string(name) + "'");
}

PlanarDiagram builtin(std::string_view name) { return parse_diagram(builtin_text(name)); }

}  // namespace moy
