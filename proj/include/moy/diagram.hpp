#pragma once

// MOY graphs with a plane embedding: trivalent merge/split vertices with
// declared l/m/r flags, polyline edges, and vertexless oriented circles.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moy {

enum class FlagPos : std::uint8_t { l = 0, m = 1, r = 2 };

struct Flag {
  int vertex = 0;
  FlagPos pos = FlagPos::m;
  auto operator<=>(const Flag&) const = default;
};

enum class VertexKind : std::uint8_t { merge, split };

struct Point {
  double x = 0;
  double y = 0;
  bool operator==(const Point&) const = default;
};

struct Vertex {
  int id = 0;
  VertexKind kind = VertexKind::merge;
  Point pos;
};

struct Edge {
  int id = 0;
  Flag tail;
  Flag head;
  std::vector<Point> waypoints;
};

enum class Orientation : std::uint8_t { ccw, cw };

struct Circle {
  int id = 0;
  Orientation orientation = Orientation::ccw;
};

/// Raised by parsing and validation. `kind` distinguishes the failure and
/// the message names the offending vertex, edge or circle.
class DiagramError : public std::runtime_error {
 public:
  enum class Kind {
    syntax,
    duplicate_id,
    dangling_endpoint,
    duplicate_flag,
    missing_flag,
    sink,
    source,
    flag_direction,
    crossing,
    degenerate,
  };
  DiagramError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(FlagPos p);
std::string_view to_string(DiagramError::Kind k);

/// A validated MOY graph. Vertices, edges and circles are kept sorted by id;
/// numeric id order is the total order used everywhere downstream.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// Validates every invariant; throws DiagramError.
  PlanarDiagram(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Circle> circles);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Circle>& circles() const { return circles_; }

  const Vertex& vertex(int id) const;
  const Edge& edge(int id) const;
  const Circle& circle(int id) const;
  /// Position of the vertex/edge/circle in the sorted lists.
  std::size_t vertex_index(int id) const;
  std::size_t edge_index(int id) const;
  std::size_t circle_index(int id) const;
  /// Id of the edge ending at this flag.
  int edge_at(const Flag& f) const;

  bool operator==(const PlanarDiagram& o) const;

 private:
  void validate();
  void validate_geometry() const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Circle> circles_;
  std::map<Flag, int> flag_edge_;
};

/// Flow values per edge id and per circle id.
struct Coloring {
  std::map<int, std::uint64_t> edges;
  std::map<int, std::uint64_t> circles;

  std::uint64_t total() const;
  bool is_zero() const;
  auto operator<=>(const Coloring&) const = default;
};

/// All-zero coloring with an entry for every edge and circle of d.
Coloring zero_coloring(const PlanarDiagram& d);

struct ConservationViolation {
  int vertex;
  std::uint64_t incoming;
  std::uint64_t outgoing;
};

struct ColoringCheck {
  std::vector<ConservationViolation> violations;
  /// Edges or circles without a value, or ids the diagram does not have.
  std::vector<std::string> problems;
  bool ok() const { return violations.empty() && problems.empty(); }
  std::string message() const;
};

ColoringCheck validate_coloring(const PlanarDiagram& d, const Coloring& c);

PlanarDiagram parse_diagram(std::string_view text);
std::string serialize_diagram(const PlanarDiagram& d);

/// "unknot", "theta", "tetrahedron"
PlanarDiagram builtin(std::string_view name);
/// The fixture as diagram-file text.
std::string builtin_text(std::string_view name);
std::vector<std::string> builtin_names();

/// Parses "3=1,e4=2,c0=5". A bare id must name exactly one edge or circle;
/// the e/c prefixes disambiguate. Unassigned entries default to zero.
Coloring parse_coloring(const PlanarDiagram& d, std::string_view text);
std::string format_coloring(const Coloring& c);

}  // namespace moy
