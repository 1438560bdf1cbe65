#include "moy/qtorus.hpp"

#include <algorithm>
#include <cstdlib>

namespace moy {

TorusSignature::TorusSignature(std::vector<std::string> names)
    : names_(std::move(names)), matrix_(names_.size() * names_.size(), 0) {}

void TorusSignature::set_pairing(std::size_t i, std::size_t j, int c) {
  if (i >= size() || j >= size()) throw std::out_of_range("pairing index out of range");
  if (i == j) {
    if (c != 0) throw std::invalid_argument("pairing must vanish on the diagonal");
    return;
  }
  matrix_[i * size() + j] = c;
  matrix_[j * size() + i] = -c;
  const std::size_t hi = std::max(i, j);
  const std::size_t lo = std::min(i, j);
  const int c_hi_lo = pairing(hi, lo);
  std::erase_if(skew_, [&](const Skew& s) { return s.hi == hi && s.lo == lo; });
  if (c_hi_lo != 0) skew_.push_back({hi, lo, c_hi_lo});
}

int TorusSignature::max_abs_pairing() const {
  int m = 0;
  for (const Skew& s : skew_) m = std::max(m, std::abs(s.c));
  return m;
}

long long TorusSignature::commutation(const Exponents& a, const Exponents& b) const {
  long long k = 0;
  for (const Skew& s : skew_) k += static_cast<long long>(a[s.hi]) * b[s.lo] * s.c;
  return k;
}

std::string TorusSignature::format(const Exponents& e) const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += names_[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Slot of each variable inside the block of six belonging to one vertex.
constexpr std::size_t z_slot(FlagPos p) { return static_cast<std::size_t>(p); }
constexpr std::size_t Z_slot(FlagPos p) { return 5 - static_cast<std::size_t>(p); }

}  // namespace

std::size_t FlagAlgebra::z(std::size_t vertex_index, FlagPos p) const { return 6 * vertex_index + z_slot(p); }
std::size_t FlagAlgebra::Z(std::size_t vertex_index, FlagPos p) const { return 6 * vertex_index + Z_slot(p); }
std::size_t FlagAlgebra::circle_z(std::size_t circle_index) const {
  return 6 * vertex_ids.size() + 2 * circle_index;
}
std::size_t FlagAlgebra::circle_Z(std::size_t circle_index) const { return circle_z(circle_index) + 1; }

FlagAlgebra flag_algebra(const PlanarDiagram& d) {
  FlagAlgebra fa;
  std::vector<std::string> names;
  for (const Vertex& v : d.vertices()) {
    fa.vertex_ids.push_back(v.id);
    const std::string id = std::to_string(v.id);
    for (FlagPos p : {FlagPos::l, FlagPos::m, FlagPos::r})
      names.push_back("z_{" + id + "," + std::string(to_string(p)) + "}");
    for (FlagPos p : {FlagPos::r, FlagPos::m, FlagPos::l})
      names.push_back("Z_{" + id + "," + std::string(to_string(p)) + "}");
  }
  for (const Circle& c : d.circles()) {
    fa.circle_ids.push_back(c.id);
    names.push_back("z_{c" + std::to_string(c.id) + "}");
    names.push_back("Z_{c" + std::to_string(c.id) + "}");
  }
  auto sig = std::make_shared<TorusSignature>(std::move(names));
  for (std::size_t i = 0; i < fa.vertex_ids.size(); ++i) {
    // z_{v,r} z_{v,l} = q^{-1/4} z_{v,l} z_{v,r}, and the same for Z.
    sig->set_pairing(fa.z(i, FlagPos::r), fa.z(i, FlagPos::l), -1);
    sig->set_pairing(fa.Z(i, FlagPos::r), fa.Z(i, FlagPos::l), -1);
  }
  fa.sig = std::move(sig);
  return fa;
}

Exponents CycleAlgebra::variable(std::size_t cycle_index) const {
  Exponents e = sig->unit();
  if (cycle_index > 0) e.at(cycle_index - 1) = 1;
  return e;
}

CycleAlgebra cycle_algebra(const CycleSet& cycles, std::vector<std::vector<int>> pairing_halves) {
  const std::size_t n = cycles.size();
  if (pairing_halves.size() != n) throw std::invalid_argument("pairing table does not match the cycle set");
  std::vector<std::string> names;
  for (std::size_t i = 1; i < n; ++i) names.push_back("x_{C" + std::to_string(i) + "}");
  auto sig = std::make_shared<TorusSignature>(std::move(names));
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pairing_halves[i][j] != -pairing_halves[j][i])
        throw std::invalid_argument("pairing table is not antisymmetric");
      sig->set_pairing(i - 1, j - 1, 2 * pairing_halves[i][j]);
    }
  }
  return CycleAlgebra{std::move(sig), std::move(pairing_halves)};
}

CycleAlgebra cycle_algebra(const CycleSet& cycles) {
  const std::size_t n = cycles.size();
  std::vector<std::vector<int>> halves(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) halves[i][j] = intersection_pairing_halves(cycles[i], cycles[j]);
  return cycle_algebra(cycles, std::move(halves));
}

Exponents mu_exponents(const PlanarDiagram& d, const FlagAlgebra& fa, const Cycle& c) {
  Exponents e = fa.sig->unit();
  for (const Flag& f : c.halfedges) {
    const std::size_t vi = d.vertex_index(f.vertex);
    ++e[fa.z(vi, f.pos)];
    ++e[fa.Z(vi, f.pos)];
  }
  for (int id : c.circles) {
    const std::size_t ci = d.circle_index(id);
    ++e[fa.circle_z(ci)];
    ++e[fa.circle_Z(ci)];
  }
  return e;
}

MuMap::MuMap(const PlanarDiagram& d, const CycleSet& cycles, const FlagAlgebra& fa, const CycleAlgebra& ca)
    : fa_(fa) {
  if (ca.sig->size() + 1 != cycles.size()) throw std::invalid_argument("cycle algebra does not match the cycle set");
  for (std::size_t i = 1; i < cycles.size(); ++i) images_.push_back(mu_exponents(d, fa, cycles[i]));
}

MuMap::Image MuMap::image(const Exponents& x) const {
  Image im{fa_.sig->unit(), 0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::uint32_t k = 0; k < x[i]; ++k) {
      im.shift += fa_.sig->commutation(im.flags, images_[i]);
      for (std::size_t j = 0; j < im.flags.size(); ++j) im.flags[j] += images_[i][j];
    }
  }
  return im;
}

std::optional<Coloring> flow_of_monomial(const PlanarDiagram& d, const FlagAlgebra& fa, const Exponents& e) {
  if (e.size() != fa.sig->size()) return std::nullopt;
  Coloring c;
  for (const Edge& edge : d.edges()) {
    const std::size_t t = d.vertex_index(edge.tail.vertex);
    const std::size_t h = d.vertex_index(edge.head.vertex);
    const std::uint32_t value = e[fa.z(t, edge.tail.pos)];
    if (e[fa.Z(t, edge.tail.pos)] != value || e[fa.z(h, edge.head.pos)] != value ||
        e[fa.Z(h, edge.head.pos)] != value)
      return std::nullopt;
    c.edges[edge.id] = value;
  }
  for (std::size_t i = 0; i < fa.circle_ids.size(); ++i) {
    const std::uint32_t value = e[fa.circle_z(i)];
    if (e[fa.circle_Z(i)] != value) return std::nullopt;
    c.circles[fa.circle_ids[i]] = value;
  }
  return c;
}

Exponents monomial_of_flow(const PlanarDiagram& d, const FlagAlgebra& fa, const Coloring& c) {
  Exponents e = fa.sig->unit();
  for (const Edge& edge : d.edges()) {
    auto it = c.edges.find(edge.id);
    const auto value = static_cast<std::uint32_t>(it == c.edges.end() ? 0 : it->second);
    for (const Flag& f : {edge.tail, edge.head}) {
      const std::size_t vi = d.vertex_index(f.vertex);
      e[fa.z(vi, f.pos)] = value;
      e[fa.Z(vi, f.pos)] = value;
    }
  }
  for (std::size_t i = 0; i < fa.circle_ids.size(); ++i) {
    auto it = c.circles.find(fa.circle_ids[i]);
    const auto value = static_cast<std::uint32_t>(it == c.circles.end() ? 0 : it->second);
    e[fa.circle_z(i)] = value;
    e[fa.circle_Z(i)] = value;
  }
  return e;
}

}  // namespace moy
