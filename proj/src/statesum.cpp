#include "moy/statesum.hpp"

#include <algorithm>
#include <stdexcept>

namespace moy {

std::vector<int> label_set(int n) {
  if (n < 0) throw std::invalid_argument("N must be nonnegative");
  std::vector<int> labels;
  for (int i = 0; i < n; ++i) labels.push_back(2 * i - (n - 1));
  return labels;
}

Coloring state_flow(const PlanarDiagram& d, const CycleSet& cycles, const State& s) {
  Coloring c = zero_coloring(d);
  for (std::size_t ci : s.cycle_of_label) {
    for (int e : cycles[ci].edges) ++c.edges[e];
    for (int k : cycles[ci].circles) ++c.circles[k];
  }
  return c;
}

int state_rot_doubled(const CycleSet& cycles, const State& s) {
  const std::vector<int> labels = label_set(s.n());
  int rot = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) rot += labels[i] * cycles[s.cycle_of_label[i]].rot;
  return rot;
}

int weight_exponent(const std::vector<int>& left, const std::vector<int>& right) {
  int l = 0;
  int r = 0;
  for (int a : left) {
    for (int b : right) {
      if (a > b) ++l;
      if (a < b) ++r;
    }
  }
  return r - l;
}

int weight_exponent_alt(const std::vector<int>& left, const std::vector<int>& right) {
  int l = 0;
  for (int a : left)
    for (int b : right)
      if (a > b) ++l;
  return static_cast<int>(left.size() * right.size()) - 2 * l;
}

namespace {

void flag_labels(int vertex_id, const CycleSet& cycles, const State& s, std::vector<int>& left,
                 std::vector<int>& right) {
  const std::vector<int> labels = label_set(s.n());
  left.clear();
  right.clear();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Cycle& c = cycles[s.cycle_of_label[i]];
    if (c.contains({vertex_id, FlagPos::l})) left.push_back(labels[i]);
    if (c.contains({vertex_id, FlagPos::r})) right.push_back(labels[i]);
  }
}

template <class Weight>
int exponent_with(const PlanarDiagram& d, const CycleSet& cycles, const State& s, Weight weight) {
  int e = 2 * state_rot_doubled(cycles, s);
  std::vector<int> left;
  std::vector<int> right;
  for (const Vertex& v : d.vertices()) {
    flag_labels(v.id, cycles, s, left, right);
    e += weight(left, right);
  }
  return e;
}

void require_flow(const PlanarDiagram& d, const Coloring& gamma, int n) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  const ColoringCheck check = validate_coloring(d, gamma);
  if (!check.ok()) throw std::invalid_argument(check.message());
}

// Enumerates only states whose flow is gamma: a label may go to a cycle only
// while every edge of that cycle still has unused flow.
template <class Visit>
void for_each_state_with_flow(const PlanarDiagram& d, const CycleSet& cycles, const Coloring& gamma, int n,
                              Visit visit) {
  const std::size_t ne = d.edges().size();
  std::vector<long long> remaining(ne + d.circles().size());
  for (std::size_t i = 0; i < ne; ++i) remaining[i] = static_cast<long long>(gamma.edges.at(d.edges()[i].id));
  for (std::size_t i = 0; i < d.circles().size(); ++i)
    remaining[ne + i] = static_cast<long long>(gamma.circles.at(d.circles()[i].id));

  std::vector<std::vector<std::size_t>> slots(cycles.size());
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    for (int e : cycles[ci].edges) slots[ci].push_back(d.edge_index(e));
    for (int k : cycles[ci].circles) slots[ci].push_back(ne + d.circle_index(k));
  }

  State s;
  s.cycle_of_label.resize(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int label) -> void {
    const long long left = n - label;
    if (std::any_of(remaining.begin(), remaining.end(), [&](long long r) { return r > left; })) return;
    if (label == n) {
      visit(s);
      return;
    }
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      const auto& sl = slots[ci];
      if (std::any_of(sl.begin(), sl.end(), [&](std::size_t i) { return remaining[i] == 0; })) continue;
      for (std::size_t i : sl) --remaining[i];
      s.cycle_of_label[static_cast<std::size_t>(label)] = ci;
      self(self, label + 1);
      for (std::size_t i : sl) ++remaining[i];
    }
  };
  rec(rec, 0);
}

}  // namespace

QLaurent vertex_weight(int vertex_id, const CycleSet& cycles, const State& s) {
  std::vector<int> left;
  std::vector<int> right;
  flag_labels(vertex_id, cycles, s, left, right);
  return QLaurent::monomial(weight_exponent(left, right));
}

int state_exponent(const PlanarDiagram& d, const CycleSet& cycles, const State& s) {
  return exponent_with(d, cycles, s, weight_exponent);
}

int state_exponent_alt(const PlanarDiagram& d, const CycleSet& cycles, const State& s) {
  return exponent_with(d, cycles, s, weight_exponent_alt);
}

void for_each_state(const CycleSet& cycles, int n, const std::function<void(const State&)>& visit) {
  if (n < 0) throw std::invalid_argument("N must be nonnegative");
  State s;
  s.cycle_of_label.assign(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t label) -> void {
    if (label == s.cycle_of_label.size()) {
      visit(s);
      return;
    }
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      s.cycle_of_label[label] = ci;
      self(self, label + 1);
    }
  };
  rec(rec, 0);
}

QLaurent moy_eval(const PlanarDiagram& d, const Coloring& gamma, int n) {
  require_flow(d, gamma, n);
  const CycleSet cycles = all_cycles(d);
  QLaurent sum;
  for_each_state_with_flow(d, cycles, gamma, n,
                           [&](const State& s) { sum += QLaurent::monomial(state_exponent(d, cycles, s)); });
  return sum;
}

QLaurent moy_eval_alt(const PlanarDiagram& d, const Coloring& gamma, int n) {
  require_flow(d, gamma, n);
  const CycleSet cycles = all_cycles(d);
  QLaurent sum;
  for_each_state_with_flow(d, cycles, gamma, n,
                           [&](const State& s) { sum += QLaurent::monomial(state_exponent_alt(d, cycles, s)); });
  return sum;
}

Integer classical_eval(const PlanarDiagram& d, const Coloring& gamma, int n) {
  require_flow(d, gamma, n);
  const CycleSet cycles = all_cycles(d);
  Integer count = 0;
  for_each_state_with_flow(d, cycles, gamma, n, [&](const State&) { ++count; });
  return count;
}

EvalTable eval_table(const PlanarDiagram& d, int n) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  const CycleSet cycles = all_cycles(d);
  std::map<Coloring, std::map<int, Integer>> grouped;
  for_each_state(cycles, n, [&](const State& s) { ++grouped[state_flow(d, cycles, s)][state_exponent(d, cycles, s)]; });
  EvalTable table;
  for (const auto& [gamma, terms] : grouped) {
    QLaurent p;
    for (const auto& [e, c] : terms) p += QLaurent::monomial(e, c);
    if (!p.is_zero()) table.emplace(gamma, std::move(p));
  }
  return table;
}

}  // namespace moy
