#pragma once

// Direct evaluation of <Gamma, gamma>_N(q) as a sum over states.
//
// A state assigns each label j in A_N = {-(N-1)/2, ..., (N-1)/2} to one cycle
// (possibly empty). Labels are stored doubled: j2 = 2j in {-(N-1), ..., N-1}.

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "moy/cycles.hpp"
#include "moy/diagram.hpp"
#include "moy/qexact.hpp"

namespace moy {

/// Doubled labels of A_N, ascending.
std::vector<int> label_set(int n);

struct State {
  /// cycle index (into the CycleSet) of each label, labels ascending
  std::vector<std::size_t> cycle_of_label;

  int n() const { return static_cast<int>(cycle_of_label.size()); }
};

Coloring state_flow(const PlanarDiagram& d, const CycleSet& cycles, const State& s);
/// 2 rot(sigma) = sum over labels of (doubled label) * rot(cycle).
int state_rot_doubled(const CycleSet& cycles, const State& s);

/// R - L for the doubled label sets sigma(v,l), sigma(v,r).
int weight_exponent(const std::vector<int>& left, const std::vector<int>& right);
/// |left||right| - 2L, the second form of the weight.
int weight_exponent_alt(const std::vector<int>& left, const std::vector<int>& right);
/// wt(v; sigma) = v^{R-L}
QLaurent vertex_weight(int vertex_id, const CycleSet& cycles, const State& s);

/// v-exponent of q^{rot(sigma)} prod_v wt(v; sigma).
int state_exponent(const PlanarDiagram& d, const CycleSet& cycles, const State& s);
int state_exponent_alt(const PlanarDiagram& d, const CycleSet& cycles, const State& s);

/// Visits all |C|^N states: labels ascending, cycles in canonical order.
void for_each_state(const CycleSet& cycles, int n, const std::function<void(const State&)>& visit);

/// Throws std::invalid_argument unless gamma is a valid flow on d and N >= 1.
QLaurent moy_eval(const PlanarDiagram& d, const Coloring& gamma, int n);
QLaurent moy_eval_alt(const PlanarDiagram& d, const Coloring& gamma, int n);
Integer classical_eval(const PlanarDiagram& d, const Coloring& gamma, int n);

using EvalTable = std::map<Coloring, QLaurent>;

/// One pass over all states grouped by their flow; only nonzero entries.
EvalTable eval_table(const PlanarDiagram& d, int n);

}  // namespace moy
