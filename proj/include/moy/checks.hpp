#pragma once

// Invariant suites shared by the CLI, the acceptance run and the Python module.

#include <optional>
#include <string>
#include <vector>

#include "moy/diagram.hpp"

namespace moy {

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;

  bool ok() const;
  void add(std::string name, bool ok, std::string detail = {});
};

/// Classical series against per-coloring classical evaluations (N >= 0).
SuiteReport check_classical_series(const PlanarDiagram& d, int n);
/// Generating series against the state-sum table, coloring by coloring.
SuiteReport check_pochhammer_series(const PlanarDiagram& d, int n);
/// Both weight formulas on every coloring with a nonzero evaluation, plus
/// nonnegativity, half powers and symmetry of every value.
SuiteReport check_weights(const PlanarDiagram& d, int n);
/// mu(x_C) mu(x_C') = q^{<C,C'>} mu(x_C') mu(x_C) and multiplicativity of mu
/// for every ordered pair of nonempty cycles. An optional pairing table (half
/// units, indexed by cycle index) replaces the computed one.
SuiteReport check_mu(const PlanarDiagram& d, const std::optional<std::vector<std::vector<int>>>& pairing = {});
/// Both sides of the inversion identity and the shift identity at (D, Q),
/// plus the comparison with the N-evaluations.
SuiteReport check_homfly_identities(const PlanarDiagram& d, int max_degree, int q_order, int n);
/// Sum over colorings of the classical evaluation equals |C|^N.
SuiteReport check_state_count(const PlanarDiagram& d, int n);

}  // namespace moy
