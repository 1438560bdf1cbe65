#include "moy/checks.hpp"

#include <algorithm>

#include "moy/genseries.hpp"
#include "moy/homfly.hpp"
#include "moy/statesum.hpp"

namespace moy {

bool SuiteReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  lines.push_back({std::move(name), ok, std::move(detail)});
}

namespace {

std::string label(const Coloring& c) {
  const std::string s = format_coloring(c);
  return s.empty() ? "(empty)" : s;
}

}  // namespace

SuiteReport check_classical_series(const PlanarDiagram& d, int n) {
  SuiteReport rep{"thm1", {}};
  const ClassicalPolynomial series = classical_series(d, n);
  if (n == 0) {
    const bool ok = series.size() == 1 && series.begin()->first == zero_coloring(d) && series.begin()->second == 1;
    rep.add("N=0: empty product is 1", ok);
    return rep;
  }
  std::map<Coloring, bool> keys;
  for (const auto& [g, c] : series) keys[g] = true;
  for (const auto& [g, p] : eval_table(d, n)) keys[g] = true;
  for (const auto& [g, unused] : keys) {
    const Integer expected = classical_eval(d, g, n);
    auto it = series.find(g);
    const Integer got = it == series.end() ? Integer(0) : it->second;
    rep.add(label(g), got == expected, "series " + got.str() + ", evaluation " + expected.str());
  }
  return rep;
}

SuiteReport check_pochhammer_series(const PlanarDiagram& d, int n) {
  SuiteReport rep{"thm2", {}};
  const EvalTable series = generating_series_n(d, n);
  const EvalTable table = eval_table(d, n);
  std::map<Coloring, bool> keys;
  for (const auto& [g, p] : series) keys[g] = true;
  for (const auto& [g, p] : table) keys[g] = true;
  for (const auto& [g, unused] : keys) {
    const QLaurent a = series.count(g) ? series.at(g) : QLaurent();
    const QLaurent b = table.count(g) ? table.at(g) : QLaurent();
    rep.add(label(g), a == b, "series " + to_string(a) + ", state sum " + to_string(b));
  }
  return rep;
}

SuiteReport check_weights(const PlanarDiagram& d, int n) {
  SuiteReport rep{"weights", {}};
  for (const auto& [g, p] : eval_table(d, n)) {
    const QLaurent a = moy_eval(d, g, n);
    const QLaurent b = moy_eval_alt(d, g, n);
    const bool shape = is_nonnegative(a) && in_half_powers(a) && is_symmetric(a);
    rep.add(label(g), a == b && a == p && shape, to_string(a));
  }
  return rep;
}

SuiteReport check_mu(const PlanarDiagram& d, const std::optional<std::vector<std::vector<int>>>& pairing) {
  SuiteReport rep{"mu", {}};
  const CycleSet cycles = all_cycles(d);
  const CycleAlgebra x = pairing ? cycle_algebra(cycles, *pairing) : cycle_algebra(cycles);
  const DiagramAlgebras alg(d, cycles, x);
  using FlagEl = TorusElement<QLaurent>;
  using X = TorusElement<QLaurent>;
  for (std::size_t i = 1; i < cycles.size(); ++i) {
    const FlagEl mi = alg.mu(X::monomial(x.sig, x.variable(i), 1));
    for (std::size_t j = 1; j < cycles.size(); ++j) {
      const FlagEl mj = alg.mu(X::monomial(x.sig, x.variable(j), 1));
      const int halves = x.pairing_halves[i][j];
      const FlagEl lhs = mi * mj;
      FlagEl rhs(alg.flags.sig);
      const FlagEl swapped = mj * mi;
      for (const auto& [e, c] : swapped.terms()) rhs.add_term(e, c.shifted(2 * halves));
      const X xij = X::monomial(x.sig, x.variable(i), 1) * X::monomial(x.sig, x.variable(j), 1);
      const bool commute = lhs == rhs;
      const bool multiplicative = alg.mu(xij) == lhs;
      rep.add("C" + std::to_string(i) + ",C" + std::to_string(j), commute && multiplicative,
              "<C,C'> = " + std::to_string(halves) + "/2" + (commute ? "" : ", commutation mismatch") +
                  (multiplicative ? "" : ", mu not multiplicative"));
    }
  }
  return rep;
}

SuiteReport check_homfly_identities(const PlanarDiagram& d, int max_degree, int q_order, int n) {
  SuiteReport rep{"thm3", {}};
  const DiagramAlgebras alg(d);
  const ResidualReport fphi = check_fphi(alg, max_degree, q_order);
  rep.add(fphi.name, fphi.ok, "exact to v^" + std::to_string(fphi.exact_to));
  const ShiftReport shift = check_shift(alg, max_degree, q_order);
  for (const ResidualReport* r : {&shift.square3, &shift.square4, &shift.shift})
    rep.add(r->name, r->ok, "exact to v^" + std::to_string(r->exact_to));
  const HomflySeries f = homfly_series(alg, max_degree, q_order);
  for (int k = 1; k <= n; ++k) {
    const SpecializationReport s = check_specialization(alg, f, k);
    rep.add("a = q^" + std::to_string(k) + " against the state sum", s.ok(), s.message());
  }
  return rep;
}

SuiteReport check_state_count(const PlanarDiagram& d, int n) {
  SuiteReport rep{"states", {}};
  const CycleSet cycles = all_cycles(d);
  Integer total = 0;
  if (n == 0) {
    total = 1;
  } else {
    for (const auto& [g, p] : eval_table(d, n)) total += classical_eval(d, g, n);
  }
  Integer expected = 1;
  for (int k = 0; k < n; ++k) expected *= static_cast<unsigned>(cycles.size());
  rep.add("sum of classical evaluations", total == expected, total.str() + " vs |C|^N = " + expected.str());
  return rep;
}

}  // namespace moy
