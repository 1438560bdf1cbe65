#include "moy/genseries.hpp"

#include <stdexcept>

namespace moy {

DiagramAlgebras::DiagramAlgebras(PlanarDiagram d)
    : DiagramAlgebras(d, all_cycles(d), cycle_algebra(all_cycles(d))) {}

DiagramAlgebras::DiagramAlgebras(PlanarDiagram d, CycleSet cs, CycleAlgebra xa)
    : diagram(std::move(d)),
      cycles(std::move(cs)),
      x(std::move(xa)),
      flags(flag_algebra(diagram)),
      mu(diagram, cycles, flags, x) {}

long long DiagramAlgebras::twist_exponent(const Exponents& e, int k) const {
  long long rot = 0;
  for (std::size_t i = 0; i < e.size(); ++i) rot += static_cast<long long>(e[i]) * cycles[i + 1].rot;
  return 4LL * k * rot;
}

Coloring operator+(const Coloring& a, const Coloring& b) {
  Coloring c = a;
  for (const auto& [id, v] : b.edges) c.edges[id] += v;
  for (const auto& [id, v] : b.circles) c.circles[id] += v;
  return c;
}

ClassicalPolynomial classical_cycle_polynomial(const PlanarDiagram& d) {
  ClassicalPolynomial p;
  for (const Cycle& c : all_cycles(d).cycles) p[zero_coloring(d) + c.flow(d)] += 1;
  return p;
}

ClassicalPolynomial classical_series(const PlanarDiagram& d, int n) {
  if (n < 0) throw std::invalid_argument("N must be nonnegative");
  const ClassicalPolynomial p = classical_cycle_polynomial(d);
  ClassicalPolynomial r{{zero_coloring(d), 1}};
  for (int k = 0; k < n; ++k) {
    ClassicalPolynomial next;
    for (const auto& [ga, ca] : r)
      for (const auto& [gb, cb] : p) next[ga + gb] += ca * cb;
    r = std::move(next);
  }
  return r;
}

namespace {

CyclePolynomial cycle_polynomial_with(const DiagramAlgebras& alg, int b_sign) {
  CyclePolynomial p(alg.x.sig);
  for (std::size_t i = 0; i < alg.cycles.size(); ++i) {
    const int rot = alg.cycles[i].rot;
    p.add_term(alg.x.variable(i), QALaurent::monomial(2 * rot, -2 * b_sign * rot));
  }
  return p;
}

}  // namespace

CyclePolynomial cycle_polynomial(const DiagramAlgebras& alg) { return cycle_polynomial_with(alg, 1); }
CyclePolynomial cycle_polynomial_inverted_a(const DiagramAlgebras& alg) { return cycle_polynomial_with(alg, -1); }

TorusElement<QLaurent> substitute_a(const CyclePolynomial& p, int n) {
  return p.map_coefficients([n](const Exponents&, const QALaurent& c) { return c.substitute_a(n); });
}

EvalTable generating_series_n(const DiagramAlgebras& alg, int n) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  const auto p = substitute_a(cycle_polynomial(alg), n);
  return flag_table(alg, alg.mu(pochhammer_n(alg, p, n, QLaurent(1))));
}

EvalTable generating_series_n(const PlanarDiagram& d, int n) { return generating_series_n(DiagramAlgebras(d), n); }

}  // namespace moy
