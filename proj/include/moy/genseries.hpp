#pragma once

// Generating series built from the cycle polynomial: the classical product
// (P^class)^N and the quantum Pochhammer product (P, q)_N pushed through mu.

#include <map>

#include "moy/cycles.hpp"
#include "moy/diagram.hpp"
#include "moy/qexact.hpp"
#include "moy/qtorus.hpp"
#include "moy/statesum.hpp"

namespace moy {

/// Everything derived once per diagram: cycles, both torus algebras, mu.
struct DiagramAlgebras {
  PlanarDiagram diagram;
  CycleSet cycles;
  CycleAlgebra x;
  FlagAlgebra flags;
  MuMap mu;

  explicit DiagramAlgebras(PlanarDiagram d);
  DiagramAlgebras(PlanarDiagram d, CycleSet cycles, CycleAlgebra x);

  /// v-exponent of q^{k rot} accumulated by an x-monomial under x_C -> q^{k rot(C)} x_C.
  long long twist_exponent(const Exponents& e, int k) const;
};

/// Commutative polynomial in the edge and circle variables w; a monomial is
/// written as the coloring of its exponents.
using ClassicalPolynomial = std::map<Coloring, Integer>;

Coloring operator+(const Coloring& a, const Coloring& b);

ClassicalPolynomial classical_cycle_polynomial(const PlanarDiagram& d);
ClassicalPolynomial classical_series(const PlanarDiagram& d, int n);

using CyclePolynomial = TorusElement<QALaurent>;

/// sum over cycles of (a^{-1/2} q^{1/2})^{rot(C)} x_C
CyclePolynomial cycle_polynomial(const DiagramAlgebras& alg);
/// The same with a replaced by a^{-1}.
CyclePolynomial cycle_polynomial_inverted_a(const DiagramAlgebras& alg);

/// x_C -> q^{k rot(C)} x_C
template <class Coef>
TorusElement<Coef> twist(const DiagramAlgebras& alg, const TorusElement<Coef>& p, int k) {
  TorusElement<Coef> r(p.signature());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.shifted(static_cast<int>(alg.twist_exponent(e, k))));
  return r;
}

/// prod_{k=0}^{N-1} twist(P, k), k ascending left to right.
template <class Coef>
TorusElement<Coef> pochhammer_n(const DiagramAlgebras& alg, const TorusElement<Coef>& p, int n, const Coef& one) {
  TorusElement<Coef> r = TorusElement<Coef>::monomial(p.signature(), p.signature()->unit(), one);
  for (int k = 0; k < n; ++k) r = r * twist(alg, p, k);
  return r;
}

/// a = q^N applied to every coefficient.
TorusElement<QLaurent> substitute_a(const CyclePolynomial& p, int n);

/// Coefficients of mu((P(q, q^N, x), q)_N), keyed by coloring.
EvalTable generating_series_n(const DiagramAlgebras& alg, int n);
EvalTable generating_series_n(const PlanarDiagram& d, int n);

/// Reads a flag-algebra element as a coloring table; throws std::logic_error
/// if some monomial is not of the form z^gamma Z^gamma.
template <class Coef>
std::map<Coloring, Coef> flag_table(const DiagramAlgebras& alg, const TorusElement<Coef>& f) {
  std::map<Coloring, Coef> out;
  for (const auto& [e, c] : f.terms()) {
    auto gamma = flow_of_monomial(alg.diagram, alg.flags, e);
    if (!gamma) throw std::logic_error("flag monomial " + alg.flags.sig->format(e) + " is not a flow monomial");
    out.emplace(std::move(*gamma), c);
  }
  return out;
}

}  // namespace moy
