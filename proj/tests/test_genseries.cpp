#include "doctest.h"
#include "moy/genseries.hpp"

using namespace moy;

namespace {

QLaurent gauss(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return 1;
  return gauss(n - 1, k - 1).shifted(2 * (n - k)) + gauss(n - 1, k).shifted(-2 * k);
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("classical series of theta counts ordered cycle choices") {
  const PlanarDiagram d = builtin("theta");
  for (int n = 0; n <= 4; ++n) {
    const ClassicalPolynomial p = classical_series(d, n);
    Integer sum = 0;
    for (const auto& [g, c] : p) {
      const int a = static_cast<int>(g.edges.at(2)), b = static_cast<int>(g.edges.at(1));
      CHECK(c == factorial(n) / (factorial(a) * factorial(b) * factorial(n - a - b)));
      sum += c;
    }
    Integer pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    CHECK(sum == pow3);
  }
}

TEST_CASE("cycle polynomial coefficients carry rot") {
  const DiagramAlgebras alg(builtin("theta"));
  const CyclePolynomial p = cycle_polynomial(alg);
  CHECK(p.terms().size() == 3);
  CHECK(p.coeff(alg.x.variable(1)) == QALaurent::monomial(2, -2));
  CHECK(cycle_polynomial_inverted_a(alg).coeff(alg.x.variable(2)) == QALaurent::monomial(2, 2));
  CHECK(p.coeff(alg.x.variable(0)) == QALaurent(1));
}

TEST_CASE("twisting composes additively") {
  const DiagramAlgebras alg(builtin("tetrahedron"));
  const CyclePolynomial p = cycle_polynomial(alg);
  CHECK(twist(alg, twist(alg, p, 2), 3) == twist(alg, p, 5));
  CHECK(twist(alg, p, 0) == p);
}

TEST_CASE("Pochhammer products of theta give q-trinomials") {
  const PlanarDiagram d = builtin("theta");
  for (int n = 1; n <= 4; ++n) {
    const EvalTable t = generating_series_n(d, n);
    int count = 0;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        Coloring g;
        g.edges = {{0, static_cast<std::uint64_t>(a + b)}, {1, static_cast<std::uint64_t>(b)},
                   {2, static_cast<std::uint64_t>(a)}};
        REQUIRE(t.count(g));
        CHECK(t.at(g) == gauss(n, a + b) * gauss(a + b, a));
        ++count;
      }
    CHECK(t.size() == static_cast<std::size_t>(count));
  }
}

TEST_CASE("a = q^N substitution on the cycle polynomial") {
  const DiagramAlgebras alg(builtin("unknot"));
  const auto p = substitute_a(cycle_polynomial(alg), 3);
  CHECK(p.coeff(alg.x.variable(1)) == QLaurent::monomial(2 - 6));
}
