#include <map>
#include <utility>

#include "doctest.h"
#include "moy/homfly.hpp"

using namespace moy;

namespace {

// (b, v) exponent pair -> coefficient
using Series = std::map<std::pair<int, int>, long long>;

// Partitions of k into parts <= n, for k <= kmax: the q-expansion of 1/(q;q)_n.
std::vector<long long> partitions(int n, int kmax) {
  std::vector<long long> p(kmax + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= kmax; ++k) p[k] += p[k - part];
  return p;
}

// Coefficient of x^d in
//   sum_n q^{n^2/2} a^{-n/2} x^n / (q;q)_n * sum_m (-1)^m q^{m/2} a^{m/2} x^m / (q;q)_m
// through v^q_order, v = q^{1/4}, b = a^{1/4}.
Series unknot_closed_form(int d, int q_order) {
  Series out;
  for (int n = 0; n <= d; ++n) {
    const int m = d - n;
    const auto pn = partitions(n, q_order / 4 + 1);
    const auto pm = partitions(m, q_order / 4 + 1);
    const int v0 = 2 * n * n + 2 * m;
    const int b = -2 * n + 2 * m;
    const long long sign = m % 2 ? -1 : 1;
    for (std::size_t i = 0; i < pn.size(); ++i)
      for (std::size_t j = 0; j < pm.size(); ++j) {
        const int v = v0 + 4 * static_cast<int>(i + j);
        if (v <= q_order) out[{b, v}] += sign * pn[i] * pm[j];
      }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Series as_series(const TruncatedRSeries& s) {
  Series out;
  for (const auto& [k, c] : s.terms()) out[k] = static_cast<long long>(c);
  return out;
}

Coloring circle(std::uint64_t k) {
  Coloring c;
  c.circles = {{0, k}};
  return c;
}

}  // namespace

TEST_CASE("unknot series equals the closed form") {
  const DiagramAlgebras alg(builtin("unknot"));
  for (int q : {6, 12, 20}) {
    const HomflySeries f = homfly_series(alg, 4, q);
    CHECK(f.exact_to >= q);
    for (int d = 0; d <= 4; ++d) {
      CAPTURE(d);
      CAPTURE(q);
      const auto it = f.table.find(circle(d));
      const Series got = it == f.table.end() ? Series{} : as_series(it->second);
      CHECK(got == unknot_closed_form(d, q));
    }
  }
}

TEST_CASE("raising the q-order only adds higher terms") {
  const DiagramAlgebras alg(builtin("theta"));
  const HomflySeries lo = homfly_series(alg, 3, 8);
  const HomflySeries hi = homfly_series(alg, 3, 16);
  for (const auto& [g, s] : hi.table) {
    const TruncatedRSeries cut = s.retruncated(8);
    const auto it = lo.table.find(g);
    if (it == lo.table.end())
      CHECK(cut.is_zero());
    else
      CHECK(it->second == cut);
  }
}

TEST_CASE("raising the degree bound keeps lower coefficients") {
  const DiagramAlgebras alg(builtin("theta"));
  const HomflySeries d2 = homfly_series(alg, 2, 8);
  const HomflySeries d3 = homfly_series(alg, 3, 8);
  for (const auto& [g, s] : d2.table) CHECK(d3.table.at(g) == s);
}

TEST_CASE("series inversion") {
  const DiagramAlgebras alg(builtin("theta"));
  const TruncatedTorusSeries a = mu_series(alg, pochhammer_inf(alg, true, 3, 24));
  const TruncatedTorusSeries inv = series_invert(a);
  const TruncatedTorusSeries one = TruncatedTorusSeries::one(a.signature(), 3, 24, a.skew_bound());
  CHECK((a * inv - one).vanishes_to(8));
  CHECK((inv * a - one).vanishes_to(8));
  CHECK_FALSE((a - one).vanishes_to(8));
}

TEST_CASE("flow degree counts circuits") {
  const DiagramAlgebras alg(builtin("theta"));
  Coloring g;
  g.edges = {{0, 3}, {1, 1}, {2, 2}};
  CHECK(flow_degree(alg, g) == 3);
  CHECK(flow_degree(alg, zero_coloring(alg.diagram)) == 0);
}

TEST_CASE("identities on positive fixtures") {
  for (const std::string& name : {"unknot", "theta"}) {
    const DiagramAlgebras alg(builtin(name));
    CHECK(check_fphi(alg, 3, 8).ok);
    CHECK(check_shift(alg, 2, 8).ok());
  }
}

TEST_CASE("non-positive diagrams are refused") {
  const DiagramAlgebras alg(builtin("tetrahedron"));
  CHECK_THROWS_AS(require_positive(alg), std::domain_error);
  CHECK_THROWS_AS(homfly_series(alg, 2, 8), std::domain_error);
}
