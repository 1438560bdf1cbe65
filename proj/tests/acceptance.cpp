// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moy/checks.hpp"
#include "moy/genseries.hpp"
#include "moy/homfly.hpp"
#include "moy/statesum.hpp"

using namespace moy;

namespace {

const std::vector<std::string> kFixtures = {"unknot", "theta", "tetrahedron"};

QLaurent gauss(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return 1;
  return gauss(n - 1, k - 1).shifted(2 * (n - k)) + gauss(n - 1, k).shifted(-2 * k);
}

std::vector<long long> partitions(int n, int kmax) {
  std::vector<long long> p(kmax + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= kmax; ++k) p[k] += p[k - part];
  return p;
}

// x^d coefficient of (-q^{1/2} a^{-1/2} x, q)_inf / (-q^{1/2} a^{1/2} x, q)_inf through v^q.
std::map<std::pair<int, int>, Integer> unknot_closed_form(int d, int q) {
  std::map<std::pair<int, int>, Integer> out;
  for (int n = 0; n <= d; ++n) {
    const int m = d - n;
    const auto pn = partitions(n, q / 4 + 1), pm = partitions(m, q / 4 + 1);
    for (std::size_t i = 0; i < pn.size(); ++i)
      for (std::size_t j = 0; j < pm.size(); ++j) {
        const int v = 2 * n * n + 2 * m + 4 * static_cast<int>(i + j);
        if (v <= q) out[{2 * m - 2 * n, v}] += Integer(m % 2 ? -1 : 1) * pn[i] * pm[j];
      }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Coloring tetrahedron_coloring(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  Coloring g;
  g.edges = {{0, a + b + c}, {1, a + b}, {2, c}, {3, a}, {4, b + c}, {5, b}};
  return g;
}

std::string first_failure(const SuiteReport& r) {
  for (const CheckLine& l : r.lines)
    if (!l.ok) return r.suite + " " + l.name + ": " + l.detail;
  return {};
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (problem.empty() && limit_s > 0 && secs > limit_s) problem = "took longer than " + std::to_string(limit_s) + " s";
  const bool ok = problem.empty();
  if (!ok) ++failures;
  std::printf("%s %2d  %s  (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs, ok ? "" : "  ",
              problem.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "unknot evaluations are q-binomials, N = 1..6", 1.0, []() -> std::string {
    const PlanarDiagram d = builtin("unknot");
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) {
        Coloring g;
        g.circles = {{0, static_cast<std::uint64_t>(k)}};
        const QLaurent p = moy_eval(d, g, n);
        if (p != qbinom(n, k) || p != gauss(n, k))
          return "N=" + std::to_string(n) + " gamma=" + std::to_string(k) + ": " + to_string(p);
      }
    return std::string();
  });

  criterion(2, "tetrahedron evaluations are q-multinomials, N = 1..4", 30.0, []() -> std::string {
    const PlanarDiagram d = builtin("tetrahedron");
    for (int n = 1; n <= 4; ++n)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
          for (int c = 0; a + b + c <= n; ++c) {
            const QLaurent p = moy_eval(d, tetrahedron_coloring(a, b, c), n);
            const QLaurent oracle = gauss(n, a + b + c) * gauss(a + b + c, a) * gauss(b + c, b);
            if (p != qmultinom(n, {a, b, c}) || p != oracle)
              return "N=" + std::to_string(n) + " (" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + "): " + to_string(p);
          }
    return std::string();
  });

  criterion(3, "classical series equals classical evaluations, N = 0..5", 10.0, []() -> std::string {
    for (const std::string& name : kFixtures)
      for (int n = 0; n <= 5; ++n) {
        const SuiteReport r = check_classical_series(builtin(name), n);
        if (!r.ok()) return name + " N=" + std::to_string(n) + " " + first_failure(r);
      }
    return std::string();
  });

  criterion(4, "Pochhammer series equals state-sum table, N = 1..4", 60.0, []() -> std::string {
    for (const std::string& name : kFixtures)
      for (int n = 1; n <= 4; ++n) {
        const PlanarDiagram d = builtin(name);
        const SuiteReport r = check_pochhammer_series(d, n);
        if (!r.ok()) return name + " N=" + std::to_string(n) + " " + first_failure(r);
        const EvalTable series = generating_series_n(d, n);
        const ClassicalPolynomial classical = classical_series(d, n);
        if (series.size() != classical.size()) return name + ": v = 1 changes the coloring set";
        for (const auto& [g, p] : series)
          if (!classical.count(g) || classical.at(g) != p.at_one())
            return name + " N=" + std::to_string(n) + ": v = 1 disagrees at " + format_coloring(g);
      }
    return std::string();
  });

  criterion(5, "both weight formulas agree, N = 1..3", 0, []() -> std::string {
    for (const std::string& name : kFixtures)
      for (int n = 1; n <= 3; ++n) {
        const SuiteReport r = check_weights(builtin(name), n);
        if (!r.ok()) return name + " N=" + std::to_string(n) + " " + first_failure(r);
      }
    return std::string();
  });

  criterion(6, "mu respects the intersection pairing; negated signs are rejected", 0, []() -> std::string {
    for (const std::string& name : kFixtures) {
      const SuiteReport r = check_mu(builtin(name));
      if (!r.ok()) return name + " " + first_failure(r);
    }
    const PlanarDiagram d = builtin("tetrahedron");
    const CycleSet cs = all_cycles(d);
    // Single-component cycles named by the edge only they contain.
    auto by_edge = [&](int e) {
      for (std::size_t i = 1; i < cs.size(); ++i)
        if (cs[i].contains_edge(e) && cs[i].components.size() == 1) {
          bool unique = true;
          for (std::size_t j = 1; j < cs.size(); ++j)
            if (j != i && cs[j].contains_edge(e)) unique = false;
          if (unique) return i;
        }
      throw std::logic_error("no cycle through edge " + std::to_string(e));
    };
    const std::size_t r = by_edge(5), g = by_edge(3), b = by_edge(2);
    auto pair = [&](std::size_t i, std::size_t j) { return intersection_pairing_halves(cs[i], cs[j]) / 2; };
    const int rg = pair(r, g), rb = pair(r, b), gb = pair(g, b);
    std::printf("     tetrahedron: <C_r,C_g> = %+d, <C_r,C_b> = %+d, <C_g,C_b> = %+d\n", rg, rb, gb);
    std::vector<std::vector<int>> negated(cs.size(), std::vector<int>(cs.size()));
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) negated[i][j] = -intersection_pairing_halves(cs[i], cs[j]);
    std::printf("     with (%+d, %+d, %+d) substituted the check ", -rg, -rb, -gb);
    const SuiteReport bad = check_mu(d, negated);
    std::printf("%s\n", bad.ok() ? "still passes" : "fails, as it must");
    if (bad.ok()) return std::string("negated pairing was accepted");
    return std::string();
  });

  criterion(7, "F mu(inverted side) = mu(a side); unknot matches the closed form", 30.0, []() -> std::string {
    const DiagramAlgebras unknot(builtin("unknot"));
    const DiagramAlgebras theta(builtin("theta"));
    const ResidualReport u = check_fphi(unknot, 4, 12);
    if (!u.ok) return "unknot residual nonzero";
    const ResidualReport t = check_fphi(theta, 3, 8);
    if (!t.ok) return "theta residual nonzero";
    const HomflySeries f = homfly_series(unknot, 4, 12);
    for (int d = 0; d <= 4; ++d) {
      Coloring g;
      g.circles = {{0, static_cast<std::uint64_t>(d)}};
      std::map<std::pair<int, int>, Integer> got;
      if (f.table.count(g)) got = {f.table.at(g).terms().begin(), f.table.at(g).terms().end()};
      if (got != unknot_closed_form(d, 12)) return "unknot x^" + std::to_string(d) + " differs from the closed form";
    }
    return std::string();
  });

  criterion(8, "a -> q^2 a shift identity and both Pochhammer steps", 30.0, []() -> std::string {
    for (const std::string& name : {"unknot", "theta"}) {
      const ShiftReport s = check_shift(DiagramAlgebras(builtin(name)), 3, 8);
      for (const ResidualReport* r : {&s.square3, &s.square4, &s.shift})
        if (!r->ok) return name + ": " + r->name + " residual nonzero";
    }
    return std::string();
  });

  criterion(9, "a = q^N specialization matches the state sum, N = 1..3", 0, []() -> std::string {
    const std::vector<std::pair<std::string, int>> runs = {{"unknot", 20}, {"theta", 24}};
    for (const auto& [name, q] : runs) {
      const DiagramAlgebras alg(builtin(name));
      const HomflySeries f = homfly_series(alg, 3, q);
      for (int n = 1; n <= 3; ++n) {
        const SpecializationReport r = check_specialization(alg, f, n);
        if (!r.ok()) return name + " N=" + std::to_string(n) + ": " + r.message();
        if (r.entries.empty()) return name + ": nothing compared";
      }
    }
    return std::string();
  });

  criterion(10, "evaluations are nonnegative, symmetric, in half powers; state counts", 0, []() -> std::string {
    for (const std::string& name : kFixtures) {
      const PlanarDiagram d = builtin(name);
      for (int n = 0; n <= 5; ++n) {
        const SuiteReport count = check_state_count(d, n);
        if (!count.ok()) return name + " " + first_failure(count);
        if (n == 0) continue;
        for (const auto& [g, p] : eval_table(d, n))
          if (!is_nonnegative(p) || !in_half_powers(p) || !is_symmetric(p))
            return name + " N=" + std::to_string(n) + " " + format_coloring(g) + ": " + to_string(p);
      }
    }
    return std::string();
  });

  return failures == 0 ? 0 : 1;
}
