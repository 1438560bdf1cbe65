#include "moy/homfly.hpp"

#include <algorithm>
#include <stdexcept>

namespace moy {

namespace {

long long plus(long long a, long long b) {
  if (a >= kExact || b >= kExact) return kExact;
  return a + b;
}

long long quarter_square(int d) { return static_cast<long long>(d / 2) * (d - d / 2); }

}  // namespace

TruncatedTorusSeries::TruncatedTorusSeries(SignaturePtr sig, int max_degree, int q_order, int skew_bound)
    : sig_(std::move(sig)), max_degree_(max_degree), q_order_(q_order), skew_bound_(skew_bound) {
  if (max_degree < 0) throw std::invalid_argument("degree bound must be nonnegative");
}

TruncatedTorusSeries TruncatedTorusSeries::one(SignaturePtr sig, int max_degree, int q_order, int skew_bound) {
  TruncatedTorusSeries s(sig, max_degree, q_order, skew_bound);
  s.add_term(sig->unit(), 0, TruncatedRSeries::one(q_order));
  return s;
}

void TruncatedTorusSeries::add_term(const Exponents& e, int degree, const TruncatedRSeries& c) {
  if (degree > max_degree_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, Term{degree, c});
  if (inserted) return;
  if (it->second.degree != degree) throw std::logic_error("monomial " + sig_->format(e) + " has two degrees");
  it->second.coeff += c;
  if (it->second.coeff.is_zero()) terms_.erase(it);
}

void TruncatedTorusSeries::check(const TruncatedTorusSeries& o) const {
  if (sig_.get() != o.sig_.get() || max_degree_ != o.max_degree_ || q_order_ != o.q_order_ ||
      skew_bound_ != o.skew_bound_)
    throw std::invalid_argument("truncated series with different signatures or bounds");
}

long long TruncatedTorusSeries::min_bound() const {
  const long long d = max_degree_;
  long long m = kExact;
  for (const auto& [e, t] : terms_) {
    long long val = t.coeff.valuation();
    if (!exact()) val = std::min(val, exact_to_ + 1);
    if (t.degree == 0 && unit_constant_) val = 0;
    m = std::min(m, val - static_cast<long long>(skew_bound_) * t.degree * (d - t.degree));
  }
  if (!exact()) m = std::min(m, exact_to_ + 1 - skew_bound_ * quarter_square(max_degree_));
  return m;
}

TruncatedTorusSeries& TruncatedTorusSeries::operator+=(const TruncatedTorusSeries& o) {
  check(o);
  for (const auto& [e, t] : o.terms_) add_term(e, t.degree, t.coeff);
  exact_to_ = std::min(exact_to_, o.exact_to_);
  unit_constant_ = false;
  return *this;
}

TruncatedTorusSeries& TruncatedTorusSeries::operator-=(const TruncatedTorusSeries& o) {
  check(o);
  for (const auto& [e, t] : o.terms_) add_term(e, t.degree, -t.coeff);
  exact_to_ = std::min(exact_to_, o.exact_to_);
  unit_constant_ = false;
  return *this;
}

TruncatedTorusSeries operator*(const TruncatedTorusSeries& a, const TruncatedTorusSeries& b) {
  a.check(b);
  TruncatedTorusSeries r(a.sig_, a.max_degree_, a.q_order_, a.skew_bound_);
  Exponents sum(a.sig_->size());
  for (const auto& [ea, ta] : a.terms_) {
    for (const auto& [eb, tb] : b.terms_) {
      const int degree = ta.degree + tb.degree;
      if (degree > a.max_degree_) continue;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      const auto comm = static_cast<int>(a.sig_->commutation(ea, eb));
      r.add_term(sum, degree, ta.coeff.mul_shift(tb.coeff, comm));
    }
  }
  long long e = a.q_order_;
  e = std::min(e, plus(a.exact_to_, b.min_bound()));
  e = std::min(e, plus(b.exact_to_, a.min_bound()));
  e = std::min(e, plus(plus(a.exact_to_, b.exact_to_), 1 - a.skew_bound_ * quarter_square(a.max_degree_)));
  r.exact_to_ = e;
  r.unit_constant_ = a.unit_constant_ && b.unit_constant_;
  return r;
}

TruncatedTorusSeries TruncatedTorusSeries::scale_a(int p) const {
  TruncatedTorusSeries r(sig_, max_degree_, q_order_, skew_bound_);
  for (const auto& [e, t] : terms_) {
    if (t.coeff.min_b() < -2 * t.degree || t.coeff.max_b() > 2 * t.degree)
      throw std::logic_error("a-degree outside the range allowed by the x-degree");
    r.add_term(e, t.degree, t.coeff.scale_a(p));
  }
  // Unknown terms of degree d carry b-exponents in [-2d, 2d]; the lowest
  // ones move down by 2|p|d.
  r.exact_to_ = exact() ? q_order_ : exact_to_ - 2LL * std::abs(p) * max_degree_;
  r.unit_constant_ = unit_constant_;
  return r;
}

TruncatedTorusSeries TruncatedTorusSeries::retruncated(int q) const {
  TruncatedTorusSeries r(sig_, max_degree_, q, skew_bound_);
  for (const auto& [e, t] : terms_) r.add_term(e, t.degree, t.coeff.retruncated(q));
  r.exact_to_ = std::min<long long>(exact_to_, q);
  r.unit_constant_ = unit_constant_;
  return r;
}

bool TruncatedTorusSeries::vanishes_to(int q) const {
  if (exact_to_ < q) return false;
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return kv.second.coeff.valuation() > q; });
}

TruncatedTorusSeries series_invert(const TruncatedTorusSeries& s) {
  if (!s.unit_constant()) throw std::invalid_argument("series_invert: constant term is not known to be 1");
  // u = s - 1 has no constant term, so sum_{i<=D} (-u)^i is the inverse.
  TruncatedTorusSeries u(s.signature(), s.max_degree(), s.q_order(), s.skew_bound());
  for (const auto& [e, t] : s.terms())
    if (t.degree > 0) u.add_term(e, t.degree, t.coeff);
  u.set_exact_to(s.exact_to());
  u.set_unit_constant(false);
  const auto one = TruncatedTorusSeries::one(s.signature(), s.max_degree(), s.q_order(), s.skew_bound());
  TruncatedTorusSeries t = one;
  for (int i = 0; i < s.max_degree(); ++i) {
    t = one - u * t;
    t.set_unit_constant(true);
  }
  return t;
}

int x_degree(const DiagramAlgebras& alg, const Exponents& e) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<int>(e[i] * alg.cycles[i + 1].components.size());
  return d;
}

int flow_degree(const DiagramAlgebras& alg, const Coloring& gamma) {
  Coloring rest = gamma;
  int count = 0;
  const auto fits = [&](const Cycle& c) {
    return std::all_of(c.edges.begin(), c.edges.end(), [&](int e) { return rest.edges[e] > 0; }) &&
           std::all_of(c.circles.begin(), c.circles.end(), [&](int k) { return rest.circles[k] > 0; });
  };
  while (!rest.is_zero()) {
    auto it = std::find_if(alg.cycles.cycles.begin() + 1, alg.cycles.cycles.end(),
                           [&](const Cycle& c) { return c.components.size() == 1 && fits(c); });
    if (it == alg.cycles.cycles.end()) throw std::invalid_argument("coloring is not a flow");
    for (int e : it->edges) --rest.edges[e];
    for (int k : it->circles) --rest.circles[k];
    ++count;
  }
  return count;
}

TruncatedTorusSeries x_series(const DiagramAlgebras& alg, const CyclePolynomial& p, int max_degree, int q_order) {
  TruncatedTorusSeries s(alg.x.sig, max_degree, q_order, alg.x.sig->max_abs_pairing());
  for (const auto& [e, c] : p.terms()) s.add_term(e, x_degree(alg, e), TruncatedRSeries(q_order, c));
  s.set_unit_constant(s.terms().count(alg.x.sig->unit()) && s.terms().at(alg.x.sig->unit()).coeff.is_one());
  return s;
}

TruncatedTorusSeries mu_series(const DiagramAlgebras& alg, const TruncatedTorusSeries& s) {
  const auto& images = alg.mu.images();
  const auto& fsig = alg.flags.sig;
  long long sigma = 0;
  for (const auto& a : images)
    for (const auto& b : images) sigma = std::max(sigma, std::abs(fsig->commutation(a, b)));
  const int vertices = static_cast<int>(alg.diagram.vertices().size());
  TruncatedTorusSeries r(fsig, s.max_degree(), s.q_order(), vertices);
  for (const auto& [e, t] : s.terms()) {
    const MuMap::Image im = alg.mu.image(e);
    r.add_term(im.flags, t.degree, t.coeff.shifted(static_cast<int>(im.shift)));
  }
  const long long d = s.max_degree();
  r.set_exact_to(s.exact() ? kExact : s.exact_to() - sigma * d * (d - 1) / 2);
  r.set_unit_constant(s.unit_constant());
  return r;
}

void require_positive(const DiagramAlgebras& alg) {
  for (std::size_t i = 1; i < alg.cycles.size(); ++i) {
    if (alg.cycles[i].rot < 1)
      throw std::domain_error("diagram is not positive: cycle C" + std::to_string(i) + " has rotation number " +
                              std::to_string(alg.cycles[i].rot));
  }
}

TruncatedTorusSeries pochhammer_inf(const DiagramAlgebras& alg, bool a_inverted, int max_degree, int q_order) {
  require_positive(alg);
  const CyclePolynomial p = a_inverted ? cycle_polynomial_inverted_a(alg) : cycle_polynomial(alg);
  const long long kx = alg.x.sig->max_abs_pairing();
  TruncatedTorusSeries acc =
      TruncatedTorusSeries::one(alg.x.sig, max_degree, q_order, static_cast<int>(kx));
  for (int k = 0;; ++k) {
    acc = acc * x_series(alg, twist(alg, p, k), max_degree, q_order);
    // Every nonconstant term of a later factor has v-exponent >= (4k+6) deg,
    // so the omitted tail is 1 up to this bound.
    long long tail = kExact;
    for (long long d = 1; d <= max_degree; ++d) tail = std::min(tail, (4LL * k + 6) * d - kx * d * (d - 1) / 2 - 1);
    TruncatedTorusSeries one = TruncatedTorusSeries::one(alg.x.sig, max_degree, q_order, static_cast<int>(kx));
    one.set_exact_to(tail);
    TruncatedTorusSeries full = acc * one;
    if (full.exact_to() >= acc.exact_to() || max_degree == 0) return full;
    if (k > 4 * q_order + 64) throw std::logic_error("pochhammer_inf: tail bound does not converge");
  }
}

HomflyComputation homfly_compute(const DiagramAlgebras& alg, int max_degree, int working_q) {
  TruncatedTorusSeries a_side = pochhammer_inf(alg, false, max_degree, working_q);
  TruncatedTorusSeries inv_side = pochhammer_inf(alg, true, max_degree, working_q);
  TruncatedTorusSeries f = mu_series(alg, a_side) * mu_series(alg, series_invert(inv_side));
  return HomflyComputation{max_degree, working_q, std::move(a_side), std::move(inv_side), std::move(f)};
}

HomflyTable flag_series_table(const DiagramAlgebras& alg, const TruncatedTorusSeries& s, int q) {
  HomflyTable out;
  for (const auto& [e, t] : s.terms()) {
    auto gamma = flow_of_monomial(alg.diagram, alg.flags, e);
    if (!gamma) throw std::logic_error("flag monomial " + alg.flags.sig->format(e) + " is not a flow monomial");
    TruncatedRSeries c = t.coeff.retruncated(q);
    if (!c.is_zero()) out.emplace(std::move(*gamma), std::move(c));
  }
  return out;
}

namespace {

// Runs f(working_q) with a growing margin above q until accept(result) holds.
template <class F, class Accept>
auto with_margin(int q, F f, Accept accept) {
  for (int margin = 16;; margin *= 2) {
    auto result = f(q + margin);
    if (accept(result) || margin >= 4096) return result;
  }
}

ResidualReport residual_report(const DiagramAlgebras& alg, std::string name, const TruncatedTorusSeries& r, int q,
                               bool flag_side) {
  ResidualReport rep;
  rep.name = std::move(name);
  rep.q_order = q;
  rep.exact_to = r.exact_to();
  for (const auto& [e, t] : r.terms()) {
    const TruncatedRSeries c = t.coeff.retruncated(std::min(q, r.q_order()));
    if (c.is_zero()) continue;
    std::string label;
    if (flag_side) {
      auto gamma = flow_of_monomial(alg.diagram, alg.flags, e);
      label = gamma ? format_coloring(*gamma) : alg.flags.sig->format(e);
    } else {
      label = alg.x.sig->format(e);
    }
    rep.nonzero.push_back(label + ": " + to_string(c));
  }
  rep.ok = rep.exact_to >= q && rep.nonzero.empty();
  return rep;
}

}  // namespace

HomflySeries homfly_series(const DiagramAlgebras& alg, int max_degree, int q_order) {
  if (q_order < 0) throw std::invalid_argument("q-order must be nonnegative");
  require_positive(alg);
  HomflyComputation comp = with_margin(
      q_order, [&](int w) { return homfly_compute(alg, max_degree, w); },
      [&](const HomflyComputation& c) { return c.f.exact_to() >= q_order; });
  if (comp.f.exact_to() < q_order) throw std::runtime_error("homfly_series: could not reach the requested q-order");
  HomflySeries s{max_degree, q_order, comp.working_q, comp.f.exact_to(), comp, {}, {}};
  s.table = flag_series_table(alg, comp.f, q_order);
  for (const auto& [e, t] : comp.f.terms()) {
    auto gamma = flow_of_monomial(alg.diagram, alg.flags, e);
    if (gamma) s.degrees.emplace(*gamma, t.degree);
  }
  return s;
}

ResidualReport check_fphi(const DiagramAlgebras& alg, int max_degree, int q_order) {
  require_positive(alg);
  auto residual = with_margin(
      q_order,
      [&](int w) {
        const HomflyComputation c = homfly_compute(alg, max_degree, w);
        return c.f * mu_series(alg, c.inv_side) - mu_series(alg, c.a_side);
      },
      [&](const TruncatedTorusSeries& r) { return r.exact_to() >= q_order; });
  return residual_report(alg, "F mu((P(q,a^-1,x),q)_inf) = mu((P(q,a,x),q)_inf)", residual, q_order, true);
}

ShiftReport check_shift(const DiagramAlgebras& alg, int max_degree, int q_order) {
  require_positive(alg);
  struct Residuals {
    TruncatedTorusSeries square3, square4, shift;
  };
  auto exact_enough = [&](const Residuals& r) {
    return std::min({r.square3.exact_to(), r.square4.exact_to(), r.shift.exact_to()}) >= q_order;
  };
  Residuals r = with_margin(
      q_order,
      [&](int w) {
        const HomflyComputation c = homfly_compute(alg, max_degree, w);
        // P(q^{-1},a,x) is the k = -1 twist of P(q,a,x).
        const auto p_down = x_series(alg, twist(alg, cycle_polynomial(alg), -1), max_degree, w);
        const auto p_inv = x_series(alg, cycle_polynomial_inverted_a(alg), max_degree, w);
        TruncatedTorusSeries sq3 = c.a_side.scale_a(2) - p_down * c.a_side;
        TruncatedTorusSeries sq4 = p_inv * c.inv_side.scale_a(2) - c.inv_side;
        TruncatedTorusSeries sh = c.f.scale_a(2) - mu_series(alg, p_down) * c.f * mu_series(alg, p_inv);
        return Residuals{std::move(sq3), std::move(sq4), std::move(sh)};
      },
      exact_enough);
  ShiftReport rep;
  rep.note =
      "right-hand side uses the single factors mu(P(q^-1,a,x)) and mu(P(q,a^-1,x))";
  rep.square3 = residual_report(alg, "(P(q,q^2 a,x),q)_inf = P(q^-1,a,x) (P(q,a,x),q)_inf", r.square3, q_order, false);
  rep.square4 =
      residual_report(alg, "P(q,a^-1,x) (P(q,q^-2 a^-1,x),q)_inf = (P(q,a^-1,x),q)_inf", r.square4, q_order, false);
  rep.shift =
      residual_report(alg, "F(q,q^2 a) = mu(P(q^-1,a,x)) F mu(P(q,a^-1,x))", r.shift, q_order, true);
  return rep;
}

std::vector<SpecializedEntry> specialize_to_n(const DiagramAlgebras& alg, const HomflySeries& f, int n) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  std::vector<SpecializedEntry> out;
  for (const auto& [gamma, c] : f.table) {
    SpecializedEntry e;
    e.coloring = gamma;
    e.degree = f.degrees.count(gamma) ? f.degrees.at(gamma) : flow_degree(alg, gamma);
    e.window = f.q_order - 2 * n * e.degree;
    e.value = c.substitute_a(n).to_qlaurent().truncated(e.window);
    out.push_back(std::move(e));
  }
  return out;
}

bool SpecializationReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const SpecializedEntry& e) { return e.window_ok && e.match; });
}

std::string SpecializationReport::message() const {
  std::string m;
  for (const SpecializedEntry& e : entries) {
    if (!e.window_ok)
      m += format_coloring(e.coloring) + ": truncation window ends at v^" + std::to_string(e.window) +
           ", too small for the expected polynomial; raise --q-order\n";
    else if (!e.match)
      m += format_coloring(e.coloring) + ": got " + to_string(e.value) + ", expected " + to_string(e.expected) + "\n";
  }
  if (m.empty())
    return std::to_string(entries.size()) + " colorings agree, " + std::to_string(skipped) + " above the degree bound";
  m.pop_back();
  return m;
}

SpecializationReport check_specialization(const DiagramAlgebras& alg, const HomflySeries& f, int n) {
  SpecializationReport rep;
  rep.n = n;
  const EvalTable table = eval_table(alg.diagram, n);
  std::map<Coloring, SpecializedEntry> got;
  for (SpecializedEntry& e : specialize_to_n(alg, f, n)) got.emplace(e.coloring, std::move(e));
  std::map<Coloring, QLaurent> expected;
  for (const auto& [gamma, p] : table) {
    if (flow_degree(alg, gamma) > f.max_degree) {
      ++rep.skipped;
      continue;
    }
    expected.emplace(gamma, p);
  }
  std::map<Coloring, bool> keys;
  for (const auto& [g, e] : got) keys[g] = true;
  for (const auto& [g, p] : expected) keys[g] = true;
  for (const auto& [g, unused] : keys) {
    SpecializedEntry e;
    if (auto it = got.find(g); it != got.end()) {
      e = it->second;
    } else {
      e.coloring = g;
      e.degree = flow_degree(alg, g);
      e.window = f.q_order - 2 * n * e.degree;
    }
    const QLaurent full = expected.count(g) ? expected.at(g) : QLaurent();
    e.expected = full.truncated(e.window);
    e.window_ok = full.is_zero() ? e.window >= 0 : full.max_exponent() <= e.window;
    e.match = e.value == e.expected;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace moy
