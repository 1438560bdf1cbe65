#include "moy/qexact.hpp"

#include <numeric>
#include <sstream>

namespace moy {

namespace {

// Renders a quarter-power exponent as a reduced fraction.
std::string exponent_text(int quarters) {
  const int g = std::gcd(quarters < 0 ? -quarters : quarters, 4);
  const int num = quarters / g;
  const int den = 4 / g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string power_text(const char* var, int quarters) {
  if (quarters == 0) return "";
  if (quarters == 4) return var;
  return std::string(var) + "^{" + exponent_text(quarters) + "}";
}

// Joins signed terms "c*m" into "t1 + t2 - t3".
class TermWriter {
 public:
  void add(const Integer& c, const std::string& mono) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (first_) {
      if (neg) out_ << "-";
    } else {
      out_ << (neg ? " - " : " + ");
    }
    first_ = false;
    if (mono.empty()) {
      out_ << mag;
    } else if (mag == 1) {
      out_ << mono;
    } else {
      out_ << mag << "*" << mono;
    }
  }
  std::string str(const char* empty = "0") const { return first_ ? std::string(empty) : out_.str(); }
  bool empty() const { return first_; }

 private:
  std::ostringstream out_;
  bool first_ = true;
};

}  // namespace

// ---- QLaurent ---------------------------------------------------------------

QLaurent::QLaurent(long long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

QLaurent::QLaurent(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

QLaurent QLaurent::monomial(int v_exp, const Integer& c) {
  QLaurent p;
  p.add_term(v_exp, c);
  return p;
}

void QLaurent::add_term(int e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer QLaurent::coeff(int v_exp) const {
  auto it = terms_.find(v_exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

int QLaurent::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int QLaurent::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  *this = mul_shift(o, 0);
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

QLaurent QLaurent::mul_shift(const QLaurent& o, int shift) const {
  QLaurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2 + shift, c1 * c2);
  return r;
}

QLaurent QLaurent::shifted(int shift) const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
  return r;
}

QLaurent QLaurent::inverted() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

QLaurent QLaurent::truncated(int bound) const {
  QLaurent r;
  for (const auto& [e, c] : terms_) {
    if (e > bound) break;
    r.terms_.emplace(e, c);
  }
  return r;
}

Integer QLaurent::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

QLaurent divide_exact(const QLaurent& num, const QLaurent& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return {};
  const int den_top = den.max_exponent();
  const Integer& den_lead = den.terms().rbegin()->second;
  const int lowest_quotient = num.min_exponent() - den.min_exponent();
  QLaurent rem = num;
  QLaurent quot;
  while (!rem.is_zero()) {
    const int top = rem.max_exponent();
    const int q_exp = top - den_top;
    const Integer& lead = rem.terms().rbegin()->second;
    if (q_exp < lowest_quotient || lead % den_lead != 0)
      throw std::domain_error("inexact polynomial division: " + to_string(num) + " / " + to_string(den));
    const QLaurent step = QLaurent::monomial(q_exp, lead / den_lead);
    quot += step;
    rem -= step * den;
  }
  return quot;
}

bool is_symmetric(const QLaurent& p) { return p == p.inverted(); }

bool is_nonnegative(const QLaurent& p) {
  for (const auto& [e, c] : p.terms())
    if (c < 0) return false;
  return true;
}

bool in_half_powers(const QLaurent& p) {
  for (const auto& [e, c] : p.terms())
    if (e % 2 != 0) return false;
  return true;
}

QLaurent qint(int n) {
  if (n < 0) throw std::invalid_argument("qint: negative argument");
  // sum_{i=0}^{n-1} q^{(n-1-2i)/2}
  QLaurent r;
  for (int i = 0; i < n; ++i) r += QLaurent::monomial(2 * (n - 1 - 2 * i));
  return r;
}

QLaurent qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  QLaurent r = 1;
  for (int j = 2; j <= n; ++j) r *= qint(j);
  return r;
}

QLaurent qbinom(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinom: need 0 <= k <= n");
  return divide_exact(qfact(n), qfact(k) * qfact(n - k));
}

QLaurent qmultinom(int n, const std::vector<int>& parts) {
  if (n < 0) throw std::invalid_argument("qmultinom: negative n");
  int used = 0;
  QLaurent den = 1;
  for (int k : parts) {
    if (k < 0) throw std::invalid_argument("qmultinom: negative part");
    used += k;
    den *= qfact(k);
  }
  if (used > n) throw std::invalid_argument("qmultinom: parts exceed n");
  den *= qfact(n - used);
  return divide_exact(qfact(n), den);
}

// ---- QALaurent --------------------------------------------------------------

QALaurent::QALaurent(long long c) {
  if (c != 0) terms_.emplace(Key{0, 0}, Integer(c));
}

QALaurent::QALaurent(const QLaurent& p) {
  for (const auto& [e, c] : p.terms()) terms_.emplace(Key{e, 0}, c);
}

QALaurent QALaurent::monomial(int v_exp, int b_exp, const Integer& c) {
  QALaurent p;
  p.add_term({v_exp, b_exp}, c);
  return p;
}

void QALaurent::add_term(const Key& k, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QALaurent& QALaurent::operator+=(const QALaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QALaurent& QALaurent::operator-=(const QALaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QALaurent QALaurent::operator-() const {
  QALaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

QALaurent QALaurent::mul_shift(const QALaurent& o, int shift) const {
  QALaurent r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term({k1.first + k2.first + shift, k1.second + k2.second}, c1 * c2);
  return r;
}

QALaurent QALaurent::shifted(int shift) const {
  QALaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + shift, k.second}, c);
  return r;
}

QLaurent QALaurent::substitute_a(int n) const {
  QLaurent r;
  for (const auto& [k, c] : terms_) r += QLaurent::monomial(k.first + n * k.second, c);
  return r;
}

QALaurent QALaurent::invert_a() const {
  QALaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first, -k.second}, c);
  return r;
}

QALaurent QALaurent::invert_q() const {
  QALaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{-k.first, k.second}, c);
  return r;
}

// ---- TruncatedRSeries -------------------------------------------------------

TruncatedRSeries::TruncatedRSeries(int q_order) : q_order_(q_order) {}

TruncatedRSeries::TruncatedRSeries(int q_order, const QALaurent& p) : q_order_(q_order) {
  for (const auto& [k, c] : p.terms())
    if (k.first <= q_order_) terms_.emplace(Key{k.second, k.first}, c);
}

TruncatedRSeries TruncatedRSeries::one(int q_order) {
  TruncatedRSeries r(q_order);
  r.add_term({0, 0}, 1);
  return r;
}

TruncatedRSeries TruncatedRSeries::monomial(int q_order, int b_exp, int v_exp, const Integer& c) {
  TruncatedRSeries r(q_order);
  r.add_term({b_exp, v_exp}, c);
  return r;
}

void TruncatedRSeries::add_term(const Key& k, const Integer& c) {
  if (c == 0 || k.second > q_order_) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedRSeries::check_bound(const TruncatedRSeries& o) const {
  if (o.q_order_ != q_order_)
    throw std::invalid_argument("TruncatedRSeries: mixing q-order bounds " + std::to_string(q_order_) + " and " +
                                std::to_string(o.q_order_));
}

bool TruncatedRSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second == 1;
}

int TruncatedRSeries::valuation() const {
  if (terms_.empty()) throw std::logic_error("valuation of zero series");
  int v = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) v = std::min(v, k.second);
  return v;
}

int TruncatedRSeries::min_b() const {
  if (terms_.empty()) throw std::logic_error("min_b of zero series");
  return terms_.begin()->first.first;
}

int TruncatedRSeries::max_b() const {
  if (terms_.empty()) throw std::logic_error("max_b of zero series");
  return terms_.rbegin()->first.first;
}

TruncatedRSeries& TruncatedRSeries::operator+=(const TruncatedRSeries& o) {
  check_bound(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TruncatedRSeries& TruncatedRSeries::operator-=(const TruncatedRSeries& o) {
  check_bound(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TruncatedRSeries TruncatedRSeries::operator-() const {
  TruncatedRSeries r(q_order_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TruncatedRSeries TruncatedRSeries::mul_shift(const TruncatedRSeries& o, int shift) const {
  check_bound(o);
  TruncatedRSeries r(q_order_);
  if (terms_.empty() || o.terms_.empty()) return r;
  const int v_lo = valuation() + o.valuation() + shift;
  if (v_lo > q_order_) return r;
  const int b_lo = min_b() + o.min_b();
  const auto b_span = static_cast<std::size_t>(max_b() + o.max_b() - b_lo + 1);
  const auto v_span = static_cast<std::size_t>(q_order_ - v_lo + 1);
  // Dense accumulation; the map is rebuilt once at the end.
  std::vector<Integer> acc(b_span * v_span);
  std::vector<bool> used(b_span * v_span, false);
  const int o_val = o.valuation();
  for (const auto& [k1, c1] : terms_) {
    if (k1.second + o_val + shift > q_order_) continue;
    for (const auto& [k2, c2] : o.terms_) {
      const int v = k1.second + k2.second + shift;
      if (v > q_order_) continue;
      const std::size_t i = static_cast<std::size_t>(k1.first + k2.first - b_lo) * v_span + (v - v_lo);
      if (used[i]) {
        acc[i] += c1 * c2;
      } else {
        acc[i] = c1 * c2;
        used[i] = true;
      }
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!used[i] || acc[i] == 0) continue;
    r.terms_.emplace_hint(r.terms_.end(), Key{static_cast<int>(i / v_span) + b_lo, static_cast<int>(i % v_span) + v_lo},
                          std::move(acc[i]));
  }
  return r;
}

TruncatedRSeries TruncatedRSeries::shifted(int shift) const {
  TruncatedRSeries r(q_order_);
  for (const auto& [k, c] : terms_) r.add_term({k.first, k.second + shift}, c);
  return r;
}

TruncatedRSeries TruncatedRSeries::substitute_a(int n) const {
  TruncatedRSeries r(q_order_);
  for (const auto& [k, c] : terms_) r.add_term({0, k.second + n * k.first}, c);
  return r;
}

TruncatedRSeries TruncatedRSeries::scale_a(int p) const {
  TruncatedRSeries r(q_order_);
  for (const auto& [k, c] : terms_) r.add_term({k.first, k.second + p * k.first}, c);
  return r;
}

TruncatedRSeries TruncatedRSeries::retruncated(int q_order) const {
  if (q_order > q_order_)
    throw std::invalid_argument("TruncatedRSeries: cannot re-truncate to a larger bound");
  TruncatedRSeries r(q_order);
  for (const auto& [k, c] : terms_) r.add_term(k, c);
  return r;
}

QLaurent TruncatedRSeries::to_qlaurent() const {
  QLaurent r;
  for (const auto& [k, c] : terms_)
    if (k.first == 0) r += QLaurent::monomial(k.second, c);
  return r;
}

// ---- printing ---------------------------------------------------------------

std::string to_string(const QLaurent& p) {
  TermWriter w;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) w.add(it->second, power_text("q", it->first));
  return w.str();
}

std::string to_string(const QALaurent& p) {
  TermWriter w;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string mono = power_text("a", it->first.second);
    const std::string qpart = power_text("q", it->first.first);
    if (!mono.empty() && !qpart.empty()) mono += "*";
    mono += qpart;
    w.add(it->second, mono);
  }
  return w.str();
}

std::string to_string(const TruncatedRSeries& p) {
  TermWriter w;
  // a-power outer, q-power ascending inner: reads as a power series in q.
  for (const auto& [k, c] : p.terms()) {
    std::string mono = power_text("a", k.first);
    const std::string qpart = power_text("q", k.second);
    if (!mono.empty() && !qpart.empty()) mono += "*";
    mono += qpart;
    w.add(c, mono);
  }
  std::string order = power_text("q", p.q_order() + 1);
  if (order.empty()) order = "1";
  const std::string tail = "O(" + order + ")";
  return w.empty() ? tail : w.str() + " + " + tail;
}

}  // namespace moy
