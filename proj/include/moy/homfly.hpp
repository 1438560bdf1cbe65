#pragma once

// HOMFLY generating series of a positive diagram at finite truncation:
// F = mu((P(q,a,x), q)_inf) * mu((P(q,a^{-1},x), q)_inf)^{-1}.
//
// Series are truncated in two directions: total degree <= D in the cycle
// variables (a component-weighted degree, carried to the flag side through
// mu) and v-exponent <= a working bound in the coefficients. Because the
// commutation factors can lower v-exponents, every series records how far
// its coefficients are known to be exact; results are only reported up to
// that point.

#include <map>
#include <string>
#include <vector>

#include "moy/genseries.hpp"
#include "moy/qexact.hpp"
#include "moy/qtorus.hpp"

namespace moy {

/// exact_to value of a series that is known completely.
inline constexpr long long kExact = 1LL << 50;

class TruncatedTorusSeries {
 public:
  struct Term {
    int degree;
    TruncatedRSeries coeff;
  };
  using Terms = std::map<Exponents, Term>;

  /// skew_bound K: |commutation(a, b)| <= K deg(a) deg(b) for all monomials.
  TruncatedTorusSeries(SignaturePtr sig, int max_degree, int q_order, int skew_bound);

  static TruncatedTorusSeries one(SignaturePtr sig, int max_degree, int q_order, int skew_bound);

  const SignaturePtr& signature() const { return sig_; }
  int max_degree() const { return max_degree_; }
  int q_order() const { return q_order_; }
  int skew_bound() const { return skew_bound_; }
  /// Every coefficient is correct in all v-exponents <= exact_to().
  long long exact_to() const { return exact_to_; }
  bool exact() const { return exact_to_ >= kExact; }
  void set_exact_to(long long e) { exact_to_ = std::min(e, kExact); }
  /// The constant term is exactly 1 (not just up to exact_to()).
  bool unit_constant() const { return unit_constant_; }
  void set_unit_constant(bool u) { unit_constant_ = u; }
  const Terms& terms() const { return terms_; }

  /// Terms of degree above max_degree() are dropped.
  void add_term(const Exponents& e, int degree, const TruncatedRSeries& c);

  /// Lower bound for val(coeff(b)) - K deg(b) (D - deg(b)) over all monomials b,
  /// including those whose coefficient is only known to vanish up to exact_to().
  long long min_bound() const;

  TruncatedTorusSeries& operator+=(const TruncatedTorusSeries& o);
  TruncatedTorusSeries& operator-=(const TruncatedTorusSeries& o);
  friend TruncatedTorusSeries operator+(TruncatedTorusSeries a, const TruncatedTorusSeries& b) { return a += b; }
  friend TruncatedTorusSeries operator-(TruncatedTorusSeries a, const TruncatedTorusSeries& b) { return a -= b; }
  friend TruncatedTorusSeries operator*(const TruncatedTorusSeries& a, const TruncatedTorusSeries& b);

  /// a -> q^p a in every coefficient.
  TruncatedTorusSeries scale_a(int p) const;
  /// Same monomials, coefficients re-truncated at q (<= q_order()).
  TruncatedTorusSeries retruncated(int q) const;
  /// True when every coefficient vanishes up to q and the series is exact that far.
  bool vanishes_to(int q) const;

 private:
  void check(const TruncatedTorusSeries& o) const;

  SignaturePtr sig_;
  int max_degree_;
  int q_order_;
  int skew_bound_;
  long long exact_to_ = kExact;
  bool unit_constant_ = true;
  Terms terms_;
};

/// Two-sided inverse modulo the truncation; requires unit_constant().
TruncatedTorusSeries series_invert(const TruncatedTorusSeries& s);

/// Component-weighted degree of an x-monomial.
int x_degree(const DiagramAlgebras& alg, const Exponents& e);
/// Number of circuits in a decomposition of gamma; independent of the
/// decomposition on positive diagrams.
int flow_degree(const DiagramAlgebras& alg, const Coloring& gamma);

/// An exact x-polynomial as a truncated series.
TruncatedTorusSeries x_series(const DiagramAlgebras& alg, const CyclePolynomial& p, int max_degree, int q_order);
TruncatedTorusSeries mu_series(const DiagramAlgebras& alg, const TruncatedTorusSeries& s);

/// Throws std::domain_error naming a cycle with rot <= 0.
void require_positive(const DiagramAlgebras& alg);

/// (P(q,a,x), q)_inf, or (P(q,a^{-1},x), q)_inf when a_inverted. Factors are
/// added until the omitted tail no longer limits the exactness.
TruncatedTorusSeries pochhammer_inf(const DiagramAlgebras& alg, bool a_inverted, int max_degree, int q_order);

/// All pieces of one computation at a fixed working bound.
struct HomflyComputation {
  int max_degree;
  int working_q;
  TruncatedTorusSeries a_side;      // (P(q,a,x), q)_inf
  TruncatedTorusSeries inv_side;    // (P(q,a^{-1},x), q)_inf
  TruncatedTorusSeries f;           // flag side
};

HomflyComputation homfly_compute(const DiagramAlgebras& alg, int max_degree, int working_q);

using HomflyTable = std::map<Coloring, TruncatedRSeries>;

struct HomflySeries {
  int max_degree;
  int q_order;
  int working_q;
  long long exact_to;
  HomflyComputation computation;
  /// Coefficients re-truncated at q_order, keyed by coloring, zero entries omitted.
  HomflyTable table;
  std::map<Coloring, int> degrees;
};

/// Raises the working bound until F is exact up to q_order.
HomflySeries homfly_series(const DiagramAlgebras& alg, int max_degree, int q_order);

struct ResidualReport {
  std::string name;
  bool ok = false;
  int q_order = 0;
  long long exact_to = 0;
  /// Colorings (or x-monomials, printed) with a nonzero residual coefficient up to q_order.
  std::vector<std::string> nonzero;
};

/// F mu(P(q,a^{-1},x),q)_inf - mu(P(q,a,x),q)_inf, which must vanish.
ResidualReport check_fphi(const DiagramAlgebras& alg, int max_degree, int q_order);

struct ShiftReport {
  std::string note;
  ResidualReport square3;
  ResidualReport square4;
  ResidualReport shift;
  bool ok() const { return square3.ok && square4.ok && shift.ok; }
};

/// F(q, q^2 a) = mu(P(q^{-1},a,x)) F mu(P(q,a^{-1},x)) with the two
/// intermediate Pochhammer identities as separate checks.
ShiftReport check_shift(const DiagramAlgebras& alg, int max_degree, int q_order);

struct SpecializedEntry {
  Coloring coloring;
  int degree = 0;
  /// Largest v-exponent that is reliable after a = q^N.
  int window = 0;
  QLaurent value;     // specialized F coefficient, cut at window
  QLaurent expected;  // state-sum value, cut at window
  /// The expected polynomial fits entirely inside the window.
  bool window_ok = false;
  bool match = false;
};

/// Substitutes a = q^N into every coefficient of F with window q_order - 2 N deg.
std::vector<SpecializedEntry> specialize_to_n(const DiagramAlgebras& alg, const HomflySeries& f, int n);

struct SpecializationReport {
  int n = 0;
  std::vector<SpecializedEntry> entries;
  /// Colorings of degree above the truncation, not compared.
  int skipped = 0;
  bool ok() const;
  std::string message() const;
};

/// Compares specialize_to_n against eval_table on every coloring of degree <= D.
SpecializationReport check_specialization(const DiagramAlgebras& alg, const HomflySeries& f, int n);

/// Flag-side series as a coloring table re-truncated at q.
HomflyTable flag_series_table(const DiagramAlgebras& alg, const TruncatedTorusSeries& s, int q);

}  // namespace moy
