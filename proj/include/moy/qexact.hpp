#pragma once

// Exact coefficient rings.
//
// Every exponent is an integer in quarter-power units: v = q^{1/4} and
// b = a^{1/4}. Vertex weights live in quarter powers of q while finished
// evaluations live in half powers, so integer exponents keep everything
// exact.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace moy {

using Integer = boost::multiprecision::cpp_int;

/// Laurent polynomial in v = q^{1/4} with arbitrary-precision coefficients.
class QLaurent {
 public:
  using Terms = std::map<int, Integer>;

  QLaurent() = default;
  QLaurent(long long c);  // NOLINT: constants convert implicitly
  QLaurent(const Integer& c);  // NOLINT

  static QLaurent monomial(int v_exp, const Integer& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int v_exp) const;
  int min_exponent() const;
  int max_exponent() const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent operator-() const;

  /// this * o * v^shift
  QLaurent mul_shift(const QLaurent& o, int shift) const;
  QLaurent shifted(int shift) const;
  /// v -> v^{-1}
  QLaurent inverted() const;
  /// Keeps only the terms with v-exponent <= bound.
  QLaurent truncated(int bound) const;
  Integer at_one() const;

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) { return a.mul_shift(b, 0); }
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(int e, const Integer& c);
  Terms terms_;
};

/// Exact quotient; throws std::domain_error when den does not divide num.
QLaurent divide_exact(const QLaurent& num, const QLaurent& den);

bool is_symmetric(const QLaurent& p);
bool is_nonnegative(const QLaurent& p);
bool in_half_powers(const QLaurent& p);

// Symmetric quantum integers: [n] = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}).
QLaurent qint(int n);
QLaurent qfact(int n);
QLaurent qbinom(int n, int k);
/// [n; k_1, ..., k_m]; requires sum k_i <= n, the remainder is an implicit last part.
QLaurent qmultinom(int n, const std::vector<int>& parts);

/// Laurent polynomial in (v, b) = (q^{1/4}, a^{1/4}).
class QALaurent {
 public:
  /// key = (v-exponent, b-exponent)
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Integer>;

  QALaurent() = default;
  QALaurent(long long c);  // NOLINT
  QALaurent(const QLaurent& p);  // NOLINT

  static QALaurent monomial(int v_exp, int b_exp, const Integer& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QALaurent& operator+=(const QALaurent& o);
  QALaurent& operator-=(const QALaurent& o);
  QALaurent operator-() const;
  QALaurent mul_shift(const QALaurent& o, int shift) const;
  QALaurent shifted(int shift) const;

  /// a = q^N: b^k v^j -> v^{j + N k}.
  QLaurent substitute_a(int n) const;
  /// a -> a^{-1}
  QALaurent invert_a() const;
  /// q -> q^{-1}
  QALaurent invert_q() const;

  friend QALaurent operator+(QALaurent a, const QALaurent& b) { return a += b; }
  friend QALaurent operator-(QALaurent a, const QALaurent& b) { return a -= b; }
  friend QALaurent operator*(const QALaurent& a, const QALaurent& b) { return a.mul_shift(b, 0); }
  friend bool operator==(const QALaurent& a, const QALaurent& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Key& k, const Integer& c);
  Terms terms_;
};

/// Element of Z[[q^{1/2}]][a^{+-1/2}] (in quarter-power units) modulo all terms
/// with v-exponent above the bound Q. The bound travels with every element and
/// operands of a binary operation must agree on it.
///
/// The quotient is a ring only on elements with nonnegative v-valuation.
/// Negative exponents are stored as-is so that intermediate results in the
/// HOMFLY checks can be represented; callers tracking exactness account for them.
class TruncatedRSeries {
 public:
  /// key = (b-exponent, v-exponent)
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Integer>;

  explicit TruncatedRSeries(int q_order);
  TruncatedRSeries(int q_order, const QALaurent& p);

  static TruncatedRSeries one(int q_order);
  static TruncatedRSeries monomial(int q_order, int b_exp, int v_exp, const Integer& c = 1);

  int q_order() const { return q_order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Minimum v-exponent over all terms; only meaningful for nonzero elements.
  int valuation() const;
  int min_b() const;
  int max_b() const;

  TruncatedRSeries& operator+=(const TruncatedRSeries& o);
  TruncatedRSeries& operator-=(const TruncatedRSeries& o);
  TruncatedRSeries operator-() const;
  /// this * o * v^shift, truncated after the shift.
  TruncatedRSeries mul_shift(const TruncatedRSeries& o, int shift) const;
  TruncatedRSeries shifted(int shift) const;

  /// a = q^N: b^k v^j -> v^{j + N k}, then re-truncated.
  TruncatedRSeries substitute_a(int n) const;
  /// a -> q^p a, i.e. b^k v^j -> b^k v^{j + p k}.
  TruncatedRSeries scale_a(int p) const;
  /// Re-truncate at a smaller bound.
  TruncatedRSeries retruncated(int q_order) const;
  /// Terms with b-exponent zero, as a Laurent polynomial in v.
  QLaurent to_qlaurent() const;

  friend TruncatedRSeries operator+(TruncatedRSeries a, const TruncatedRSeries& b) { return a += b; }
  friend TruncatedRSeries operator-(TruncatedRSeries a, const TruncatedRSeries& b) { return a -= b; }
  friend TruncatedRSeries operator*(const TruncatedRSeries& a, const TruncatedRSeries& b) {
    return a.mul_shift(b, 0);
  }
  friend bool operator==(const TruncatedRSeries& a, const TruncatedRSeries& b) {
    return a.q_order_ == b.q_order_ && a.terms_ == b.terms_;
  }

 private:
  void check_bound(const TruncatedRSeries& o) const;
  void add_term(const Key& k, const Integer& c);
  int q_order_;
  Terms terms_;
};

// Printing. Exponents are reduced fractions of q and a, e.g. v^2 -> q^{1/2}.
std::string to_string(const QLaurent& p);
std::string to_string(const QALaurent& p);
std::string to_string(const TruncatedRSeries& p);

}  // namespace moy
