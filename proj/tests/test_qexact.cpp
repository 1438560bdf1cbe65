#include <random>

#include "doctest.h"
#include "moy/qexact.hpp"

using namespace moy;

namespace {

QLaurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-6, 6), coef(-4, 4), len(0, 4);
  QLaurent p;
  for (int i = len(rng); i > 0; --i) p += QLaurent::monomial(exp(rng), coef(rng));
  return p;
}

// [n choose k] by the q-Pascal rule in v = q^{1/4}: [n,k] = q^{-k/2}[n-1,k-1] + q^{(n-k)/2}[n-1,k].
QLaurent pascal(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return 1;
  return pascal(n - 1, k - 1).shifted(-2 * (n - k)) + pascal(n - 1, k).shifted(2 * k);
}

}  // namespace

TEST_CASE("laurent ring axioms on random elements") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const QLaurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QLaurent());
    CHECK(a * QLaurent(1) == a);
    CHECK(a.mul_shift(b, 3) == (a * b).shifted(3));
  }
}

TEST_CASE("quantum integers and binomials") {
  CHECK(qint(0) == QLaurent());
  CHECK(qint(1) == QLaurent(1));
  CHECK(qint(2) == QLaurent::monomial(2) + QLaurent::monomial(-2));
  CHECK(qint(3) == QLaurent::monomial(4) + QLaurent(1) + QLaurent::monomial(-4));
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(qbinom(n, k) == pascal(n, k));
      CHECK(is_symmetric(qbinom(n, k)));
      CHECK(qbinom(n, k).at_one() == pascal(n, k).at_one());
    }
  CHECK(qmultinom(4, {1, 1, 1}) == qfact(4));
  CHECK(qmultinom(5, {2, 1}) == qbinom(5, 2) * qbinom(3, 1));
}

TEST_CASE("exact division") {
  const QLaurent p = qbinom(6, 3) * qint(5);
  CHECK(divide_exact(p, qint(5)) == qbinom(6, 3));
  CHECK_THROWS_AS(divide_exact(qint(5), qint(2)), std::domain_error);
}

TEST_CASE("structural predicates") {
  CHECK(is_nonnegative(qbinom(5, 2)));
  CHECK_FALSE(is_nonnegative(QLaurent(1) - QLaurent::monomial(2)));
  CHECK(in_half_powers(QLaurent::monomial(2)));
  CHECK_FALSE(in_half_powers(QLaurent::monomial(1)));
  CHECK_FALSE(is_symmetric(QLaurent::monomial(2)));
}

TEST_CASE("two-variable laurent operations") {
  const QALaurent p = QALaurent::monomial(2, -2) + QALaurent::monomial(1, 4, 3);
  CHECK(p.invert_a().invert_a() == p);
  CHECK(p.invert_q().invert_q() == p);
  CHECK(p.substitute_a(2) == QLaurent::monomial(-2) + QLaurent::monomial(9, 3));
}

TEST_CASE("truncated series respect their bound") {
  const TruncatedRSeries a(8, QALaurent::monomial(2, 0) + QALaurent::monomial(6, 4));
  const TruncatedRSeries b(8, QALaurent::monomial(4, -4, 2));
  const TruncatedRSeries ab = a * b;
  CHECK(ab == TruncatedRSeries::monomial(8, -4, 6, 2));
  CHECK(ab.retruncated(5).is_zero());
  CHECK(a.scale_a(1) == TruncatedRSeries(8, QALaurent::monomial(2, 0) + QALaurent::monomial(10, 4)));
  CHECK_THROWS(a * TruncatedRSeries::one(9));
}

TEST_CASE("printing uses reduced fractions") {
  CHECK(to_string(qint(2)) == "q^{1/2} + q^{-1/2}");
  CHECK(to_string(QLaurent()) == "0");
  CHECK(to_string(QLaurent::monomial(4, -3)) == "-3*q");
}
