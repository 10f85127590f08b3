#include <gtest/gtest.h>

#include <random>

#include "opstat/qpoly.hpp"
#include "oracle.hpp"

using namespace opstat;

namespace {

const LaurentPolynomial p = LaurentPolynomial::var(Var::P);
const LaurentPolynomial q = LaurentPolynomial::var(Var::Q);
const LaurentPolynomial t = LaurentPolynomial::var(Var::T);
const LaurentPolynomial x = LaurentPolynomial::var(Var::X);

LaurentPolynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-2, 3), c(-5, 5), len(0, 4);
  LaurentPolynomial f;
  for (int i = len(rng); i > 0; --i) f.add_term({e(rng), e(rng), e(rng), e(rng)}, c(rng));
  return f;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  EXPECT_TRUE(LaurentPolynomial().is_zero());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p + q) * (p - q), p * p - q * q);
  EXPECT_EQ((1 + q).pow(3), 1 + 3 * q + 3 * q * q + q.pow(3));
  EXPECT_EQ(LaurentPolynomial::var(Var::P, -1) * p, LaurentPolynomial(1));
  EXPECT_EQ((2 * p * q).coefficient({1, 1, 0, 0}), 2);
  EXPECT_EQ((p + q).shifted({0, 0, 1, 0}), p * t + q * t);
  EXPECT_EQ((1 + q + q * q).at_one(), 3);
  EXPECT_EQ((p * q + x).substitute({{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}), q + x);
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(LaurentPolynomial().to_string(), "0");
  EXPECT_EQ((2 * p + q).to_string(), "2*p + q");
  EXPECT_EQ((q.pow(3) + 2 * q * q + 2 * q + 1).to_string(), "q^3 + 2*q^2 + 2*q + 1");
  EXPECT_EQ((p * q - 1).to_string(), "p*q - 1");
  EXPECT_EQ((-x).to_string(), "-x");
  EXPECT_EQ(LaurentPolynomial::var(Var::T, -2).to_string(), "t^-2");
}

TEST(Polynomial, BigCoefficients) {
  auto f = LaurentPolynomial(1000000007);
  auto g = f.pow(4);
  EXPECT_EQ(g.coefficient({0, 0, 0, 0}), mpz_class("1000000028000000294000001372000002401"));
}

TEST(Polynomial, RingLawsRandom) {
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, LaurentPolynomial());
    ASSERT_EQ(-(-a), a);
    ASSERT_EQ(oracle::from(a * b), oracle::mul(oracle::from(a), oracle::from(b)));
  }
}

TEST(QAnalogues, Basics) {
  EXPECT_EQ(q_int(0), LaurentPolynomial());
  EXPECT_EQ(q_int(3), 1 + q + q * q);
  EXPECT_EQ(pq_int(3), p * p + p * q + q * q);
  EXPECT_EQ(q_factorial(3), (1 + q) * (1 + q + q * q));
  EXPECT_EQ(q_factorial(0), LaurentPolynomial(1));
  EXPECT_EQ(q_int(2, Var::T), 1 + t);
  EXPECT_EQ(pochhammer(x, q, 2), (1 - x) * (1 - x * q));
  EXPECT_EQ(pochhammer(x, q, 0), LaurentPolynomial(1));
  EXPECT_EQ(gauss_binomial(4, 2), 1 + q + 2 * q * q + q.pow(3) + q.pow(4));
  EXPECT_TRUE(gauss_binomial(3, 4).is_zero());
  EXPECT_TRUE(gauss_binomial(3, -1).is_zero());
  EXPECT_THROW(q_int(-1), std::invalid_argument);
}

TEST(QAnalogues, FactorialAndGaussMatchOracle) {
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(oracle::from(pq_factorial(k)), oracle::pq_factorial(k));
    // [k]_{p,q}! is symmetric in p and q.
    EXPECT_EQ(pq_factorial(k).substitute({{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}), pq_factorial(k));
  }
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(oracle::from(gauss_binomial(n, k)), oracle::gauss(n, k)) << n << " " << k;
}

TEST(Stirling, SmallValues) {
  EXPECT_EQ(stirling_pq(3, 2), p * p + p * q + p);
  EXPECT_EQ(stirling_pq(0, 0), LaurentPolynomial(1));
  EXPECT_TRUE(stirling_pq(3, 0).is_zero());
  EXPECT_TRUE(stirling_pq(2, 3).is_zero());
  EXPECT_EQ(stirling_q(3, 2), 2 * q + q * q);
  EXPECT_EQ(stirling_tilde(3, 2), 2 + q);
}

TEST(Stirling, MatchesOracle) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      auto s = stirling_pq(n, k);
      ASSERT_EQ(oracle::from(s), oracle::rcb_lsb(n, k)) << n << " " << k;
      ASSERT_EQ(s.at_one(), static_cast<long>(oracle::set_partitions(n, k).size()));
      ASSERT_EQ(stirling_q(n, k), stirling_tilde(n, k).shifted({0, k * (k - 1) / 2, 0, 0}));
    }
}

TEST(Eulerian, MatchesOracle) {
  for (int n = 1; n <= 7; ++n) {
    LaurentPolynomial sum;
    for (int m = 0; m < n; ++m) {
      ASSERT_EQ(oracle::from(carlitz_aq(n, m)), oracle::eulerian(n, m)) << n << " " << m;
      sum += carlitz_aq(n, m);
    }
    ASSERT_EQ(sum, q_factorial(n));
  }
}

TEST(Series, Inverse) {
  auto s = TruncatedSeries::from_polynomial(1 - x, 5);
  auto inv = s.inverse();
  EXPECT_EQ(inv.to_polynomial(), 1 + x + x * x + x.pow(3) + x.pow(4) + x.pow(5));
  EXPECT_EQ((s * inv).to_polynomial(), LaurentPolynomial(1));
  auto u = TruncatedSeries::from_polynomial(pochhammer(x, q, 3), 6);
  EXPECT_EQ((u * u.inverse()).to_polynomial(), LaurentPolynomial(1));
  EXPECT_THROW(TruncatedSeries::from_polynomial(x.pow(2), 6).inverse(), std::invalid_argument);
  EXPECT_THROW(TruncatedSeries::from_polynomial(LaurentPolynomial::var(Var::X, -1), 3), std::invalid_argument);
}

TEST(Identities, Zezh) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_TRUE(verify_zezh(n, k)) << n << " " << k;
}

TEST(Identities, QFrobenius) {
  for (int n = 1; n <= 4; ++n) {
    auto c = check_q_frobenius(n, 6);
    EXPECT_TRUE(c.pass) << c.lhs << " vs " << c.rhs;
    EXPECT_TRUE(check_q_frobenius_eulerian(n, 6).pass) << n;
  }
  // x coefficient of the right side is [1]^n = 1.
  EXPECT_EQ(check_q_frobenius(3, 2).rhs.coefficient({0, 0, 0, 1}), 1);
}

TEST(Identities, SHat) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      EXPECT_TRUE(check_s_hat(n, k).pass) << n << " " << k;
      EXPECT_EQ(s_hat_pq(n, k), s_hat_closed_form(n, k));
    }
}

TEST(Distribution, FoldsCounts) {
  Distribution d;
  EXPECT_EQ(d.total(), 0);
  EXPECT_TRUE(d.to_polynomial().is_zero());
  d.add({1, 0, 0, 0});
  d.add({1, 0, 0, 0}, 2);
  d.add({0, -1, 0, 0});
  Distribution e;
  e.add({0, -1, 0, 0}, 4);
  d.merge(e);
  EXPECT_EQ(d.total(), 8);
  EXPECT_EQ(d.to_polynomial(), 3 * p + 5 * LaurentPolynomial::var(Var::Q, -1));
}
