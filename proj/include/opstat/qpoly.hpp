#pragma once

// Exact Laurent polynomials in p, q, t, x with big-integer coefficients,
// q-analogues, and the Stirling/Eulerian recursions.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace opstat {

enum class Var { P = 0, Q = 1, T = 2, X = 3 };

using Exponents = std::array<int, 4>;

class LaurentPolynomial {
public:
  using Terms = std::map<Exponents, mpz_class>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long c);  // NOLINT(google-explicit-constructor)

  static LaurentPolynomial monomial(const mpz_class& c, const Exponents& e);
  static LaurentPolynomial var(Var v, int power = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpz_class coefficient(const Exponents& e) const;
  /// Sum of all coefficients, i.e. the value at p=q=t=x=1.
  mpz_class at_one() const;

  void add_term(const Exponents& e, const mpz_class& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(unsigned e) const;

  /// Multiplies by the monomial with exponent vector e.
  LaurentPolynomial shifted(const Exponents& e) const;

  /// Substitutes each variable v by the monomial subst[v]; e.g. q -> q/p is
  /// subst = {p, p^-1 q, t, x}.
  LaurentPolynomial substitute(const std::array<Exponents, 4>& subst) const;

  /// Terms in decreasing lexicographic order of (p,q,t,x) exponents, e.g.
  /// "2*p + q" or "q^3 + 2*q^2 + 2*q + 1".
  std::string to_string() const;

private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& f);

/// Power series in x with polynomial coefficients in p,q,t, truncated
/// after x^order.
class TruncatedSeries {
public:
  explicit TruncatedSeries(int order) : coeffs_(order + 1) {}
  /// Splits f by powers of x; negative x powers are rejected.
  static TruncatedSeries from_polynomial(const LaurentPolynomial& f, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPolynomial& operator[](int m) const { return coeffs_[m]; }
  LaurentPolynomial& operator[](int m) { return coeffs_[m]; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Multiplicative inverse; the constant coefficient must be ± a monomial.
  TruncatedSeries inverse() const;
  LaurentPolynomial to_polynomial() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  std::vector<LaurentPolynomial> coeffs_;
};

LaurentPolynomial q_int(int k, Var v = Var::Q);
/// [k]_{p,q} = p^{k-1} + p^{k-2} q + ... + q^{k-1}.
LaurentPolynomial pq_int(int k);
LaurentPolynomial q_factorial(int k, Var v = Var::Q);
LaurentPolynomial pq_factorial(int k);
/// (a;b)_n = (1-a)(1-ab)...(1-ab^{n-1}).
LaurentPolynomial pochhammer(const LaurentPolynomial& a, const LaurentPolynomial& b, int n);
/// Gaussian binomial in v; zero when k < 0 or k > n.
LaurentPolynomial gauss_binomial(int n, int k, Var v = Var::Q);

LaurentPolynomial stirling_pq(int n, int k);
/// S_q = S_{q,1}.
LaurentPolynomial stirling_q(int n, int k);
/// S̃_q = S_{1,q}.
LaurentPolynomial stirling_tilde(int n, int k);
LaurentPolynomial s_hat_pq(int n, int k);
/// p^{C(k,2)-C(n-k+1,2)-(n-k)} S_{q/p}(n,k).
LaurentPolynomial s_hat_closed_form(int n, int k);
LaurentPolynomial carlitz_aq(int n, int k);

struct IdentityCheck {
  bool pass = false;
  LaurentPolynomial lhs, rhs;
};

/// [k]_q! S_q(n,k) against Σ_m q^{k(k-m)} [n-m, n-k]_q A_q(n,m-1).
IdentityCheck check_zezh(int n, int k);
/// Σ_k [k]_q! S_q(n,k) x^k / (x;q)_{k+1} against Σ_{k≥1} [k]_q^n x^k, both
/// truncated after x^order (the series are returned as polynomials in x).
IdentityCheck check_q_frobenius(int n, int order);
/// Σ_σ x^{1+des σ} q^{maj σ} / (x;q)_{n+1} against Σ_{k≥1} [k]_q^n x^k.
IdentityCheck check_q_frobenius_eulerian(int n, int order);
IdentityCheck check_s_hat(int n, int k);

inline bool verify_zezh(int n, int k) { return check_zezh(n, k).pass; }
inline bool verify_q_frobenius(int n, int order) { return check_q_frobenius(n, order).pass; }

/// Accumulates monomials with machine-integer counts; convert once at the
/// end. Used to fold large enumerations.
class Distribution {
public:
  void add(const Exponents& e, std::int64_t count = 1) { counts_[e] += count; }
  void merge(const Distribution& o);
  std::int64_t total() const;
  LaurentPolynomial to_polynomial() const;

private:
  struct Hash {
    std::size_t operator()(const Exponents& e) const {
      std::size_t h = 0;
      for (int v : e) h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(v);
      return h;
    }
  };
  std::unordered_map<Exponents, std::int64_t, Hash> counts_;
};
}  // namespace opstat
