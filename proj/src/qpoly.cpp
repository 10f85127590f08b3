#include "opstat/qpoly.hpp"

#include <mutex>
#include <ostream>
#include <stdexcept>

namespace opstat {

namespace {

constexpr Exponents kZero{0, 0, 0, 0};

Exponents add(const Exponents& a, const Exponents& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Exponents unit(Var v, int power = 1) {
  Exponents e = kZero;
  e[static_cast<int>(v)] = power;
  return e;
}

long choose2(long k) { return k * (k - 1) / 2; }

}  // namespace

LaurentPolynomial::LaurentPolynomial(long c) {
  if (c != 0) terms_.emplace(kZero, mpz_class(c));
}

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& c, const Exponents& e) {
  LaurentPolynomial f;
  f.add_term(e, c);
  return f;
}

LaurentPolynomial LaurentPolynomial::var(Var v, int power) { return monomial(1, unit(v, power)); }

mpz_class LaurentPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class LaurentPolynomial::at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LaurentPolynomial::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial f = *this;
  for (auto& [e, c] : f.terms_) c = -c;
  return f;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial f;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = f.terms_.try_emplace(add(ea, eb), 0);
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  std::erase_if(f.terms_, [](const auto& kv) { return kv.second == 0; });
  return f;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponents& e) const {
  LaurentPolynomial f;
  for (const auto& [ex, c] : terms_) f.terms_.emplace(add(ex, e), c);
  return f;
}

LaurentPolynomial LaurentPolynomial::substitute(const std::array<Exponents, 4>& subst) const {
  LaurentPolynomial f;
  for (const auto& [e, c] : terms_) {
    Exponents out = kZero;
    for (int v = 0; v < 4; ++v)
      for (int j = 0; j < 4; ++j) out[j] += e[v] * subst[v][j];
    f.add_term(out, c);
  }
  return f;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr const char* kNames[] = {"p", "q", "t", "x"};
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int v = 0; v < 4; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kNames[v];
      if (e[v] != 1) mono += '^' + std::to_string(e[v]);
    }
    std::string term;
    if (mono.empty())
      term = c.get_str();
    else if (c == 1)
      term = mono;
    else if (c == -1)
      term = "-" + mono;
    else
      term = c.get_str() + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------

TruncatedSeries TruncatedSeries::from_polynomial(const LaurentPolynomial& f, int order) {
  TruncatedSeries s(order);
  for (const auto& [e, c] : f.terms()) {
    int m = e[3];
    if (m < 0) throw std::invalid_argument("negative power of x in a power series");
    if (m > order) continue;
    Exponents rest = e;
    rest[3] = 0;
    s.coeffs_[m].add_term(rest, c);
  }
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (int m = 0; m <= order(); ++m) coeffs_[m] += o.coeffs_[m];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
  TruncatedSeries s(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const auto& c0 = coeffs_[0];
  if (c0.size() != 1 || abs(c0.terms().begin()->second) != 1)
    throw std::invalid_argument("constant term of the series is not a unit");
  auto [e0, s0] = *c0.terms().begin();
  Exponents neg{-e0[0], -e0[1], -e0[2], -e0[3]};
  LaurentPolynomial c0_inv = LaurentPolynomial::monomial(s0, neg);  // s0 = ±1 is its own inverse

  TruncatedSeries b(order());
  b.coeffs_[0] = c0_inv;
  for (int m = 1; m <= order(); ++m) {
    LaurentPolynomial acc;
    for (int j = 1; j <= m; ++j) acc += coeffs_[j] * b.coeffs_[m - j];
    b.coeffs_[m] = -(c0_inv * acc);
  }
  return b;
}

LaurentPolynomial TruncatedSeries::to_polynomial() const {
  LaurentPolynomial f;
  for (int m = 0; m <= order(); ++m) f += coeffs_[m].shifted(unit(Var::X, m));
  return f;
}

// ---------------------------------------------------------------------------

LaurentPolynomial q_int(int k, Var v) {
  if (k < 0) throw std::invalid_argument("negative q-integer");
  LaurentPolynomial f;
  for (int j = 0; j < k; ++j) f.add_term(unit(v, j), 1);
  return f;
}

LaurentPolynomial pq_int(int k) {
  if (k < 0) throw std::invalid_argument("negative p,q-integer");
  LaurentPolynomial f;
  for (int j = 0; j < k; ++j) f.add_term({k - 1 - j, j, 0, 0}, 1);
  return f;
}

LaurentPolynomial q_factorial(int k, Var v) {
  if (k < 0) throw std::invalid_argument("negative factorial");
  LaurentPolynomial f(1);
  for (int j = 2; j <= k; ++j) f *= q_int(j, v);
  return f;
}

LaurentPolynomial pq_factorial(int k) {
  if (k < 0) throw std::invalid_argument("negative factorial");
  LaurentPolynomial f(1);
  for (int j = 2; j <= k; ++j) f *= pq_int(j);
  return f;
}

LaurentPolynomial pochhammer(const LaurentPolynomial& a, const LaurentPolynomial& b, int n) {
  if (n < 0) throw std::invalid_argument("negative Pochhammer length");
  LaurentPolynomial f(1), factor = a;
  for (int j = 0; j < n; ++j) {
    f *= LaurentPolynomial(1) - factor;
    factor *= b;
  }
  return f;
}

LaurentPolynomial gauss_binomial(int n, int k, Var v) {
  if (n < 0) throw std::invalid_argument("negative Gaussian binomial");
  if (k < 0 || k > n) return {};
  // Pascal rule [n,k] = [n-1,k-1] + v^k [n-1,k].
  std::vector<LaurentPolynomial> row{LaurentPolynomial(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentPolynomial> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      if (j > 0) next[j] += row[j - 1];
      if (j < m) next[j] += row[j].shifted(unit(v, j));
    }
    row = std::move(next);
  }
  return row[k];
}

namespace {

// Triangular memo table filled row by row under a lock; rows never change
// once written.
class Triangle {
public:
  using Rule = LaurentPolynomial (*)(const std::vector<std::vector<LaurentPolynomial>>&, int n, int k);
  explicit Triangle(Rule rule) : rule_(rule) {}

  LaurentPolynomial at(int n, int k) {
    if (n < 0 || k < 0 || k > n) return {};
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      int m = static_cast<int>(rows_.size());
      std::vector<LaurentPolynomial> row(m + 1);
      for (int j = 0; j <= m; ++j) row[j] = rule_(rows_, m, j);
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

private:
  Rule rule_;
  std::mutex mutex_;
  std::vector<std::vector<LaurentPolynomial>> rows_;
};

using Rows = std::vector<std::vector<LaurentPolynomial>>;

const LaurentPolynomial& cell(const Rows& rows, int n, int k) {
  static const LaurentPolynomial zero;
  if (n < 0 || k < 0 || k > n) return zero;
  return rows[n][k];
}

LaurentPolynomial stirling_rule(const Rows& rows, int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return cell(rows, n - 1, k - 1).shifted({k - 1, 0, 0, 0}) + pq_int(k) * cell(rows, n - 1, k);
}

LaurentPolynomial s_hat_rule(const Rows& rows, int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return cell(rows, n - 1, k - 1).shifted({0, k - 1, 0, 0}) + (pq_int(k) * cell(rows, n - 1, k)).shifted({-n, 0, 0, 0});
}

LaurentPolynomial carlitz_rule(const Rows& rows, int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return (q_int(n - k) * cell(rows, n - 1, k - 1)).shifted({0, k, 0, 0}) + q_int(k + 1) * cell(rows, n - 1, k);
}

Triangle& stirling_table() {
  static Triangle t(stirling_rule);
  return t;
}
Triangle& s_hat_table() {
  static Triangle t(s_hat_rule);
  return t;
}
Triangle& carlitz_table() {
  static Triangle t(carlitz_rule);
  return t;
}

constexpr std::array<Exponents, 4> kPtoQ{{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
constexpr std::array<Exponents, 4> kPtoOne{{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
constexpr std::array<Exponents, 4> kQoverP{{{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};

}  // namespace

LaurentPolynomial stirling_pq(int n, int k) { return stirling_table().at(n, k); }
LaurentPolynomial stirling_q(int n, int k) { return stirling_pq(n, k).substitute(kPtoQ); }
LaurentPolynomial stirling_tilde(int n, int k) { return stirling_pq(n, k).substitute(kPtoOne); }
LaurentPolynomial s_hat_pq(int n, int k) { return s_hat_table().at(n, k); }
LaurentPolynomial carlitz_aq(int n, int k) { return carlitz_table().at(n, k); }

LaurentPolynomial s_hat_closed_form(int n, int k) {
  int e = static_cast<int>(choose2(k) - choose2(n - k + 1) - (n - k));
  return stirling_q(n, k).substitute(kQoverP).shifted({e, 0, 0, 0});
}

IdentityCheck check_zezh(int n, int k) {
  IdentityCheck r;
  r.lhs = q_factorial(k) * stirling_q(n, k);
  for (int m = 1; m <= k; ++m)
    r.rhs += (gauss_binomial(n - m, n - k) * carlitz_aq(n, m - 1)).shifted({0, k * (k - m), 0, 0});
  r.pass = r.lhs == r.rhs;
  return r;
}

namespace {

TruncatedSeries power_sum_series(int n, int order) {
  TruncatedSeries s(order);
  for (int k = 1; k <= order; ++k) s[k] = q_int(k).pow(n);
  return s;
}

TruncatedSeries x_q_pochhammer_inverse(int length, int order) {
  auto poch = pochhammer(LaurentPolynomial::var(Var::X), LaurentPolynomial::var(Var::Q), length);
  return TruncatedSeries::from_polynomial(poch, order).inverse();
}

}  // namespace

IdentityCheck check_q_frobenius(int n, int order) {
  TruncatedSeries lhs(order);
  for (int k = 1; k <= n; ++k) {
    auto numer = (q_factorial(k) * stirling_q(n, k)).shifted({0, 0, 0, k});
    lhs += TruncatedSeries::from_polynomial(numer, order) * x_q_pochhammer_inverse(k + 1, order);
  }
  IdentityCheck r{false, lhs.to_polynomial(), power_sum_series(n, order).to_polynomial()};
  r.pass = r.lhs == r.rhs;
  return r;
}

IdentityCheck check_q_frobenius_eulerian(int n, int order) {
  LaurentPolynomial numer;
  for (int d = 0; d < std::max(n, 1); ++d) numer += carlitz_aq(n, d).shifted({0, 0, 0, 1 + d});
  auto lhs = TruncatedSeries::from_polynomial(numer, order) * x_q_pochhammer_inverse(n + 1, order);
  IdentityCheck r{false, lhs.to_polynomial(), power_sum_series(n, order).to_polynomial()};
  r.pass = r.lhs == r.rhs;
  return r;
}

IdentityCheck check_s_hat(int n, int k) {
  IdentityCheck r{false, s_hat_pq(n, k), s_hat_closed_form(n, k)};
  r.pass = r.lhs == r.rhs;
  return r;
}

// ---------------------------------------------------------------------------

void Distribution::merge(const Distribution& o) {
  for (const auto& [k, c] : o.counts_) counts_[k] += c;
}

std::int64_t Distribution::total() const {
  std::int64_t t = 0;
  for (const auto& [k, c] : counts_) t += c;
  return t;
}

LaurentPolynomial Distribution::to_polynomial() const {
  LaurentPolynomial f;
  for (const auto& [k, c] : counts_) f.add_term(k, mpz_class(static_cast<long>(c)));
  return f;
}

}  // namespace opstat
