// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "opstat/enumerate.hpp"
#include "opstat/motzkin.hpp"
#include "opstat/paths.hpp"
#include "opstat/statistics.hpp"

using namespace opstat;

namespace {

// Collects mismatches; only the first few are kept for the report.
struct Check {
  std::vector<std::string> failures;
  long checked = 0, failed = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (failures.size() < 3) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    expect(got == want, s.str());
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_ms;  // 0: no time limit
  std::function<void(Check&)> run;
};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

void verify_range(Check& c, const std::string& id, int max_n, int max_k = 99) {
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= std::min(n, max_k); ++k) {
      VerifyParams params;
      params.n = n;
      params.k = k;
      params.jobs = jobs();
      for (const auto& r : verify(id, params))
        c.expect(r.pass, id + " " + r.params.dump() + " " + r.counterexample.value_or("polynomials differ"));
    }
}

void table(Check& c) {
  auto pi = parse_partition("6 8/5/1 4 7/3 9/2");
  const std::vector<int> order{6, 8, 5, 1, 4, 7, 3, 9, 2};
  const std::vector<std::pair<StatName, std::vector<int>>> rows{
      {StatName::los, {0, 0, 0, 0, 0, 2, 1, 3, 1}}, {StatName::ros, {4, 4, 3, 0, 2, 2, 1, 1, 0}},
      {StatName::lob, {0, 0, 1, 2, 2, 0, 2, 0, 3}}, {StatName::rob, {0, 0, 0, 2, 0, 0, 0, 0, 0}},
      {StatName::lcs, {0, 0, 0, 0, 0, 1, 0, 3, 0}}, {StatName::rcs, {2, 3, 1, 0, 1, 1, 1, 1, 0}},
      {StatName::lcb, {0, 0, 1, 2, 2, 1, 3, 0, 4}}, {StatName::rcb, {2, 1, 2, 2, 1, 1, 0, 0, 0}},
      {StatName::lsb, {0, 0, 0, 0, 0, 1, 1, 0, 1}}, {StatName::rsb, {2, 1, 2, 0, 1, 1, 0, 0, 0}},
  };
  auto t = coord_table(pi);
  for (const auto& [name, row] : rows)
    for (std::size_t i = 0; i < order.size(); ++i)
      c.equal(t[order[i]].get(name), row[i], std::string(to_string(name)) + " at " + std::to_string(order[i]));
  c.equal(stat_restricted(pi, StatName::ros, Restriction::OS), 8, "ros_OS");
  c.equal(stat_restricted(pi, StatName::rsb, Restriction::TC), 3, "rsb_TC");
}

void chain(Check& c) {
  auto h = parse_diagram("NNNOOEDDED 0,0,2,1,2,3,2,0,1,0");
  auto a = phi(h), b = psi(h);
  c.equal(a.to_string(), "6/3 5 7/1 4 10/9/2 8", "phi");
  c.equal(b.to_string(), "6/3 5 7/9/1 4 10/2 8", "psi");
  c.equal(xi_map(a).to_string(), "4 6 8/3 7 10/1 9/5/2", "xi");
  c.equal(theta_map(b).to_string(), "4 6 8/1 7 10/3 9/5/2", "theta");
  c.equal(gamma_sigma(parse_partition("1 5 7/2 4 10/3 8/6/9"), parse_permutation("43152")).to_string(),
          "6/3 5 7/1 4 10/9/2 8", "gamma");
}

void labels(Check& c) {
  auto t = parse_trace("6 11 ∞/3 5 7/1 4 10 ∞/9/2 8");
  auto a = insertion_labels(t);
  c.expect(a == std::vector<int>{5, 4, 2, 0, 1, 3}, "labels differ from (5,4,2,0,1,3)");
  for (int l = 0; l < static_cast<int>(a.size()); ++l) {
    Trace u = t;
    u.blocks.insert(u.blocks.begin() + a[l], Block{12});
    u.active.insert(u.active.begin() + a[l], false);
    c.equal(trace_rsb(u, 12) + bmaj(u) - bmaj(t), l, "rsb + change of bMaj for label " + std::to_string(l));
  }
}

void motzkin(Check& c) {
  auto pi = parse_partition("1 4 15/2 3/5 6/7 10 13/8/9 11/12 14");
  auto l = lambda_map(pi);
  c.equal(l.to_string(), "1 12 15/2 4/3 6 9/5 7/8/10 11/13 14", "lambda");
  c.equal(composite(pi, StatName::MAK), 37, "MAK");
  c.equal(stat(l, StatName::rcb), 37, "rcb of the image");
  c.equal(stat(pi, StatName::lcb), 16, "lcb");
  c.equal(stat(l, StatName::lcb), 16, "lcb of the image");
}

void round_trips(Check& c) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      for_each_diagram(n, k, [&](const PathDiagram& h) {
        c.expect(phi_inv(phi(h)) == h, "phi_inv(phi) at " + h.to_string());
        c.expect(psi_inv(psi(h)) == h, "psi_inv(psi) at " + h.to_string());
        c.expect(varphi(varphi(h)) == h, "varphi twice at " + h.to_string());
        auto pi = phi(h);
        c.expect(xi_map(xi_map(pi)) == pi, "xi twice at " + pi.to_string());
        c.expect(theta_map(theta_map(pi)) == pi, "theta twice at " + pi.to_string());
        auto ty = type_of(pi);
        c.expect(complement_type(complement_type(ty, n), n) == ty, "complement twice at " + pi.to_string());
      });
      for_each_set_partition(n, k, [&](const OrderedSetPartition& pi) {
        c.expect(lambda_map(lambda_map(pi)) == pi, "lambda twice at " + pi.to_string());
      });
    }
  for (int k = 1; k <= 5; ++k)
    for_each_set_partition(5, k, [&](const OrderedSetPartition& pi0) {
      generate(FamilySpec::rearrangements(pi0), [&](const OrderedSetPartition& pi) {
        c.expect(beta(pi0, beta_inv(pi)) == pi, "beta round trip at " + pi.to_string());
      });
    });
}

void eq11(Check& c) {
  for (int n = 1; n <= 7; ++n) {
    VerifyParams params;
    params.n = n;
    params.jobs = jobs();
    for (const auto& r : verify("eq1.1", params))
      c.expect(r.pass, "eq1.1 " + r.params.dump() + " " + r.counterexample.value_or("polynomials differ"));
  }
}

void section10(Check& c) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) c.expect(verify_zezh(n, k), "zezh n=" + std::to_string(n) + " k=" + std::to_string(k));
  for (int n = 1; n <= 4; ++n) {
    c.expect(verify_q_frobenius(n, 6), "q-Frobenius n=" + std::to_string(n));
    c.expect(check_q_frobenius_eulerian(n, 6).pass, "q-Frobenius (Eulerian form) n=" + std::to_string(n));
  }
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      c.expect(check_s_hat(n, k).pass, "s-hat n=" + std::to_string(n) + " k=" + std::to_string(k));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "coordinate table of 6 8/5/1 4 7/3 9/2", 1, table},
      {2, "bijection chain on the example diagram", 10, chain},
      {3, "insertion labels of the example trace", 0, labels},
      {4, "Motzkin involution example", 0, motzkin},
      {5, "round trips and involutions, n <= 6; beta on P_5^k", 30000, round_trips},
      {6, "thm3.2 and thm3.4, k <= n <= 8", 60000,
       [](Check& c) {
         verify_range(c, "thm3.2", 8);
         verify_range(c, "thm3.4", 8);
       }},
      {7, "thm3.1 with Xi transport, k <= n <= 7", 0, [](Check& c) { verify_range(c, "thm3.1", 7); }},
      {8, "thm3.3 per type with Upsilon transport, n <= 7", 0, [](Check& c) { verify_range(c, "thm3.3", 7); }},
      {9, "thm3.5 over R(pi0) for every pi0 in P_n^k, n <= 6", 0, [](Check& c) { verify_range(c, "thm3.5", 6); }},
      {10, "eq1.1 for compositions of n <= 7 with doubleton factorization", 0, eq11},
      {11, "zezh n <= 8, q-Frobenius n <= 4 to x^6, s-hat n <= 6", 10000, section10},
      {12, "eq2.3 n <= 8; eq5.8 and eq9.2 n <= 7", 0,
       [](Check& c) {
         verify_range(c, "eq2.3", 8);
         verify_range(c, "eq5.8", 7);
         verify_range(c, "eq9.2", 7);
       }},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_ms > 0 && ms > cr.limit_ms)
      c.failures.push_back("took " + std::to_string(ms) + " ms, limit " + std::to_string(cr.limit_ms) + " ms");
    bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%ld checks, %ld failed, %.1f ms)\n", ok ? "PASS" : "FAIL", cr.number,
                cr.title.c_str(), c.checked, c.failed, ms);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
