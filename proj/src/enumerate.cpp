#include "opstat/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "opstat/paths.hpp"

namespace opstat {

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

using IndexedVisitor = std::function<void(std::uint64_t, const OrderedSetPartition&)>;

// Restricted growth order: element i goes into an existing block (left to
// right) before opening a new one.
void set_partitions(int n, int k, const IndexedVisitor& visit) {
  std::vector<Block> blocks;
  std::uint64_t index = 0;
  std::function<void(int)> rec = [&](int i) {
    const int nb = static_cast<int>(blocks.size());
    if (i > n) {
      if (k < 0 || nb == k) visit(index++, OrderedSetPartition(blocks));
      return;
    }
    const int left = n - i;
    for (int j = 0; j < nb; ++j) {
      if (k >= 0 && k - nb > left) break;
      blocks[j].push_back(i);
      rec(i + 1);
      blocks[j].pop_back();
    }
    if (k < 0 || (nb + 1 <= k && k - nb - 1 <= left)) {
      blocks.push_back({i});
      rec(i + 1);
      blocks.pop_back();
    }
  };
  if (n == 0) {
    if (k <= 0) visit(0, OrderedSetPartition());
    return;
  }
  rec(1);
}

void type_partitions(const PartitionType& type, const IndexedVisitor& visit) {
  const int n = type.size();
  validate_type(type, n);
  std::vector<char> cls(n + 1);
  for (int e : type.openers) cls[e] = 'O';
  for (int e : type.closers) cls[e] = 'C';
  for (int e : type.singletons) cls[e] = 'S';
  for (int e : type.transients) cls[e] = 'T';

  std::vector<Block> blocks;
  std::vector<bool> active;
  std::uint64_t index = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      visit(index++, OrderedSetPartition(blocks));
      return;
    }
    switch (cls[i]) {
      case 'O':
      case 'S':
        blocks.push_back({i});
        active.push_back(cls[i] == 'O');
        rec(i + 1);
        blocks.pop_back();
        active.pop_back();
        break;
      default:
        for (std::size_t j = 0; j < blocks.size(); ++j) {
          if (!active[j]) continue;
          blocks[j].push_back(i);
          if (cls[i] == 'C') active[j] = false;
          rec(i + 1);
          active[j] = true;
          blocks[j].pop_back();
        }
    }
  };
  rec(1);
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  for_each_permutation(k, [&](const Permutation& s) { out.push_back(s); });
  return out;
}

void check_nk(int n, int k) {
  if (n < 0 || k < 0 || k > n || (n > 0 && k == 0))
    throw std::invalid_argument("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

std::uint64_t stirling2(int n, int k) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + j * s[i - 1][j];
  if (k >= 0) return k <= n ? s[n][k] : 0;
  std::uint64_t bell = 0;
  for (int j = 0; j <= n; ++j) bell += s[n][j];
  return bell;
}

/// Lexicographic rank of σ among permutations of its size.
std::uint64_t perm_rank(const Permutation& s) {
  auto c = s.lehmer_code();
  std::uint64_t r = 0;
  for (int i = 0; i < s.size(); ++i) r += c[i] * factorial(s.size() - 1 - i);
  return r;
}

}  // namespace

void for_each_set_partition(int n, int k, const PartitionVisitor& visit) {
  set_partitions(n, k, [&](std::uint64_t, const OrderedSetPartition& p) { visit(p); });
}

void for_each_permutation(int k, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

void for_each_word(const Composition& parts, const std::function<void(const Word&)>& visit) {
  Word w;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("negative part in composition");
    w.insert(w.end(), parts[i], static_cast<int>(i) + 1);
  }
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_composition(int n, const std::function<void(const Composition&)>& visit) {
  Composition c;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      visit(c);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      c.push_back(first);
      rec(rest - first);
      c.pop_back();
    }
  };
  if (n > 0) rec(n);
}

void for_each_set_partition_of_type(const PartitionType& type, const PartitionVisitor& visit) {
  type_partitions(type, [&](std::uint64_t, const OrderedSetPartition& p) { visit(p); });
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case Kind::P: return "P(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Kind::OP: return "OP(" + std::to_string(n) + "," + std::to_string(k) + ")";
    case Kind::OPType: return "OP(" + type.to_string() + ")";
    case Kind::PSigma: return "P(" + std::to_string(n) + "," + std::to_string(k) + ";" + sigma.to_string() + ")";
    case Kind::R: return "R(" + base.to_string() + ")";
  }
  return {};
}

void generate_shard(const FamilySpec& spec, int shard, int shards,
                    const std::function<void(std::uint64_t, const OrderedSetPartition&)>& visit) {
  if (shards < 1 || shard < 0 || shard >= shards) throw std::invalid_argument("bad shard");
  auto mine = [&](std::uint64_t s) { return static_cast<int>(s % shards) == shard; };
  switch (spec.kind) {
    case FamilySpec::Kind::P:
      set_partitions(spec.n, spec.k, [&](std::uint64_t s, const OrderedSetPartition& p) {
        if (mine(s)) visit(s, p);
      });
      break;
    case FamilySpec::Kind::OP:
    case FamilySpec::Kind::OPType: {
      const int k = spec.kind == FamilySpec::Kind::OP ? spec.k : spec.type.num_blocks();
      if (spec.kind == FamilySpec::Kind::OP) check_nk(spec.n, k);
      const auto perms = all_permutations(k);
      auto each = [&](std::uint64_t s, const OrderedSetPartition& p) {
        if (!mine(s)) return;
        for (std::size_t j = 0; j < perms.size(); ++j) visit(s * perms.size() + j, apply_block_permutation(p, perms[j]));
      };
      if (spec.kind == FamilySpec::Kind::OP)
        set_partitions(spec.n, k, each);
      else
        type_partitions(spec.type, each);
      break;
    }
    case FamilySpec::Kind::PSigma:
      check_nk(spec.n, spec.k);
      if (spec.sigma.size() != spec.k) throw std::invalid_argument("σ must have size k");
      set_partitions(spec.n, spec.k, [&](std::uint64_t s, const OrderedSetPartition& p) {
        if (mine(s)) visit(s, apply_block_permutation(p, spec.sigma));
      });
      break;
    case FamilySpec::Kind::R: {
      auto standard = standard_form(spec.base).partition;
      std::uint64_t j = 0;
      for_each_permutation(standard.num_blocks(), [&](const Permutation& s) {
        if (mine(j)) visit(j, apply_block_permutation(standard, s));
        ++j;
      });
      break;
    }
  }
}

void generate(const FamilySpec& spec, const PartitionVisitor& visit) {
  generate_shard(spec, 0, 1, [&](std::uint64_t, const OrderedSetPartition& p) { visit(p); });
}

std::uint64_t family_size(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::P: return stirling2(spec.n, spec.k);
    case FamilySpec::Kind::OP: check_nk(spec.n, spec.k); return factorial(spec.k) * stirling2(spec.n, spec.k);
    case FamilySpec::Kind::PSigma: check_nk(spec.n, spec.k); return stirling2(spec.n, spec.k);
    case FamilySpec::Kind::R: return factorial(spec.base.num_blocks());
    case FamilySpec::Kind::OPType: {
      std::uint64_t count = 0;
      type_partitions(spec.type, [&](std::uint64_t, const OrderedSetPartition&) { ++count; });
      return count * factorial(spec.type.num_blocks());
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

namespace {

/// Per-worker accumulator: a few distributions and, for each pointwise
/// check, the failure with the smallest ordinal.
struct Sink {
  struct Failure {
    std::uint64_t ordinal;
    std::string message;
  };

  Sink(int sums, int checks) : dists(sums), failures(checks) {}

  void add(int which, const Exponents& e) { dists[which].add(e); }
  void fail(int check, std::uint64_t ordinal, std::string message) {
    auto& f = failures[check];
    if (!f || ordinal < f->ordinal) f = Failure{ordinal, std::move(message)};
  }
  void merge(const Sink& o) {
    for (std::size_t i = 0; i < dists.size(); ++i) dists[i].merge(o.dists[i]);
    for (std::size_t c = 0; c < failures.size(); ++c)
      if (o.failures[c]) fail(static_cast<int>(c), o.failures[c]->ordinal, o.failures[c]->message);
  }

  std::vector<Distribution> dists;
  std::vector<std::optional<Failure>> failures;
};

using Source = std::function<void(int shard, int shards, const IndexedVisitor&)>;

Source family_source(const FamilySpec& spec) {
  return [spec](int shard, int shards, const IndexedVisitor& v) { generate_shard(spec, shard, shards, v); };
}

Sink fold(const Source& source, int jobs, int sums, int checks,
          const std::function<void(std::uint64_t, const OrderedSetPartition&, Sink&)>& visit) {
  jobs = std::max(1, jobs);
  std::vector<Sink> sinks(jobs, Sink(sums, checks));
  if (jobs == 1) {
    source(0, 1, [&](std::uint64_t ord, const OrderedSetPartition& p) { visit(ord, p, sinks[0]); });
  } else {
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int s = 0; s < jobs; ++s) {
      threads.emplace_back([&, s] {
        try {
          source(s, jobs, [&](std::uint64_t ord, const OrderedSetPartition& p) { visit(ord, p, sinks[s]); });
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }
  for (int s = 1; s < jobs; ++s) sinks[0].merge(sinks[s]);
  return std::move(sinks[0]);
}

}  // namespace

LaurentPolynomial distribution(const FamilySpec& spec, const std::vector<Weight>& weights, int jobs) {
  if (weights.empty()) throw std::invalid_argument("no weights given");
  Sink sink = fold(family_source(spec), jobs, 1, 0, [&](std::uint64_t, const OrderedSetPartition& p, Sink& out) {
    StatSummary s = summarize(p);
    Exponents e{0, 0, 0, 0};
    for (const auto& w : weights) e[static_cast<int>(w.var)] += static_cast<int>(w.expr.evaluate(s));
    out.add(0, e);
  });
  return sink.dists[0].to_polynomial();
}

// ---------------------------------------------------------------------------

OrderedSetPartition beta(const OrderedSetPartition& pi0, const std::vector<int>& c) {
  const int k = pi0.num_blocks();
  if (static_cast<int>(c.size()) != k) throw std::invalid_argument("c must have length k");
  for (int j = 0; j < k; ++j)
    if (c[j] < 0 || c[j] > j)
      throw std::invalid_argument("c_" + std::to_string(j + 1) + " = " + std::to_string(c[j]) + " outside 0.." +
                                  std::to_string(j));
  auto owner = pi0.block_of();
  Trace t;
  int j = 0;
  for (int i : pi0.elements()) {
    const Block& b = pi0.block(owner[i]);
    if (i == opener(b)) {
      int pos = insertion_labels(t)[c[j++]];
      t.blocks.insert(t.blocks.begin() + pos, Block{i});
      t.active.insert(t.active.begin() + pos, b.size() > 1);
    } else {
      auto it = std::find_if(t.blocks.begin(), t.blocks.end(),
                             [&](const Block& tb) { return tb.front() == opener(b); });
      auto idx = it - t.blocks.begin();
      it->push_back(i);
      if (i == closer(b)) t.active[idx] = false;
    }
  }
  return OrderedSetPartition::over_elements(std::move(t.blocks));
}

std::vector<int> beta_inv(const OrderedSetPartition& pi) {
  auto table = coord_table(pi);
  auto owner = pi.block_of();
  std::vector<int> c;
  int prev = 0;  // i_{j-1}, with i_0 = 0
  for (int i : pi.elements()) {
    if (i != opener(pi.block(owner[i]))) continue;
    c.push_back(table[i].rsb + bmaj(trace(pi, i)) - bmaj(trace(pi, prev)));
    prev = i;
  }
  return c;
}

int max_ordered_n() {
  if (const char* env = std::getenv("OPSTAT_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("OPSTAT_MAX_N is not an integer: ") + env);
    }
  }
  return 12;
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

std::string monomial_text(const Exponents& e) { return LaurentPolynomial::monomial(1, e).to_string(); }

std::optional<std::string> first_difference(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  std::set<Exponents, std::greater<>> keys;
  for (const auto& [e, c] : lhs.terms()) keys.insert(e);
  for (const auto& [e, c] : rhs.terms()) keys.insert(e);
  for (const auto& e : keys) {
    mpz_class a = lhs.coefficient(e), b = rhs.coefficient(e);
    if (a != b)
      return "coefficient of " + monomial_text(e) + ": lhs " + a.get_str() + ", rhs " + b.get_str();
  }
  return std::nullopt;
}

VerificationReport report(std::string id, json params, LaurentPolynomial lhs, LaurentPolynomial rhs,
                          const std::optional<Sink::Failure>& pointwise = std::nullopt) {
  VerificationReport r;
  r.theorem = std::move(id);
  r.params = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  if (pointwise)
    r.counterexample = pointwise->message;
  else
    r.counterexample = first_difference(r.lhs, r.rhs);
  r.pass = !r.counterexample;
  return r;
}

json nk_params(int n, int k, std::string variant = {}) {
  json p{{"n", n}, {"k", k}};
  if (!variant.empty()) p["variant"] = std::move(variant);
  return p;
}

void guard_scale(int n) {
  const int limit = max_ordered_n();
  if (n > limit)
    throw ScaleError("n=" + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(limit) +
                     " (set OPSTAT_MAX_N to raise it)");
}

const StatExpr& expr(const char* text) {
  static std::mutex m;
  static std::map<std::string, StatExpr> cache;
  std::lock_guard lock(m);
  auto [it, inserted] = cache.try_emplace(text);
  if (inserted) it->second = StatExpr::parse(text);
  return it->second;
}

int ev(const StatSummary& s, const char* text) { return static_cast<int>(expr(text).evaluate(s)); }

LaurentPolynomial x_sum(std::uint64_t count) {
  LaurentPolynomial f;
  for (std::uint64_t i = 0; i < count; ++i) f.add_term({0, 0, 0, static_cast<int>(i)}, 1);
  return f;
}

/// q^{C(k,2)} [k]_{p,q}! S_{p,q}(n,k).
LaurentPolynomial euler_mahonian_pq(int n, int k) {
  return LaurentPolynomial::var(Var::Q, k * (k - 1) / 2) * pq_factorial(k) * stirling_pq(n, k);
}

std::vector<VerificationReport> verify_thm31(int n, int k, int jobs) {
  check_nk(n, k);
  guard_scale(n);
  Sink sink = fold(family_source(FamilySpec::ordered(n, k)), jobs, 2, 1,
                   [](std::uint64_t ord, const OrderedSetPartition& p, Sink& out) {
                     StatSummary s = summarize(p);
                     Permutation sigma = standard_form(p).sigma;
                     int r = static_cast<int>(perm_rank(sigma));
                     int cinv = ev(s, "cinvLSB");
                     out.add(0, {ev(s, "MAK+bInv"), cinv, 0, r});
                     out.add(1, {ev(s, "MAKp+bInv"), cinv, 0, r});

                     auto image = xi_map(p);
                     StatSummary si = summarize(image);
                     bool ok = standard_form(image).sigma == sigma && ev(si, "MAK+bInv") == ev(s, "MAKp+bInv") &&
                               ev(si, "MAKp+bInv") == ev(s, "MAK+bInv") && ev(si, "cinvLSB") == cinv;
                     if (!ok) out.fail(0, ord, "Xi(" + p.to_string() + ") = " + image.to_string() +
                                                   " does not swap the triple within the same σ");
                   });
  LaurentPolynomial rhs;
  LaurentPolynomial s = stirling_pq(n, k);
  for_each_permutation(k, [&](const Permutation& sigma) {
    int inv = sigma.inv();
    rhs += s.shifted({inv, k * (k - 1) - inv, 0, static_cast<int>(perm_rank(sigma))});
  });
  return {
      report("thm3.1", nk_params(n, k, "MAK+bInv,cinvLSB by σ"), sink.dists[0].to_polynomial(), rhs),
      report("thm3.1", nk_params(n, k, "MAKp+bInv,cinvLSB by σ"), sink.dists[1].to_polynomial(), rhs),
      report("thm3.1", nk_params(n, k, "Xi transport"), sink.dists[0].to_polynomial(),
             sink.dists[1].to_polynomial(), sink.failures[0]),
  };
}

std::vector<VerificationReport> verify_euler_mahonian(const char* id, int n, int k, int jobs,
                                                      const std::array<const char*, 3>& stats) {
  check_nk(n, k);
  guard_scale(n);
  Sink sink = fold(family_source(FamilySpec::ordered(n, k)), jobs, 2, 0,
                   [&](std::uint64_t, const OrderedSetPartition& p, Sink& out) {
                     StatSummary s = summarize(p);
                     int c = ev(s, stats[2]);
                     out.add(0, {ev(s, stats[0]), c, 0, 0});
                     out.add(1, {ev(s, stats[1]), c, 0, 0});
                   });
  auto rhs = euler_mahonian_pq(n, k);
  return {
      report(id, nk_params(n, k, std::string(stats[0]) + "," + stats[2]), sink.dists[0].to_polynomial(), rhs),
      report(id, nk_params(n, k, std::string(stats[1]) + "," + stats[2]), sink.dists[1].to_polynomial(), rhs),
  };
}

std::vector<VerificationReport> verify_thm33(int n, int k, int jobs) {
  check_nk(n, k);
  guard_scale(n);
  std::map<PartitionType, int> rank;
  for_each_path(n, k, [&](const LatticePath& w) { rank.emplace(path_type(w), static_cast<int>(rank.size())); });

  Sink sink = fold(family_source(FamilySpec::ordered(n, k)), jobs, 2, 1,
                   [&](std::uint64_t ord, const OrderedSetPartition& p, Sink& out) {
                     StatSummary s = summarize(p);
                     PartitionType type = type_of(p);
                     int r = rank.at(type);
                     std::array<int, 3> inv_triple{ev(s, "MAK+bInv"), ev(s, "MAKp+bInv"), ev(s, "cinvLSB")};
                     out.add(0, {inv_triple[0], inv_triple[1], inv_triple[2], r});
                     out.add(1, {ev(s, "MAK+bMaj"), ev(s, "MAKp+bMaj"), ev(s, "cmajLSB"), r});

                     auto image = upsilon(p);
                     StatSummary si = summarize(image);
                     std::array<int, 3> maj_image{ev(si, "MAK+bMaj"), ev(si, "MAKp+bMaj"), ev(si, "cmajLSB")};
                     bool ok = type_of(image) == type && ev(si, "rsb_TC") == ev(s, "rsb_TC") &&
                               ev(si, "MAJ") == ev(s, "INV") && maj_image == inv_triple;
                     if (!ok) out.fail(0, ord, "Upsilon(" + p.to_string() + ") = " + image.to_string() +
                                                   " breaks type, rsb_TC or the triple transport");
                   });
  return {
      report("thm3.3", nk_params(n, k, "triples by type"), sink.dists[0].to_polynomial(),
             sink.dists[1].to_polynomial()),
      report("thm3.3", nk_params(n, k, "Upsilon transport"), sink.dists[0].to_polynomial(),
             sink.dists[1].to_polynomial(), sink.failures[0]),
  };
}

std::vector<VerificationReport> verify_thm35(const VerifyParams& params) {
  int n = params.n, k = params.k;
  Source source;
  if (params.partition) {
    auto base = standard_form(*params.partition).partition;
    n = base.size();
    k = base.num_blocks();
    source = [base](int shard, int, const IndexedVisitor& v) {
      if (shard == 0) v(0, base);
    };
  } else {
    check_nk(n, k);
    source = family_source(FamilySpec::set_partitions(n, k));
  }
  guard_scale(n);
  const auto perms = all_permutations(k);

  std::vector<std::vector<int>> codes;
  std::vector<int> c(k, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == k) {
      codes.push_back(c);
      return;
    }
    for (c[j] = 0; c[j] <= j; ++c[j]) rec(j + 1);
  };
  rec(0);

  const std::uint64_t count = params.partition ? 1 : stirling2(n, k);
  Sink sink = fold(source, params.jobs, 4, 1, [&](std::uint64_t ord, const OrderedSetPartition& p0, Sink& out) {
    const int x = static_cast<int>(ord);
    std::set<OrderedSetPartition> klass;
    for (const auto& sigma : perms) {
      auto p = apply_block_permutation(p0, sigma);
      StatSummary s = summarize(p);
      out.add(0, {0, ev(s, "INV"), 0, x});
      out.add(1, {0, ev(s, "MAJ"), 0, x});
      klass.insert(p);
    }
    std::set<OrderedSetPartition> image;
    for (const auto& code : codes) {
      auto p = beta(p0, code);
      int sum = std::accumulate(code.begin(), code.end(), 0);
      int maj = ev(summarize(p), "MAJ");
      out.add(2, {0, maj, 0, x});
      out.add(3, {0, sum, 0, x});
      image.insert(p);
      if (maj != sum || beta_inv(p) != code || !klass.count(p))
        out.fail(0, ord, "beta(" + p0.to_string() + ", c) = " + p.to_string() + " with MAJ " +
                             std::to_string(maj) + " and Σc = " + std::to_string(sum));
    }
    if (image != klass) out.fail(0, ord, "beta image differs from R(" + p0.to_string() + ")");
  });

  json jp = params.partition ? json{{"partition", params.partition->to_string()}} : nk_params(n, k);
  auto with_variant = [&](const char* v) {
    json q = jp;
    q["variant"] = v;
    return q;
  };
  auto rhs = q_factorial(k) * x_sum(count);
  return {
      report("thm3.5", with_variant("INV"), sink.dists[0].to_polynomial(), rhs),
      report("thm3.5", with_variant("MAJ"), sink.dists[1].to_polynomial(), rhs),
      report("thm3.5", with_variant("beta"), sink.dists[2].to_polynomial(), sink.dists[3].to_polynomial(),
             sink.failures[0]),
  };
}

LaurentPolynomial multinomial(const Composition& parts) {
  LaurentPolynomial f(1);
  int rest = std::accumulate(parts.begin(), parts.end(), 0);
  for (int part : parts) {
    f *= gauss_binomial(rest, part);
    rest -= part;
  }
  return f;
}

std::vector<VerificationReport> verify_eq11(const VerifyParams& params) {
  std::vector<Composition> comps;
  if (params.composition) {
    comps.push_back(*params.composition);
  } else {
    if (params.n < 1) throw std::invalid_argument("eq1.1 needs n >= 1 or a composition");
    for_each_composition(params.n, [&](const Composition& c) { comps.push_back(c); });
  }
  int total = 0;
  for (const auto& c : comps) total = std::max(total, std::accumulate(c.begin(), c.end(), 0));
  guard_scale(total);

  LaurentPolynomial inv_lhs, maj_lhs, rhs, cross_lhs, cross_rhs;
  LaurentPolynomial dmaj_lhs, dmaj_rhs, dinv_lhs, dinv_rhs;
  std::optional<Sink::Failure> failure;
  bool doubleton = 2 * total <= 10;
  const auto qq = LaurentPolynomial::var(Var::Q);

  for (std::size_t idx = 0; idx < comps.size(); ++idx) {
    const auto& parts = comps[idx];
    const Exponents xe{0, 0, 0, static_cast<int>(idx)};
    const int N = std::accumulate(parts.begin(), parts.end(), 0);
    LaurentPolynomial inv_dist, maj_dist;
    for_each_word(parts, [&](const Word& w) {
      auto ws = word_stats(w);
      inv_dist.add_term({0, ws.inv, 0, 0}, 1);
      maj_dist.add_term({0, ws.maj, 0, 0}, 1);
    });
    inv_lhs += inv_dist.shifted(xe);
    maj_lhs += maj_dist.shifted(xe);
    rhs += multinomial(parts).shifted(xe);

    LaurentPolynomial denom(1);
    for (int part : parts) denom *= pochhammer(qq, qq, part);
    cross_lhs += (maj_dist * denom).shifted(xe);
    cross_rhs += pochhammer(qq, qq, N).shifted(xe);

    if (!doubleton) continue;
    auto big = doubleton_partition(parts);
    auto classes = decompose_doubleton(big, parts).classes;
    LaurentPolynomial class_product(1);
    for (const auto& cl : classes) {
      LaurentPolynomial d;
      generate(FamilySpec::rearrangements(cl),
               [&](const OrderedSetPartition& p) { d.add_term({0, ev(summarize(p), "rsb_OS"), 0, 0}, 1); });
      class_product *= d;
    }
    dmaj_rhs += (maj_dist * class_product).shifted(xe);
    dinv_rhs += (inv_dist * class_product).shifted(xe);
    generate(FamilySpec::rearrangements(big), [&](const OrderedSetPartition& p) {
      StatSummary s = summarize(p);
      dmaj_lhs.add_term({0, ev(s, "MAJ"), 0, static_cast<int>(idx)}, 1);
      dinv_lhs.add_term({0, ev(s, "INV"), 0, static_cast<int>(idx)}, 1);
      if (failure) return;
      auto dec = decompose_doubleton(p, parts);
      auto ws = word_stats(dec.word);
      int rsb = 0;
      for (const auto& cl : dec.classes)
        if (cl.num_blocks()) rsb += ev(summarize(cl), "rsb_OS");
      if (s.bmaj != ws.maj || s.binv != ws.inv || ev(s, "rsb_OS") != rsb || recombine_doubleton(dec) != p)
        failure = Sink::Failure{0, "doubleton decomposition of " + p.to_string() + " does not split the statistics"};
    });
  }

  json jp;
  if (params.composition)
    jp["composition"] = *params.composition;
  else
    jp["n"] = params.n;
  auto with_variant = [&](const char* v) {
    json q = jp;
    q["variant"] = v;
    return q;
  };
  std::vector<VerificationReport> out{
      report("eq1.1", with_variant("inv"), inv_lhs, rhs),
      report("eq1.1", with_variant("maj"), maj_lhs, rhs),
      report("eq1.1", with_variant("maj times (q;q) products"), cross_lhs, cross_rhs),
  };
  if (doubleton) {
    out.push_back(report("eq1.1", with_variant("doubleton MAJ"), dmaj_lhs, dmaj_rhs, failure));
    out.push_back(report("eq1.1", with_variant("doubleton INV"), dinv_lhs, dinv_rhs, failure));
  }
  return out;
}

std::vector<VerificationReport> verify_eq23(int n, int k, int jobs) {
  check_nk(n, k);
  guard_scale(n);
  auto lhs = distribution(FamilySpec::set_partitions(n, k),
                          {{expr("rcb"), Var::P}, {expr("lsb"), Var::Q}}, jobs);
  return {report("eq2.3", nk_params(n, k, "rcb,lsb"), lhs, stirling_pq(n, k))};
}

std::vector<VerificationReport> verify_t_refined(const char* id, int n, int k, int jobs,
                                                 const std::vector<const char*>& t_stats) {
  check_nk(n, k);
  guard_scale(n);
  const int m = static_cast<int>(t_stats.size());
  Sink sink = fold(family_source(FamilySpec::ordered(n, k)), jobs, 2 * m, 0,
                   [&](std::uint64_t, const OrderedSetPartition& p, Sink& out) {
                     StatSummary s = summarize(p);
                     int cls = ev(s, "cls+rsb_TC"), opb = ev(s, "opb+rsb_TC"), q = ev(s, "sb-rsb_TC");
                     for (int i = 0; i < m; ++i) {
                       int t = ev(s, t_stats[i]);
                       out.add(2 * i, {cls, q, t, 0});
                       out.add(2 * i + 1, {opb, q, t, 0});
                     }
                   });
  auto rhs = q_factorial(k, Var::T) * stirling_pq(n, k);
  std::vector<VerificationReport> out;
  for (int i = 0; i < m; ++i) {
    out.push_back(report(id, nk_params(n, k, std::string("cls+rsb_TC,sb-rsb_TC,") + t_stats[i]),
                         sink.dists[2 * i].to_polynomial(), rhs));
    out.push_back(report(id, nk_params(n, k, std::string("opb+rsb_TC,sb-rsb_TC,") + t_stats[i]),
                         sink.dists[2 * i + 1].to_polynomial(), rhs));
  }
  return out;
}

std::vector<int> ks_for(int n, int k) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (k == 0) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return all;
  }
  check_nk(n, k);
  return {k};
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids{"thm3.1", "thm3.2", "thm3.3", "thm3.4", "thm3.5", "eq1.1",
                                            "eq2.3",  "eq5.8",  "eq9.2",  "zezh",   "qfrob",  "shat"};
  return ids;
}

std::vector<VerificationReport> verify(std::string_view id, const VerifyParams& params) {
  const int n = params.n, k = params.k, jobs = params.jobs;
  if (id == "thm3.1") return verify_thm31(n, k, jobs);
  if (id == "thm3.2") return verify_euler_mahonian("thm3.2", n, k, jobs, {"MAK+bInv", "MAKp+bInv", "cinvLSB"});
  if (id == "thm3.3") return verify_thm33(n, k, jobs);
  if (id == "thm3.4") return verify_euler_mahonian("thm3.4", n, k, jobs, {"MAK+bMaj", "MAKp+bMaj", "cmajLSB"});
  if (id == "thm3.5") return verify_thm35(params);
  if (id == "eq1.1") return verify_eq11(params);
  if (id == "eq2.3") return verify_eq23(n, k, jobs);
  if (id == "eq5.8") return verify_t_refined("eq5.8", n, k, jobs, {"Inv", "Maj"});
  if (id == "eq9.2") return verify_t_refined("eq9.2", n, k, jobs, {"MAJ"});
  if (id == "zezh" || id == "shat") {
    std::vector<VerificationReport> out;
    for (int kk : ks_for(n, k)) {
      auto c = id == "zezh" ? check_zezh(n, kk) : check_s_hat(n, kk);
      out.push_back(report(std::string(id), nk_params(n, kk), c.lhs, c.rhs));
    }
    return out;
  }
  if (id == "qfrob") {
    if (n < 1 || params.order < 1) throw std::invalid_argument("qfrob needs n >= 1 and order >= 1");
    auto a = check_q_frobenius(n, params.order);
    auto b = check_q_frobenius_eulerian(n, params.order);
    json p{{"n", n}, {"order", params.order}};
    json pa = p, pb = p;
    pa["variant"] = "stirling";
    pb["variant"] = "eulerian";
    return {report("qfrob", pa, a.lhs, a.rhs), report("qfrob", pb, b.lhs, b.rhs)};
  }
  throw std::invalid_argument("unknown identity \"" + std::string(id) + "\"");
}

}  // namespace opstat
