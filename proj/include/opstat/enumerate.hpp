#pragma once

// Exhaustive generators for the families of partitions, permutations and
// words, the rearrangement bijection β, and the identity verifier.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "opstat/core.hpp"
#include "opstat/qpoly.hpp"
#include "opstat/statistics.hpp"

namespace opstat {

using PartitionVisitor = std::function<void(const OrderedSetPartition&)>;

/// Set partitions of [n] into k blocks (k < 0: any number of blocks), in
/// standard form, ordered by restricted growth function.
void for_each_set_partition(int n, int k, const PartitionVisitor& visit);
/// Permutations of [k] in lexicographic order.
void for_each_permutation(int k, const std::function<void(const Permutation&)>& visit);
/// Rearrangements of 1^{n_1}...k^{n_k} in lexicographic order.
void for_each_word(const Composition& parts, const std::function<void(const Word&)>& visit);
/// Compositions of n with positive parts, in lexicographic order.
void for_each_composition(int n, const std::function<void(const Composition&)>& visit);
/// Set partitions (standard form) whose type is `type`.
void for_each_set_partition_of_type(const PartitionType& type, const PartitionVisitor& visit);

struct FamilySpec {
  enum class Kind { P, OP, OPType, PSigma, R };

  Kind kind = Kind::OP;
  int n = 0;
  int k = 0;
  PartitionType type;
  Permutation sigma;
  OrderedSetPartition base;

  static FamilySpec set_partitions(int n, int k) { return {Kind::P, n, k, {}, {}, {}}; }
  static FamilySpec ordered(int n, int k) { return {Kind::OP, n, k, {}, {}, {}}; }
  static FamilySpec of_type(PartitionType t) {
    int n = t.size(), k = t.num_blocks();
    return {Kind::OPType, n, k, std::move(t), {}, {}};
  }
  static FamilySpec sigma_partitions(int n, Permutation s) {
    int k = s.size();
    return {Kind::PSigma, n, k, {}, std::move(s), {}};
  }
  static FamilySpec rearrangements(OrderedSetPartition pi) {
    int n = pi.size(), k = pi.num_blocks();
    return {Kind::R, n, k, {}, {}, std::move(pi)};
  }

  std::string to_string() const;
};

/// Each member exactly once. Set partitions are taken in restricted growth
/// order and, for ordered families, each is followed by its block
/// rearrangements with σ in lexicographic order.
void generate(const FamilySpec& spec, const PartitionVisitor& visit);

/// Visits the members whose underlying set partition has index ≡ shard
/// (mod shards). `ordinal` is the member's position in generate's order.
void generate_shard(const FamilySpec& spec, int shard, int shards,
                    const std::function<void(std::uint64_t ordinal, const OrderedSetPartition&)>& visit);

std::uint64_t family_size(const FamilySpec& spec);

/// A statistic expression mapped to a variable.
struct Weight {
  StatExpr expr;
  Var var;
};

/// Σ over the family of Π var^{expr(π)}, folded over `jobs` threads.
LaurentPolynomial distribution(const FamilySpec& spec, const std::vector<Weight>& weights, int jobs = 1);

/// β: inserts openers and singletons of the standard-form π₀ according to
/// c ∈ C_k, where 0 ≤ c_j ≤ j-1.
OrderedSetPartition beta(const OrderedSetPartition& pi0, const std::vector<int>& c);
std::vector<int> beta_inv(const OrderedSetPartition& pi);

class ScaleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Largest n accepted for ordered-partition families: 12 unless the
/// OPSTAT_MAX_N environment variable says otherwise.
int max_ordered_n();

struct VerifyParams {
  int n = 0;
  int k = 0;
  /// thm3.5: a single base partition instead of all of P_n^k.
  std::optional<OrderedSetPartition> partition;
  /// eq1.1: a single composition instead of all compositions of n.
  std::optional<Composition> composition;
  /// qfrob: truncation order in x.
  int order = 6;
  int jobs = 1;
};

struct VerificationReport {
  std::string theorem;
  nlohmann::json params;
  bool pass = false;
  LaurentPolynomial lhs, rhs;
  std::optional<std::string> counterexample;
};

/// Known ids: thm3.1 thm3.2 thm3.3 thm3.4 thm3.5 eq1.1 eq2.3 eq5.8 eq9.2
/// zezh qfrob shat.
const std::vector<std::string>& verify_ids();

/// Builds both sides of the identity and compares them exactly; bijective
/// statements are also checked pointwise. Returns one report per
/// sub-identity. Throws std::invalid_argument on an unknown id and
/// ScaleError when n is beyond desk scale.
std::vector<VerificationReport> verify(std::string_view id, const VerifyParams& params);

}  // namespace opstat
