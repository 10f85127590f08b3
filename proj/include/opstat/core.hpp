#pragma once

// Ordered set partitions and the small objects that travel with them:
// traces, partition types, permutations with their Lehmer and d-codes,
// words and compositions.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opstat {

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Elements of a block, kept sorted increasing.
using Block = std::vector<int>;

inline int opener(const Block& b) { return b.front(); }
inline int closer(const Block& b) { return b.back(); }

class Permutation;

/// A sequence of disjoint nonempty blocks.
///
/// The validated constructor requires the union of the blocks to be
/// exactly {1..n}. `over_elements` relaxes this to any finite set of
/// positive integers; statistics only look at the relative order of
/// elements, so they apply unchanged to such partitions (the doubleton
/// decomposition produces them).
class OrderedSetPartition {
public:
  OrderedSetPartition() = default;
  explicit OrderedSetPartition(std::vector<Block> blocks);

  static OrderedSetPartition over_elements(std::vector<Block> blocks);

  int size() const { return n_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int j) const { return blocks_[j]; }

  /// All elements in increasing order.
  std::vector<int> elements() const;
  /// Largest element, 0 for the empty partition.
  int max_element() const { return max_; }
  /// Lookup table: block_of()[e] is the 0-based block index of element e,
  /// or -1 when e is not an element. Sized max_element()+1.
  std::vector<int> block_of() const;

  /// True when blocks appear in increasing order of their minima.
  bool is_standard_form() const;

  std::string to_string() const;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition& a, const OrderedSetPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }

private:
  struct unchecked_tag {};
  OrderedSetPartition(std::vector<Block> blocks, unchecked_tag);

  std::vector<Block> blocks_;
  int n_ = 0;
  int max_ = 0;
};

/// Parses "6 8/5/1 4 7/3 9/2". Braces and commas are also accepted:
/// "{1,4}/{2,3}" or "{1,4}{2,3}". Element order inside a block is ignored.
OrderedSetPartition parse_partition(std::string_view text);

/// The four element classes: strict openers, strict closers, singletons
/// and transients. Each set is sorted increasing.
struct PartitionType {
  std::vector<int> openers;
  std::vector<int> closers;
  std::vector<int> singletons;
  std::vector<int> transients;

  int size() const {
    return static_cast<int>(openers.size() + closers.size() + singletons.size() +
                            transients.size());
  }
  int num_blocks() const { return static_cast<int>(openers.size() + singletons.size()); }
  std::string to_string() const;

  friend bool operator==(const PartitionType&, const PartitionType&) = default;
  friend auto operator<=>(const PartitionType&, const PartitionType&) = default;
};

PartitionType type_of(const OrderedSetPartition& pi);

/// Checks disjointness, coverage of {1..n} and |O| = |C|.
void validate_type(const PartitionType& type, int n);

/// (C̄, Ō, S̄, T̄) with i ↦ n+1-i.
PartitionType complement_type(const PartitionType& type, int n);

/// Restriction of an ordered partition to [i]. An active block is one whose
/// maximum has not been reached yet; it behaves as if it ended with ∞.
struct Trace {
  std::vector<Block> blocks;
  std::vector<bool> active;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  int num_active() const;
  /// Closer with ∞ encoded as INT32_MAX.
  int closer_of(int j) const;
  /// Block index containing e, or -1.
  int find(int e) const;
  std::string to_string() const;

  friend bool operator==(const Trace&, const Trace&) = default;
};

inline constexpr int kInfinity = INT32_MAX;

Trace trace(const OrderedSetPartition& pi, int i);
Trace parse_trace(std::string_view text);

class Permutation {
public:
  Permutation() = default;
  /// One-line notation, values 1..k.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);
  static Permutation from_lehmer(std::span<const int> code);
  static Permutation from_d_code(std::span<const int> code);

  int size() const { return static_cast<int>(images_.size()); }
  /// 1-based: operator()(i) = σ(i).
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  std::vector<int> lehmer_code() const;
  std::vector<int> d_code() const;

  int inv() const;
  int des() const;
  int maj() const;

  /// "5 4 1 3 2".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// Accepts "5 4 1 3 2", "5,4,1,3,2" or, when k ≤ 9, "54132".
Permutation parse_permutation(std::string_view text);

/// π = B_{σ(1)}/…/B_{σ(k)} with B_1/…/B_k the standard form.
struct StandardForm {
  OrderedSetPartition partition;
  Permutation sigma;
};

StandardForm standard_form(const OrderedSetPartition& pi);

/// Reorders the blocks of a standard-form partition: result block j is
/// block σ(j) of `standard`.
OrderedSetPartition apply_block_permutation(const OrderedSetPartition& standard,
                                            const Permutation& sigma);

using Word = std::vector<int>;

struct WordStats {
  int des = 0;
  int inv = 0;
  int maj = 0;
  friend bool operator==(const WordStats&, const WordStats&) = default;
};

WordStats word_stats(std::span<const int> w);

using Composition = std::vector<int>;

/// Standard-form partition of [2N] into the doubletons
/// {2N_{i-1}+j, 2N_{i-1}+n_i+j}.
OrderedSetPartition doubleton_partition(const Composition& parts);

struct DoubletonDecomposition {
  Word word;
  std::vector<OrderedSetPartition> classes;
};

/// Splits a rearrangement of doubleton_partition(parts) into its letter
/// word and the per-letter subsequences of blocks.
DoubletonDecomposition decompose_doubleton(const OrderedSetPartition& pi,
                                           const Composition& parts);

/// Inverse of decompose_doubleton.
OrderedSetPartition recombine_doubleton(const DoubletonDecomposition& d);

}  // namespace opstat
