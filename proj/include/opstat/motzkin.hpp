#pragma once

// Labeled Motzkin paths for (unordered) set partitions and the involution
// Λ built from them.

#include <string>
#include <string_view>
#include <vector>

#include "opstat/core.hpp"

namespace opstat {

enum class MotzkinStep : char { Up = 'U', Flat = 'F', Down = 'D' };

struct MotzkinDiagram {
  std::vector<MotzkinStep> steps;
  std::vector<int> labels;  // 1-based labels

  int length() const { return static_cast<int>(steps.size()); }
  /// Height of the starting point of each step.
  std::vector<int> heights() const;
  /// Throws std::invalid_argument on a malformed path or label.
  void validate() const;
  /// "UUDUFD... 1,1,2,...".
  std::string to_string() const;

  friend bool operator==(const MotzkinDiagram&, const MotzkinDiagram&) = default;
};

MotzkinDiagram parse_motzkin(std::string_view text);

/// pi must be in standard form.
MotzkinDiagram motzkin_encode(const OrderedSetPartition& pi);
OrderedSetPartition motzkin_decode(const MotzkinDiagram& d);

MotzkinDiagram motzkin_g(const MotzkinDiagram& d);

/// decode ∘ g ∘ encode.
OrderedSetPartition lambda_map(const OrderedSetPartition& pi);

}  // namespace opstat
