#pragma once

// Lattice paths of depth k and length n, labeled path diagrams, and the
// bijections between diagrams and ordered set partitions built on them.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "opstat/core.hpp"

namespace opstat {

/// Step letters: N north, E east, D south-east, O null.
enum class Step : char { North = 'N', East = 'E', SouthEast = 'D', Null = 'O' };

char to_char(Step s);
Step step_from_char(char c);

class LatticePath {
public:
  LatticePath() = default;
  /// Throws std::invalid_argument unless the steps form a valid path.
  explicit LatticePath(std::vector<Step> steps);

  int length() const { return static_cast<int>(steps_.size()); }
  int depth() const { return depth_; }
  const std::vector<Step>& steps() const { return steps_; }
  /// 1-based.
  Step step(int i) const { return steps_[i - 1]; }

  /// Abscissa and height of step i, i.e. of the point w_{i-1}; i runs over
  /// 1..n+1.
  int x(int i) const { return xs_[i - 1]; }
  int y(int i) const { return ys_[i - 1]; }

  std::string to_string() const;

  friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.steps_ == b.steps_; }
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) { return a.steps_ <=> b.steps_; }

private:
  std::vector<Step> steps_;
  std::vector<int> xs_{0}, ys_{0};
  int depth_ = 0;
};

LatticePath parse_path(std::string_view text);

struct PathDiagram {
  LatticePath path;
  std::vector<int> labels;

  int length() const { return path.length(); }
  int depth() const { return path.depth(); }
  /// 1-based.
  int label(int i) const { return labels[i - 1]; }

  /// Throws std::invalid_argument on a label outside its range.
  void validate() const;
  /// "NNNOOEDDED 0,0,2,1,2,3,2,0,1,0".
  std::string to_string() const;

  friend bool operator==(const PathDiagram&, const PathDiagram&) = default;
};

PathDiagram parse_diagram(std::string_view text);

PartitionType path_type(const LatticePath& w);
LatticePath path_from_type(const PartitionType& type);

struct Heights {
  std::vector<int> x;  // x[i-1] = x_i(w), i = 1..n
  std::vector<int> y;
};

Heights heights(const LatticePath& w);

/// σ(i) = j when the i-th north step pairs with the j-th south-east step.
Permutation associated_permutation(const LatticePath& w);

LatticePath reverse_path(const LatticePath& w);

OrderedSetPartition phi(const PathDiagram& h);
PathDiagram phi_inv(const OrderedSetPartition& pi);

OrderedSetPartition psi(const PathDiagram& h);
PathDiagram psi_inv(const OrderedSetPartition& pi);

/// a[l] is the insertion position (0 = before the first block) carrying
/// label l.
std::vector<int> insertion_labels(const Trace& t);

/// The involution on diagrams over the reverse path.
PathDiagram varphi(const PathDiagram& h);

/// Replaces the opener/singleton labels of h by the d-code of sigma.
PathDiagram g_map(const PathDiagram& h, const Permutation& sigma);

/// Φ∘g_σ∘Φ⁻¹ on standard-form partitions.
OrderedSetPartition gamma_sigma(const OrderedSetPartition& pi, const Permutation& sigma);

OrderedSetPartition xi_map(const OrderedSetPartition& pi);
OrderedSetPartition upsilon(const OrderedSetPartition& pi);
OrderedSetPartition theta_map(const OrderedSetPartition& pi);

/// Visits every path of depth k and length n in lexicographic order of
/// step letters D < E < N < O.
void for_each_path(int n, int k, const std::function<void(const LatticePath&)>& visit);
/// Visits every diagram over every such path.
void for_each_diagram(int n, int k, const std::function<void(const PathDiagram&)>& visit);

}  // namespace opstat
