#pragma once

// Coordinate, block and composite statistics on ordered set partitions.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opstat/core.hpp"

namespace opstat {

enum class StatName {
  los, ros, lob, rob, lcs, rcs, lcb, rcb, lsb, rsb,
  bInv, bMaj, bDes, cbInv, cbMaj,
  MAK, MAKp, cinvLSB, cmajLSB, INV, MAJ,
  cls, opb, sb, Inv, Maj,
};

inline constexpr std::array kAllStatNames = {
    StatName::los,   StatName::ros,   StatName::lob,   StatName::rob,     StatName::lcs,
    StatName::rcs,   StatName::lcb,   StatName::rcb,   StatName::lsb,     StatName::rsb,
    StatName::bInv,  StatName::bMaj,  StatName::bDes,  StatName::cbInv,   StatName::cbMaj,
    StatName::MAK,   StatName::MAKp,  StatName::cinvLSB, StatName::cmajLSB, StatName::INV,
    StatName::MAJ,   StatName::cls,   StatName::opb,   StatName::sb,      StatName::Inv,
    StatName::Maj,
};

/// The ten coordinate statistics in table order.
inline constexpr std::array kCoordinateNames = {
    StatName::los, StatName::ros, StatName::lob, StatName::rob, StatName::lcs,
    StatName::rcs, StatName::lcb, StatName::rcb, StatName::lsb, StatName::rsb,
};

std::string_view to_string(StatName name);
/// Case-insensitive; accepts "mak'" and "makp" for MAKp.
StatName parse_stat_name(std::string_view text);
bool is_coordinate(StatName name);

/// Which elements a coordinate sum runs over.
enum class Restriction { All, OS, TC };

struct CoordStats {
  int los = 0, ros = 0, lob = 0, rob = 0, lcs = 0, rcs = 0, lcb = 0, rcb = 0, lsb = 0, rsb = 0;

  int get(StatName name) const;
  CoordStats& operator+=(const CoordStats& o);
  friend bool operator==(const CoordStats&, const CoordStats&) = default;
};

/// Coordinate statistics of element i. Throws std::out_of_range if i is
/// not an element of pi.
CoordStats coord_stats(const OrderedSetPartition& pi, int i);

/// Coordinate statistics of every element, indexed by element value
/// (entries for non-elements are zero).
std::vector<CoordStats> coord_table(const OrderedSetPartition& pi);

/// B_i ≻ B_j, blocks 1-based.
bool block_relation(const OrderedSetPartition& pi, int i, int j);

int binv(const OrderedSetPartition& pi);
std::vector<int> bdes_set(const OrderedSetPartition& pi);
int bmaj(const OrderedSetPartition& pi);
std::vector<int> bdes_set(const Trace& t);
int bmaj(const Trace& t);

/// Number of blocks right of i's block with opener < i < closer, an
/// active block's closer being ∞.
int trace_rsb(const Trace& t, int i);
/// Number of blocks right of i's block with opener < i.
int trace_ros(const Trace& t, int i);

/// Everything needed to evaluate any StatName, computed in one pass.
struct StatSummary {
  int n = 0;
  int k = 0;
  CoordStats all, os, tc;
  int binv = 0, bmaj = 0, bdes = 0;
  int inv_sigma = 0, maj_sigma = 0;

  long value(StatName name, Restriction r = Restriction::All) const;
};

StatSummary summarize(const OrderedSetPartition& pi);

long stat(const OrderedSetPartition& pi, StatName name);
long stat_restricted(const OrderedSetPartition& pi, StatName name, Restriction r);
long composite(const OrderedSetPartition& pi, StatName name);

/// Integer linear combination of (optionally restricted) statistics, such
/// as "MAK+bInv" or "sb-rsb_TC".
class StatExpr {
public:
  struct Term {
    int coefficient;
    StatName name;
    Restriction restriction;
  };

  StatExpr() = default;
  explicit StatExpr(std::vector<Term> terms) : terms_(std::move(terms)) {}
  static StatExpr parse(std::string_view text);

  long evaluate(const StatSummary& s) const;
  long evaluate(const OrderedSetPartition& pi) const { return evaluate(summarize(pi)); }
  const std::vector<Term>& terms() const { return terms_; }
  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

}  // namespace opstat
