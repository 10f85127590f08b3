#include "opstat/statistics.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace opstat {

namespace {

struct NameEntry {
  StatName name;
  std::string_view text;
};

constexpr NameEntry kNames[] = {
    {StatName::los, "los"},         {StatName::ros, "ros"},         {StatName::lob, "lob"},
    {StatName::rob, "rob"},         {StatName::lcs, "lcs"},         {StatName::rcs, "rcs"},
    {StatName::lcb, "lcb"},         {StatName::rcb, "rcb"},         {StatName::lsb, "lsb"},
    {StatName::rsb, "rsb"},         {StatName::bInv, "bInv"},       {StatName::bMaj, "bMaj"},
    {StatName::bDes, "bDes"},       {StatName::cbInv, "cbInv"},     {StatName::cbMaj, "cbMaj"},
    {StatName::MAK, "MAK"},         {StatName::MAKp, "MAKp"},       {StatName::cinvLSB, "cinvLSB"},
    {StatName::cmajLSB, "cmajLSB"}, {StatName::INV, "INV"},         {StatName::MAJ, "MAJ"},
    {StatName::cls, "cls"},         {StatName::opb, "opb"},         {StatName::sb, "sb"},
    {StatName::Inv, "Inv"},         {StatName::Maj, "Maj"},
};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

long choose2(long k) { return k * (k - 1) / 2; }

}  // namespace

std::string_view to_string(StatName name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.text;
  return "?";
}

StatName parse_stat_name(std::string_view text) {
  // INV/Inv and MAJ/Maj differ only by case, so exact matches win first.
  for (const auto& e : kNames)
    if (e.text == text) return e.name;
  if (iequals(text, "mak'") || iequals(text, "makp") || text == "MAK′") return StatName::MAKp;
  if (iequals(text, "inv") || iequals(text, "maj"))
    throw std::invalid_argument("ambiguous statistic \"" + std::string(text) +
                                "\": use INV/Inv or MAJ/Maj");
  for (const auto& e : kNames)
    if (iequals(e.text, text)) return e.name;
  throw std::invalid_argument("unknown statistic \"" + std::string(text) + "\"");
}

bool is_coordinate(StatName name) {
  return std::find(kCoordinateNames.begin(), kCoordinateNames.end(), name) != kCoordinateNames.end();
}

int CoordStats::get(StatName name) const {
  switch (name) {
    case StatName::los: return los;
    case StatName::ros: return ros;
    case StatName::lob: return lob;
    case StatName::rob: return rob;
    case StatName::lcs: return lcs;
    case StatName::rcs: return rcs;
    case StatName::lcb: return lcb;
    case StatName::rcb: return rcb;
    case StatName::lsb: return lsb;
    case StatName::rsb: return rsb;
    default: throw std::invalid_argument(std::string(to_string(name)) + " is not a coordinate statistic");
  }
}

CoordStats& CoordStats::operator+=(const CoordStats& o) {
  los += o.los; ros += o.ros; lob += o.lob; rob += o.rob; lcs += o.lcs;
  rcs += o.rcs; lcb += o.lcb; rcb += o.rcb; lsb += o.lsb; rsb += o.rsb;
  return *this;
}

namespace {

// Coordinate statistics of element e sitting in block w, given every
// block's opener and closer.
CoordStats coords_of(int e, int w, const std::vector<int>& open, const std::vector<int>& close) {
  CoordStats c;
  const int k = static_cast<int>(open.size());
  for (int j = 0; j < k; ++j) {
    if (j == w) continue;
    const int o = open[j], cl = close[j];
    if (j < w) {
      c.los += o < e;
      c.lob += o > e;
      c.lcs += cl < e;
      c.lcb += cl > e;
      c.lsb += (o < e && e < cl);
    } else {
      c.ros += o < e;
      c.rob += o > e;
      c.rcs += cl < e;
      c.rcb += cl > e;
      c.rsb += (o < e && e < cl);
    }
  }
  return c;
}

void endpoints(const OrderedSetPartition& pi, std::vector<int>& open, std::vector<int>& close) {
  open.clear();
  close.clear();
  for (const auto& b : pi.blocks()) {
    open.push_back(b.front());
    close.push_back(b.back());
  }
}

}  // namespace

CoordStats coord_stats(const OrderedSetPartition& pi, int i) {
  for (int j = 0; j < pi.num_blocks(); ++j) {
    const auto& b = pi.block(j);
    if (std::binary_search(b.begin(), b.end(), i)) {
      std::vector<int> open, close;
      endpoints(pi, open, close);
      return coords_of(i, j, open, close);
    }
  }
  throw std::out_of_range("element " + std::to_string(i) + " is not in the partition");
}

std::vector<CoordStats> coord_table(const OrderedSetPartition& pi) {
  std::vector<CoordStats> table(pi.max_element() + 1);
  std::vector<int> open, close;
  endpoints(pi, open, close);
  for (int j = 0; j < pi.num_blocks(); ++j)
    for (int e : pi.block(j)) table[e] = coords_of(e, j, open, close);
  return table;
}

bool block_relation(const OrderedSetPartition& pi, int i, int j) {
  if (i < 1 || j < 1 || i > pi.num_blocks() || j > pi.num_blocks())
    throw std::out_of_range("block index out of range");
  return opener(pi.block(i - 1)) > closer(pi.block(j - 1));
}

int binv(const OrderedSetPartition& pi) {
  int count = 0;
  for (int i = 0; i < pi.num_blocks(); ++i)
    for (int j = i + 1; j < pi.num_blocks(); ++j)
      if (opener(pi.block(i)) > closer(pi.block(j))) ++count;
  return count;
}

std::vector<int> bdes_set(const OrderedSetPartition& pi) {
  std::vector<int> out;
  for (int i = 0; i + 1 < pi.num_blocks(); ++i)
    if (opener(pi.block(i)) > closer(pi.block(i + 1))) out.push_back(i + 1);
  return out;
}

int bmaj(const OrderedSetPartition& pi) {
  int s = 0;
  for (int d : bdes_set(pi)) s += d;
  return s;
}

std::vector<int> bdes_set(const Trace& t) {
  std::vector<int> out;
  for (int i = 0; i + 1 < t.num_blocks(); ++i)
    if (t.blocks[i].front() > t.closer_of(i + 1)) out.push_back(i + 1);
  return out;
}

int bmaj(const Trace& t) {
  int s = 0;
  for (int d : bdes_set(t)) s += d;
  return s;
}

int trace_rsb(const Trace& t, int i) {
  int w = t.find(i);
  if (w < 0) throw std::out_of_range("element " + std::to_string(i) + " is not in the trace");
  int count = 0;
  for (int j = w + 1; j < t.num_blocks(); ++j)
    if (t.blocks[j].front() < i && i < t.closer_of(j)) ++count;
  return count;
}

int trace_ros(const Trace& t, int i) {
  int w = t.find(i);
  if (w < 0) throw std::out_of_range("element " + std::to_string(i) + " is not in the trace");
  int count = 0;
  for (int j = w + 1; j < t.num_blocks(); ++j)
    if (t.blocks[j].front() < i) ++count;
  return count;
}

StatSummary summarize(const OrderedSetPartition& pi) {
  StatSummary s;
  s.n = pi.size();
  s.k = pi.num_blocks();
  std::vector<int> open, close;
  endpoints(pi, open, close);
  for (int j = 0; j < s.k; ++j) {
    for (int e : pi.block(j)) {
      auto c = coords_of(e, j, open, close);
      s.all += c;
      (e == open[j] ? s.os : s.tc) += c;
    }
  }
  for (int i = 0; i < s.k; ++i) {
    for (int j = i + 1; j < s.k; ++j) {
      if (open[i] > close[j]) ++s.binv;
      if (open[i] > open[j]) ++s.inv_sigma;
    }
    if (i + 1 < s.k) {
      if (open[i] > close[i + 1]) {
        ++s.bdes;
        s.bmaj += i + 1;
      }
      if (open[i] > open[i + 1]) s.maj_sigma += i + 1;
    }
  }
  return s;
}

long StatSummary::value(StatName name, Restriction r) const {
  const CoordStats& c = r == Restriction::All ? all : (r == Restriction::OS ? os : tc);
  if (is_coordinate(name)) return c.get(name);
  switch (name) {
    case StatName::cls: return c.lcs + c.rcs;
    case StatName::opb: return c.lob + c.rob;
    case StatName::sb: return c.lsb + c.rsb;
    default: break;
  }
  if (r != Restriction::All)
    throw std::invalid_argument(std::string(to_string(name)) + " cannot be restricted to OS/TC");
  switch (name) {
    case StatName::bInv: return binv;
    case StatName::bMaj: return bmaj;
    case StatName::bDes: return bdes;
    case StatName::cbInv: return choose2(k) - binv;
    case StatName::cbMaj: return choose2(k) - bmaj;
    case StatName::MAK: return all.ros + all.lcs;
    case StatName::MAKp: return all.lob + all.rcb;
    case StatName::cinvLSB: return all.lsb + (choose2(k) - binv) + choose2(k);
    case StatName::cmajLSB: return all.lsb + (choose2(k) - bmaj) + choose2(k);
    case StatName::INV: return os.rsb + binv;
    case StatName::MAJ: return os.rsb + bmaj;
    case StatName::Inv: return inv_sigma;
    case StatName::Maj: return maj_sigma;
    default: break;
  }
  throw std::logic_error("unhandled statistic");
}

long stat(const OrderedSetPartition& pi, StatName name) { return summarize(pi).value(name); }

long stat_restricted(const OrderedSetPartition& pi, StatName name, Restriction r) {
  return summarize(pi).value(name, r);
}

long composite(const OrderedSetPartition& pi, StatName name) { return summarize(pi).value(name); }

// ---------------------------------------------------------------------------

StatExpr StatExpr::parse(std::string_view text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  int sign = 1;
  auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip_ws();
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  while (true) {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-' && text[i] != ' ') ++i;
    std::string_view token = text.substr(start, i - start);
    if (token.empty()) throw std::invalid_argument("malformed statistic expression \"" + std::string(text) + "\"");

    int coefficient = sign;
    if (auto star = token.find('*'); star != std::string_view::npos) {
      coefficient *= std::stoi(std::string(token.substr(0, star)));
      token = token.substr(star + 1);
    }
    Restriction r = Restriction::All;
    auto underscore = token.rfind('_');
    if (underscore != std::string_view::npos) {
      auto suffix = token.substr(underscore + 1);
      if (iequals(suffix, "OS"))
        r = Restriction::OS;
      else if (iequals(suffix, "TC"))
        r = Restriction::TC;
      else
        throw std::invalid_argument("unknown restriction \"_" + std::string(suffix) + "\"");
      token = token.substr(0, underscore);
    }
    StatName name = parse_stat_name(token);
    if (r != Restriction::All && !is_coordinate(name) && name != StatName::cls && name != StatName::opb &&
        name != StatName::sb)
      throw std::invalid_argument(std::string(token) + " cannot be restricted to OS/TC");
    terms.push_back({coefficient, name, r});

    skip_ws();
    if (i >= text.size()) break;
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  return StatExpr(std::move(terms));
}

long StatExpr::evaluate(const StatSummary& s) const {
  long v = 0;
  for (const auto& t : terms_) v += t.coefficient * s.value(t.name, t.restriction);
  return v;
}

std::string StatExpr::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    int c = t.coefficient;
    if (i == 0) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (std::abs(c) != 1) out += std::to_string(std::abs(c)) + "*";
    out += opstat::to_string(t.name);
    if (t.restriction == Restriction::OS) out += "_OS";
    if (t.restriction == Restriction::TC) out += "_TC";
  }
  return out;
}

}  // namespace opstat
