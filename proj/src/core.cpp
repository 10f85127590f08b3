#include "opstat/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace opstat {

namespace {

std::string join_block(const Block& b, bool active) {
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(b[i]);
  }
  if (active) out += " ∞";
  return out;
}

std::string join_set(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

struct RawBlock {
  Block elements;
  bool active = false;
};

// Splits the text into raw blocks. "∞" and "inf" set the active flag.
std::vector<RawBlock> split_blocks(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "∞") {
      s += " inf ";
      i += 2;
    } else {
      s += text[i];
    }
  }

  std::vector<std::string> pieces;
  if (s.find('{') != std::string::npos) {
    std::size_t pos = 0;
    while ((pos = s.find('{', pos)) != std::string::npos) {
      auto end = s.find('}', pos);
      if (end == std::string::npos) throw ParseError("unbalanced '{' in \"" + std::string(text) + "\"");
      pieces.push_back(s.substr(pos + 1, end - pos - 1));
      pos = end + 1;
    }
  } else {
    std::size_t start = 0;
    while (true) {
      auto slash = s.find('/', start);
      pieces.push_back(s.substr(start, slash == std::string::npos ? std::string::npos : slash - start));
      if (slash == std::string::npos) break;
      start = slash + 1;
    }
  }

  std::vector<RawBlock> out;
  for (const auto& piece : pieces) {
    RawBlock rb;
    std::string token;
    std::istringstream in(piece);
    std::string chunk;
    auto flush = [&](const std::string& tok) {
      if (tok.empty()) return;
      if (tok == "inf" || tok == "INF" || tok == "oo") {
        rb.active = true;
        return;
      }
      if (rb.active) throw ParseError("element after ∞ in block \"" + piece + "\"");
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("not an integer: \"" + tok + "\"");
      if (value <= 0) throw ParseError("elements must be positive, got " + tok);
      rb.elements.push_back(value);
    };
    for (char c : piece) {
      if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
        flush(token);
        token.clear();
      } else {
        token += c;
      }
    }
    flush(token);
    if (rb.elements.empty()) throw ParseError("empty block in \"" + std::string(text) + "\"");
    std::sort(rb.elements.begin(), rb.elements.end());
    out.push_back(std::move(rb));
  }
  return out;
}

bool is_empty_text(std::string_view text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) return true;
  auto rest = text.substr(first);
  auto last = rest.find_last_not_of(" \t\n");
  rest = rest.substr(0, last + 1);
  return rest == "∅" || rest == "{}";
}

}  // namespace

// ---------------------------------------------------------------------------

OrderedSetPartition::OrderedSetPartition(std::vector<Block> blocks, unchecked_tag)
    : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    n_ += static_cast<int>(b.size());
    max_ = std::max(max_, b.back());
  }
}

OrderedSetPartition OrderedSetPartition::over_elements(std::vector<Block> blocks) {
  std::vector<int> seen;
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (e <= 0) throw std::invalid_argument("elements must be positive, got " + std::to_string(e));
      seen.push_back(e);
    }
  }
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end()) throw std::invalid_argument("duplicate element " + std::to_string(*dup));
  return OrderedSetPartition(std::move(blocks), unchecked_tag{});
}

OrderedSetPartition::OrderedSetPartition(std::vector<Block> blocks) {
  *this = over_elements(std::move(blocks));
  if (max_ != n_)
    throw std::invalid_argument("element " + std::to_string(max_) + " exceeds n=" + std::to_string(n_) +
                                "; blocks must cover {1..n}");
}

std::vector<int> OrderedSetPartition::elements() const {
  std::vector<int> out;
  out.reserve(n_);
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> OrderedSetPartition::block_of() const {
  std::vector<int> w(max_ + 1, -1);
  for (int j = 0; j < num_blocks(); ++j)
    for (int e : blocks_[j]) w[e] = j;
  return w;
}

bool OrderedSetPartition::is_standard_form() const {
  for (int j = 1; j < num_blocks(); ++j)
    if (opener(blocks_[j - 1]) > opener(blocks_[j])) return false;
  return true;
}

std::string OrderedSetPartition::to_string() const {
  if (blocks_.empty()) return "∅";
  std::string out;
  for (int j = 0; j < num_blocks(); ++j) {
    if (j) out += '/';
    out += join_block(blocks_[j], false);
  }
  return out;
}

OrderedSetPartition parse_partition(std::string_view text) {
  if (is_empty_text(text)) return {};
  auto raw = split_blocks(text);
  std::vector<Block> blocks;
  blocks.reserve(raw.size());
  for (auto& rb : raw) {
    if (rb.active) throw ParseError("∞ marker is only valid in traces");
    blocks.push_back(std::move(rb.elements));
  }
  try {
    return OrderedSetPartition(std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------

std::string PartitionType::to_string() const {
  return "(" + join_set(openers) + "," + join_set(closers) + "," + join_set(singletons) + "," +
         join_set(transients) + ")";
}

PartitionType type_of(const OrderedSetPartition& pi) {
  PartitionType t;
  for (const auto& b : pi.blocks()) {
    if (b.size() == 1) {
      t.singletons.push_back(b.front());
      continue;
    }
    t.openers.push_back(b.front());
    t.closers.push_back(b.back());
    t.transients.insert(t.transients.end(), b.begin() + 1, b.end() - 1);
  }
  for (auto* s : {&t.openers, &t.closers, &t.singletons, &t.transients}) std::sort(s->begin(), s->end());
  return t;
}

void validate_type(const PartitionType& type, int n) {
  std::vector<int> all;
  for (const auto* s : {&type.openers, &type.closers, &type.singletons, &type.transients})
    all.insert(all.end(), s->begin(), s->end());
  std::sort(all.begin(), all.end());
  std::vector<int> expect(n);
  std::iota(expect.begin(), expect.end(), 1);
  if (all != expect) throw std::invalid_argument("type classes must partition {1.." + std::to_string(n) + "}");
  if (type.openers.size() != type.closers.size())
    throw std::invalid_argument("type needs as many strict openers as strict closers");
}

PartitionType complement_type(const PartitionType& type, int n) {
  auto bar = [n](const std::vector<int>& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(n + 1 - *it);
    return out;
  };
  return {bar(type.closers), bar(type.openers), bar(type.singletons), bar(type.transients)};
}

// ---------------------------------------------------------------------------

int Trace::num_active() const {
  return static_cast<int>(std::count(active.begin(), active.end(), true));
}

int Trace::closer_of(int j) const { return active[j] ? kInfinity : blocks[j].back(); }

int Trace::find(int e) const {
  for (int j = 0; j < num_blocks(); ++j)
    if (std::binary_search(blocks[j].begin(), blocks[j].end(), e)) return j;
  return -1;
}

std::string Trace::to_string() const {
  if (blocks.empty()) return "∅";
  std::string out;
  for (int j = 0; j < num_blocks(); ++j) {
    if (j) out += '/';
    out += join_block(blocks[j], active[j]);
  }
  return out;
}

Trace trace(const OrderedSetPartition& pi, int i) {
  if (i < 0 || i > pi.max_element()) throw std::out_of_range("trace index out of range");
  Trace t;
  for (const auto& b : pi.blocks()) {
    auto end = std::upper_bound(b.begin(), b.end(), i);
    if (end == b.begin()) continue;
    t.blocks.emplace_back(b.begin(), end);
    t.active.push_back(end != b.end());
  }
  return t;
}

Trace parse_trace(std::string_view text) {
  Trace t;
  if (is_empty_text(text)) return t;
  for (auto& rb : split_blocks(text)) {
    t.blocks.push_back(std::move(rb.elements));
    t.active.push_back(rb.active);
  }
  std::vector<int> all;
  for (const auto& b : t.blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw ParseError("duplicate element in trace");
  return t;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> id(k);
  std::iota(id.begin(), id.end(), 1);
  return Permutation(std::move(id));
}

Permutation Permutation::from_lehmer(std::span<const int> code) {
  const int k = static_cast<int>(code.size());
  std::vector<int> remaining(k);
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> images;
  images.reserve(k);
  for (int i = 0; i < k; ++i) {
    if (code[i] < 0 || code[i] > k - 1 - i)
      throw std::invalid_argument("Lehmer code entry c_" + std::to_string(i + 1) + " out of range");
    images.push_back(remaining[code[i]]);
    remaining.erase(remaining.begin() + code[i]);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_d_code(std::span<const int> code) {
  // Values 1..i are laid out left to right; value i sits with d_i smaller
  // values to its right.
  std::vector<int> seq;
  for (int i = 1; i <= static_cast<int>(code.size()); ++i) {
    int d = code[i - 1];
    if (d < 0 || d > i - 1) throw std::invalid_argument("d-code entry d_" + std::to_string(i) + " out of range");
    seq.insert(seq.end() - d, i);
  }
  return Permutation(std::move(seq));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> c(images_.size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[j] < images_[i]) ++c[i];
  return c;
}

std::vector<int> Permutation::d_code() const {
  auto c = lehmer_code();
  std::vector<int> d(images_.size());
  for (int i = 0; i < size(); ++i) d[images_[i] - 1] = c[i];
  return d;
}

int Permutation::inv() const { return word_stats(images_).inv; }
int Permutation::des() const { return word_stats(images_).des; }
int Permutation::maj() const { return word_stats(images_).maj; }

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> images;
  bool separated = text.find_first_of(" ,") != std::string_view::npos;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("bad permutation entry \"" + token + "\"");
    images.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',') {
      flush();
    } else if (!separated) {
      token = c;
      flush();
    } else {
      token += c;
    }
  }
  flush();
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------

StandardForm standard_form(const OrderedSetPartition& pi) {
  const int k = pi.num_blocks();
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return opener(pi.block(a)) < opener(pi.block(b)); });
  std::vector<Block> blocks;
  blocks.reserve(k);
  std::vector<int> sigma(k);
  for (int r = 0; r < k; ++r) {
    blocks.push_back(pi.block(order[r]));
    sigma[order[r]] = r + 1;
  }
  return {OrderedSetPartition::over_elements(std::move(blocks)), Permutation(std::move(sigma))};
}

OrderedSetPartition apply_block_permutation(const OrderedSetPartition& standard, const Permutation& sigma) {
  if (sigma.size() != standard.num_blocks())
    throw std::invalid_argument("permutation size must match the number of blocks");
  std::vector<Block> blocks;
  blocks.reserve(sigma.size());
  for (int j = 1; j <= sigma.size(); ++j) blocks.push_back(standard.block(sigma(j) - 1));
  return OrderedSetPartition::over_elements(std::move(blocks));
}

// ---------------------------------------------------------------------------

WordStats word_stats(std::span<const int> w) {
  WordStats s;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (w[i] > w[i + 1]) {
      ++s.des;
      s.maj += i + 1;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) ++s.inv;
  return s;
}

OrderedSetPartition doubleton_partition(const Composition& parts) {
  std::vector<Block> blocks;
  int prefix = 0;
  for (int ni : parts) {
    if (ni < 0) throw std::invalid_argument("composition parts must be nonnegative");
    for (int j = 1; j <= ni; ++j) blocks.push_back({2 * prefix + j, 2 * prefix + ni + j});
    prefix += ni;
  }
  return OrderedSetPartition(std::move(blocks));
}

DoubletonDecomposition decompose_doubleton(const OrderedSetPartition& pi, const Composition& parts) {
  const auto base = doubleton_partition(parts);
  std::vector<int> letter_of_block;  // indexed like base blocks
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    for (int j = 0; j < parts[i]; ++j) letter_of_block.push_back(i + 1);

  if (pi.size() != base.size() || pi.num_blocks() != base.num_blocks())
    throw std::invalid_argument("partition is not a rearrangement of the doubleton partition");

  DoubletonDecomposition d;
  std::vector<std::vector<Block>> classes(parts.size());
  for (const auto& b : pi.blocks()) {
    auto it = std::find(base.blocks().begin(), base.blocks().end(), b);
    if (it == base.blocks().end())
      throw std::invalid_argument("block {" + join_block(b, false) + "} is not a doubleton of the composition");
    int letter = letter_of_block[it - base.blocks().begin()];
    d.word.push_back(letter);
    classes[letter - 1].push_back(b);
  }
  for (auto& c : classes) {
    if (c.empty())
      d.classes.emplace_back();
    else
      d.classes.push_back(OrderedSetPartition::over_elements(std::move(c)));
  }
  return d;
}

OrderedSetPartition recombine_doubleton(const DoubletonDecomposition& d) {
  std::vector<std::size_t> next(d.classes.size(), 0);
  std::vector<Block> blocks;
  for (int letter : d.word) {
    const auto& cls = d.classes.at(letter - 1);
    blocks.push_back(cls.block(static_cast<int>(next[letter - 1]++)));
  }
  return OrderedSetPartition(std::move(blocks));
}

}  // namespace opstat
