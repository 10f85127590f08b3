#include "opstat/motzkin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace opstat {

std::vector<int> MotzkinDiagram::heights() const {
  std::vector<int> h;
  int y = 0;
  for (MotzkinStep s : steps) {
    h.push_back(y);
    if (s == MotzkinStep::Up) ++y;
    if (s == MotzkinStep::Down) --y;
  }
  return h;
}

void MotzkinDiagram::validate() const {
  if (labels.size() != steps.size()) throw std::invalid_argument("step and label counts differ");
  auto h = heights();
  int y = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    int lo = 1, hi = 1;
    switch (steps[i]) {
      case MotzkinStep::Up: hi = 1; ++y; break;
      case MotzkinStep::Flat: hi = h[i] + 1; break;
      case MotzkinStep::Down:
        if (--y < 0) throw std::invalid_argument("Motzkin path goes below the axis");
        hi = h[i];
        break;
    }
    if (labels[i] < lo || labels[i] > hi)
      throw std::invalid_argument("label " + std::to_string(labels[i]) + " at step " + std::to_string(i + 1) +
                                  " outside 1.." + std::to_string(hi));
  }
  if (y != 0) throw std::invalid_argument("Motzkin path does not end on the axis");
}

std::string MotzkinDiagram::to_string() const {
  std::string s;
  for (MotzkinStep st : steps) s += static_cast<char>(st);
  s += ' ';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(labels[i]);
  }
  return s;
}

MotzkinDiagram parse_motzkin(std::string_view text) {
  MotzkinDiagram d;
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string word;
  if (!(in >> word)) return d;
  for (char c : word) {
    switch (c) {
      case 'U': d.steps.push_back(MotzkinStep::Up); break;
      case 'F': case 'E': d.steps.push_back(MotzkinStep::Flat); break;
      case 'D': d.steps.push_back(MotzkinStep::Down); break;
      default: throw ParseError(std::string("unknown Motzkin step '") + c + "'");
    }
  }
  std::string tok;
  while (in >> tok) {
    try {
      d.labels.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("bad label \"" + tok + "\"");
    }
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return d;
}

MotzkinDiagram motzkin_encode(const OrderedSetPartition& pi) {
  if (!pi.is_standard_form()) throw std::invalid_argument("Motzkin encoding needs a partition in standard form");
  auto owner = pi.block_of();
  std::vector<int> active;  // block indices, left to right
  MotzkinDiagram d;
  for (int i = 1; i <= pi.size(); ++i) {
    const Block& b = pi.block(owner[i]);
    auto pos = std::find(active.begin(), active.end(), owner[i]);
    int left = static_cast<int>(pos - active.begin());
    if (b.size() == 1) {
      d.steps.push_back(MotzkinStep::Flat);
      d.labels.push_back(static_cast<int>(active.size()) + 1);
    } else if (i == opener(b)) {
      d.steps.push_back(MotzkinStep::Up);
      d.labels.push_back(1);
      active.push_back(owner[i]);
    } else if (i == closer(b)) {
      d.steps.push_back(MotzkinStep::Down);
      d.labels.push_back(left + 1);
      active.erase(pos);
    } else {
      d.steps.push_back(MotzkinStep::Flat);
      d.labels.push_back(left + 1);
    }
  }
  return d;
}

OrderedSetPartition motzkin_decode(const MotzkinDiagram& d) {
  d.validate();
  std::vector<Block> blocks;
  std::vector<int> active;
  for (int i = 1; i <= d.length(); ++i) {
    int label = d.labels[i - 1];
    switch (d.steps[i - 1]) {
      case MotzkinStep::Up:
        active.push_back(static_cast<int>(blocks.size()));
        blocks.push_back({i});
        break;
      case MotzkinStep::Flat:
        if (label == static_cast<int>(active.size()) + 1)
          blocks.push_back({i});
        else
          blocks[active[label - 1]].push_back(i);
        break;
      case MotzkinStep::Down:
        blocks[active[label - 1]].push_back(i);
        active.erase(active.begin() + (label - 1));
        break;
    }
  }
  return OrderedSetPartition(std::move(blocks));
}

MotzkinDiagram motzkin_g(const MotzkinDiagram& d) {
  d.validate();
  const int n = d.length();
  MotzkinDiagram out;
  out.steps.resize(n);
  out.labels.assign(n, 1);
  std::vector<int> pending;
  for (int p = 0; p < n; ++p) {
    const int q = n - 1 - p;
    switch (d.steps[p]) {
      case MotzkinStep::Up:
        out.steps[q] = MotzkinStep::Down;
        pending.push_back(p);
        break;
      case MotzkinStep::Flat:
        out.steps[q] = MotzkinStep::Flat;
        out.labels[q] = d.labels[p];
        break;
      case MotzkinStep::Down:
        out.steps[q] = MotzkinStep::Up;
        // The up step at o becomes the down step at n-1-o in the reverse.
        out.labels[n - 1 - pending.back()] = d.labels[p];
        pending.pop_back();
        break;
    }
  }
  return out;
}

OrderedSetPartition lambda_map(const OrderedSetPartition& pi) {
  return motzkin_decode(motzkin_g(motzkin_encode(pi)));
}

}  // namespace opstat
