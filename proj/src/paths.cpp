#include "opstat/paths.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "opstat/statistics.hpp"

namespace opstat {

char to_char(Step s) { return static_cast<char>(s); }

Step step_from_char(char c) {
  switch (c) {
    case 'N': case 'n': return Step::North;
    case 'E': case 'e': return Step::East;
    case 'D': case 'd': case 'S': case 's': return Step::SouthEast;
    case 'O': case 'o': return Step::Null;
    default: throw ParseError(std::string("unknown step letter '") + c + "'");
  }
}

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int x = 0, y = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    switch (steps_[i]) {
      case Step::North: ++y; break;
      case Step::East: ++x; break;
      case Step::SouthEast:
        if (y == 0) throw std::invalid_argument("path goes below the axis at step " + std::to_string(i + 1));
        ++x;
        --y;
        break;
      case Step::Null:
        if (y == 0) throw std::invalid_argument("null step at height 0 (step " + std::to_string(i + 1) + ")");
        break;
    }
    xs_.push_back(x);
    ys_.push_back(y);
  }
  if (y != 0) throw std::invalid_argument("path does not end on the axis");
  depth_ = x;
}

std::string LatticePath::to_string() const {
  std::string s;
  for (Step st : steps_) s += to_char(st);
  return s;
}

LatticePath parse_path(std::string_view text) {
  std::vector<Step> steps;
  for (char c : text) {
    if (c == ' ') continue;
    steps.push_back(step_from_char(c));
  }
  try {
    return LatticePath(std::move(steps));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void PathDiagram::validate() const {
  if (static_cast<int>(labels.size()) != path.length())
    throw std::invalid_argument("expected " + std::to_string(path.length()) + " labels, got " +
                                std::to_string(labels.size()));
  for (int i = 1; i <= path.length(); ++i) {
    int hi;
    Step s = path.step(i);
    if (s == Step::North || s == Step::East)
      hi = path.x(i) + path.y(i);
    else
      hi = path.y(i) - 1;
    if (label(i) < 0 || label(i) > hi)
      throw std::invalid_argument("label " + std::to_string(label(i)) + " at step " + std::to_string(i) +
                                  " outside 0.." + std::to_string(hi));
  }
}

std::string PathDiagram::to_string() const {
  std::string s = path.to_string();
  s += ' ';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(labels[i]);
  }
  return s;
}

PathDiagram parse_diagram(std::string_view text) {
  auto first = text.find_first_not_of(' ');
  if (first == std::string_view::npos) return {};
  text.remove_prefix(first);
  auto space = text.find(' ');
  PathDiagram h;
  h.path = parse_path(text.substr(0, space));
  if (space != std::string_view::npos) {
    std::string rest(text.substr(space + 1));
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream in(rest);
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        h.labels.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad label \"" + tok + "\"");
      }
    }
  }
  try {
    h.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return h;
}

PartitionType path_type(const LatticePath& w) {
  PartitionType t;
  for (int i = 1; i <= w.length(); ++i) {
    switch (w.step(i)) {
      case Step::North: t.openers.push_back(i); break;
      case Step::SouthEast: t.closers.push_back(i); break;
      case Step::East: t.singletons.push_back(i); break;
      case Step::Null: t.transients.push_back(i); break;
    }
  }
  return t;
}

LatticePath path_from_type(const PartitionType& type) {
  const int n = type.size();
  validate_type(type, n);
  std::vector<Step> steps(n);
  for (int i : type.openers) steps[i - 1] = Step::North;
  for (int i : type.closers) steps[i - 1] = Step::SouthEast;
  for (int i : type.singletons) steps[i - 1] = Step::East;
  for (int i : type.transients) steps[i - 1] = Step::Null;
  return LatticePath(std::move(steps));
}

Heights heights(const LatticePath& w) {
  Heights h;
  for (int i = 1; i <= w.length(); ++i) {
    h.x.push_back(w.x(i));
    h.y.push_back(w.y(i));
  }
  return h;
}

Permutation associated_permutation(const LatticePath& w) {
  // Each open north step waits on a stack; the south-east step leaving
  // height t+1 closes the most recent north step taken at height t.
  std::vector<int> sigma;
  std::vector<int> pending;
  int se_count = 0;
  for (int i = 1; i <= w.length(); ++i) {
    if (w.step(i) == Step::North) {
      pending.push_back(static_cast<int>(sigma.size()));
      sigma.push_back(0);
    } else if (w.step(i) == Step::SouthEast) {
      sigma[pending.back()] = ++se_count;
      pending.pop_back();
    }
  }
  return Permutation(std::move(sigma));
}

LatticePath reverse_path(const LatticePath& w) {
  std::vector<Step> steps(w.steps().rbegin(), w.steps().rend());
  for (Step& s : steps) {
    if (s == Step::North)
      s = Step::SouthEast;
    else if (s == Step::SouthEast)
      s = Step::North;
  }
  return LatticePath(std::move(steps));
}

namespace {

// Index of the active block carrying label `label` when active blocks are
// numbered 0,1,... from right to left.
int active_from_right(const Trace& t, int label) {
  int seen = 0;
  for (int j = t.num_blocks() - 1; j >= 0; --j) {
    if (!t.active[j]) continue;
    if (seen++ == label) return j;
  }
  throw std::invalid_argument("no active block with label " + std::to_string(label));
}

void insert_block(Trace& t, int position, int i, bool active) {
  t.blocks.insert(t.blocks.begin() + position, Block{i});
  t.active.insert(t.active.begin() + position, active);
}

void extend_existing(Trace& t, const PathDiagram& h, int i) {
  int j = active_from_right(t, h.label(i));
  t.blocks[j].push_back(i);
  if (h.path.step(i) == Step::SouthEast) t.active[j] = false;
}

OrderedSetPartition finish(Trace t) { return OrderedSetPartition(std::move(t.blocks)); }

}  // namespace

OrderedSetPartition phi(const PathDiagram& h) {
  h.validate();
  Trace t;
  for (int i = 1; i <= h.length(); ++i) {
    Step s = h.path.step(i);
    if (s == Step::North || s == Step::East)
      insert_block(t, t.num_blocks() - h.label(i), i, s == Step::North);
    else
      extend_existing(t, h, i);
  }
  return finish(std::move(t));
}

PathDiagram phi_inv(const OrderedSetPartition& pi) {
  PathDiagram h;
  h.path = path_from_type(type_of(pi));
  auto table = coord_table(pi);
  for (int i = 1; i <= pi.size(); ++i) {
    Step s = h.path.step(i);
    h.labels.push_back(s == Step::North || s == Step::East ? table[i].ros : table[i].rsb);
  }
  return h;
}

std::vector<int> insertion_labels(const Trace& t) {
  const int r = t.num_blocks();
  std::vector<bool> marked(r + 1, false);
  for (int j = 0; j < r; ++j)
    if (t.active[j]) marked[j] = true;
  for (int d : bdes_set(t)) marked[d] = true;
  std::vector<int> a{r};
  for (int p = r - 1; p >= 0; --p)
    if (marked[p]) a.push_back(p);
  for (int p = 0; p < r; ++p)
    if (!marked[p]) a.push_back(p);
  return a;
}

OrderedSetPartition psi(const PathDiagram& h) {
  h.validate();
  Trace t;
  for (int i = 1; i <= h.length(); ++i) {
    Step s = h.path.step(i);
    if (s == Step::North || s == Step::East)
      insert_block(t, insertion_labels(t)[h.label(i)], i, s == Step::North);
    else
      extend_existing(t, h, i);
  }
  return finish(std::move(t));
}

PathDiagram psi_inv(const OrderedSetPartition& pi) {
  PathDiagram h;
  h.path = path_from_type(type_of(pi));
  auto table = coord_table(pi);
  for (int i = 1; i <= pi.size(); ++i) {
    int g = table[i].rsb;
    Step s = h.path.step(i);
    if (s == Step::North || s == Step::East) g += bmaj(trace(pi, i)) - bmaj(trace(pi, i - 1));
    h.labels.push_back(g);
  }
  return h;
}

PathDiagram varphi(const PathDiagram& h) {
  const LatticePath& w = h.path;
  LatticePath wbar = reverse_path(w);
  auto collect = [](const LatticePath& p) {
    std::vector<int> os, tr, cl;
    for (int i = 1; i <= p.length(); ++i) {
      switch (p.step(i)) {
        case Step::North: case Step::East: os.push_back(i); break;
        case Step::Null: tr.push_back(i); break;
        case Step::SouthEast: cl.push_back(i); break;
      }
    }
    return std::tuple{os, tr, cl};
  };
  auto [os, tr, cl] = collect(w);
  auto [os2, tr2, cl2] = collect(wbar);
  Permutation sigma = associated_permutation(w);
  const int u = static_cast<int>(tr.size());
  const int r = static_cast<int>(cl.size());

  PathDiagram out{wbar, std::vector<int>(h.labels.size())};
  for (std::size_t m = 0; m < os.size(); ++m) out.labels[os2[m] - 1] = h.label(os[m]);
  for (int m = 1; m <= u; ++m) out.labels[tr2[m - 1] - 1] = h.label(tr[u - m]);
  for (int m = 1; m <= r; ++m) out.labels[cl2[m - 1] - 1] = h.label(cl[sigma(r + 1 - m) - 1]);
  return out;
}

PathDiagram g_map(const PathDiagram& h, const Permutation& sigma) {
  if (sigma.size() != h.depth())
    throw std::invalid_argument("permutation size " + std::to_string(sigma.size()) + " differs from depth " +
                                std::to_string(h.depth()));
  auto d = sigma.d_code();
  PathDiagram out = h;
  int j = 0;
  for (int i = 1; i <= h.length(); ++i) {
    Step s = h.path.step(i);
    if (s == Step::North || s == Step::East) out.labels[i - 1] = d[j++];
  }
  return out;
}

OrderedSetPartition gamma_sigma(const OrderedSetPartition& pi, const Permutation& sigma) {
  if (!pi.is_standard_form()) throw std::invalid_argument("Γ_σ needs a partition in standard form");
  return phi(g_map(phi_inv(pi), sigma));
}

OrderedSetPartition xi_map(const OrderedSetPartition& pi) { return phi(varphi(phi_inv(pi))); }

OrderedSetPartition upsilon(const OrderedSetPartition& pi) { return psi(phi_inv(pi)); }

OrderedSetPartition theta_map(const OrderedSetPartition& pi) { return psi(varphi(psi_inv(pi))); }

namespace {

// From height y with dx east-moving steps still owed and m steps left, can
// the path still end at (k,0)?
bool reachable(int m, int dx, int y) {
  if (y < 0 || y > dx || dx > m) return false;
  return !(y == 0 && dx == 0 && m > 0);
}

void extend_path(std::vector<Step>& steps, int n, int k, int x, int y,
                 const std::function<void(const LatticePath&)>& visit) {
  const int m = n - static_cast<int>(steps.size());
  if (m == 0) {
    visit(LatticePath(steps));
    return;
  }
  auto attempt = [&](Step s, int nx, int ny) {
    if (!reachable(m - 1, k - nx, ny)) return;
    steps.push_back(s);
    extend_path(steps, n, k, nx, ny, visit);
    steps.pop_back();
  };
  if (y > 0) attempt(Step::SouthEast, x + 1, y - 1);
  attempt(Step::East, x + 1, y);
  attempt(Step::North, x, y + 1);
  if (y > 0) attempt(Step::Null, x, y);
}

}  // namespace

void for_each_path(int n, int k, const std::function<void(const LatticePath&)>& visit) {
  if (n < 0 || k < 0 || !reachable(n, k, 0)) return;
  std::vector<Step> steps;
  extend_path(steps, n, k, 0, 0, visit);
}

void for_each_diagram(int n, int k, const std::function<void(const PathDiagram&)>& visit) {
  for_each_path(n, k, [&](const LatticePath& w) {
    std::vector<int> hi(n);
    for (int i = 1; i <= n; ++i) {
      Step s = w.step(i);
      hi[i - 1] = (s == Step::North || s == Step::East) ? w.x(i) + w.y(i) : w.y(i) - 1;
    }
    PathDiagram h{w, std::vector<int>(n, 0)};
    while (true) {
      visit(h);
      int i = n - 1;
      while (i >= 0 && h.labels[i] == hi[i]) h.labels[i--] = 0;
      if (i < 0) break;
      ++h.labels[i];
    }
  });
}

}  // namespace opstat
