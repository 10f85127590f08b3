#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "opstat/core.hpp"
#include "opstat/enumerate.hpp"
#include "opstat/motzkin.hpp"
#include "opstat/paths.hpp"
#include "opstat/qpoly.hpp"
#include "opstat/serialize.hpp"
#include "opstat/statistics.hpp"

using namespace opstat;
using nlohmann::json;

namespace {

constexpr int kInvalidInput = 1;
constexpr int kVerificationFailed = 2;

// "5", "1..6" or "2,4,7".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  try {
    if (auto dots = text.find(".."); dots != std::string::npos) {
      int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
      if (lo > hi) throw std::invalid_argument("empty range");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      std::stringstream in(text);
      std::string tok;
      while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    }
  } catch (const std::exception&) {
    throw ParseError("bad range \"" + text + "\"");
  }
  if (out.empty()) throw ParseError("bad range \"" + text + "\"");
  return out;
}

Composition parse_composition(const std::string& text) {
  Composition c;
  std::string s = text;
  for (char& ch : s)
    if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
  std::istringstream in(s);
  int v;
  while (in >> v) {
    if (v < 0) throw ParseError("negative part in composition");
    c.push_back(v);
  }
  if (!in.eof() || c.empty()) throw ParseError("bad composition \"" + text + "\"");
  return c;
}

std::string cells(const OrderedSetPartition& pi, const std::vector<int>& width,
                  const std::function<std::string(int)>& cell) {
  std::string out;
  for (int j = 0; j < pi.num_blocks(); ++j) {
    if (j) out += " /";
    for (int e : pi.block(j)) {
      std::string c = cell(e);
      out += ' ' + std::string(width[e] - c.size(), ' ') + c;
    }
  }
  return out;
}

int cmd_stats(const std::string& text, bool as_json) {
  auto pi = parse_partition(text);
  auto table = coord_table(pi);
  auto summary = summarize(pi);

  if (as_json) {
    json coords = json::object(), totals = json::object();
    for (StatName name : kCoordinateNames) {
      json rows = json::array();
      for (const auto& b : pi.blocks()) {
        json row = json::array();
        for (int e : b) row.push_back(table[e].get(name));
        rows.push_back(row);
      }
      coords[std::string(to_string(name))] = rows;
      totals[std::string(to_string(name))] = {{"all", summary.all.get(name)},
                                              {"OS", summary.os.get(name)},
                                              {"TC", summary.tc.get(name)}};
    }
    json aggregates = json::object();
    for (StatName name : kAllStatNames)
      if (!is_coordinate(name)) aggregates[std::string(to_string(name))] = summary.value(name);
    json out{{"partition", pi.to_string()}, {"n", pi.size()},           {"k", pi.num_blocks()},
             {"type", type_of(pi)},         {"coordinates", coords},   {"totals", totals},
             {"aggregates", aggregates}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::vector<int> width(pi.max_element() + 1, 1);
  for (int e : pi.elements()) {
    width[e] = static_cast<int>(std::to_string(e).size());
    for (StatName name : kCoordinateNames)
      width[e] = std::max<int>(width[e], std::to_string(table[e].get(name)).size());
  }
  std::cout << std::left << std::setw(5) << "pi" << std::right
            << cells(pi, width, [](int e) { return std::to_string(e); }) << "    all   OS   TC\n";
  for (StatName name : kCoordinateNames) {
    std::cout << std::left << std::setw(5) << to_string(name) << std::right
              << cells(pi, width, [&](int e) { return std::to_string(table[e].get(name)); }) << "  " << std::setw(5)
              << summary.all.get(name) << std::setw(5) << summary.os.get(name) << std::setw(5) << summary.tc.get(name)
              << "\n";
  }
  std::cout << "\n";
  for (StatName name : kAllStatNames)
    if (!is_coordinate(name)) std::cout << std::left << std::setw(9) << to_string(name) << summary.value(name) << "\n";
  return 0;
}

int cmd_encode(const std::string& method, const std::string& text, bool as_json) {
  auto pi = parse_partition(text);
  if (method == "motzkin") {
    if (!pi.is_standard_form()) throw ParseError("the Motzkin encoding takes a set partition in standard form");
    auto d = motzkin_encode(pi);
    if (as_json)
      std::cout << json(d).dump() << "\n";
    else
      std::cout << d.to_string() << "\n";
    return 0;
  }
  auto h = method == "psi" ? psi_inv(pi) : phi_inv(pi);
  if (as_json)
    std::cout << json(h).dump() << "\n";
  else
    std::cout << h.to_string() << "\n";
  return 0;
}

int cmd_decode(const std::string& method, const std::string& text, bool as_json) {
  OrderedSetPartition pi;
  if (method == "motzkin")
    pi = motzkin_decode(parse_motzkin(text));
  else if (method == "psi")
    pi = psi(parse_diagram(text));
  else
    pi = phi(parse_diagram(text));
  if (as_json)
    std::cout << json(pi).dump() << "\n";
  else
    std::cout << pi.to_string() << "\n";
  return 0;
}

int cmd_map(const std::string& which, const std::string& sigma_text, const std::string& text, bool as_json) {
  auto pi = parse_partition(text);
  OrderedSetPartition out;
  if (which == "xi")
    out = xi_map(pi);
  else if (which == "upsilon")
    out = upsilon(pi);
  else if (which == "theta")
    out = theta_map(pi);
  else if (which == "lambda") {
    if (!pi.is_standard_form()) throw ParseError("Λ takes a set partition in standard form");
    out = lambda_map(pi);
  } else {
    if (!pi.is_standard_form()) throw ParseError("Γ_σ takes a set partition in standard form");
    auto sigma = parse_permutation(sigma_text);
    if (sigma.size() != pi.num_blocks()) throw ParseError("σ must have one entry per block");
    out = gamma_sigma(pi, sigma);
  }
  if (as_json)
    std::cout << json{{"input", pi}, {"map", which}, {"output", out}}.dump() << "\n";
  else
    std::cout << out.to_string() << "\n";
  return 0;
}

struct VerifyOptions {
  std::string id;
  std::string n, k = "all", partition, composition;
  int order = 6;
  int jobs = 1;
  bool verbose = false;
};

std::vector<VerifyParams> expand(const std::string& id, const VerifyOptions& o) {
  std::vector<VerifyParams> out;
  VerifyParams base;
  base.order = o.order;
  base.jobs = o.jobs;
  if (id == "thm3.5" && !o.partition.empty()) {
    base.partition = parse_partition(o.partition);
    return {base};
  }
  if (id == "eq1.1" && !o.composition.empty()) {
    base.composition = parse_composition(o.composition);
    return {base};
  }
  if (o.n.empty()) throw ParseError("--n is required for " + id);
  for (int n : parse_range(o.n)) {
    VerifyParams p = base;
    p.n = n;
    if (id == "eq1.1" || id == "qfrob") {
      out.push_back(p);
      continue;
    }
    std::vector<int> ks;
    if (o.k == "all") {
      for (int k = 1; k <= n; ++k) ks.push_back(k);
    } else {
      for (int k : parse_range(o.k))
        if (k >= 1 && k <= n) ks.push_back(k);
    }
    for (int k : ks) {
      p.k = k;
      out.push_back(p);
    }
  }
  return out;
}

int cmd_verify(const VerifyOptions& o, bool as_json) {
  std::vector<std::string> ids;
  if (o.id == "all")
    ids = verify_ids();
  else if (std::find(verify_ids().begin(), verify_ids().end(), o.id) != verify_ids().end())
    ids = {o.id};
  else
    throw ParseError("unknown identity \"" + o.id + "\"");

  // Expand every parameter set before running anything so bad input fails fast.
  std::vector<std::pair<std::string, std::vector<VerifyParams>>> work;
  for (const auto& id : ids) work.emplace_back(id, expand(id, o));

  json all = json::array();
  bool ok = true;
  for (const auto& [id, list] : work) {
    for (const auto& p : list) {
      for (const auto& r : verify(id, p)) {
        ok = ok && r.pass;
        if (as_json) {
          all.push_back(r);
          continue;
        }
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.theorem << " " << r.params.dump() << "\n";
        if (!r.pass || o.verbose) {
          std::cout << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << "\n";
          if (r.counterexample) std::cout << "  counterexample: " << *r.counterexample << "\n";
        }
      }
    }
  }
  if (as_json) std::cout << all.dump(2) << "\n";
  return ok ? 0 : kVerificationFailed;
}

int cmd_table(const std::string& kind, const std::string& n_text, const std::string& k_text, bool as_json) {
  std::function<LaurentPolynomial(int, int)> f;
  int k_min = 1;
  if (kind == "stirling")
    f = stirling_pq;
  else if (kind == "stirling-q")
    f = stirling_q;
  else if (kind == "stirling-tilde")
    f = stirling_tilde;
  else if (kind == "s-hat")
    f = s_hat_pq;
  else if (kind == "eulerian") {
    f = carlitz_aq;
    k_min = 0;
  } else
    throw ParseError("unknown table \"" + kind + "\"");

  json rows = json::array();
  for (int n : parse_range(n_text)) {
    if (n < 1) throw ParseError("n must be positive");
    std::vector<int> ks;
    if (k_text == "all") {
      for (int k = k_min; k <= (kind == "eulerian" ? n - 1 : n); ++k) ks.push_back(k);
    } else {
      ks = parse_range(k_text);
    }
    for (int k : ks) {
      auto poly = f(n, k);
      if (as_json)
        rows.push_back({{"n", n}, {"k", k}, {"polynomial", poly}, {"text", poly.to_string()}});
      else
        std::cout << n << " " << k << "  " << poly << "\n";
    }
  }
  if (as_json) std::cout << rows.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistics, encodings and identity checks for ordered set partitions"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  std::string partition_text, diagram_text, method = "phi", which, sigma_text;

  auto* stats = app.add_subcommand("stats", "coordinate table and aggregate statistics");
  stats->add_option("partition", partition_text, "e.g. \"6 8/5/1 4 7/3 9/2\"")->required();

  auto add_method = [&](CLI::App* sub) {
    auto* g = sub->add_option_group("method");
    g->add_flag_callback("--phi", [&] { method = "phi"; }, "Φ (default)");
    g->add_flag_callback("--psi", [&] { method = "psi"; }, "Ψ");
    g->add_flag_callback("--motzkin", [&] { method = "motzkin"; }, "labeled Motzkin path");
    g->require_option(0, 1);
  };
  auto* encode = app.add_subcommand("encode", "partition to path diagram");
  encode->add_option("partition", partition_text)->required();
  add_method(encode);
  auto* decode = app.add_subcommand("decode", "path diagram to partition");
  decode->add_option("diagram", diagram_text, "e.g. \"NNNOOEDDED 0,0,2,1,2,3,2,0,1,0\"")->required();
  add_method(decode);

  auto* map = app.add_subcommand("map", "apply Ξ, Υ, Θ, Γ_σ or Λ");
  map->add_option("partition", partition_text)->required();
  {
    auto* g = map->add_option_group("map");
    for (const char* name : {"xi", "upsilon", "theta", "lambda"})
      g->add_flag_callback(std::string("--") + name, [&, name] { which = name; });
    g->add_option("--gamma", sigma_text, "Γ_σ with this σ");
    g->require_option(1);
  }

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "check an identity by exhaustive enumeration");
  verify_cmd->add_option("id", vo.id, "thm3.1 ... thm3.5, eq1.1, eq2.3, eq5.8, eq9.2, zezh, qfrob, shat or all")
      ->required();
  verify_cmd->add_option("--n", vo.n, "n, a range 1..6 or a list 2,4");
  verify_cmd->add_option("--k", vo.k, "k, a range, or all (default)");
  verify_cmd->add_option("--partition", vo.partition, "thm3.5: a single base partition");
  verify_cmd->add_option("--composition", vo.composition, "eq1.1: a single composition, e.g. 2,1,3");
  verify_cmd->add_option("--order", vo.order, "qfrob: truncation order in x")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", vo.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("-v,--verbose", vo.verbose, "print both sides of passing identities too");

  std::string table_kind, table_n, table_k = "all";
  auto* table = app.add_subcommand("table", "Stirling and Eulerian polynomial tables");
  table->add_option("kind", table_kind, "stirling, stirling-q, stirling-tilde, s-hat or eulerian")->required();
  table->add_option("--n", table_n, "n or a range")->required();
  table->add_option("--k", table_k, "k, a range, or all (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInvalidInput;
  }

  try {
    if (*stats) return cmd_stats(partition_text, as_json);
    if (*encode) return cmd_encode(method, partition_text, as_json);
    if (*decode) return cmd_decode(method, diagram_text, as_json);
    if (*map) return cmd_map(which.empty() ? "gamma" : which, sigma_text, partition_text, as_json);
    if (*verify_cmd) return cmd_verify(vo, as_json);
    if (*table) return cmd_table(table_kind, table_n, table_k, as_json);
  } catch (const ScaleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return 0;
}
