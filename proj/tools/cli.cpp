#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "percoperm/counting.hpp"
#include "percoperm/percolation.hpp"
#include "percoperm/permutation.hpp"
#include "percoperm/series.hpp"
#include "percoperm/tiling.hpp"

namespace percoperm::cli {

namespace {

using json = nlohmann::ordered_json;

/// Raised for bad argument values that CLI11 cannot validate by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::vector<Cell> parse_script(const std::string& text) {
  std::vector<Cell> cells;
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    Cell c;
    char comma = 0;
    std::istringstream cell(item);
    if (!(cell >> c.row >> comma >> c.col) || comma != ',' || !cell.eof()) {
      throw UsageError("bad script cell '" + item + "', expected ROW,COL");
    }
    cells.push_back(c);
  }
  return cells;
}

/// Factor values concatenated when every value is a digit, else spaced.
std::string render_factor(const Word& w, bool digits) {
  std::string out;
  for (int v : w.values()) {
    if (!digits && !out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string direction_name(Direction d) { return d == Direction::Left ? "left" : "right"; }

// --- percolate ------------------------------------------------------------

int cmd_percolate(const Permutation& p, const Policy& policy, const std::string& format, std::ostream& out) {
  const PercolationTrace trace = percolate(matrix_of(p), policy);
  const FinalConfiguration fc = extract_tiles(trace.final_grid);

  if (format == "json") {
    json doc;
    doc["steps"] = json::array();
    for (const Cell& c : trace.steps) doc["steps"].push_back({{"row", c.row}, {"col", c.col}});
    doc["tiles"] = json::array();
    for (const Tile& t : fc.tiles) {
      doc["tiles"].push_back({{"row", t.top_left.row}, {"col", t.top_left.col}, {"size", t.size}});
    }
    doc["full"] = fc.full();
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << "step,row,col\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      out << i + 1 << ',' << trace.steps[i].row << ',' << trace.steps[i].col << '\n';
    }
  } else {
    out << render_trace(trace) << '\n';
    out << "# steps: " << trace.steps.size() << '\n';
    out << "# tiles:";
    for (const Tile& t : fc.tiles) out << ' ' << t.size << '@' << t.top_left.row << ',' << t.top_left.col;
    out << '\n';
    if (trace.steps.empty()) {
      out << "# no-growth\n";
    } else {
      out << (fc.full() ? "# full\n" : "# not full\n");
    }
  }
  return kOk;
}

// --- bracket / unbracket --------------------------------------------------

int cmd_bracket(const Permutation& p, const std::string& algorithm, const std::string& format, std::ostream& out) {
  const MergeOutcome run = algorithm == "eager" ? merge_eager(p)
                           : algorithm == "right" ? merge_run(p, Direction::Right)
                                                  : merge_run(p, Direction::Left);
  if (format == "json") {
    json doc;
    doc["algorithm"] = algorithm;
    doc["melds"] = json::array();
    for (const Meld& m : run.melds) doc["melds"].push_back(serialize_meld(m));
    doc["full"] = run.full;
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << "index,meld\n";
    for (std::size_t i = 0; i < run.melds.size(); ++i) out << i + 1 << ',' << serialize_meld(run.melds[i]) << '\n';
  } else {
    for (const Meld& m : run.melds) out << serialize_meld(m) << '\n';
  }
  return kOk;
}

int cmd_unbracket(const std::string& text, const std::string& format, std::ostream& out) {
  const Meld m = parse_meld(text);
  const auto leaves = m.leaves();
  std::string values;
  for (int v : leaves) values += (values.empty() ? "" : " ") + std::to_string(v);
  if (format == "json") {
    json doc;
    doc["meld"] = serialize_meld(m);
    doc["values"] = leaves;
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << "meld,values\n" << serialize_meld(m) << ',' << values << '\n';
  } else {
    out << serialize_meld(m) << '\n' << values << '\n';
  }
  return kOk;
}

// --- comps ----------------------------------------------------------------

int cmd_comps(const Permutation& p, const std::string& format, std::ostream& out) {
  const auto factors = comps(p);
  const bool digits = p.size() <= 9;
  if (format == "json") {
    json doc;
    doc["components"] = json::array();
    for (const Word& w : factors) {
      doc["components"].push_back(std::vector<int>(w.values().begin(), w.values().end()));
    }
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << "index,component\n";
    for (std::size_t i = 0; i < factors.size(); ++i) out << i + 1 << ',' << factors[i].to_string() << '\n';
  } else {
    for (const Word& w : factors) out << '(' << render_factor(w, digits) << ')';
    out << '\n';
  }
  return kOk;
}

// --- count ----------------------------------------------------------------

Family parse_family(const std::string& which) {
  if (which == "full") return Family::Full;
  if (which == "indec-full") return Family::IndecomposableFull;
  if (which == "no-growth") return Family::NoGrowth;
  return Family::All;
}

json report_json(const CountReport& r) {
  const auto field = [](const std::optional<Integer>& v) -> json {
    if (!v) return nullptr;
    return v->convert_to<std::uint64_t>();
  };
  json row;
  row["n"] = r.n;
  row["p_n"] = field(r.p_n);
  row["q_n"] = field(r.q_n);
  row["a_n"] = field(r.a_n);
  row["elapsed_ms"] = std::round(r.elapsed.count() * 1000.0) / 1000.0;
  return row;
}

int cmd_count(int n, const std::string& which, bool parallel, const std::string& format, std::ostream& out) {
  if (n < 1 || n > kMaxCountN) throw UsageError("count: n must be in 1.." + std::to_string(kMaxCountN));
  const Family family = parse_family(which);
  const Execution exec = parallel ? Execution::Parallel : Execution::Serial;

  std::vector<CountReport> reports;
  for (int k = 1; k <= n; ++k) reports.push_back(count_report(k, family, exec));

  if (format == "json") {
    json doc = json::array();
    for (const auto& r : reports) doc.push_back(report_json(r));
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << CountReport::csv_header() << '\n';
    for (const auto& r : reports) out << r.to_csv_row() << '\n';
  } else {
    out << "# n";
    if (reports.front().p_n) out << " full";
    if (reports.front().q_n) out << " indec-full";
    if (reports.front().a_n) out << " no-growth";
    out << " elapsed_ms\n";
    for (const auto& r : reports) {
      out << r.n;
      for (const auto* v : {&r.p_n, &r.q_n, &r.a_n}) {
        if (*v) out << ' ' << (*v)->str();
      }
      char ms[32];
      std::snprintf(ms, sizeof ms, " %.3f", r.elapsed.count());
      out << ms << '\n';
    }
  }
  return kOk;
}

// --- sequence -------------------------------------------------------------

constexpr int kMaxSequenceN = 50;

int cmd_sequence(const std::string& name, int count, const std::string& format, std::ostream& out) {
  if (count < 0 || count > kMaxSequenceN) {
    throw UsageError("sequence: N must be in 0.." + std::to_string(kMaxSequenceN));
  }
  int first_index = 0;
  std::string header;
  std::vector<Integer> terms;
  if (name == "schroeder") {
    terms = schroeder_large_sequence(count);
    header = "large Schroeder numbers S_k, k = 0.." + std::to_string(count);
  } else if (name == "little-schroeder") {
    for (int k = 0; k <= count; ++k) terms.push_back(schroeder_little(k));
    header = "little Schroeder numbers s_k, k = 0.." + std::to_string(count);
  } else if (name == "kings") {
    terms.push_back(1);
    for (int k = 1; k <= count; ++k) terms.push_back(a_abramson_moser(k));
    header = "no-growth permutations a_n, n = 0.." + std::to_string(count);
  } else {
    first_index = 1;
    if (count >= 1) {
      const auto large = schroeder_large_sequence(count - 1);
      terms.assign(large.begin(), large.end());
    }
    header = "full permutations p_n = S_(n-1), n = 1.." + std::to_string(count);
  }

  if (format == "json") {
    json doc = json::array();
    for (const auto& t : terms) doc.push_back(t.str());
    out << doc.dump() << '\n';
  } else if (format == "csv") {
    out << "index,value\n";
    for (std::size_t i = 0; i < terms.size(); ++i) out << first_index + static_cast<int>(i) << ',' << terms[i] << '\n';
  } else {
    out << "# " << header << '\n';
    for (const auto& t : terms) out << t << '\n';
  }
  return kOk;
}

}  // namespace

// --- verify ---------------------------------------------------------------

VerificationInputs gather_verification_inputs(int n) {
  VerificationInputs in;
  in.n = n;
  in.full.push_back(0);
  in.indecomposable_full.push_back(0);
  in.no_growth.push_back(0);
  for (int k = 1; k <= n; ++k) {
    const CountReport r = count_report(k, Family::All, Execution::Parallel);
    in.full.push_back(*r.p_n);
    in.indecomposable_full.push_back(*r.q_n);
    in.no_growth.push_back(*r.a_n);
  }
  return in;
}

int report_verification(const VerificationInputs& in, std::ostream& out) {
  bool all = true;
  const auto check = [&](bool ok, const std::string& label) {
    out << (ok ? "PASS " : "FAIL ") << label << '\n';
    all = all && ok;
  };
  const int n = in.n;
  const std::string range = "n=1.." + std::to_string(n);

  bool identity = true;
  const std::vector<Integer> p(in.full.begin() + 1, in.full.end());
  const std::vector<Integer> a(in.no_growth.begin() + 1, in.no_growth.end());
  for (int k = 1; k <= n; ++k) {
    const auto fi = verify_factorial_identity(k, p, a);
    identity = identity && fi.lhs == fi.rhs;
  }
  check(identity, "factorial-identity " + range);

  bool half = true;
  for (int k = 2; k <= n; ++k) half = half && 2 * in.indecomposable_full[k] == in.full[k];
  check(half, n >= 2 ? "half-lemma n=2.." + std::to_string(n) : "half-lemma (vacuous for n=1)");

  bool schroeder = true;
  for (int k = 1; k <= n; ++k) {
    schroeder = schroeder && in.full[k] == schroeder_large(k - 1) &&
                in.indecomposable_full[k] == schroeder_little(k - 1);
  }
  check(schroeder, "schroeder-agreement " + range);

  bool kings = true;
  const auto via_series = a_via_series(n);
  for (int k = 1; k <= n; ++k) {
    const Integer& brute = in.no_growth[k];
    kings = kings && brute == a_formula(k) && brute == a_abramson_moser(k) && brute == via_series[k];
  }
  check(kings, "kings-four-way " + range);

  return all ? kOk : kVerificationFailed;
}

namespace {

int cmd_verify(int n, std::ostream& out) {
  if (n < 1 || n > 9) throw UsageError("verify: n must be in 1..9");
  const auto start = std::chrono::steady_clock::now();
  const auto inputs = gather_verification_inputs(n);
  const int code = report_verification(inputs, out);
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  char ms[64];
  std::snprintf(ms, sizeof ms, "# elapsed_ms %.3f\n", elapsed.count());
  out << ms;
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bootstrap percolation on permutation matrices", "percoperm"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"plain", "json", "csv"};
  std::string format = "plain";
  std::vector<std::string> perm_tokens;

  auto* percolate_cmd = app.add_subcommand("percolate", "Percolate a permutation matrix and print the trace");
  std::string policy_name = "first-scan";
  std::uint64_t seed = 0;
  std::string script;
  percolate_cmd->add_option("permutation", perm_tokens, "Permutation values")->required()->expected(-1);
  percolate_cmd->add_option("--policy", policy_name, "Choice of mutable cell: first-scan, random, scripted")
      ->check(CLI::IsMember({"first-scan", "random", "scripted"}));
  percolate_cmd->add_option("--seed", seed, "Seed for the random policy (default 0)");
  percolate_cmd->add_option("--script", script, "Scripted cells as 'ROW,COL ROW,COL ...'");
  percolate_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* bracket_cmd = app.add_subcommand("bracket", "Tile-merging bracketing of a permutation");
  bool left = false;
  bool right = false;
  bool eager = false;
  bracket_cmd->add_option("permutation", perm_tokens, "Permutation values")->required()->expected(-1);
  auto* left_flag = bracket_cmd->add_flag("--left", left, "Left merging (default)");
  auto* right_flag = bracket_cmd->add_flag("--right", right, "Right merging");
  auto* eager_flag = bracket_cmd->add_flag("--eager", eager, "Eager left-to-right merging");
  left_flag->excludes(right_flag)->excludes(eager_flag);
  right_flag->excludes(eager_flag);
  bracket_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* unbracket_cmd = app.add_subcommand("unbracket", "Parse a bracketing string and re-emit it");
  std::string meld_text;
  unbracket_cmd->add_option("bracketing", meld_text, "e.g. \"((1 [3 2]) 4)\"")->required();
  unbracket_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* comps_cmd = app.add_subcommand("comps", "Indecomposable components");
  comps_cmd->add_option("permutation", perm_tokens, "Permutation values")->required()->expected(-1);
  comps_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* count_cmd = app.add_subcommand("count", "Brute-force counts for sizes 1..n");
  int n = 0;
  std::string which = "all";
  bool parallel = false;
  count_cmd->add_option("n", n, "Largest size (1..12)")->required();
  count_cmd->add_option("--which", which, "full, indec-full, no-growth or all")
      ->check(CLI::IsMember({"full", "indec-full", "no-growth", "all"}));
  count_cmd->add_flag("--parallel", parallel, "Partition the enumeration over threads (PERCOPERM_THREADS)");
  count_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check counts, recurrences and formulas up to n");
  verify_cmd->add_option("n", n, "Largest size (1..9)")->required();

  auto* sequence_cmd = app.add_subcommand("sequence", "Print a reference sequence");
  std::string name;
  int terms = 0;
  sequence_cmd->add_option("name", name, "schroeder, little-schroeder, kings or full")
      ->required()
      ->check(CLI::IsMember({"schroeder", "little-schroeder", "kings", "full"}));
  sequence_cmd->add_option("N", terms, "Last index (0..50)")->required();
  sequence_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (percolate_cmd->parsed()) {
      const Permutation p = parse_permutation(join_tokens(perm_tokens));
      Policy policy = FirstScan{};
      if (policy_name == "random") policy = RandomOrder{seed};
      if (policy_name == "scripted") policy = Scripted{parse_script(script)};
      return cmd_percolate(p, policy, format, out);
    }
    if (bracket_cmd->parsed()) {
      const std::string algorithm = right ? "right" : eager ? "eager" : "left";
      return cmd_bracket(parse_permutation(join_tokens(perm_tokens)), algorithm, format, out);
    }
    if (unbracket_cmd->parsed()) return cmd_unbracket(meld_text, format, out);
    if (comps_cmd->parsed()) return cmd_comps(parse_permutation(join_tokens(perm_tokens)), format, out);
    if (count_cmd->parsed()) return cmd_count(n, which, parallel, format, out);
    if (verify_cmd->parsed()) return cmd_verify(n, out);
    if (sequence_cmd->parsed()) return cmd_sequence(name, terms, format, out);
  } catch (const PermutationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    // Bad scripted sequences and malformed bracketings.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace percoperm::cli
