// Command-line front end: solve, zs, line, diff, scan, check, verify-oracle, sample.
//
// Exit codes: 0 clean, 1 violation or counterexample found, 2 usage error,
// 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cumsub/cumsub.hpp"
#include "cumsub/io.hpp"

namespace {

using namespace cumsub;
using nlohmann::json;

constexpr int kClean = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << content;
  if (!f.flush()) throw IoError("failed writing " + path);
}

io::Metadata base_meta(std::string command) {
  return {{"tool", "cumsub"}, {"version", std::string(io::kVersion)}, {"command", std::move(command)}};
}

std::vector<Convention> parse_conventions(const std::string& text) {
  if (text == "all") return {kAllConventions.begin(), kAllConventions.end()};
  std::vector<Convention> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) out.push_back(parse_convention(tok));
  if (out.empty()) throw UsageError("no conventions given");
  return out;
}

// Where the sets for check / verify-oracle come from.
struct SetSource {
  std::string set;
  std::string sample;
  std::string sweep;  // "arity=2,smax=25"
  std::optional<std::uint64_t> seed;

  std::vector<SubtractionSet> resolve() const {
    const int given = !set.empty() + !sample.empty() + !sweep.empty();
    if (given != 1) throw UsageError("give exactly one of --set, --sample, --sweep");
    if (!set.empty()) return {SubtractionSet::parse(set)};
    if (!sample.empty()) {
      if (!seed) throw UsageError("--sample requires --seed");
      return sample_sets(parse_sample_spec(sample), *seed);
    }
    std::size_t arity = 2;
    Action smax = 25;
    std::stringstream ss(sweep);
    for (std::string item; std::getline(ss, item, ',');) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("bad --sweep entry: " + item);
      const auto key = item.substr(0, eq);
      const auto val = std::stoull(item.substr(eq + 1));
      if (key == "arity")
        arity = val;
      else if (key == "smax")
        smax = val;
      else
        throw UsageError("unknown --sweep key: " + key);
    }
    return all_sets(arity, smax);
  }

  void describe(io::Metadata& meta) const {
    if (!set.empty()) meta.emplace_back("set", set);
    if (!sample.empty()) meta.emplace_back("sample", sample);
    if (!sweep.empty()) meta.emplace_back("sweep", sweep);
    if (seed) meta.emplace_back("seed", std::to_string(*seed));
    if (!sample.empty()) meta.emplace_back("sampler", std::string(kSamplerId));
  }
};

void add_source_options(CLI::App* cmd, SetSource& src) {
  cmd->add_option("--set", src.set, "Single subtraction set, e.g. 4,5,9");
  cmd->add_option("--sample", src.sample, "Random sets, e.g. sizes=3..10,count=200,max=25");
  cmd->add_option("--sweep", src.sweep, "All sets of an arity, e.g. arity=2,smax=25");
  cmd->add_option("--seed", src.seed, "Seed for --sample");
}

json set_json(const SubtractionSet& s) { return s.actions(); }

// --- solve / zs / line / diff ------------------------------------------------

struct SolveArgs {
  std::string set;
  Heap hmax = 15;
  std::string conventions = "all";
  std::string format = "text";
  std::string out;
};

int run_solve(const SolveArgs& a) {
  const auto s = SubtractionSet::parse(a.set);
  const auto convs = parse_conventions(a.conventions);
  const auto t = solve(s, a.hmax);
  auto meta = base_meta("solve");
  meta.insert(meta.end(), {{"set", s.to_string()}, {"hmax", std::to_string(a.hmax)}, {"conventions", a.conventions}});
  if (a.format == "text")
    write_output(a.out, io::render_solve_text(t, convs, meta));
  else if (a.format == "csv")
    write_output(a.out, io::render_solve_csv(t, convs, meta));
  else if (a.format == "json")
    write_output(a.out, io::solve_json(t, convs, meta).dump(2) + "\n");
  else
    throw UsageError("unknown format: " + a.format);
  return kClean;
}

int run_zs(const std::string& set, Heap hmax, const std::string& format, const std::string& out) {
  const auto s = SubtractionSet::parse(set);
  const auto z = zero_sum_solve(s, hmax);
  auto meta = base_meta("zs");
  meta.insert(meta.end(), {{"set", s.to_string()}, {"hmax", std::to_string(hmax)}});
  if (format == "json") {
    write_output(out, json{{"meta", io::metadata_json(meta)}, {"o_zs", z}}.dump(2) + "\n");
    return kClean;
  }
  if (format != "csv" && format != "text") throw UsageError("unknown format: " + format);
  std::string body = io::metadata_comment(meta) + io::csv_row(std::vector<std::string>{"heap", "o_zs"});
  for (Heap h = 0; h <= hmax; ++h) body += io::csv_row(std::vector<std::string>{std::to_string(h), std::to_string(z[h])});
  write_output(out, body);
  return kClean;
}

int run_line(const std::string& set, Heap heap, const std::string& conv, bool zero_sum) {
  const auto s = SubtractionSet::parse(set);
  auto meta = base_meta("line");
  meta.insert(meta.end(), {{"set", s.to_string()}, {"heap", std::to_string(heap)}});
  std::string body;
  if (zero_sum) {
    meta.emplace_back("game", "zero-sum");
    const auto line = zs_play_line(s, heap);
    const auto tot = line_totals(line);
    body = io::metadata_comment(meta) + "line: " + format_line(line) + "\n" +
           "score: " + std::to_string(static_cast<std::int64_t>(tot.o1) - static_cast<std::int64_t>(tot.o2)) +
           "  o_zs: " + std::to_string(zero_sum_solve(s, heap)[heap]) + "\n";
  } else {
    const auto x = parse_convention(conv);
    meta.emplace_back("convention", std::string(to_string(x)));
    const auto t = solve(s, heap);
    const auto line = play_line(t, x, heap);
    body = io::metadata_comment(meta) + "line: " + format_line(line) + "\n" +
           "pockets: " + to_string(line_totals(line)) + "  outcome: " + to_string(t.outcome(x, heap)) + "\n";
    for (const auto& m : line) body += "  player " + std::to_string(m.mover) + " takes " + std::to_string(m.action) + "\n";
  }
  write_output("", body);
  return kClean;
}

int run_diff(const std::string& set, Heap hmax, const std::string& base, const std::string& other,
             const std::string& criterion, const std::string& out) {
  const auto s = SubtractionSet::parse(set);
  const auto bx = parse_convention(base), ox = parse_convention(other);
  const auto crit = parse_criterion(criterion);
  const auto t = solve(s, hmax);
  const auto recs = discrepancy_table(t, bx, ox);
  const auto first = first_discrepancy(t, bx, ox, crit);
  auto meta = base_meta("diff");
  meta.insert(meta.end(), {{"set", s.to_string()},
                           {"hmax", std::to_string(hmax)},
                           {"base", std::string(to_string(bx))},
                           {"other", std::string(to_string(ox))},
                           {"criterion", std::string(to_string(crit))},
                           {"first_discrepancy", first ? std::to_string(*first) : "none"}});
  write_output(out, io::render_discrepancy_csv(recs, meta));
  return kClean;
}

// --- scan ------------------------------------------------------------------

int run_scan(std::size_t arity, const std::string& compare, Action smax, Heap hmax, const std::string& criterion,
             const std::string& out, unsigned jobs) {
  if (arity != 2 && arity != 3) throw UsageError("--arity must be 2 or 3");
  ScanOptions opts{hmax, jobs};
  std::vector<ScanPoint> pts;
  Criterion crit = Criterion::zs_vs_ava;
  if (compare == "ava-zs") {
    pts = scan_ava_vs_zero_sum(arity, smax, opts);
  } else if (compare == "fvf-ava") {
    crit = parse_criterion(criterion);
    if (crit == Criterion::zs_vs_ava) throw UsageError("use --compare ava-zs for the zero-sum comparison");
    pts = arity == 2 ? scan_two_action(smax, crit, opts) : scan_three_action(smax, crit, opts);
  } else {
    throw UsageError("--compare must be fvf-ava or ava-zs");
  }
  auto meta = base_meta("scan");
  meta.insert(meta.end(), {{"arity", std::to_string(arity)},
                           {"compare", compare},
                           {"criterion", std::string(to_string(crit))},
                           {"smax", std::to_string(smax)},
                           {"hmax", std::to_string(hmax)}});
  write_output(out, io::render_scan_csv(pts, meta));
  (out.empty() || out == "-" ? std::cerr : std::cout)
      << "scan: " << pts.size() << " points (arity " << arity << ", " << compare << ", smax " << smax << ", hmax "
      << hmax << ")\n";
  return kClean;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  std::string name;
  SetSource src;
  Heap hmax = 300;
  std::string convention = "all";
  unsigned jobs = 1;
  std::string json_out;
};

// Result of one checker on one set.
struct SetReport {
  bool applicable = true;
  std::vector<std::string> violations;
  json detail = json::object();
};

SetReport check_one(const std::string& name, const SubtractionSet& s, Heap hmax, const std::vector<Convention>& convs) {
  SetReport r;
  auto heap_list = [](const std::vector<Heap>& hs) {
    std::string out;
    for (auto h : hs) out += (out.empty() ? "" : ",") + std::to_string(h);
    return out;
  };
  if (name == "first-player") {
    const auto t = solve(s, hmax);
    for (Convention x : convs) {
      const auto bad = check_first_player_advantage(t, x);
      r.detail[std::string(to_string(x))] = bad;
      if (!bad.empty()) r.violations.push_back(std::string(to_string(x)) + " second player ahead at h=" + heap_list(bad));
    }
  } else if (name == "monotonicity") {
    for (const auto& v : check_tiebreak_monotonicity(s, hmax)) {
      r.violations.push_back("h=" + std::to_string(v.heap) + " violates " + std::string(to_string(v.relation)));
      r.detail["violations"].push_back({{"heap", v.heap}, {"relation", to_string(v.relation)}});
    }
  } else if (name == "main-theorem") {
    for (const auto& v : check_main_theorem(s, hmax)) {
      r.violations.push_back("h=" + std::to_string(v.heap) + " player " + std::to_string(v.player) +
                             " better off under AvA");
      r.detail["violations"].push_back({{"heap", v.heap}, {"player", v.player}});
    }
  } else if (name == "dominant-equality") {
    if (s.size() != 2 || !classify_regime(s).is_dominant()) {
      r.applicable = false;
      return r;
    }
    for (const auto& v : check_dominant_equality(s, hmax)) {
      r.violations.push_back("h=" + std::to_string(v.heap) + " " + std::string(to_string(v.a)) +
                             " != " + std::string(to_string(v.b)));
      r.detail["violations"].push_back({{"heap", v.heap}, {"a", to_string(v.a)}, {"b", to_string(v.b)}});
    }
  } else if (name == "ratio") {
    if (s.size() != 2 || !is_consecutive_ratio(s)) {
      r.applicable = false;
      return r;
    }
    const auto first = check_ratio_conjecture(s, hmax);
    r.detail["first_discrepancy"] = first ? json(*first) : json(nullptr);
    if (first) r.violations.push_back("discrepancy at h=" + std::to_string(*first));
  } else if (name == "first-formula" || name == "additive-formula") {
    const bool additive = name == "additive-formula";
    const bool ok = additive ? (s.size() == 3 && s.s1() == s.s2() + s.s3() && s.s2() % s.s3() != 0)
                             : (s.size() == 2 && !classify_regime(s).is_dominant() && !is_consecutive_ratio(s));
    if (!ok) {
      r.applicable = false;
      return r;
    }
    const auto c = additive ? check_additive_formula(s, hmax) : check_first_formula(s, hmax);
    r.detail = {{"predicted", c.predicted ? json(c.predicted->heap) : json(nullptr)},
                {"i", c.predicted ? json(c.predicted->i) : json(nullptr)},
                {"k", c.predicted && !additive ? json(c.predicted->k) : json(nullptr)},
                {"observed", c.observed ? json(*c.observed) : json(nullptr)},
                {"status", to_string(c.status)}};
    if (c.status == FormulaStatus::mismatch)
      r.violations.push_back("predicted " + (c.predicted ? std::to_string(c.predicted->heap) : std::string("none")) +
                             ", observed " + (c.observed ? std::to_string(*c.observed) : std::string("none")));
  } else if (name == "zs-ava") {
    const Convention ava[] = {Convention::AvA};
    const auto first = first_discrepancy(solve(s, hmax, ava), Convention::FvF, Convention::AvA, Criterion::zs_vs_ava);
    const bool expected_none = s.size() == 2 || (s.size() == 3 && zs_coincidence_expected(s));
    r.detail = {{"first_discrepancy", first ? json(*first) : json(nullptr)}, {"coincidence_expected", expected_none}};
    if (first && expected_none) r.violations.push_back("zero-sum differs from AvA at h=" + std::to_string(*first));
  } else if (name == "periodicity") {
    const std::size_t period = 2 * s.max_action();
    auto examine = [&](const std::string& label, const std::vector<std::int64_t>& f) {
      std::optional<PeriodicityReport> rep;
      if (f.size() > 2 * period) rep = detect_periodicity(f, period, PeriodicityMode::pure);
      if (rep) {
        r.detail[label] = {{"preperiod", rep->preperiod}, {"period", rep->period}, {"constant", rep->additive_constant}};
        if (period % rep->period != 0)
          r.violations.push_back(label + " period " + std::to_string(rep->period) + " does not divide " +
                                 std::to_string(period));
      } else {
        r.detail[label] = nullptr;
        r.violations.push_back(label + " shows no period <= " + std::to_string(period) + " within hmax");
      }
    };
    examine("o_zs", zero_sum_solve(s, hmax));
    const auto recs = discrepancy_table(s, Convention::FvF, Convention::AvA, hmax);
    std::vector<std::int64_t> d1, d2;
    for (const auto& d : recs) {
      d1.push_back(d.d1);
      d2.push_back(d.d2);
    }
    examine("delta1", d1);
    examine("delta2", d2);
  } else {
    throw UsageError("unknown checker: " + name);
  }
  return r;
}

int run_check(const CheckArgs& a) {
  static const std::vector<std::string> known{"first-player", "monotonicity", "main-theorem",
                                              "dominant-equality", "ratio", "first-formula",
                                              "additive-formula", "zs-ava", "periodicity"};
  if (std::find(known.begin(), known.end(), a.name) == known.end()) throw UsageError("unknown checker: " + a.name);
  const auto sets = a.src.resolve();
  const auto convs = parse_conventions(a.convention);
  if (a.name == "dominant-equality" && !a.src.set.empty()) {
    const auto& s = sets.front();
    if (s.size() != 2 || !classify_regime(s).is_dominant())
      throw PreconditionError("dominant-equality needs a two-action set with 2*s2 <= s1, got {" + s.to_string() + "}");
  }

  const auto reports = parallel_map(std::span<const SubtractionSet>(sets), a.jobs,
                                    [&](const SubtractionSet& s) { return check_one(a.name, s, a.hmax, convs); });

  auto meta = base_meta("check");
  meta.insert(meta.end(), {{"name", a.name}, {"hmax", std::to_string(a.hmax)}, {"convention", a.convention}});
  a.src.describe(meta);

  std::size_t checked = 0, violating = 0;
  json results = json::array();
  std::string text = io::metadata_comment(meta);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& r = reports[i];
    if (!r.applicable) continue;
    ++checked;
    if (!r.violations.empty()) ++violating;
    results.push_back({{"set", set_json(sets[i])}, {"violations", r.violations}, {"detail", r.detail}});
    for (const auto& v : r.violations) text += "{" + sets[i].to_string() + "} " + v + "\n";
  }
  text += a.name + ": " + std::to_string(checked) + " sets checked, " + std::to_string(violating) +
          " with violations (" + std::to_string(sets.size() - checked) + " not applicable)\n";

  const json doc{{"meta", io::metadata_json(meta)},
                 {"checked", checked},
                 {"violating", violating},
                 {"not_applicable", sets.size() - checked},
                 {"results", results}};
  if (a.json_out == "-") {
    write_output("", doc.dump(2) + "\n");
  } else {
    write_output("", text);
    if (!a.json_out.empty()) write_output(a.json_out, doc.dump(2) + "\n");
  }
  return violating ? kViolation : kClean;
}

int run_verify_oracle(const SetSource& src, Heap hmax, unsigned jobs) {
  const auto sets = src.resolve();
  OracleOptions opts;
  opts.max_heap = std::max<Heap>(opts.max_heap, hmax);
  const auto found = parallel_map(std::span<const SubtractionSet>(sets), jobs,
                                  [&](const SubtractionSet& s) { return check_oracle(s, hmax, opts); });
  auto meta = base_meta("verify-oracle");
  meta.emplace_back("hmax", std::to_string(hmax));
  src.describe(meta);
  std::string text = io::metadata_comment(meta);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (const auto& m : found[i]) {
      ++bad;
      text += "{" + sets[i].to_string() + "} " + std::string(to_string(m.convention)) + " h=" + std::to_string(m.heap) +
              " solve " + to_string(m.solved) + " oracle " + to_string(m.oracle) + "\n";
    }
  text += "verify-oracle: " + std::to_string(sets.size()) + " sets, " + std::to_string(bad) + " mismatches\n";
  write_output("", text);
  return bad ? kViolation : kClean;
}

int run_sample(std::size_t size, Action max_val, std::size_t count, std::uint64_t seed, const std::string& out) {
  const auto sets = sample_random_sets(size, max_val, count, seed);
  auto meta = base_meta("sample");
  meta.insert(meta.end(), {{"size", std::to_string(size)},
                           {"max", std::to_string(max_val)},
                           {"count", std::to_string(count)},
                           {"seed", std::to_string(seed)},
                           {"sampler", std::string(kSamplerId)}});
  std::string body = io::metadata_comment(meta);
  for (const auto& s : sets) body += s.to_string() + "\n";
  write_output(out, body);
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cumulative self-interest subtraction games: PSPE tables, scans and checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kVersion));
  int rc = kClean;

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "PSPE outcome table for each convention");
  solve_cmd->add_option("--set", solve_args.set, "Actions, e.g. 3,5")->required();
  solve_cmd->add_option("--hmax", solve_args.hmax, "Largest heap")->capture_default_str();
  solve_cmd->add_option("--conventions", solve_args.conventions, "Comma list or 'all'")->capture_default_str();
  solve_cmd->add_option("--format", solve_args.format, "text, csv or json")->capture_default_str();
  solve_cmd->add_option("--out", solve_args.out, "Output file (default stdout)");
  solve_cmd->callback([&] { rc = run_solve(solve_args); });

  std::string zs_set, zs_format = "csv", zs_out;
  Heap zs_hmax = 50;
  auto* zs_cmd = app.add_subcommand("zs", "Zero-sum scoring values");
  zs_cmd->add_option("--set", zs_set)->required();
  zs_cmd->add_option("--hmax", zs_hmax)->capture_default_str();
  zs_cmd->add_option("--format", zs_format, "csv or json")->capture_default_str();
  zs_cmd->add_option("--out", zs_out);
  zs_cmd->callback([&] { rc = run_zs(zs_set, zs_hmax, zs_format, zs_out); });

  std::string line_set, line_conv = "FvF";
  Heap line_heap = 0;
  bool line_zs = false;
  auto* line_cmd = app.add_subcommand("line", "Principal play line from one heap");
  line_cmd->add_option("--set", line_set)->required();
  line_cmd->add_option("--heap", line_heap)->required();
  line_cmd->add_option("--convention", line_conv)->capture_default_str();
  line_cmd->add_flag("--zero-sum", line_zs, "Trace the zero-sum game instead");
  line_cmd->callback([&] { rc = run_line(line_set, line_heap, line_conv, line_zs); });

  std::string diff_set, diff_base = "FvF", diff_other = "AvA", diff_crit = "diff-of-diff", diff_out;
  Heap diff_hmax = 300;
  auto* diff_cmd = app.add_subcommand("diff", "Discrepancy table between two conventions");
  diff_cmd->add_option("--set", diff_set)->required();
  diff_cmd->add_option("--hmax", diff_hmax)->capture_default_str();
  diff_cmd->add_option("--base", diff_base)->capture_default_str();
  diff_cmd->add_option("--other", diff_other)->capture_default_str();
  diff_cmd->add_option("--criterion", diff_crit, "diff-of-diff, componentwise or zs-vs-ava")->capture_default_str();
  diff_cmd->add_option("--out", diff_out);
  diff_cmd->callback([&] { rc = run_diff(diff_set, diff_hmax, diff_base, diff_other, diff_crit, diff_out); });

  std::size_t scan_arity = 2;
  std::string scan_compare = "fvf-ava", scan_crit = "diff-of-diff", scan_out;
  Action scan_smax = 25;
  Heap scan_hmax = 300;
  unsigned scan_jobs = default_jobs();
  auto* scan_cmd = app.add_subcommand("scan", "Parameter sweep emitting point files");
  scan_cmd->add_option("--arity", scan_arity)->capture_default_str();
  scan_cmd->add_option("--compare", scan_compare, "fvf-ava or ava-zs")->capture_default_str();
  scan_cmd->add_option("--criterion", scan_crit, "diff-of-diff or componentwise")->capture_default_str();
  scan_cmd->add_option("--smax", scan_smax)->capture_default_str();
  scan_cmd->add_option("--hmax", scan_hmax)->capture_default_str();
  scan_cmd->add_option("--out", scan_out);
  scan_cmd->add_option("--jobs", scan_jobs, "Worker threads (default from CUMSUB_JOBS)")->capture_default_str();
  scan_cmd->callback(
      [&] { rc = run_scan(scan_arity, scan_compare, scan_smax, scan_hmax, scan_crit, scan_out, scan_jobs); });

  CheckArgs check_args;
  check_args.jobs = default_jobs();
  auto* check_cmd = app.add_subcommand("check", "Run a checker over one or many sets");
  check_cmd->add_option("--name", check_args.name,
                        "first-player, monotonicity, main-theorem, dominant-equality, ratio, first-formula, "
                        "additive-formula, zs-ava, periodicity")
      ->required();
  add_source_options(check_cmd, check_args.src);
  check_cmd->add_option("--hmax", check_args.hmax)->capture_default_str();
  check_cmd->add_option("--convention", check_args.convention, "For first-player: comma list or 'all'")
      ->capture_default_str();
  check_cmd->add_option("--jobs", check_args.jobs)->capture_default_str();
  check_cmd->add_option("--json", check_args.json_out, "Write JSON report to file ('-' for stdout)");
  check_cmd->callback([&] { rc = run_check(check_args); });

  SetSource oracle_src;
  Heap oracle_hmax = 30;
  unsigned oracle_jobs = default_jobs();
  auto* oracle_cmd = app.add_subcommand("verify-oracle", "Compare the solver with the direct recursion");
  add_source_options(oracle_cmd, oracle_src);
  oracle_cmd->add_option("--hmax", oracle_hmax)->capture_default_str();
  oracle_cmd->add_option("--jobs", oracle_jobs)->capture_default_str();
  oracle_cmd->callback([&] { rc = run_verify_oracle(oracle_src, oracle_hmax, oracle_jobs); });

  std::size_t sample_size = 3, sample_count = 200;
  Action sample_max = 25;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  auto* sample_cmd = app.add_subcommand("sample", "Draw distinct random subtraction sets");
  sample_cmd->add_option("--size", sample_size)->capture_default_str();
  sample_cmd->add_option("--max", sample_max)->capture_default_str();
  sample_cmd->add_option("--count", sample_count)->capture_default_str();
  sample_cmd->add_option("--seed", sample_seed)->required();
  sample_cmd->add_option("--out", sample_out);
  sample_cmd->callback([&] { rc = run_sample(sample_size, sample_max, sample_count, sample_seed, sample_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return rc;
}
