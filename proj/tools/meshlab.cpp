// meshlab: tables, verification suites, series and brute-force queries for
// marked mesh pattern distributions on alternating permutations.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "meshlab/coefficient_laws.hpp"
#include "meshlab/distributions.hpp"
#include "meshlab/errors.hpp"
#include "meshlab/polynomial_format.hpp"
#include "meshlab/verification.hpp"

using namespace meshlab;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr std::size_t kMaxSeriesOrder = 40;

const std::vector<std::string> kFormats = {"plain", "csv", "latex", "json"};

json coefficients_json(const XPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

std::string length_label(Family f, std::size_t index) {
  return std::string(1, family_name(f)) + "_" + std::to_string(family_length(f, index));
}

// ---------------------------------------------------------------------------

struct TableArgs {
  std::string family;
  std::size_t max_index = 6;
  std::string format = "plain";
  std::string cache;
};

int cmd_table(const TableArgs& args) {
  const Family f = parse_family(args.family);
  const FamilyTable table(args.max_index);
  std::vector<DistributionRecord> records;
  for (std::size_t i = min_family_index(f); i <= args.max_index; ++i) {
    records.push_back({f, i, table.get(f, i), Provenance::Recursion});
  }

  std::ostringstream out;
  if (args.format == "plain") {
    for (const auto& r : records) out << length_label(f, r.index) << "(x) = " << format_polynomial(r.polynomial) << '\n';
  } else if (args.format == "csv") {
    out << "index,length,polynomial\n";
    for (const auto& r : records) {
      out << r.index << ',' << family_length(f, r.index) << ',' << format_polynomial(r.polynomial) << '\n';
    }
  } else if (args.format == "latex") {
    out << "\\begin{tabular}{r|l}\n";
    for (const auto& r : records) {
      out << family_length(f, r.index) << " & $" << format_polynomial_latex(r.polynomial) << "$ \\\\\n";
    }
    out << "\\end{tabular}\n";
  } else {
    json rows = json::array();
    for (const auto& r : records) {
      rows.push_back({{"family", std::string(1, family_name(f))},
                      {"index", r.index},
                      {"length", family_length(f, r.index)},
                      {"polynomial", format_polynomial(r.polynomial)},
                      {"coefficients", coefficients_json(r.polynomial)}});
    }
    out << rows.dump(2) << '\n';
  }
  std::cout << out.str();

  if (!args.cache.empty()) {
    try {
      update_cache(args.cache, records);
    } catch (const std::exception& e) {
      std::cerr << "meshlab: cache not written: " << e.what() << '\n';
      return kExitFailure;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::size_t max_length = 0;  // 0: suite defaults
  bool strict = false;
  std::string report;
  unsigned workers = 1;
  bool force = false;
  std::string format = "plain";
};

int cmd_verify(const VerifyArgs& args) {
  SuiteBounds bounds;
  bounds.brute.workers = args.workers;
  bounds.brute.force = args.force;
  if (args.max_length > 0) {
    bounds.symmetry_max_length = args.max_length;
    bounds.oracle_max_length = args.max_length;
  }
  const Report report = run_suite(args.suite, bounds);
  const bool ok = report.passed(args.strict);

  if (!args.report.empty()) {
    std::ofstream file(args.report);
    file << report.to_json() << '\n';
    if (!file) {
      std::cerr << "meshlab: cannot write report to " << args.report << '\n';
      return kExitFailure;
    }
  }

  if (args.format == "json") {
    std::cout << report.to_json() << '\n';
    return ok ? kExitOk : kExitFailure;
  }

  // Per-check tallies in first-seen order.
  std::vector<std::string> order;
  std::map<std::string, std::array<std::size_t, 3>> tally;
  for (const auto& e : report.entries()) {
    if (!tally.contains(e.check)) order.push_back(e.check);
    ++tally[e.check][static_cast<int>(e.verdict)];
  }
  std::cout << "suite " << args.suite << '\n';
  for (const auto& check : order) {
    const auto& t = tally[check];
    std::cout << "  " << check << ": " << t[0] << " pass, " << t[1] << " fail, " << t[2] << " mismatch\n";
  }
  std::size_t nontrivial_rows = 0;
  for (const auto& e : report.entries()) {
    if (e.check == "table" && e.verdict == Verdict::Pass && e.n.value_or(0) > 0) ++nontrivial_rows;
  }
  if (report.count("table", Verdict::Pass) > 0) {
    std::cout << "  " << nontrivial_rows << " nontrivial table rows matched\n";
  }
  for (const auto& e : report.entries()) {
    if (e.verdict == Verdict::Pass) continue;
    std::cout << "  [" << to_string(e.verdict) << "] " << e.check;
    if (!e.family.empty()) std::cout << ' ' << e.family;
    if (e.k) std::cout << " k=" << *e.k;
    if (e.n) std::cout << " n=" << *e.n;
    if (!e.variant.empty()) std::cout << " (" << e.variant << ')';
    std::cout << ": expected " << e.expected << ", got " << e.actual << '\n';
  }
  std::cout << (ok ? "ok" : "FAILED") << ": " << report.count(Verdict::Pass) << " pass, "
            << report.count(Verdict::Fail) << " fail, " << report.count(Verdict::Mismatch) << " mismatch"
            << (args.strict ? " (strict)" : "") << '\n';
  return ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

struct SeriesArgs {
  std::string gf;
  std::size_t order = 10;
  std::string format = "plain";
};

int cmd_series(const SeriesArgs& args) {
  if (args.order > kMaxSeriesOrder) {
    throw UsageError("order " + std::to_string(args.order) + " exceeds the maximum of " +
                     std::to_string(kMaxSeriesOrder));
  }
  EgfSeries series(0);
  std::string name;
  if (args.gf == "secx") {
    series = sec_series(args.order);
    name = "sec(xt)";
  } else if (args.gf == "tanx") {
    series = tan_series(args.order);
    name = "tan(xt)";
  } else if (args.gf == "sec^x") {
    series = sec_to_the_x(args.order);
    name = "sec(t)^x";
  } else {
    const Family f = parse_family(args.gf);
    series = egf_family(f, args.order);
    name = std::string(1, family_name(f)) + "(t,x)";
  }

  if (args.format == "plain") {
    std::cout << "# " << name << " = sum c_n t^n/n!\n";
    for (std::size_t n = 0; n <= args.order; ++n) std::cout << "c_" << n << " = " << format_polynomial(series[n]) << '\n';
  } else if (args.format == "csv") {
    std::cout << "n,coefficient\n";
    for (std::size_t n = 0; n <= args.order; ++n) std::cout << n << ',' << format_polynomial(series[n]) << '\n';
  } else if (args.format == "latex") {
    std::cout << "% " << name << " = \\sum_n c_n t^n/n!\n";
    for (std::size_t n = 0; n <= args.order; ++n) {
      std::cout << "c_{" << n << "} &= " << format_polynomial_latex(series[n]) << " \\\\\n";
    }
  } else {
    json out = {{"gf", args.gf}, {"convention", "t^n/n!"}, {"coefficients", json::array()}};
    for (std::size_t n = 0; n <= args.order; ++n) {
      out["coefficients"].push_back(
          {{"n", n}, {"polynomial", format_polynomial(series[n])}, {"coefficients", coefficients_json(series[n])}});
    }
    std::cout << out.dump(2) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BruteArgs {
  std::size_t length = 0;
  std::string cls = "ud";
  std::string pattern = "1,0,0,0";
  bool force = false;
  unsigned workers = 1;
  std::string format = "plain";
};

int cmd_brute(const BruteArgs& args) {
  const AlternatingClass c = args.cls == "ud" ? AlternatingClass::UpDown : AlternatingClass::DownUp;
  const QuadrantSpec spec = QuadrantSpec::parse(args.pattern);
  const BruteOptions options{args.workers, args.force};
  const XPolynomial p = dist_brute(args.length, c, spec, options);
  const BigRational total = p.evaluate(1);

  if (args.format == "json") {
    json out = {{"length", args.length},
                {"class", args.cls},
                {"pattern", spec.format()},
                {"polynomial", format_polynomial(p)},
                {"coefficients", coefficients_json(p)},
                {"permutations", to_string(total)}};
    std::cout << out.dump(2) << '\n';
  } else if (args.format == "csv") {
    std::cout << "length,class,pattern,polynomial,permutations\n"
              << args.length << ',' << args.cls << ",\"" << spec.format() << "\"," << format_polynomial(p) << ','
              << to_string(total) << '\n';
  } else if (args.format == "latex") {
    std::cout << format_polynomial_latex(p) << '\n';
  } else {
    std::cout << format_polynomial(p) << '\n' << to_string(total) << (total == 1 ? " permutation\n" : " permutations\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_unimodal(std::size_t max_index, bool strict) {
  const FamilyTable table(max_index);
  bool all = true;
  for (Family f : kAllFamilies) {
    for (std::size_t i = 1; i <= max_index; ++i) {
      const UnimodalityResult r = unimodality(table.get(f, i));
      all = all && r.unimodal;
      std::cout << length_label(f, i) << ": " << (r.unimodal ? "unimodal" : "NOT unimodal") << ", mode at x^" << r.mode
                << '\n';
    }
  }
  std::cout << (all ? "no counterexample" : "counterexample found") << " through index " << max_index << '\n';
  return all || !strict ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributions of quadrant marked mesh patterns on alternating permutations"};
  app.require_subcommand(1);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Distribution polynomials from the recursions");
  table->add_option("--family", table_args.family, "A, B, C or D")->required();
  table->add_option("--max-index", table_args.max_index, "Last row index")->capture_default_str();
  table->add_option("--format", table_args.format)->check(CLI::IsMember(kFormats))->capture_default_str();
  table->add_option("--cache", table_args.cache, "JSON cache to create or update");

  VerifyArgs verify_args;
  std::vector<std::string> suites(std::begin(kSuiteNames), std::end(kSuiteNames));
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", verify_args.suite)->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--max-length", verify_args.max_length, "Largest permutation length for enumeration suites");
  verify->add_flag("--strict", verify_args.strict, "Treat mismatches as failures");
  verify->add_option("--report", verify_args.report, "Write the JSON report here");
  verify->add_option("--workers", verify_args.workers)->check(CLI::Range(1u, 256u))->capture_default_str();
  verify->add_flag("--force", verify_args.force, "Ignore the enumeration length guard");
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Coefficients of a generating function");
  series->add_option("--gf", series_args.gf, "A, B, C, D, secx, tanx or sec^x")->required();
  series->add_option("--order", series_args.order)->capture_default_str();
  series->add_option("--format", series_args.format)->check(CLI::IsMember(kFormats))->capture_default_str();

  BruteArgs brute_args;
  auto* brute = app.add_subcommand("brute", "Enumerate a class and tally a pattern");
  brute->add_option("--length", brute_args.length)->required();
  brute->add_option("--class", brute_args.cls)->check(CLI::IsMember({"ud", "du"}))->capture_default_str();
  brute->add_option("--pattern", brute_args.pattern, "a,b,c,d with e for an empty quadrant")->capture_default_str();
  brute->add_flag("--force", brute_args.force, "Ignore the length guard");
  brute->add_option("--workers", brute_args.workers)->check(CLI::Range(1u, 256u))->capture_default_str();
  brute->add_option("--format", brute_args.format)->check(CLI::IsMember(kFormats))->capture_default_str();

  std::size_t unimodal_max = 8;
  bool unimodal_strict = false;
  auto* unimodal = app.add_subcommand("unimodal", "Unimodality of the table rows");
  unimodal->add_option("--max-index", unimodal_max)->capture_default_str();
  unimodal->add_flag("--strict", unimodal_strict, "Exit 1 on a counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_args);
    if (*verify) return cmd_verify(verify_args);
    if (*series) return cmd_series(series_args);
    if (*brute) return cmd_brute(brute_args);
    if (*unimodal) return cmd_unimodal(unimodal_max, unimodal_strict);
  } catch (const ResourceLimitError& e) {
    std::cerr << "meshlab: " << e.what() << '\n';
    return kExitResource;
  } catch (const UsageError& e) {
    std::cerr << "meshlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "meshlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "meshlab: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
