// Acceptance run: one PASS/FAIL line per criterion. `--criterion N` runs one.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "meshlab/coefficient_laws.hpp"
#include "meshlab/distributions.hpp"
#include "meshlab/verification.hpp"

using namespace meshlab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string first_failure(const Report& report, bool strict = false) {
  for (const auto& e : report.entries()) {
    if (e.verdict == Verdict::Fail || (strict && e.verdict == Verdict::Mismatch)) {
      std::ostringstream out;
      out << e.check << ' ' << e.family << (e.k ? " k=" + std::to_string(*e.k) : "")
          << (e.n ? " n=" + std::to_string(*e.n) : "") << ": expected " << e.expected << ", got " << e.actual;
      return out.str();
    }
  }
  return {};
}

template <class F>
Outcome timed(double limit, F body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = body();
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << out.detail << (out.detail.empty() ? "" : "; ") << elapsed << " s (limit " << limit << " s)";
  return {out.pass && elapsed < limit, detail.str()};
}

Outcome check_tables() {
  return timed(1.0, [] {
    const Report r = verify_tables();
    std::size_t nontrivial = 0;
    for (const auto& e : r.entries()) nontrivial += e.verdict == Verdict::Pass && e.n.value_or(0) > 0;
    return Outcome{r.passed(true) && nontrivial == 26,
                   std::to_string(nontrivial) + " nontrivial rows matched" + first_failure(r)};
  });
}

Outcome check_oracle() {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  SuiteBounds small;
  small.oracle_max_length = 10;
  small.brute.workers = workers;
  const Outcome gate = timed(2.0, [&] {
    const Report r = verify_oracle(small);
    return Outcome{r.passed(true), "length <= 10 " + first_failure(r)};
  });
  SuiteBounds full = small;
  full.oracle_max_length = 12;
  const Outcome all = timed(60.0, [&] {
    const Report r = verify_oracle(full);
    return Outcome{r.passed(true), std::to_string(r.entries().size()) + " comparisons at length <= 12 " + first_failure(r)};
  });
  return {gate.pass && all.pass, gate.detail + " | " + all.detail};
}

Outcome check_symmetry() {
  return timed(1.0, [] {
    SuiteBounds b;
    b.symmetry_max_length = 8;
    const Report r = verify_symmetry(b);
    return Outcome{r.passed(true) && r.entries().size() == 16, std::to_string(r.entries().size()) + " chain checks " +
                                                                   first_failure(r)};
  });
}

Outcome check_specializations() {
  const std::vector<long> secant = {1, 1, 5, 61, 1385, 50521, 2702765};
  const std::vector<long> tangent = {1, 2, 16, 272, 7936, 353792, 22368256};
  const std::vector<long> zigzag = {1,     1,     1,      2,       5,       16,       61,        272,
                                    1385,  7936,  50521,  353792,  2702765, 22368256, 199360981};
  const FamilyTable table(7);
  std::vector<std::string> bad;
  for (std::size_t n = 0; n <= 6; ++n) {
    if (table.a(n).evaluate(1) != secant[n]) bad.push_back("A" + std::to_string(n));
    if (table.c(n).evaluate(1) != secant[n]) bad.push_back("C" + std::to_string(n));
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    if (table.b(n).evaluate(1) != tangent[n - 1]) bad.push_back("B" + std::to_string(n));
    if (table.d(n).evaluate(1) != tangent[n - 1]) bad.push_back("D" + std::to_string(n));
  }
  const auto a = egf_family(Family::A, 14).evaluate_marker(1);
  const auto b = egf_family(Family::B, 14).evaluate_marker(1);
  for (std::size_t m = 0; m <= 14; ++m) {
    if (a[m] + b[m] != zigzag[m]) bad.push_back("A+B t^" + std::to_string(m));
  }
  std::string detail = bad.empty() ? "secant, tangent and zigzag values reproduced" : "wrong at";
  for (const auto& s : bad) detail += " " + s;
  return {bad.empty(), detail};
}

Outcome check_boundary() {
  const FamilyTable table(11);
  const auto lookup = recursion_lookup(table);
  Report r;
  for (Family f : kAllFamilies) {
    for (std::size_t n = 1; n <= 10; ++n) {
      r.add(lowest_coefficient_check(lookup, f, n));
      r.add(highest_coefficient_check(lookup, f, n));
    }
  }
  return {r.passed(true) && r.entries().size() == 80, std::to_string(r.entries().size()) + " checks " + first_failure(r)};
}

Outcome check_level_laws() {
  CoefficientLaws laws;
  Report r;
  BruteOptions options;
  options.workers = std::max(1u, std::thread::hardware_concurrency());
  const auto brute = brute_lookup(options);
  const FamilyTable table(17);
  const auto recursion = recursion_lookup(table);
  for (std::size_t k = 0; k <= 3; ++k) {
    r.append(level_law_check(brute, laws, LawFamily::P, k, 6));  // A_12
    r.append(level_law_check(brute, laws, LawFamily::Q, k, 5));  // B_11
    r.append(level_law_check(recursion, laws, LawFamily::P, k, 15));
    r.append(level_law_check(recursion, laws, LawFamily::Q, k, 15));
  }
  for (std::size_t k = 0; k <= 5; ++k) r.append(seed_identity_check(recursion, laws, k));
  return {r.passed(true), std::to_string(r.entries().size()) + " level-set and seed checks " + first_failure(r)};
}

Outcome check_closed_forms() {
  const std::set<std::pair<char, std::size_t>> expected_pass = {
      {'p', 0}, {'p', 1}, {'p', 2}, {'p', 3}, {'q', 0}, {'q', 1}, {'q', 2},
      {'r', 0}, {'r', 1}, {'s', 0}, {'s', 1}, {'s', 2}};
  CoefficientLaws laws;
  std::vector<std::string> disagree_expected;
  std::vector<std::string> recorded;
  bool all_recorded = true;
  for (LawFamily f : kAllLawFamilies) {
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto entries = closed_form_check(laws, f, k, 12);
      all_recorded = all_recorded && !entries.empty();
      bool agrees = true;
      for (const auto& e : entries) agrees = agrees && e.verdict == Verdict::Pass;
      const std::string name = std::string(1, law_name(f)) + "_" + std::to_string(k);
      if (expected_pass.contains({law_name(f), k})) {
        if (!agrees) disagree_expected.push_back(name);
      } else {
        recorded.push_back(name + (agrees ? " agrees" : " disagrees"));
      }
    }
  }
  std::string inner;
  const Report egf = verify_egf({});
  for (const auto& e : egf.entries()) {
    if (e.check == "c-inner-exponent" && e.verdict == Verdict::Pass) inner = e.variant;
  }
  std::string detail = "C inner exponent: " + (inner.empty() ? std::string("not confirmed") : inner) + "; recorded:";
  for (const auto& s : recorded) detail += " " + s + ",";
  detail += " expected-pass forms disagreeing with the recursions:";
  if (disagree_expected.empty()) detail += " none";
  for (const auto& s : disagree_expected) detail += " " + s;
  return {all_recorded && !inner.empty() && disagree_expected.empty(), detail};
}

Outcome check_sec_power() {
  return timed(2.0, [] {
    SuiteBounds b;
    b.sec_power_max_n = 5;
    Report r;
    const Report egf = verify_egf(b);
    for (const auto& e : egf.entries()) {
      if (e.check == "sec-power-identity") r.add(e);
    }
    return Outcome{r.passed(true) && r.entries().size() == 6, std::to_string(r.entries().size()) + " coefficients " +
                                                                  first_failure(r)};
  });
}

Outcome check_unimodal() {
  SuiteBounds b;
  b.unimodal_max_index = 8;
  const Report r = verify_unimodality(b);
  return {r.passed(true) && r.entries().size() == 32,
          std::to_string(r.count(Verdict::Pass)) + " of " + std::to_string(r.entries().size()) + " rows unimodal " +
              first_failure(r, true)};
}

Outcome check_determinism() {
  SuiteBounds one;
  one.symmetry_max_length = 10;
  one.oracle_max_length = 11;
  SuiteBounds many = one;
  many.brute.workers = 8;
  std::string detail;
  bool same = true;
  for (const char* suite : {"symmetry", "oracle"}) {
    const std::string a = run_suite(suite, one).to_json();
    const std::string b = run_suite(suite, many).to_json();
    same = same && a == b;
    detail += std::string(suite) + (a == b ? " identical " : " DIFFERS ") + "(" + std::to_string(a.size()) + " bytes); ";
  }
  return {same, detail + "1 vs 8 workers"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "table reproduction", check_tables},
      {2, "oracle equivalence through length 12", check_oracle},
      {3, "symmetry chains through length 8", check_symmetry},
      {4, "x = 1 specializations", check_specializations},
      {5, "lowest and highest coefficients", check_boundary},
      {6, "level-set laws and seeds", check_level_laws},
      {7, "printed closed forms", check_closed_forms},
      {8, "sec(t)^x identity", check_sec_power},
      {9, "unimodality through index 8", check_unimodal},
      {10, "determinism under parallelism", check_determinism},
  };
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::atoi(argv[2]);

  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail
              << "]\n";
  }
  return all ? 0 : 1;
}
