#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace meshlab {

/// Pass and Fail are hard outcomes. Mismatch is informational: a printed
/// formula or a conjecture disagreeing with the computed data. It only counts
/// as a failure in strict mode.
enum class Verdict { Pass, Fail, Mismatch };

std::string_view to_string(Verdict v);

struct ReportEntry {
  std::string check;
  std::string family;  // "A".."D", "p".."s", or empty
  std::optional<long> k;
  std::optional<long> n;
  std::string expected;
  std::string actual;
  Verdict verdict = Verdict::Pass;
  std::string variant;
};

/// Builds an entry whose verdict is Pass when expected == actual, else `on_mismatch`.
ReportEntry compare_entry(std::string check, std::string family, std::optional<long> k, std::optional<long> n,
                          std::string expected, std::string actual, Verdict on_mismatch = Verdict::Fail,
                          std::string variant = {});

class Report {
 public:
  void add(ReportEntry entry) { entries_.push_back(std::move(entry)); }
  void append(const std::vector<ReportEntry>& entries) { entries_.insert(entries_.end(), entries.begin(), entries.end()); }

  const std::vector<ReportEntry>& entries() const { return entries_; }
  std::size_t count(Verdict v) const;
  std::size_t count(std::string_view check, Verdict v) const;

  /// No Fail entries; in strict mode no Mismatch entries either.
  bool passed(bool strict = false) const;

  /// JSON array of {check, family, k, n, expected, actual, verdict, variant}.
  std::string to_json() const;

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace meshlab
