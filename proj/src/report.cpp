#include "meshlab/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace meshlab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Mismatch: return "mismatch";
  }
  return "";
}

ReportEntry compare_entry(std::string check, std::string family, std::optional<long> k, std::optional<long> n,
                          std::string expected, std::string actual, Verdict on_mismatch, std::string variant) {
  const Verdict verdict = expected == actual ? Verdict::Pass : on_mismatch;
  return {std::move(check), std::move(family), k, n, std::move(expected), std::move(actual), verdict,
          std::move(variant)};
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [v](const ReportEntry& e) { return e.verdict == v; }));
}

std::size_t Report::count(std::string_view check, Verdict v) const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [&](const ReportEntry& e) {
    return e.verdict == v && e.check == check;
  }));
}

bool Report::passed(bool strict) const {
  return count(Verdict::Fail) == 0 && (!strict || count(Verdict::Mismatch) == 0);
}

std::string Report::to_json() const {
  using nlohmann::ordered_json;
  ordered_json out = ordered_json::array();
  const auto optional_field = [](const auto& value) -> ordered_json {
    if (value) return *value;
    return nullptr;
  };
  for (const auto& e : entries_) {
    ordered_json row;
    row["check"] = e.check;
    row["family"] = e.family.empty() ? ordered_json(nullptr) : ordered_json(e.family);
    row["k"] = optional_field(e.k);
    row["n"] = optional_field(e.n);
    row["expected"] = e.expected;
    row["actual"] = e.actual;
    row["verdict"] = std::string(to_string(e.verdict));
    row["variant"] = e.variant.empty() ? ordered_json(nullptr) : ordered_json(e.variant);
    out.push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

}  // namespace meshlab
