#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "meshlab/distributions.hpp"
#include "meshlab/report.hpp"

namespace meshlab {

/// One reference table row, as text in the factored notation.
struct GoldenRow {
  Family family;
  std::size_t index;
  std::string_view polynomial;
};

/// The four reference tables: A rows 0..6, B rows 1..7, C rows 0..6, D rows 1..7.
const std::vector<GoldenRow>& golden_tables();

struct SuiteBounds {
  std::size_t symmetry_max_length = 8;
  std::size_t oracle_max_length = 10;
  std::size_t recursion_max_index = 15;   // coefficient-law sweeps over recursion tables
  std::size_t boundary_max_index = 10;    // lowest/highest coefficient checks
  std::size_t law_max_k = 3;
  std::size_t seed_max_k = 5;
  std::size_t closed_form_max_n = 12;
  std::size_t egf_order = 14;
  std::size_t sec_power_max_n = 5;
  std::size_t unimodal_max_index = 8;
  BruteOptions brute;
};

Report verify_tables();
Report verify_symmetry(const SuiteBounds& bounds);
Report verify_oracle(const SuiteBounds& bounds);
Report verify_egf(const SuiteBounds& bounds);
Report verify_coefficient_laws(const SuiteBounds& bounds);
Report verify_closed_forms(const SuiteBounds& bounds);
Report verify_unimodality(const SuiteBounds& bounds);

inline constexpr std::string_view kSuiteNames[] = {"tables", "symmetry", "oracle", "egf",
                                                   "coeff-laws", "closed-forms", "unimodal", "all"};

/// Dispatches on a suite name; "all" runs every suite. Throws UsageError on unknown names.
Report run_suite(std::string_view name, const SuiteBounds& bounds);

}  // namespace meshlab
