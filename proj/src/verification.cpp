#include "meshlab/verification.hpp"

#include <algorithm>

#include "meshlab/alternating.hpp"
#include "meshlab/coefficient_laws.hpp"
#include "meshlab/errors.hpp"
#include "meshlab/polynomial_format.hpp"

namespace meshlab {

const std::vector<GoldenRow>& golden_tables() {
  static const std::vector<GoldenRow> rows = {
      {Family::A, 0, "1"},
      {Family::A, 1, "x"},
      {Family::A, 2, "x^2(3+2x)"},
      {Family::A, 3, "x^3(15+30x+16x^2)"},
      {Family::A, 4, "x^4(105+420x+588x^2+272x^3)"},
      {Family::A, 5, "x^5(945+6300x+16380x^2+18960x^3+7936x^4)"},
      {Family::A, 6, "x^6(10395+103950x+429660x^2+893640x^3+911328x^4+353792x^5)"},
      {Family::B, 1, "1"},
      {Family::B, 2, "2x"},
      {Family::B, 3, "8x^2(1+x)"},
      {Family::B, 4, "16x^3(3+8x+6x^2)"},
      {Family::B, 5, "128x^4(3+15x+27x^2+17x^3)"},
      {Family::B, 6, "256x^5(15+120x+381x^2+556x^3+310x^4)"},
      {Family::B, 7, "1024x^6(45+525x+2562x^2+6420x^3+8146x^4+4146x^5)"},
      {Family::C, 0, "1"},
      {Family::C, 1, "1"},
      {Family::C, 2, "x(2+3x)"},
      {Family::C, 3, "x^2(8+28x+25x^2)"},
      {Family::C, 4, "x^3(48+296x+614x^2+427x^3)"},
      {Family::C, 5, "x^4(384+3648x+13104x^2+20920x^3+12465x^4)"},
      {Family::C, 6, "x^5(3840+51840x+282336x^2+769072x^3+1039946x^4+555731x^5)"},
      {Family::D, 1, "1"},
      {Family::D, 2, "x(1+x)"},
      {Family::D, 3, "x^2(3+8x+5x^2)"},
      {Family::D, 4, "x^3(15+75x+121x^2+61x^3)"},
      {Family::D, 5, "x^4(105+840x+2478x^2+3128x^3+1385x^4)"},
      {Family::D, 6, "x^5(945+11025x+51030x^2+115350x^3+124921x^4+50521x^5)"},
      {Family::D, 7, "x^6(10395+166320x+1105335x^2+3859680x^3+7365633x^4+7158128x^5+2702765x^6)"},
  };
  return rows;
}

namespace {

std::string label(Family f) { return std::string(1, family_name(f)); }

std::string text(const XPolynomial& p) { return format_polynomial(p); }

std::optional<long> as_long(std::size_t v) { return static_cast<long>(v); }

}  // namespace

Report verify_tables() {
  Report report;
  const FamilyTable table(7);
  for (const auto& row : golden_tables()) {
    report.add(compare_entry("table", label(row.family), std::nullopt, as_long(row.index),
                             text(parse_polynomial(row.polynomial)), text(table.get(row.family, row.index))));
  }
  return report;
}

Report verify_symmetry(const SuiteBounds& bounds) {
  Report report;
  for (const auto& result : symmetry_suite(bounds.symmetry_max_length, bounds.brute)) {
    report.add({"symmetry-chain", "", static_cast<long>(result.chain), as_long(result.length), text(result.reference),
                result.holds ? text(result.reference) : "differs at " + result.counterexample,
                result.holds ? Verdict::Pass : Verdict::Fail, "chain (" + std::to_string(result.chain) + ")"});
  }
  return report;
}

Report verify_oracle(const SuiteBounds& bounds) {
  Report report;
  const std::size_t max_length = bounds.oracle_max_length;
  check_enumerable(max_length, bounds.brute);
  const FamilyTable table((max_length + 1) / 2);
  std::vector<EgfSeries> series;
  for (Family f : kAllFamilies) series.push_back(egf_family(f, max_length));

  for (std::size_t length = 1; length <= max_length; ++length) {
    for (AlternatingClass c : {AlternatingClass::UpDown, AlternatingClass::DownUp}) {
      const Family f = family_for(c, length);
      const std::size_t index = *family_index(f, length);
      const std::string brute = text(dist_brute(length, c, kQuadrantI, bounds.brute));
      report.add(compare_entry("oracle-recursion", label(f), std::nullopt, as_long(index), brute,
                               text(table.get(f, index))));
      report.add(compare_entry("oracle-egf", label(f), std::nullopt, as_long(index), brute,
                               text(series[static_cast<int>(f)][length])));
    }
  }
  return report;
}

Report verify_egf(const SuiteBounds& bounds) {
  Report report;
  const std::size_t order = bounds.egf_order;
  const FamilyTable table(order / 2 + 1);
  const auto zigzag = zigzag_numbers(order + 1);

  std::vector<EgfSeries> series;
  for (Family f : kAllFamilies) series.push_back(egf_family(f, order));

  for (Family f : kAllFamilies) {
    const EgfSeries& s = series[static_cast<int>(f)];
    for (std::size_t m = 0; m <= order; ++m) {
      const auto index = family_index(f, m);
      if (index && *index >= min_family_index(f)) {
        report.add(compare_entry("egf-vs-recursion", label(f), std::nullopt, as_long(*index),
                                 text(table.get(f, *index)), text(s[m])));
      } else {
        const bool constant_term = m == 0 && (f == Family::B || f == Family::D);
        report.add(compare_entry("parity-grading", label(f), std::nullopt, as_long(m), "0",
                                 constant_term ? text(s[m]) : text(s[m])));
      }
    }
  }

  // ODE residuals, exact.
  {
    const std::size_t coeff_order = order - 1;
    const EgfSeries& a = series[static_cast<int>(Family::A)];
    const EgfSeries& b = series[static_cast<int>(Family::B)];
    const EgfSeries tan = tan_series(coeff_order);
    const EgfSeries residual_a = egf_differentiate(a) - tan * a.truncated(coeff_order);
    const EgfSeries residual_b = egf_differentiate(b) - tan * b.truncated(coeff_order) -
                                 EgfSeries::constant(XPolynomial::constant(1), coeff_order);
    report.add(compare_entry("ode-residual", "A", std::nullopt, as_long(coeff_order), "0",
                             residual_a == EgfSeries(coeff_order) ? "0" : "nonzero"));
    report.add(compare_entry("ode-residual", "B", std::nullopt, as_long(coeff_order), "0",
                             residual_b == EgfSeries(coeff_order) ? "0" : "nonzero"));
  }

  // x = 1 specializations.
  for (std::size_t n = 0; 2 * n <= order; ++n) {
    const std::string secant = zigzag[2 * n].get_str();
    report.add(compare_entry("specialization", "A", std::nullopt, as_long(n), secant, to_string(table.a(n).evaluate(1))));
    report.add(compare_entry("specialization", "C", std::nullopt, as_long(n), secant, to_string(table.c(n).evaluate(1))));
  }
  for (std::size_t n = 1; 2 * n - 1 <= order; ++n) {
    const std::string tangent = zigzag[2 * n - 1].get_str();
    report.add(compare_entry("specialization", "B", std::nullopt, as_long(n), tangent, to_string(table.b(n).evaluate(1))));
    report.add(compare_entry("specialization", "D", std::nullopt, as_long(n), tangent, to_string(table.d(n).evaluate(1))));
  }
  {
    const auto a_at_one = series[static_cast<int>(Family::A)].evaluate_marker(1);
    const auto b_at_one = series[static_cast<int>(Family::B)].evaluate_marker(1);
    const auto tan_at_one = tan_series(order).evaluate_marker(1);
    const auto sec_at_one = sec_series(order).evaluate_marker(1);
    for (std::size_t m = 0; m <= order; ++m) {
      report.add(compare_entry("zigzag-sum", "", std::nullopt, as_long(m), zigzag[m].get_str(),
                               to_string(a_at_one[m] + b_at_one[m])));
      report.add(compare_entry("tan-plus-sec", "", std::nullopt, as_long(m), zigzag[m].get_str(),
                               to_string(tan_at_one[m] + sec_at_one[m])));
    }
  }
  report.add(compare_entry("sec-cos-identity", "", std::nullopt, as_long(order),
                           text(XPolynomial::constant(1)) + " then zeros",
                           sec_series(order) * cos_series(order) == EgfSeries::constant(XPolynomial::constant(1), order)
                               ? text(XPolynomial::constant(1)) + " then zeros"
                               : "differs"));

  // Closed forms assembled from ODE-defined powers of sec(xt).
  const auto closed = [&](const char* family, const EgfSeries& lhs, const EgfSeries& rhs, Verdict on_mismatch,
                          std::string variant) {
    for (std::size_t m = 0; m <= order; ++m) {
      if (lhs[m] != rhs[m]) {
        report.add({"closed-form-gf", family, std::nullopt, as_long(m), text(rhs[m]), text(lhs[m]), on_mismatch,
                    std::move(variant)});
        return false;
      }
    }
    report.add({"closed-form-gf", family, std::nullopt, as_long(order), "all coefficients", "all coefficients",
                Verdict::Pass, std::move(variant)});
    return true;
  };
  closed("A", closed_form_a(order), series[0], Verdict::Fail, "sec^{1/x}");
  closed("B", closed_form_b(order), series[1], Verdict::Fail, "sec^{1/x} int sec^{-1/x}");
  closed("D", closed_form_d(order), series[3], Verdict::Fail, "int sec^{1+1/x}");
  std::vector<std::string> confirmed;
  for (InnerExponent inner : {InnerExponent::MinusOneOverX, InnerExponent::PlusOneOverX}) {
    const std::string variant = "inner exponent " + std::string(to_string(inner));
    if (closed("C", closed_form_c(order, inner), series[2], Verdict::Mismatch, variant)) {
      confirmed.emplace_back(to_string(inner));
    }
  }
  report.add({"c-inner-exponent", "C", std::nullopt, as_long(order), "exactly one variant reproduces C",
              confirmed.size() == 1 ? "confirmed " + confirmed.front() : std::to_string(confirmed.size()) + " variants",
              confirmed.size() == 1 ? Verdict::Pass : Verdict::Fail, confirmed.size() == 1 ? confirmed.front() : ""});

  for (const auto& r : sec_power_identity(bounds.sec_power_max_n, bounds.brute)) {
    report.add(compare_entry("sec-power-identity", "A", std::nullopt, as_long(r.n), text(r.series_coefficient),
                             text(r.brute), Verdict::Fail, "MMP(1,0,e,0)"));
  }
  return report;
}

Report verify_coefficient_laws(const SuiteBounds& bounds) {
  Report report;
  const std::size_t law_n_max = bounds.recursion_max_index;
  const FamilyTable table(std::max(law_n_max, bounds.boundary_max_index) + 2);
  const PolynomialLookup recursion = recursion_lookup(table);

  for (Family f : kAllFamilies) {
    for (std::size_t n = 1; n <= bounds.boundary_max_index; ++n) {
      report.add(lowest_coefficient_check(recursion, f, n));
      report.add(highest_coefficient_check(recursion, f, n));
    }
  }

  CoefficientLaws laws;
  for (LawFamily law : kAllLawFamilies) {
    for (std::size_t k = 0; k <= bounds.law_max_k; ++k) {
      report.append(level_law_check(recursion, laws, law, k, law_n_max));
    }
  }

  // Same laws against direct enumeration, as far as the oracle length allows.
  check_enumerable(bounds.oracle_max_length, bounds.brute);
  const PolynomialLookup brute = brute_lookup(bounds.brute);
  for (LawFamily law : kAllLawFamilies) {
    const Family f = law_target(law);
    const std::size_t max_length = bounds.oracle_max_length;
    const std::size_t n_max = f == Family::A || f == Family::C ? max_length / 2 : (max_length - 1) / 2;
    for (std::size_t k = 0; k <= bounds.law_max_k; ++k) {
      for (auto entry : level_law_check(brute, laws, law, k, n_max)) {
        entry.check = "level-law-brute";
        report.add(std::move(entry));
      }
    }
  }

  for (std::size_t k = 0; k <= bounds.seed_max_k; ++k) report.append(seed_identity_check(recursion, laws, k));
  report.append(adjudicate_q_variant(recursion, bounds.law_max_k, std::min<std::size_t>(law_n_max, 10)));

  for (LawFamily law : kAllLawFamilies) {
    for (std::size_t k = 1; k <= bounds.law_max_k; ++k) {
      const PolynomialityResult result = polynomiality_check(laws, law, k);
      const std::string fitted = format_polynomial(result.interpolant);
      report.add({"polynomiality", std::string(1, law_name(law)), static_cast<long>(k), std::nullopt,
                  "degree " + std::to_string(2 * k) + ", reproduces two further points",
                  result.reproduces_further_points && result.interpolant.degree() == static_cast<long>(2 * k)
                      ? "degree " + std::to_string(2 * k) + ", reproduces two further points"
                      : "degree " + std::to_string(result.interpolant.degree()),
                  result.reproduces_further_points && result.interpolant.degree() == static_cast<long>(2 * k)
                      ? Verdict::Pass
                      : Verdict::Fail,
                  fitted});
      if (law == LawFamily::P) {
        // p_k vanishes at n = 0..k, so the zero convention below the valid range is its own value.
        // (q_k does not: q_2(1) = -1/15, and there the zero is only a convention.)
        for (std::size_t n = 0; n <= k; ++n) {
          report.add(compare_entry("below-range-zero", "p", static_cast<long>(k), static_cast<long>(n), "0",
                                   to_string(result.interpolant.evaluate(static_cast<long>(n)))));
        }
      }
    }
  }

  // A minimal up-down permutation of even length has its maximum in position 2.
  for (std::size_t n = 1; 2 * n <= std::min<std::size_t>(bounds.oracle_max_length, 10); ++n) {
    std::size_t minimal = 0;
    std::size_t with_peak = 0;
    for_each_alternating(2 * n, AlternatingClass::UpDown, [&](std::span<const int> values) {
      if (mmp_count(Permutation(std::vector<int>(values.begin(), values.end())), kQuadrantI) != n) return;
      ++minimal;
      if (values[1] == static_cast<int>(2 * n)) ++with_peak;
    });
    report.add(compare_entry("minimal-has-max-second", "A", std::nullopt, as_long(n), std::to_string(minimal),
                             std::to_string(with_peak)));
  }
  return report;
}

Report verify_closed_forms(const SuiteBounds& bounds) {
  Report report;
  CoefficientLaws laws;
  for (LawFamily law : kAllLawFamilies) {
    for (std::size_t k = 0; k <= 3; ++k) report.append(closed_form_check(laws, law, k, bounds.closed_form_max_n));
  }
  return report;
}

Report verify_unimodality(const SuiteBounds& bounds) {
  Report report;
  const FamilyTable table(bounds.unimodal_max_index);
  for (Family f : kAllFamilies) report.append(unimodality_check(table, f, bounds.unimodal_max_index));
  return report;
}

Report run_suite(std::string_view name, const SuiteBounds& bounds) {
  if (name == "tables") return verify_tables();
  if (name == "symmetry") return verify_symmetry(bounds);
  if (name == "oracle") return verify_oracle(bounds);
  if (name == "egf") return verify_egf(bounds);
  if (name == "coeff-laws") return verify_coefficient_laws(bounds);
  if (name == "closed-forms") return verify_closed_forms(bounds);
  if (name == "unimodal") return verify_unimodality(bounds);
  if (name == "all") {
    Report all;
    for (std::string_view suite : kSuiteNames) {
      if (suite == "all") continue;
      all.append(run_suite(suite, bounds).entries());
    }
    return all;
  }
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

}  // namespace meshlab
