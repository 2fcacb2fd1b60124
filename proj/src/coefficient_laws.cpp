#include "meshlab/coefficient_laws.hpp"

#include <algorithm>
#include <array>

#include "meshlab/errors.hpp"
#include "meshlab/polynomial_format.hpp"

namespace meshlab {

BigInt double_factorial(long m) {
  if (m < -1) throw UsageError("double factorial needs m >= -1");
  if (m <= 0) return 1;
  BigInt out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(m));
  return out;
}

BigRational falling_factorial(const BigRational& x, std::size_t j) {
  BigRational out = 1;
  for (std::size_t i = 0; i < j; ++i) out *= x - BigRational(static_cast<long>(i));
  return out;
}

NPolynomial falling_factorial(const NPolynomial& x, std::size_t j) {
  NPolynomial out = NPolynomial::constant(1);
  for (std::size_t i = 0; i < j; ++i) out *= x - NPolynomial::constant(static_cast<long>(i));
  return out;
}

std::size_t law_length(Family f, std::size_t n) {
  return f == Family::A || f == Family::C ? 2 * n : 2 * n + 1;
}

std::size_t level_base(Family f, std::size_t n) {
  if (f == Family::C) {
    if (n == 0) throw UsageError("C has no level base for n = 0");
    return n - 1;
  }
  return n;
}

PolynomialLookup recursion_lookup(const FamilyTable& table) {
  return [&table](Family f, std::size_t n) {
    return table.get(f, f == Family::B || f == Family::D ? n + 1 : n);
  };
}

PolynomialLookup brute_lookup(BruteOptions options) {
  return [options](Family f, std::size_t n) {
    return dist_brute(law_length(f, n), family_class(f), kQuadrantI, options);
  };
}

LevelSetCount level_set(const PolynomialLookup& lookup, Family f, std::size_t n, std::size_t k) {
  const XPolynomial poly = lookup(f, n);
  const BigRational& c = poly.coefficient(level_base(f, n) + k);
  return {f, n, k, BigInt(c.get_num())};
}

std::string_view to_string(QVariant v) { return v == QVariant::Statement ? "statement" : "proof-derivation"; }

char law_name(LawFamily f) { return "pqrs"[static_cast<int>(f)]; }

LawFamily parse_law_family(std::string_view text) {
  if (text == "p") return LawFamily::P;
  if (text == "q") return LawFamily::Q;
  if (text == "r") return LawFamily::R;
  if (text == "s") return LawFamily::S;
  throw UsageError("unknown law family '" + std::string(text) + "' (expected p, q, r or s)");
}

Family law_target(LawFamily f) {
  switch (f) {
    case LawFamily::P: return Family::A;
    case LawFamily::Q: return Family::B;
    case LawFamily::R: return Family::C;
    case LawFamily::S: return Family::D;
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------

const BigInt& CoefficientLaws::zigzag(std::size_t m) {
  if (m >= zigzag_.size()) zigzag_ = zigzag_numbers(std::max<std::size_t>(m, 2 * zigzag_.size()));
  return zigzag_[m];
}

const BigRational& CoefficientLaws::p(std::size_t k, std::size_t n) {
  const auto key = std::make_pair(k, n);
  if (auto it = p_memo_.find(key); it != p_memo_.end()) return it->second;

  BigRational value;
  if (k == 0) {
    value = 1;
  } else if (n <= k) {
    value = 0;
  } else {
    value = BigRational(zigzag(2 * k + 1), double_factorial(static_cast<long>(2 * k + 1)));
    value.canonicalize();
    for (std::size_t j = 1; j <= k; ++j) {
      BigRational weight(zigzag(2 * j + 1) * (BigInt(1) << static_cast<mp_bitcnt_t>(j)), factorial(2 * j + 1));
      weight.canonicalize();
      for (std::size_t t = k + 2; t <= n; ++t) {
        value += weight * falling_factorial(BigRational(static_cast<long>(t - 1)), j) * p(k - j, t - j - 1);
      }
    }
  }
  return p_memo_.emplace(key, value).first->second;
}

const BigRational& CoefficientLaws::q(std::size_t k, std::size_t n) {
  const auto key = std::make_pair(k, n);
  if (auto it = q_memo_.find(key); it != q_memo_.end()) return it->second;

  BigRational value;
  if (k == 0) {
    value = 1;
  } else if (n <= k) {
    value = 0;
  } else {
    value = BigRational(zigzag(2 * k + 1), double_factorial(static_cast<long>(2 * k)));
    value.canonicalize();
    for (std::size_t j = 1; j <= k; ++j) {
      BigRational weight(zigzag(2 * j + 1), factorial(2 * j + 1));
      weight.canonicalize();
      for (std::size_t t = k + 2; t <= n; ++t) {
        BigInt product = 1;
        if (q_variant_ == QVariant::Statement) {
          for (std::size_t s = 0; s < j; ++s) product *= static_cast<long>(2 * t) - 1 - 2 * static_cast<long>(s);
        } else {
          product = BigInt(1) << static_cast<mp_bitcnt_t>(j);
          for (std::size_t s = 1; s < j; ++s) product *= static_cast<long>(2 * n) - 2 * static_cast<long>(s) - 1;
        }
        value += weight * BigRational(product) * q(k - j, t - j - 1);
      }
    }
  }
  return q_memo_.emplace(key, value).first->second;
}

BigRational CoefficientLaws::r(std::size_t k, std::size_t n) {
  if (n < k + 1) throw UsageError("r_k(n) needs n >= k+1");
  BigRational total = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    BigInt product = 1;
    for (std::size_t s = 1; s <= j; ++s) product *= static_cast<long>(2 * n + 1 - 2 * s);
    BigRational weight(zigzag(2 * j) * product, factorial(2 * j));
    weight.canonicalize();
    total += weight * q(k - j, n - j - 1);
  }
  return total;
}

BigRational CoefficientLaws::s(std::size_t k, std::size_t n) {
  if (n < k + 1) throw UsageError("s_k(n) needs n >= k+1");
  BigRational total = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    BigInt product = 1;
    for (std::size_t s = 1; s <= j; ++s) product *= static_cast<long>(2 * n + 2 - 2 * s);
    BigRational weight(zigzag(2 * j) * product, factorial(2 * j));
    weight.canonicalize();
    total += weight * p(k - j, n - j);
  }
  return total;
}

BigRational CoefficientLaws::value(LawFamily f, std::size_t k, std::size_t n) {
  switch (f) {
    case LawFamily::P: return p(k, n);
    case LawFamily::Q: return q(k, n);
    case LawFamily::R: return r(k, n);
    case LawFamily::S: return s(k, n);
  }
  throw std::logic_error("unreachable");
}

BigRational CoefficientLaws::predicted_level_set(LawFamily f, std::size_t k, std::size_t n) {
  const long m = static_cast<long>(n);
  long df_arg = 0;
  switch (f) {
    case LawFamily::P: df_arg = 2 * m - 1; break;
    case LawFamily::Q: df_arg = 2 * m; break;
    case LawFamily::R: df_arg = 2 * m - 2; break;
    case LawFamily::S: df_arg = 2 * m - 1; break;
  }
  return value(f, k, n) * BigRational(double_factorial(df_arg));
}

namespace {

std::vector<BigRational> values_of(CoefficientLaws& laws, LawFamily f, std::size_t k, std::size_t n_max) {
  std::vector<BigRational> out;
  for (std::size_t n = k + 1; n <= n_max; ++n) out.push_back(laws.value(f, k, n));
  return out;
}

}  // namespace

std::vector<BigRational> p_values(std::size_t k, std::size_t n_max) {
  CoefficientLaws laws;
  return values_of(laws, LawFamily::P, k, n_max);
}

std::vector<BigRational> q_values(std::size_t k, std::size_t n_max, QVariant variant) {
  CoefficientLaws laws(variant);
  return values_of(laws, LawFamily::Q, k, n_max);
}

std::vector<BigRational> r_values(std::size_t k, std::size_t n_max) {
  CoefficientLaws laws;
  return values_of(laws, LawFamily::R, k, n_max);
}

std::vector<BigRational> s_values(std::size_t k, std::size_t n_max) {
  CoefficientLaws laws;
  return values_of(laws, LawFamily::S, k, n_max);
}

// ---------------------------------------------------------------------------

namespace {

std::string family_label(Family f) { return std::string(1, family_name(f)); }

BigInt lowest_expected(Family f, std::size_t n) {
  const long m = static_cast<long>(n);
  switch (f) {
    case Family::A: return double_factorial(2 * m - 1);
    case Family::B: return double_factorial(2 * m);
    case Family::C: return double_factorial(2 * m - 2);
    case Family::D: return double_factorial(2 * m - 1);
  }
  throw std::logic_error("unreachable");
}

std::string power_and_coefficient(const char* what, long power, const BigRational& coefficient) {
  return std::string(what) + " " + std::to_string(power) + " coefficient " + to_string(coefficient);
}

}  // namespace

ReportEntry lowest_coefficient_check(const PolynomialLookup& lookup, Family f, std::size_t n) {
  if (n < 1) throw UsageError("lowest_coefficient_check needs n >= 1");
  const XPolynomial poly = lookup(f, n);
  const std::size_t base = level_base(f, n);
  const std::string expected = power_and_coefficient("lowest", static_cast<long>(base), BigRational(lowest_expected(f, n)));
  const auto low = poly.lowest_power();
  const std::string actual =
      low ? power_and_coefficient("lowest", static_cast<long>(*low), poly.coefficient(*low)) : "zero polynomial";
  return compare_entry("lowest-coefficient", family_label(f), std::nullopt, static_cast<long>(n), expected, actual);
}

ReportEntry highest_coefficient_check(const PolynomialLookup& lookup, Family f, std::size_t n) {
  if (n < 1) throw UsageError("highest_coefficient_check needs n >= 1");
  const auto zigzag = zigzag_numbers(2 * n);
  long degree = 0;
  BigInt lead;
  switch (f) {
    case Family::A:
      degree = static_cast<long>(2 * n - 1);
      lead = zigzag[2 * n - 1];
      break;
    case Family::B:
      degree = static_cast<long>(2 * n - 1);
      lead = zigzag[2 * n - 1] * static_cast<long>(2 * n);
      break;
    case Family::C:
      degree = static_cast<long>(2 * n - 2);
      lead = zigzag[2 * n - 2] * static_cast<long>(2 * n - 1);
      break;
    case Family::D:
      degree = static_cast<long>(2 * n);
      lead = zigzag[2 * n];
      break;
  }
  const XPolynomial poly = lookup(f, n);
  const std::string expected = power_and_coefficient("degree", degree, BigRational(lead));
  const std::string actual = poly.is_zero() ? "zero polynomial"
                                            : power_and_coefficient("degree", poly.degree(),
                                                                    poly.coefficient(static_cast<std::size_t>(poly.degree())));
  return compare_entry("highest-coefficient", family_label(f), std::nullopt, static_cast<long>(n), expected, actual);
}

std::vector<ReportEntry> level_law_check(const PolynomialLookup& lookup, CoefficientLaws& laws, LawFamily law,
                                         std::size_t k, std::size_t n_max) {
  std::vector<ReportEntry> out;
  const Family f = law_target(law);
  const std::string variant = law == LawFamily::Q || law == LawFamily::R ? std::string(to_string(laws.q_variant())) : "";
  for (std::size_t n = k + 1; n <= n_max; ++n) {
    const LevelSetCount level = level_set(lookup, f, n, k);
    out.push_back(compare_entry("level-law", family_label(f), static_cast<long>(k), static_cast<long>(n),
                                to_string(laws.predicted_level_set(law, k, n)), to_string(BigRational(level.count)),
                                Verdict::Fail, variant));
  }
  return out;
}

std::vector<ReportEntry> seed_identity_check(const PolynomialLookup& lookup, CoefficientLaws& laws, std::size_t k) {
  std::vector<ReportEntry> out;
  const auto zigzag = zigzag_numbers(2 * k + 1);
  const long kk = static_cast<long>(k);
  const auto seed = [&](long df_arg) {
    BigRational value(zigzag[2 * k + 1], double_factorial(df_arg));
    value.canonicalize();
    return value;
  };
  const BigRational p_seed = seed(2 * kk + 1);
  const BigRational q_seed = seed(2 * kk);

  const BigRational p_level(level_set(lookup, Family::A, k + 1, k).count, double_factorial(2 * kk + 1));
  const BigRational q_level(level_set(lookup, Family::B, k + 1, k).count, double_factorial(2 * kk + 2));
  auto canonical = [](BigRational v) {
    v.canonicalize();
    return v;
  };
  out.push_back(compare_entry("seed-recursion", "p", kk, kk + 1, to_string(p_seed), to_string(laws.p(k, k + 1))));
  out.push_back(compare_entry("seed-level-set", "p", kk, kk + 1, to_string(p_seed), to_string(canonical(p_level))));
  out.push_back(compare_entry("seed-recursion", "q", kk, kk + 1, to_string(q_seed), to_string(laws.q(k, k + 1)),
                              Verdict::Fail, std::string(to_string(laws.q_variant()))));
  out.push_back(compare_entry("seed-level-set", "q", kk, kk + 1, to_string(q_seed), to_string(canonical(q_level))));
  return out;
}

std::vector<ReportEntry> adjudicate_q_variant(const PolynomialLookup& lookup, std::size_t k_max, std::size_t n_max) {
  std::vector<ReportEntry> out;
  bool any = false;
  for (QVariant variant : {QVariant::Statement, QVariant::ProofDerivation}) {
    CoefficientLaws laws(variant);
    std::string first_disagreement;
    for (std::size_t k = 1; k <= k_max && first_disagreement.empty(); ++k) {
      for (std::size_t n = k + 1; n <= n_max; ++n) {
        const BigRational predicted = laws.predicted_level_set(LawFamily::Q, k, n);
        const BigInt actual = level_set(lookup, Family::B, n, k).count;
        if (predicted != BigRational(actual)) {
          first_disagreement = "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": predicted " +
                               to_string(predicted) + ", level set " + actual.get_str();
          break;
        }
      }
    }
    const bool ok = first_disagreement.empty();
    any = any || ok;
    out.push_back({"q-recursion-variant", "q", static_cast<long>(k_max), static_cast<long>(n_max),
                   "B level sets reproduced", ok ? "B level sets reproduced" : first_disagreement,
                   ok ? Verdict::Pass : Verdict::Mismatch, std::string(to_string(variant))});
  }
  if (!any) {
    out.push_back({"q-recursion-variant", "q", static_cast<long>(k_max), static_cast<long>(n_max),
                   "at least one variant reproduces the level sets", "none does", Verdict::Fail, ""});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Transcribed term for term, including any printed defects.
constexpr std::array<std::array<std::string_view, 4>, 4> kPrintedClosedForms = {{
    {"1", "2/3 * 1/2 n(n-1)", "1/90 n(2+7n-14n^2+5n^3)", "1/5670 n(192-478n+213n^2+227n^3-198n^4+35n^5)"},
    {"1", "1/3 (n^2-1)", "1/90 (n-2)(n-1)(5n^2+n-3)", "1/5670 (35n^6-84n^5-193n^4+345n^3+140n^2-81n+198)"},
    {"1", "1/6 (2n^2+2n-3)", "1/360 (20n^4+24n^3-128n^2-12n+45)",
     "1/45360 (280n^6+168n^5-4820n^4+3168n^3+8734n^2-6702n+2835)"},
    {"1", "1/3 n(n+2)", "1/90 n(5n^3+16n^2-68n+47)", "1/5760 n(35n^5+126n^4-340n^3-417n^2+656n-60)"},
}};

}  // namespace

std::string_view printed_closed_form_text(LawFamily f, std::size_t k) {
  if (k > 3) throw UsageError("closed forms are only printed for k <= 3");
  return kPrintedClosedForms[static_cast<int>(f)][k];
}

NPolynomial printed_closed_form(LawFamily f, std::size_t k) {
  const XPolynomial parsed = parse_polynomial(printed_closed_form_text(f, k), 'n');
  const auto coeffs = parsed.coefficients();
  return NPolynomial(std::vector<BigRational>(coeffs.begin(), coeffs.end()));
}

std::vector<ReportEntry> closed_form_check(CoefficientLaws& laws, LawFamily f, std::size_t k, std::size_t n_max) {
  const NPolynomial printed = printed_closed_form(f, k);
  std::vector<ReportEntry> out;
  for (std::size_t n = k + 1; n <= n_max; ++n) {
    const BigRational at(static_cast<long>(n));
    out.push_back(compare_entry("closed-form", std::string(1, law_name(f)), static_cast<long>(k), static_cast<long>(n),
                                to_string(printed.evaluate(at)), to_string(laws.value(f, k, n)), Verdict::Mismatch,
                                std::string(printed_closed_form_text(f, k))));
  }
  return out;
}

NPolynomial interpolate(const std::vector<std::pair<BigRational, BigRational>>& points) {
  NPolynomial total;
  for (std::size_t i = 0; i < points.size(); ++i) {
    NPolynomial basis = NPolynomial::constant(1);
    BigRational denominator = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis *= NPolynomial({-points[j].first, BigRational(1)});
      denominator *= points[i].first - points[j].first;
    }
    if (denominator == 0) throw UsageError("interpolation nodes must be distinct");
    total += basis * (points[i].second / denominator);
  }
  return total;
}

PolynomialityResult polynomiality_check(CoefficientLaws& laws, LawFamily f, std::size_t k) {
  std::vector<std::pair<BigRational, BigRational>> points;
  for (std::size_t n = k + 1; n <= 3 * k + 1; ++n) {
    points.emplace_back(static_cast<long>(n), laws.value(f, k, n));
  }
  PolynomialityResult result{interpolate(points), true};
  for (std::size_t n = 3 * k + 2; n <= 3 * k + 3; ++n) {
    if (result.interpolant.evaluate(static_cast<long>(n)) != laws.value(f, k, n)) result.reproduces_further_points = false;
  }
  return result;
}

UnimodalityResult unimodality(const XPolynomial& p) {
  UnimodalityResult result;
  const auto low = p.lowest_power();
  if (!low) return result;
  const auto coeffs = p.coefficients();
  std::size_t mode = *low;
  for (std::size_t i = *low; i < coeffs.size(); ++i) {
    if (coeffs[i] > coeffs[mode]) mode = i;
  }
  result.mode = mode;
  for (std::size_t i = *low + 1; i <= mode; ++i) {
    if (coeffs[i] < coeffs[i - 1]) result.unimodal = false;
  }
  for (std::size_t i = mode + 1; i < coeffs.size(); ++i) {
    if (coeffs[i] > coeffs[i - 1]) result.unimodal = false;
  }
  return result;
}

std::vector<ReportEntry> unimodality_check(const FamilyTable& table, Family f, std::size_t max_index) {
  std::vector<ReportEntry> out;
  for (std::size_t index = std::max<std::size_t>(1, min_family_index(f)); index <= max_index; ++index) {
    const XPolynomial& poly = table.get(f, index);
    const UnimodalityResult result = unimodality(poly);
    const std::string actual = std::string(result.unimodal ? "unimodal" : "not unimodal") + ", mode x^" +
                               std::to_string(result.mode);
    out.push_back({"unimodality", family_label(f), std::nullopt, static_cast<long>(index),
                   "unimodal", actual, result.unimodal ? Verdict::Pass : Verdict::Mismatch, format_polynomial(poly)});
  }
  return out;
}

}  // namespace meshlab
