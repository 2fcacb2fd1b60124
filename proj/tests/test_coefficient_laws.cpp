#include <gtest/gtest.h>

#include "meshlab/coefficient_laws.hpp"
#include "meshlab/errors.hpp"
#include "meshlab/polynomial_format.hpp"
#include "oracle.hpp"

using namespace meshlab;

namespace {

NPolynomial N(const char* text) {
  const XPolynomial parsed = parse_polynomial(text, 'n');
  return NPolynomial(std::vector<BigRational>(parsed.coefficients().begin(), parsed.coefficients().end()));
}

// Closed forms fitted independently (sympy interpolation over a separate
// implementation of the recursions, spot-checked against enumeration).
NPolynomial reference_form(LawFamily f, std::size_t k) {
  static const char* forms[4][4] = {
      {"1", "1/3 n(n-1)", "1/90 n(n-1)(n-2)(5n+1)", "1/5670 n(n-1)(n-2)(n-3)(35n^2+21n-32)"},
      {"1", "1/3 (n-1)(n+1)", "1/90 (n-2)(n+1)(5n^2+n-3)", "1/5670 (n-3)(n+1)(n+2)(35n^3-84n^2+52n-33)"},
      {"1", "1/6 (2n^2+2n-3)", "1/360 (20n^4+24n^3-128n^2-12n+45)",
       "1/45360 (280n^6+168n^5-4820n^4+3168n^3+8734n^2-6702n+2835)"},
      {"1", "1/3 n(n+2)", "1/90 n(n-1)(5n^2+21n+13)", "1/5670 n(n-1)(n-2)(35n^3+231n^2+283n-30)"},
  };
  return N(forms[static_cast<int>(f)][k]);
}

XPolynomial from_histogram(const std::vector<std::uint64_t>& h) {
  std::vector<BigRational> c;
  for (auto v : h) c.emplace_back(static_cast<unsigned long>(v));
  return XPolynomial(std::move(c));
}

}  // namespace

TEST(Factorials, Values) {
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(10), 3840);
  EXPECT_THROW(double_factorial(-2), UsageError);
  EXPECT_EQ(falling_factorial(BigRational(7), 3), 210);
  EXPECT_EQ(falling_factorial(BigRational(7), 0), 1);
  EXPECT_EQ(falling_factorial(NPolynomial::variable(), 0), NPolynomial::constant(1));
  EXPECT_EQ(falling_factorial(NPolynomial::variable(), 2), N("n^2-n"));
}

TEST(LevelSet, Examples) {
  const FamilyTable table(8);
  const auto lookup = recursion_lookup(table);
  EXPECT_EQ(level_set(lookup, Family::A, 2, 1).count, 2);
  EXPECT_EQ(level_set(lookup, Family::C, 3, 1).count, 28);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(level_set(lookup, Family::A, n, 0).count, double_factorial(2 * n - 1));
}

TEST(LevelSet, RecursionAndBruteLookupsAgree) {
  const FamilyTable table(6);
  const auto rec = recursion_lookup(table);
  const auto brute = brute_lookup();
  for (Family f : kAllFamilies) {
    for (std::size_t n = 1; law_length(f, n) <= 9; ++n) EXPECT_EQ(rec(f, n), brute(f, n));
  }
}

TEST(Boundary, Examples) {
  const FamilyTable table(8);
  const auto lookup = recursion_lookup(table);
  EXPECT_EQ(lookup(Family::A, 4).coefficient(4), 105);
  EXPECT_EQ(lookup(Family::B, 3).coefficient(3), 48);
  EXPECT_EQ(lookup(Family::C, 1).coefficient(0), 1);
  EXPECT_EQ(lookup(Family::A, 5).degree(), 9);
  EXPECT_EQ(lookup(Family::A, 5).coefficient(9), 7936);
  EXPECT_EQ(lookup(Family::B, 6).coefficient(11), 4245504);
  EXPECT_EQ(lookup(Family::D, 1).degree(), 2);
  for (Family f : kAllFamilies) {
    for (std::size_t n = 1; n <= 7; ++n) {
      EXPECT_EQ(lowest_coefficient_check(lookup, f, n).verdict, Verdict::Pass);
      EXPECT_EQ(highest_coefficient_check(lookup, f, n).verdict, Verdict::Pass);
    }
  }
}

TEST(Laws, ValueExamples) {
  EXPECT_EQ(p_values(1, 4), (std::vector<BigRational>{BigRational(2, 3), 2, 4}));
  EXPECT_EQ(p_values(0, 5), (std::vector<BigRational>(5, 1)));
  EXPECT_EQ(q_values(1, 3), (std::vector<BigRational>{1, BigRational(8, 3)}));
  EXPECT_EQ(r_values(0, 4), (std::vector<BigRational>(4, 1)));
  EXPECT_EQ(r_values(1, 2).front(), BigRational(3, 2));
  EXPECT_EQ(s_values(1, 3).back(), 5);
  CoefficientLaws laws;
  EXPECT_EQ(laws.p(2, 2), 0);
  EXPECT_THROW(laws.r(2, 2), UsageError);
}

TEST(Laws, MatchIndependentClosedForms) {
  CoefficientLaws laws;
  for (LawFamily f : kAllLawFamilies) {
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto form = reference_form(f, k);
      for (std::size_t n = k + 1; n <= 14; ++n) {
        EXPECT_EQ(laws.value(f, k, n), form.evaluate(static_cast<long>(n))) << law_name(f) << k << ' ' << n;
      }
    }
  }
}

TEST(Laws, LevelLawWorkedExamples) {
  CoefficientLaws laws;
  EXPECT_EQ(laws.predicted_level_set(LawFamily::P, 1, 3), 30);
  EXPECT_EQ(laws.predicted_level_set(LawFamily::Q, 1, 2), 8);
  EXPECT_EQ(laws.predicted_level_set(LawFamily::S, 1, 2), 8);
  EXPECT_EQ(laws.s(1, 2), BigRational(8, 3));
}

TEST(Laws, LevelLawsAgainstNaiveEnumeration) {
  // Level sets read straight from naive histograms, no library enumeration.
  CoefficientLaws laws;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto a = from_histogram(oracle::histogram(static_cast<int>(2 * n), true, {{1, 0, 0, 0}}));
    const auto b = from_histogram(oracle::histogram(static_cast<int>(2 * n + 1), true, {{1, 0, 0, 0}}));
    const auto c = from_histogram(oracle::histogram(static_cast<int>(2 * n), false, {{1, 0, 0, 0}}));
    const auto d = from_histogram(oracle::histogram(static_cast<int>(2 * n + 1), false, {{1, 0, 0, 0}}));
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_EQ(a.coefficient(n + k), laws.predicted_level_set(LawFamily::P, k, n));
      EXPECT_EQ(b.coefficient(n + k), laws.predicted_level_set(LawFamily::Q, k, n));
      EXPECT_EQ(c.coefficient(n - 1 + k), laws.predicted_level_set(LawFamily::R, k, n));
      EXPECT_EQ(d.coefficient(n + k), laws.predicted_level_set(LawFamily::S, k, n));
    }
  }
}

TEST(Laws, ChecksPassOverRecursionRange) {
  const FamilyTable table(17);
  const auto lookup = recursion_lookup(table);
  CoefficientLaws laws;
  for (LawFamily f : kAllLawFamilies) {
    for (std::size_t k = 0; k <= 3; ++k) {
      for (const auto& e : level_law_check(lookup, laws, f, k, 15)) EXPECT_EQ(e.verdict, Verdict::Pass) << e.actual;
    }
  }
  for (std::size_t k = 0; k <= 5; ++k) {
    for (const auto& e : seed_identity_check(lookup, laws, k)) EXPECT_EQ(e.verdict, Verdict::Pass) << e.check << k;
  }
}

TEST(Laws, QVariantAdjudication) {
  const FamilyTable table(12);
  const auto entries = adjudicate_q_variant(recursion_lookup(table), 3, 10);
  ASSERT_EQ(entries.size(), 2u);
  for (const auto& e : entries) {
    if (e.variant == "statement") EXPECT_EQ(e.verdict, Verdict::Pass);
    if (e.variant == "proof-derivation") EXPECT_EQ(e.verdict, Verdict::Mismatch);
  }
  CoefficientLaws proof(QVariant::ProofDerivation);
  EXPECT_NE(proof.q(1, 3), CoefficientLaws().q(1, 3));
}

TEST(ClosedForms, PrintedTextAndVerdicts) {
  EXPECT_EQ(printed_closed_form_text(LawFamily::S, 3), "1/5760 n(35n^5+126n^4-340n^3-417n^2+656n-60)");
  EXPECT_EQ(printed_closed_form(LawFamily::P, 1), N("1/3 n^2 - 1/3 n"));
  EXPECT_THROW(printed_closed_form(LawFamily::P, 4), UsageError);
  CoefficientLaws laws;
  // Agreement is decided against the independently fitted forms.
  for (LawFamily f : kAllLawFamilies) {
    for (std::size_t k = 0; k <= 3; ++k) {
      const bool same = printed_closed_form(f, k) == reference_form(f, k);
      for (const auto& e : closed_form_check(laws, f, k, 12)) {
        EXPECT_EQ(e.verdict, same ? Verdict::Pass : Verdict::Mismatch) << law_name(f) << k;
        EXPECT_NE(e.verdict, Verdict::Fail);
      }
    }
  }
}

TEST(Polynomiality, InterpolantsMatchReferenceForms) {
  CoefficientLaws laws;
  for (LawFamily f : kAllLawFamilies) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto result = polynomiality_check(laws, f, k);
      EXPECT_TRUE(result.reproduces_further_points);
      EXPECT_EQ(result.interpolant, reference_form(f, k));
    }
  }
  EXPECT_EQ(interpolate({{1, 1}, {2, 4}, {3, 9}}), N("n^2"));
}

TEST(Unimodality, Examples) {
  const auto a8 = unimodality(parse_polynomial("x^4(105+420x+588x^2+272x^3)"));
  EXPECT_TRUE(a8.unimodal);
  EXPECT_EQ(a8.mode, 6u);
  EXPECT_TRUE(unimodality(parse_polynomial("x")).unimodal);
  EXPECT_FALSE(unimodality(parse_polynomial("3+x+2x^2")).unimodal);
  EXPECT_FALSE(unimodality(parse_polynomial("1+x^2")).unimodal);  // interior zero
  const FamilyTable table(8);
  for (Family f : kAllFamilies) {
    for (const auto& e : unimodality_check(table, f, 8)) EXPECT_EQ(e.verdict, Verdict::Pass);
  }
}
