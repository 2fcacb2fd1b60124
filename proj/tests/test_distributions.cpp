#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "meshlab/distributions.hpp"
#include "meshlab/errors.hpp"
#include "meshlab/polynomial_format.hpp"
#include "oracle.hpp"

using namespace meshlab;

namespace {

XPolynomial P(const char* text) { return parse_polynomial(text); }

XPolynomial from_histogram(const std::vector<std::uint64_t>& h) {
  std::vector<BigRational> c;
  for (auto v : h) c.emplace_back(static_cast<unsigned long>(v));
  return XPolynomial(std::move(c));
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Family, IndexLengthMaps) {
  EXPECT_EQ(family_length(Family::A, 3), 6u);
  EXPECT_EQ(family_length(Family::B, 3), 5u);
  EXPECT_EQ(family_index(Family::D, 7), 4u);
  EXPECT_FALSE(family_index(Family::C, 7).has_value());
  EXPECT_FALSE(family_index(Family::B, 0).has_value());
  for (Family f : kAllFamilies) {
    for (std::size_t i = min_family_index(f); i < 20; ++i) EXPECT_EQ(family_index(f, family_length(f, i)), i);
  }
  EXPECT_EQ(family_for(AlternatingClass::DownUp, 5), Family::D);
  EXPECT_EQ(family_for(AlternatingClass::UpDown, 4), Family::A);
  EXPECT_EQ(parse_family("c"), Family::C);
  EXPECT_THROW(parse_family("E"), UsageError);
}

TEST(Brute, SpecExamples) {
  EXPECT_EQ(dist_brute(4, AlternatingClass::UpDown, kQuadrantI), P("x^2(3+2x)"));
  EXPECT_EQ(dist_brute(3, AlternatingClass::DownUp, kQuadrantI), P("x(1+x)"));
  EXPECT_EQ(dist_brute(2, AlternatingClass::UpDown, QuadrantSpec::counts(0, 0, 0, 0)), P("x^2"));
  EXPECT_EQ(dist_brute(1, AlternatingClass::UpDown, kQuadrantI), P("1"));
  EXPECT_THROW(dist_brute(0, AlternatingClass::UpDown, kQuadrantI), UsageError);
}

TEST(Brute, AgreesWithNaiveOracle) {
  const std::vector<std::pair<QuadrantSpec, oracle::Spec>> specs = {
      {kQuadrantI, {{1, 0, 0, 0}}},
      {kQuadrantIII, {{0, 0, 1, 0}}},
      {QuadrantSpec::parse("1,0,e,0"), {{1, 0, -1, 0}}},
      {QuadrantSpec::parse("2,0,0,0"), {{2, 0, 0, 0}}},
      {QuadrantSpec::parse("e,1,1,e"), {{-1, 1, 1, -1}}},
  };
  for (int n = 1; n <= 9; ++n) {
    for (bool ud : {true, false}) {
      for (const auto& [spec, raw] : specs) {
        const auto c = ud ? AlternatingClass::UpDown : AlternatingClass::DownUp;
        EXPECT_EQ(dist_brute(static_cast<std::size_t>(n), c, spec), from_histogram(oracle::histogram(n, ud, raw)))
            << n << ' ' << spec.format();
      }
    }
  }
}

TEST(Brute, DeterministicAcrossWorkerCounts) {
  for (std::size_t n : {5u, 8u, 11u}) {
    const auto one = brute_histogram(n, AlternatingClass::UpDown, QuadrantSpec::parse("1,0,e,0"), {1, false});
    for (unsigned workers : {2u, 3u, 8u}) {
      EXPECT_EQ(brute_histogram(n, AlternatingClass::UpDown, QuadrantSpec::parse("1,0,e,0"), {workers, false}), one);
    }
  }
}

TEST(Brute, LengthGuard) {
  {
    ScopedEnv env("MESHLAB_MAX_BRUTE", "6");
    EXPECT_EQ(brute_guard(), 6u);
    EXPECT_THROW(dist_brute(7, AlternatingClass::UpDown, kQuadrantI), ResourceLimitError);
    EXPECT_NO_THROW(dist_brute(7, AlternatingClass::UpDown, kQuadrantI, {1, true}));
  }
  EXPECT_EQ(brute_guard(), 14u);
  EXPECT_THROW(dist_brute(15, AlternatingClass::UpDown, kQuadrantI), ResourceLimitError);
}

TEST(Recursion, TableRows) {
  EXPECT_EQ(a_poly(0), P("1"));
  EXPECT_EQ(a_poly(3), P("x^3(15+30x+16x^2)"));
  EXPECT_EQ(a_poly(6), P("x^6(10395+103950x+429660x^2+893640x^3+911328x^4+353792x^5)"));
  EXPECT_EQ(b_poly(1), P("1"));
  EXPECT_EQ(b_poly(4), P("16x^3(3+8x+6x^2)"));
  EXPECT_EQ(b_poly(7), P("1024x^6(45+525x+2562x^2+6420x^3+8146x^4+4146x^5)"));
  EXPECT_EQ(c_poly(1), P("1"));
  EXPECT_EQ(c_poly(3), P("x^2(8+28x+25x^2)"));
  EXPECT_EQ(c_poly(5), P("x^4(384+3648x+13104x^2+20920x^3+12465x^4)"));
  EXPECT_EQ(d_poly(1), P("1"));
  EXPECT_EQ(d_poly(4), P("x^3(15+75x+121x^2+61x^3)"));
  EXPECT_EQ(d_poly(7), P("x^6(10395+166320x+1105335x^2+3859680x^3+7365633x^4+7158128x^5+2702765x^6)"));
  const FamilyTable t(3);
  EXPECT_THROW(t.a(4), std::out_of_range);
  EXPECT_THROW(t.b(0), std::out_of_range);
}

TEST(Recursion, MatchesNaiveOracleAndSpecializes) {
  const FamilyTable table(5);
  const auto e = zigzag_numbers(11);
  for (Family f : kAllFamilies) {
    for (std::size_t i = min_family_index(f); i <= 5; ++i) {
      const std::size_t length = family_length(f, i);
      const auto& p = table.get(f, i);
      EXPECT_TRUE(p.has_integer_coefficients());
      for (const auto& c : p.coefficients()) EXPECT_GE(c, 0);
      EXPECT_EQ(p.evaluate(1), e[length]);
      if (length == 0) continue;
      const bool ud = family_class(f) == AlternatingClass::UpDown;
      EXPECT_EQ(p, from_histogram(oracle::histogram(static_cast<int>(length), ud, {{1, 0, 0, 0}})));
    }
  }
}

TEST(Egf, FamilySeries) {
  const auto a = egf_family(Family::A, 8);
  EXPECT_EQ(a[0], P("1"));
  EXPECT_EQ(a[2], P("x"));
  EXPECT_EQ(a[4], P("x^2(3+2x)"));
  EXPECT_EQ(a[6], P("x^3(15+30x+16x^2)"));
  EXPECT_EQ(a[8], P("x^4(105+420x+588x^2+272x^3)"));
  EXPECT_EQ(egf_family(Family::D, 5)[5], P("x^2(3+8x+5x^2)"));
  const auto b = egf_family(Family::B, 7).evaluate_marker(1);
  EXPECT_EQ(b[1], 1);
  EXPECT_EQ(b[3], 2);
  EXPECT_EQ(b[5], 16);
  EXPECT_EQ(b[7], 272);
  EXPECT_EQ(egf_family_polynomial(Family::C, 4), c_poly(4));
}

TEST(Egf, ParityAndRecursionAgreement) {
  const FamilyTable table(8);
  for (Family f : kAllFamilies) {
    const auto s = egf_family(f, 16);
    for (std::size_t m = 0; m <= 16; ++m) {
      const auto index = family_index(f, m);
      if (index && *index >= min_family_index(f)) {
        EXPECT_EQ(s[m], table.get(f, *index));
      } else {
        EXPECT_TRUE(s[m].is_zero()) << family_name(f) << m;
      }
    }
  }
}

TEST(Egf, ClosedForms) {
  EXPECT_EQ(closed_form_a(14), egf_family(Family::A, 14));
  EXPECT_EQ(closed_form_b(14), egf_family(Family::B, 14));
  EXPECT_EQ(closed_form_d(14), egf_family(Family::D, 14));
  EXPECT_EQ(closed_form_c(14, InnerExponent::MinusOneOverX), egf_family(Family::C, 14));
  EXPECT_NE(closed_form_c(14, InnerExponent::PlusOneOverX), egf_family(Family::C, 14));
}

TEST(Symmetry, Chains) {
  for (const auto& r : symmetry_suite(8)) EXPECT_TRUE(r.holds) << r.chain << ' ' << r.length << ' ' << r.counterexample;
  for (const auto& r : symmetry_suite(4)) {
    if (r.chain == 1 && r.length == 4) EXPECT_EQ(r.reference, P("x^2(3+2x)"));
    if (r.chain == 3 && r.length == 3) EXPECT_EQ(r.reference, P("2x"));
  }
  EXPECT_EQ(dist_brute(4, AlternatingClass::DownUp, kQuadrantII), P("x^2(3+2x)"));
  EXPECT_EQ(dist_brute(3, AlternatingClass::UpDown, kQuadrantII), P("2x"));
  EXPECT_EQ(dist_brute(3, AlternatingClass::DownUp, QuadrantSpec::counts(0, 1, 0, 0)), P("x(1+x)"));
}

TEST(SecPower, Identity) {
  const auto results = sec_power_identity(5);
  ASSERT_EQ(results.size(), 6u);
  EXPECT_EQ(results[0].series_coefficient, P("1"));
  EXPECT_EQ(results[1].brute, P("x"));
  for (const auto& r : results) EXPECT_TRUE(r.equal) << r.n;
  // Independent check of the n = 2 brute side.
  EXPECT_EQ(results[2].brute, from_histogram(oracle::histogram(4, true, {{1, 0, -1, 0}})));
}

TEST(Cache, RoundTrip) {
  std::vector<DistributionRecord> records = {
      {Family::D, 7, d_poly(7), Provenance::Recursion},
      {Family::A, 2, dist_brute(4, AlternatingClass::UpDown, kQuadrantI), Provenance::Brute},
      {Family::A, 2, egf_family_polynomial(Family::A, 2), Provenance::Egf},
  };
  const auto text = cache_to_json_text(records);
  const auto back = cache_from_json_text(text);
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[0].family, Family::A);
  EXPECT_EQ(back[2], records[0]);
  EXPECT_NE(text.find("\"2702765\""), std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "meshlab_cache_test.json";
  std::filesystem::remove(path);
  write_cache(path.string(), {records[0]});
  update_cache(path.string(), {records[1], {Family::D, 7, d_poly(7), Provenance::Recursion}});
  EXPECT_EQ(read_cache(path.string()).size(), 2u);
  std::filesystem::remove(path);

  EXPECT_THROW(cache_from_json_text("{}"), UsageError);
  EXPECT_THROW(cache_from_json_text(R"([{"family":"A","index":2,"length":5,"coeffs":["1"],"provenance":"brute"}])"),
               UsageError);
}
