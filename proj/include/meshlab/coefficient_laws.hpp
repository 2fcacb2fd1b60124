#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meshlab/distributions.hpp"
#include "meshlab/polynomial.hpp"
#include "meshlab/report.hpp"

namespace meshlab {

// Throughout this header families use the half-length indexing of the
// boundary-coefficient laws: A_{2n}, B_{2n+1}, C_{2n}, D_{2n+1}.

/// m!! with (-1)!! = 0!! = 1. Throws UsageError for m < -1.
BigInt double_factorial(long m);

/// x (x-1) ... (x-j+1); 1 for j = 0.
BigRational falling_factorial(const BigRational& x, std::size_t j);
NPolynomial falling_factorial(const NPolynomial& x, std::size_t j);

/// Permutation length behind law index n: 2n for A and C, 2n+1 for B and D.
std::size_t law_length(Family f, std::size_t n);

/// Exponent of the lowest possible term: n for A, B, D and n-1 for C.
std::size_t level_base(Family f, std::size_t n);

/// Family polynomial by law index.
using PolynomialLookup = std::function<XPolynomial(Family, std::size_t)>;

/// Reads rows of a recursion table (B_{2n+1} is row n+1).
PolynomialLookup recursion_lookup(const FamilyTable& table);
/// Enumerates MMP(1,0,0,0) directly.
PolynomialLookup brute_lookup(BruteOptions options = {});

struct LevelSetCount {
  Family family;
  std::size_t n;
  std::size_t k;
  BigInt count;
};

/// Number of permutations with exactly level_base(f, n) + k matches.
LevelSetCount level_set(const PolynomialLookup& lookup, Family f, std::size_t n, std::size_t k);

/// Two candidate forms of the q_k recursion. Statement uses the product over
/// (2t-1-2s); ProofDerivation carries an extra 2^j and a product over (2n-2s-1).
enum class QVariant { Statement, ProofDerivation };
std::string_view to_string(QVariant v);

enum class LawFamily { P, Q, R, S };
inline constexpr std::array<LawFamily, 4> kAllLawFamilies = {LawFamily::P, LawFamily::Q, LawFamily::R, LawFamily::S};
char law_name(LawFamily f);
LawFamily parse_law_family(std::string_view text);
/// The distribution family whose level sets the law describes (p->A, q->B, r->C, s->D).
Family law_target(LawFamily f);

/// Exact values of p_k(n), q_k(n), r_k(n), s_k(n), memoized.
///
/// p and q come from their summation recursions, valid for n >= k+1; r and s
/// are the finite sums over secant numbers. Below the valid range (n <= k,
/// k >= 1) the level set is empty and the value is 0, which r_k(k+1) relies on.
/// Not thread-safe; use one instance per thread.
class CoefficientLaws {
 public:
  explicit CoefficientLaws(QVariant q_variant = QVariant::Statement) : q_variant_(q_variant) {}

  QVariant q_variant() const { return q_variant_; }

  const BigRational& p(std::size_t k, std::size_t n);
  const BigRational& q(std::size_t k, std::size_t n);
  BigRational r(std::size_t k, std::size_t n);
  BigRational s(std::size_t k, std::size_t n);
  BigRational value(LawFamily f, std::size_t k, std::size_t n);

  /// law value times (2n-1)!!, (2n)!!, (2n-2)!! or (2n-1)!!: the predicted level-set size.
  BigRational predicted_level_set(LawFamily f, std::size_t k, std::size_t n);

 private:
  const BigInt& zigzag(std::size_t m);

  QVariant q_variant_;
  std::vector<BigInt> zigzag_;
  std::map<std::pair<std::size_t, std::size_t>, BigRational> p_memo_;
  std::map<std::pair<std::size_t, std::size_t>, BigRational> q_memo_;
};

/// Values for n = k+1 .. n_max.
std::vector<BigRational> p_values(std::size_t k, std::size_t n_max);
std::vector<BigRational> q_values(std::size_t k, std::size_t n_max, QVariant variant = QVariant::Statement);
std::vector<BigRational> r_values(std::size_t k, std::size_t n_max);
std::vector<BigRational> s_values(std::size_t k, std::size_t n_max);

// ---------------------------------------------------------------------------
// Checks; each returns report entries instead of throwing.

/// Zero below level_base and the double factorial at it.
ReportEntry lowest_coefficient_check(const PolynomialLookup& lookup, Family f, std::size_t n);

/// Degree and leading coefficient: A_{2n}: 2n-1, E_{2n-1}; B_{2n+1}: 2n-1, 2n E_{2n-1};
/// C_{2n}: 2n-2, (2n-1) E_{2n-2}; D_{2n+1}: 2n, E_{2n}.
ReportEntry highest_coefficient_check(const PolynomialLookup& lookup, Family f, std::size_t n);

/// Level-set counts against the law's prediction for n = k+1 .. n_max.
std::vector<ReportEntry> level_law_check(const PolynomialLookup& lookup, CoefficientLaws& laws, LawFamily law,
                                         std::size_t k, std::size_t n_max);

/// p_k(k+1) = E_{2k+1}/(2k+1)!! and q_k(k+1) = E_{2k+1}/(2k)!!, against both
/// the recursion and the level sets.
std::vector<ReportEntry> seed_identity_check(const PolynomialLookup& lookup, CoefficientLaws& laws, std::size_t k);

/// Runs the q recursion in both variants against the B level sets for
/// k = 1..k_max, n = k+1..n_max. The matching variant's entry passes; the
/// other is a Mismatch. A Fail entry is added if neither matches.
std::vector<ReportEntry> adjudicate_q_variant(const PolynomialLookup& lookup, std::size_t k_max, std::size_t n_max);

/// Closed forms for k <= 3 as printed alongside the recursions, kept verbatim.
std::string_view printed_closed_form_text(LawFamily f, std::size_t k);
NPolynomial printed_closed_form(LawFamily f, std::size_t k);

/// Printed closed form vs recursion value for n = k+1 .. n_max. Disagreement is a Mismatch.
std::vector<ReportEntry> closed_form_check(CoefficientLaws& laws, LawFamily f, std::size_t k, std::size_t n_max);

/// Exact Lagrange interpolation through the given (n, value) points.
NPolynomial interpolate(const std::vector<std::pair<BigRational, BigRational>>& points);

struct PolynomialityResult {
  NPolynomial interpolant;  // through n = k+1 .. 3k+1
  bool reproduces_further_points = false;  // n = 3k+2 and 3k+3
};

/// Fits a degree-2k polynomial to the law's values and tests it on two more points.
PolynomialityResult polynomiality_check(CoefficientLaws& laws, LawFamily f, std::size_t k);

struct UnimodalityResult {
  bool unimodal = true;
  std::size_t mode = 0;  // exponent of the first largest coefficient
};

/// Coefficients from the lowest to the highest nonzero power weakly rise, then weakly fall.
UnimodalityResult unimodality(const XPolynomial& p);

/// Table rows 1..max_index of the family. A counterexample is a Mismatch.
std::vector<ReportEntry> unimodality_check(const FamilyTable& table, Family f, std::size_t max_index);

}  // namespace meshlab
