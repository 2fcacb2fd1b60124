#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meshlab/egf.hpp"
#include "meshlab/permutation.hpp"
#include "meshlab/polynomial.hpp"

namespace meshlab {

/// The four distributions of mmp^{(1,0,0,0)}:
///   A: up-down, length 2n      B: up-down, length 2n-1
///   C: down-up, length 2n      D: down-up, length 2n-1
/// Indices follow the table rows: A and C start at 0, B and D at 1.
enum class Family { A, B, C, D };

inline constexpr std::array<Family, 4> kAllFamilies = {Family::A, Family::B, Family::C, Family::D};

char family_name(Family f);
Family parse_family(std::string_view text);
AlternatingClass family_class(Family f);
std::size_t min_family_index(Family f);
/// Permutation length of the row `index`.
std::size_t family_length(Family f, std::size_t index);
/// Inverse of family_length; nullopt when the length has the wrong parity or is too small.
std::optional<std::size_t> family_index(Family f, std::size_t length);
/// The family whose class and length parity match.
Family family_for(AlternatingClass c, std::size_t length);

enum class Provenance { Brute, Recursion, Egf };
std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

struct DistributionRecord {
  Family family;
  std::size_t index;
  XPolynomial polynomial;
  Provenance provenance;

  friend bool operator==(const DistributionRecord&, const DistributionRecord&) = default;
};

// ---------------------------------------------------------------------------
// Exhaustive oracle

struct BruteOptions {
  unsigned workers = 1;
  bool force = false;  // bypass the length guard
};

/// Largest length enumerated without `force`: MESHLAB_MAX_BRUTE if set, else 14.
std::size_t brute_guard();

/// Throws ResourceLimitError when `length` may not be enumerated. Suites call
/// this up front so an oversized request fails before any work is done.
void check_enumerable(std::size_t length, const BruteOptions& options);

/// histogram[m] = number of permutations in the class with exactly m matching positions.
std::vector<std::uint64_t> brute_histogram(std::size_t length, AlternatingClass c, const QuadrantSpec& spec,
                                           const BruteOptions& options = {});

/// Sum over the class of x^{mmp(spec)}. Throws ResourceLimitError above the guard.
XPolynomial dist_brute(std::size_t length, AlternatingClass c, const QuadrantSpec& spec,
                       const BruteOptions& options = {});

// ---------------------------------------------------------------------------
// Positional recursions (largest entry placement)

/// All four families through `max_index`, computed once.
class FamilyTable {
 public:
  explicit FamilyTable(std::size_t max_index);

  std::size_t max_index() const { return max_index_; }

  const XPolynomial& a(std::size_t n) const;  // A_{2n}
  const XPolynomial& b(std::size_t n) const;  // B_{2n-1}, n >= 1
  const XPolynomial& c(std::size_t n) const;  // C_{2n}
  const XPolynomial& d(std::size_t n) const;  // D_{2n-1}, n >= 1
  const XPolynomial& get(Family f, std::size_t index) const;

  /// Zigzag numbers E_0..E_{2 max_index + 1}.
  const std::vector<BigInt>& zigzag() const { return zigzag_; }

 private:
  std::size_t max_index_;
  std::vector<BigInt> zigzag_;
  std::vector<XPolynomial> a_, b_, c_, d_;  // b_[0], d_[0] unused
};

XPolynomial a_poly(std::size_t n);
XPolynomial b_poly(std::size_t n);
XPolynomial c_poly(std::size_t n);
XPolynomial d_poly(std::size_t n);

// ---------------------------------------------------------------------------
// Generating-function route

/// A, B solved as linear ODEs (A' = tan(xt) A, B' = 1 + tan(xt) B); C and D
/// integrated from C' = sec(xt) B, D' = sec(xt) A. Initial values 1, 0, 1, 0.
EgfSeries egf_family(Family f, std::size_t order);

/// Row `index` of the family read off egf_family.
XPolynomial egf_family_polynomial(Family f, std::size_t index);

/// Closed forms as compositions of ODE-defined powers of sec(xt):
///   A = sec^{1/x}
///   B = sec^{1/x} * int sec^{-1/x}
///   C = 1 + int sec^{1+1/x} * int sec^{inner}   with inner exponent -1/x or +1/x
///   D = int sec^{1+1/x}
enum class InnerExponent { MinusOneOverX, PlusOneOverX };
std::string_view to_string(InnerExponent e);
EgfSeries closed_form_a(std::size_t order);
EgfSeries closed_form_b(std::size_t order);
EgfSeries closed_form_c(std::size_t order, InnerExponent inner);
EgfSeries closed_form_d(std::size_t order);

// ---------------------------------------------------------------------------
// Suites

struct ChainResult {
  int chain;  // 1..4
  std::size_t length;
  bool holds;
  XPolynomial reference;  // first member of the chain
  std::string counterexample;  // "<class> <pattern>" of the first disagreeing member
};

/// Brute-forces the unit-quadrant statistics on both classes for every length
/// 1..max_length and checks the four reverse/complement equality chains.
std::vector<ChainResult> symmetry_suite(std::size_t max_length, const BruteOptions& options = {});

struct SecPowerResult {
  std::size_t n;
  XPolynomial series_coefficient;
  XPolynomial brute;
  bool equal;
};

/// Compares (sec t)^x, from Y' = x tan(t) Y, against MMP(1,0,∅,0) on UD_{2n}, n = 0..max_n.
std::vector<SecPowerResult> sec_power_identity(std::size_t max_n, const BruteOptions& options = {});

/// (sec t)^x expanded to the given order.
EgfSeries sec_to_the_x(std::size_t order);

// ---------------------------------------------------------------------------
// Cache file

/// Writes a JSON array of records, sorted by (family, index, provenance).
void write_cache(const std::string& path, std::vector<DistributionRecord> records);
std::vector<DistributionRecord> read_cache(const std::string& path);
/// Reads an existing cache (if any), replaces matching (family, index, provenance) rows, writes back.
void update_cache(const std::string& path, const std::vector<DistributionRecord>& records);

std::string cache_to_json_text(std::vector<DistributionRecord> records);
std::vector<DistributionRecord> cache_from_json_text(std::string_view text);

}  // namespace meshlab
