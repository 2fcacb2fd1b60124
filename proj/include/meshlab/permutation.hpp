#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meshlab {

/// A permutation of {1, ..., n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  /// Throws DomainError unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  /// "471569283" (one digit per entry) or a comma/space separated list.
  static Permutation parse(std::string_view text);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// 1-based, as in the mathematical notation.
  int at(std::size_t position) const;

  std::span<const int> values() const { return values_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Requirement on one quadrant: at least k points, or no points at all.
class QuadrantRequirement {
 public:
  static constexpr QuadrantRequirement at_least(unsigned k) { return QuadrantRequirement(false, k); }
  static constexpr QuadrantRequirement empty() { return QuadrantRequirement(true, 0); }

  constexpr bool must_be_empty() const { return empty_; }
  constexpr unsigned minimum() const { return minimum_; }

  constexpr bool accepts(unsigned count) const { return empty_ ? count == 0 : count >= minimum_; }

  friend constexpr bool operator==(const QuadrantRequirement&, const QuadrantRequirement&) = default;

 private:
  constexpr QuadrantRequirement(bool empty, unsigned minimum) : empty_(empty), minimum_(minimum) {}

  bool empty_;
  unsigned minimum_;
};

/// MMP(a,b,c,d): requirements for quadrants I, II, III, IV.
struct QuadrantSpec {
  std::array<QuadrantRequirement, 4> quadrants;

  static constexpr QuadrantSpec of(QuadrantRequirement q1, QuadrantRequirement q2, QuadrantRequirement q3,
                                   QuadrantRequirement q4) {
    return QuadrantSpec{{q1, q2, q3, q4}};
  }

  /// MMP with plain "at least" entries.
  static constexpr QuadrantSpec counts(unsigned a, unsigned b, unsigned c, unsigned d) {
    return of(QuadrantRequirement::at_least(a), QuadrantRequirement::at_least(b), QuadrantRequirement::at_least(c),
              QuadrantRequirement::at_least(d));
  }

  /// "a,b,c,d" where each entry is a nonnegative integer or "e" for the empty quadrant.
  /// "∅" and "empty" are accepted as spellings of "e".
  static QuadrantSpec parse(std::string_view text);

  /// Canonical "a,b,c,d" text; parse(format()) is the identity.
  std::string format() const;

  /// "MMP(1,0,∅,0)".
  std::string display() const;

  friend constexpr bool operator==(const QuadrantSpec&, const QuadrantSpec&) = default;
};

inline constexpr QuadrantSpec kQuadrantI = QuadrantSpec::counts(1, 0, 0, 0);
inline constexpr QuadrantSpec kQuadrantII = QuadrantSpec::counts(0, 1, 0, 0);
inline constexpr QuadrantSpec kQuadrantIII = QuadrantSpec::counts(0, 0, 1, 0);
inline constexpr QuadrantSpec kQuadrantIV = QuadrantSpec::counts(0, 0, 0, 1);

struct QuadrantCounts {
  unsigned q1 = 0;
  unsigned q2 = 0;
  unsigned q3 = 0;
  unsigned q4 = 0;

  friend bool operator==(const QuadrantCounts&, const QuadrantCounts&) = default;
};

/// Points of the graph in each quadrant around (i, p_i). Throws std::out_of_range unless 1 <= i <= n.
QuadrantCounts quadrant_counts(const Permutation& p, std::size_t position);

bool matches(const Permutation& p, std::size_t position, const QuadrantSpec& spec);
bool matches(const QuadrantCounts& counts, const QuadrantSpec& spec);

/// Number of positions matching `spec`.
unsigned mmp_count(const Permutation& p, const QuadrantSpec& spec);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

enum class AlternatingClass { UpDown, DownUp };

enum class Shape { UpDown, DownUp, Neither, Both };

/// Tri-state shape; a length-1 permutation is reported as Both. Throws DomainError on empty input.
Shape classify(const Permutation& p);

bool is_member(const Permutation& p, AlternatingClass c);

/// Order-isomorphic permutation of 1..k. Throws DomainError on repeated entries.
Permutation reduce(std::span<const int> window);

std::string_view to_string(AlternatingClass c);

}  // namespace meshlab
