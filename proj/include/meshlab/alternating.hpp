#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "meshlab/permutation.hpp"

namespace meshlab {

namespace detail {

// Position `depth` (0-based) must rise from the previous entry when this returns true.
constexpr bool rises_at(AlternatingClass c, std::size_t depth) {
  const bool odd_step = depth % 2 == 1;  // steps into positions 2, 4, ...
  return c == AlternatingClass::UpDown ? odd_step : !odd_step;
}

template <class Visitor>
void extend_alternating(std::vector<int>& prefix, std::uint32_t used, std::size_t n, AlternatingClass c,
                        Visitor& visit) {
  const std::size_t depth = prefix.size();
  if (depth == n) {
    visit(std::span<const int>(prefix));
    return;
  }
  int lo = 1;
  int hi = static_cast<int>(n);
  if (depth > 0) {
    if (rises_at(c, depth)) {
      lo = prefix.back() + 1;
    } else {
      hi = prefix.back() - 1;
    }
  }
  for (int v = lo; v <= hi; ++v) {
    const std::uint32_t bit = std::uint32_t{1} << v;
    if (used & bit) continue;
    prefix.push_back(v);
    extend_alternating(prefix, used | bit, n, c, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Calls `visit(std::span<const int>)` once for every permutation of length n
/// in the class, in lexicographic order. Lengths are limited to 30. Length 1
/// yields the single permutation 1 for both classes; length 0 yields nothing.
template <class Visitor>
void for_each_alternating(std::size_t n, AlternatingClass c, Visitor&& visit) {
  if (n == 0) return;
  std::vector<int> prefix;
  prefix.reserve(n);
  detail::extend_alternating(prefix, 0, n, c, visit);
}

/// Same as above, restricted to permutations starting with `head`.
template <class Visitor>
void for_each_alternating_with_prefix(std::size_t n, AlternatingClass c, std::span<const int> head,
                                      Visitor&& visit) {
  std::vector<int> prefix(head.begin(), head.end());
  prefix.reserve(n);
  std::uint32_t used = 0;
  for (int v : head) used |= std::uint32_t{1} << v;
  detail::extend_alternating(prefix, used, n, c, visit);
}

/// Materialized form of for_each_alternating.
std::vector<Permutation> enumerate_alternating(std::size_t n, AlternatingClass c);

/// Prefixes of length min(n, depth) that respect the alternation, lexicographic.
/// Some may have no completion. Used to partition enumeration across workers.
std::vector<std::vector<int>> alternating_prefixes(std::size_t n, AlternatingClass c, std::size_t depth);

}  // namespace meshlab
