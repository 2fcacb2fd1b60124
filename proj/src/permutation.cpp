#include "meshlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "meshlab/alternating.hpp"
#include "meshlab/errors.hpp"

namespace meshlab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v]) {
      throw DomainError("not a permutation of 1.." + std::to_string(values_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw UsageError("bad permutation text: " + std::string(text));
      values.push_back(c - '0');
    }
    return Permutation(std::move(values));
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) ++pos;
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) {
      if (pos < text.size()) throw UsageError("bad permutation text: " + std::string(text));
      break;
    }
    values.push_back(std::stoi(std::string(text.substr(pos, end - pos))));
    pos = end;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

int Permutation::at(std::size_t position) const {
  if (position < 1 || position > values_.size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside 1.." + std::to_string(values_.size()));
  }
  return values_[position - 1];
}

std::string Permutation::to_string() const {
  const bool compact = values_.size() < 10;
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

QuadrantSpec QuadrantSpec::parse(std::string_view text) {
  QuadrantSpec spec = counts(0, 0, 0, 0);
  std::size_t field = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string token(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (field >= 4) throw UsageError("pattern needs exactly four entries: " + std::string(text));
    if (token == "e" || token == "E" || token == "empty" || token == "\xE2\x88\x85") {
      spec.quadrants[field] = QuadrantRequirement::empty();
    } else if (!token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
      spec.quadrants[field] = QuadrantRequirement::at_least(static_cast<unsigned>(std::stoul(token)));
    } else {
      throw UsageError("bad pattern entry '" + token + "' in " + std::string(text));
    }
    ++field;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (field != 4) throw UsageError("pattern needs exactly four entries: " + std::string(text));
  return spec;
}

namespace {

std::string join_entries(const QuadrantSpec& spec, std::string_view empty_symbol) {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0) out += ',';
    const auto& q = spec.quadrants[i];
    out += q.must_be_empty() ? std::string(empty_symbol) : std::to_string(q.minimum());
  }
  return out;
}

}  // namespace

std::string QuadrantSpec::format() const { return join_entries(*this, "e"); }

std::string QuadrantSpec::display() const { return "MMP(" + join_entries(*this, "\xE2\x88\x85") + ")"; }

QuadrantCounts quadrant_counts(const Permutation& p, std::size_t position) {
  const int origin = p.at(position);
  const auto values = p.values();
  QuadrantCounts counts;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j + 1 == position) continue;
    const bool right = j + 1 > position;
    const bool above = values[j] > origin;
    if (right && above) {
      ++counts.q1;
    } else if (above) {
      ++counts.q2;
    } else if (!right) {
      ++counts.q3;
    } else {
      ++counts.q4;
    }
  }
  return counts;
}

bool matches(const QuadrantCounts& counts, const QuadrantSpec& spec) {
  return spec.quadrants[0].accepts(counts.q1) && spec.quadrants[1].accepts(counts.q2) &&
         spec.quadrants[2].accepts(counts.q3) && spec.quadrants[3].accepts(counts.q4);
}

bool matches(const Permutation& p, std::size_t position, const QuadrantSpec& spec) {
  return matches(quadrant_counts(p, position), spec);
}

unsigned mmp_count(const Permutation& p, const QuadrantSpec& spec) {
  unsigned total = 0;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (matches(p, i, spec)) ++total;
  }
  return total;
}

Permutation reverse(const Permutation& p) {
  std::vector<int> values(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(values));
}

Permutation complement(const Permutation& p) {
  const int top = static_cast<int>(p.size()) + 1;
  std::vector<int> values;
  values.reserve(p.size());
  for (int v : p.values()) values.push_back(top - v);
  return Permutation(std::move(values));
}

Shape classify(const Permutation& p) {
  if (p.empty()) throw DomainError("cannot classify the empty permutation");
  if (p.size() == 1) return Shape::Both;
  const auto v = p.values();
  bool up_down = true;
  bool down_up = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const bool rise = v[i] > v[i - 1];
    // Step into 1-based position i+1; even positions are peaks for up-down.
    const bool even_target = (i + 1) % 2 == 0;
    if (rise != even_target) up_down = false;
    if (rise == even_target) down_up = false;
  }
  if (up_down) return Shape::UpDown;
  if (down_up) return Shape::DownUp;
  return Shape::Neither;
}

bool is_member(const Permutation& p, AlternatingClass c) {
  if (p.empty()) return false;
  const Shape shape = classify(p);
  if (shape == Shape::Both) return true;
  return c == AlternatingClass::UpDown ? shape == Shape::UpDown : shape == Shape::DownUp;
}

Permutation reduce(std::span<const int> window) {
  std::vector<int> sorted(window.begin(), window.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("reduce needs distinct entries");
  }
  std::vector<int> ranks;
  ranks.reserve(window.size());
  for (int v : window) {
    ranks.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return Permutation(std::move(ranks));
}

std::string_view to_string(AlternatingClass c) { return c == AlternatingClass::UpDown ? "ud" : "du"; }

std::vector<Permutation> enumerate_alternating(std::size_t n, AlternatingClass c) {
  std::vector<Permutation> out;
  for_each_alternating(n, c, [&](std::span<const int> values) {
    out.emplace_back(std::vector<int>(values.begin(), values.end()));
  });
  return out;
}

std::vector<std::vector<int>> alternating_prefixes(std::size_t n, AlternatingClass c, std::size_t depth) {
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  const std::size_t take = std::min(n, depth);
  std::vector<int> prefix;
  auto extend = [&](auto&& self, std::uint32_t used) -> void {
    if (prefix.size() == take) {
      out.push_back(prefix);
      return;
    }
    int lo = 1;
    int hi = static_cast<int>(n);
    if (!prefix.empty()) {
      if (detail::rises_at(c, prefix.size())) {
        lo = prefix.back() + 1;
      } else {
        hi = prefix.back() - 1;
      }
    }
    for (int v = lo; v <= hi; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (used & bit) continue;
      prefix.push_back(v);
      self(self, used | bit);
      prefix.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace meshlab
