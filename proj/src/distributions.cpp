#include "meshlab/distributions.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "meshlab/alternating.hpp"
#include "meshlab/errors.hpp"

namespace meshlab {

char family_name(Family f) { return "ABCD"[static_cast<int>(f)]; }

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      default: break;
    }
  }
  throw UsageError("unknown family '" + std::string(text) + "' (expected A, B, C or D)");
}

AlternatingClass family_class(Family f) {
  return f == Family::A || f == Family::B ? AlternatingClass::UpDown : AlternatingClass::DownUp;
}

static bool odd_length(Family f) { return f == Family::B || f == Family::D; }

std::size_t min_family_index(Family f) { return odd_length(f) ? 1 : 0; }

std::size_t family_length(Family f, std::size_t index) {
  if (index < min_family_index(f)) throw UsageError(std::string("family ") + family_name(f) + " starts at index 1");
  return odd_length(f) ? 2 * index - 1 : 2 * index;
}

std::optional<std::size_t> family_index(Family f, std::size_t length) {
  if (odd_length(f) != (length % 2 == 1)) return std::nullopt;
  return odd_length(f) ? (length + 1) / 2 : length / 2;
}

Family family_for(AlternatingClass c, std::size_t length) {
  const bool odd = length % 2 == 1;
  if (c == AlternatingClass::UpDown) return odd ? Family::B : Family::A;
  return odd ? Family::D : Family::C;
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Brute: return "brute";
    case Provenance::Recursion: return "recursion";
    case Provenance::Egf: return "egf";
  }
  return "";
}

Provenance parse_provenance(std::string_view text) {
  if (text == "brute") return Provenance::Brute;
  if (text == "recursion") return Provenance::Recursion;
  if (text == "egf") return Provenance::Egf;
  throw UsageError("unknown provenance '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------

std::size_t brute_guard() {
  if (const char* env = std::getenv("MESHLAB_MAX_BRUTE"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0') return value;
  }
  return 14;
}

namespace {

constexpr std::size_t kMaxEnumerableLength = 30;

// Depth-first walk that scores each position as it is placed: with the set of
// values already to the left known, all four quadrant counts follow from two
// popcounts.
class StatisticWalker {
 public:
  StatisticWalker(std::size_t n, AlternatingClass c, const QuadrantSpec& spec)
      : n_(static_cast<int>(n)), class_(c), spec_(spec), histogram_(n + 1, 0) {}

  void run_from(std::span<const int> head) {
    std::uint32_t used = 0;
    unsigned stat = 0;
    for (std::size_t i = 0; i < head.size(); ++i) {
      if (i > 0) {
        const bool rise = head[i] > head[i - 1];
        if (rise != detail::rises_at(class_, i)) return;
      }
      stat += score(head[i], used);
      used |= std::uint32_t{1} << head[i];
    }
    walk(head.size(), head.empty() ? 0 : head.back(), used, stat);
  }

  const std::vector<std::uint64_t>& histogram() const { return histogram_; }

 private:
  unsigned score(int v, std::uint32_t left) const {
    const std::uint32_t below_mask = (std::uint32_t{1} << v) - 2;  // values 1..v-1
    const std::uint32_t above_mask = ~((std::uint32_t{1} << (v + 1)) - 1);
    const auto q2 = static_cast<unsigned>(std::popcount(left & above_mask));
    const auto q3 = static_cast<unsigned>(std::popcount(left & below_mask));
    const QuadrantCounts counts{static_cast<unsigned>(n_ - v) - q2, q2, q3, static_cast<unsigned>(v - 1) - q3};
    return matches(counts, spec_) ? 1 : 0;
  }

  void walk(std::size_t depth, int prev, std::uint32_t used, unsigned stat) {
    if (depth == static_cast<std::size_t>(n_)) {
      ++histogram_[stat];
      return;
    }
    int lo = 1;
    int hi = n_;
    if (depth > 0) {
      if (detail::rises_at(class_, depth)) {
        lo = prev + 1;
      } else {
        hi = prev - 1;
      }
    }
    for (int v = lo; v <= hi; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (used & bit) continue;
      walk(depth + 1, v, used | bit, stat + score(v, used));
    }
  }

  int n_;
  AlternatingClass class_;
  QuadrantSpec spec_;
  std::vector<std::uint64_t> histogram_;
};

}  // namespace

void check_enumerable(std::size_t length, const BruteOptions& options) {
  if (length > kMaxEnumerableLength) throw ResourceLimitError("lengths above 30 cannot be enumerated");
  if (length > brute_guard() && !options.force) {
    throw ResourceLimitError("length " + std::to_string(length) + " exceeds the enumeration guard " +
                             std::to_string(brute_guard()) + " (use --force or MESHLAB_MAX_BRUTE)");
  }
}

std::vector<std::uint64_t> brute_histogram(std::size_t length, AlternatingClass c, const QuadrantSpec& spec,
                                           const BruteOptions& options) {
  if (length == 0) throw UsageError("brute force needs length >= 1");
  check_enumerable(length, options);

  const auto prefixes = alternating_prefixes(length, c, 2);
  std::vector<std::vector<std::uint64_t>> partial(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t task = next++; task < prefixes.size(); task = next++) {
      StatisticWalker walker(length, c, spec);
      walker.run_from(prefixes[task]);
      partial[task] = walker.histogram();
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(prefixes.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<std::uint64_t> histogram(length + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t m = 0; m < h.size(); ++m) histogram[m] += h[m];
  }
  return histogram;
}

XPolynomial dist_brute(std::size_t length, AlternatingClass c, const QuadrantSpec& spec,
                       const BruteOptions& options) {
  const auto histogram = brute_histogram(length, c, spec, options);
  std::vector<BigRational> coeffs;
  coeffs.reserve(histogram.size());
  for (std::uint64_t count : histogram) coeffs.emplace_back(BigInt(std::to_string(count)));
  return XPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------

FamilyTable::FamilyTable(std::size_t max_index)
    : max_index_(max_index), zigzag_(zigzag_numbers(2 * max_index + 1)) {
  const auto term = [&](unsigned long top, unsigned long pick, std::size_t power) {
    return XPolynomial::monomial(BigRational(binomial(top, pick) * zigzag_[power]), power);
  };

  a_.resize(max_index + 1);
  b_.resize(max_index + 1);
  c_.resize(max_index + 1);
  d_.resize(max_index + 1);

  // Each sum splits on the position of the largest entry: everything to its
  // left is a fixed-size alternating block whose entries all match quadrant I.
  a_[0] = XPolynomial::constant(1);
  for (std::size_t n = 1; n <= max_index; ++n) {
    XPolynomial acc;
    for (std::size_t k = 1; k <= n; ++k) acc += term(2 * n - 1, 2 * k - 1, 2 * k - 1) * a_[n - k];
    a_[n] = std::move(acc);
  }
  if (max_index >= 1) b_[1] = XPolynomial::constant(1);
  for (std::size_t m = 2; m <= max_index; ++m) {
    const std::size_t half = m - 1;  // B_{2 half + 1}
    XPolynomial acc;
    for (std::size_t k = 1; k <= half; ++k) acc += term(2 * half, 2 * k - 1, 2 * k - 1) * b_[half - k + 1];
    b_[m] = std::move(acc);
  }
  c_[0] = XPolynomial::constant(1);
  for (std::size_t n = 1; n <= max_index; ++n) {
    XPolynomial acc;
    for (std::size_t k = 0; k < n; ++k) acc += term(2 * n - 1, 2 * k, 2 * k) * b_[n - k];
    c_[n] = std::move(acc);
  }
  for (std::size_t m = 1; m <= max_index; ++m) {
    const std::size_t half = m - 1;  // D_{2 half + 1}
    XPolynomial acc;
    for (std::size_t k = 0; k <= half; ++k) acc += term(2 * half, 2 * k, 2 * k) * a_[half - k];
    d_[m] = std::move(acc);
  }
}

const XPolynomial& FamilyTable::get(Family f, std::size_t index) const {
  if (index > max_index_ || index < min_family_index(f)) {
    throw std::out_of_range(std::string("row ") + std::to_string(index) + " of family " + family_name(f) +
                            " is outside the table (max " + std::to_string(max_index_) + ")");
  }
  switch (f) {
    case Family::A: return a_[index];
    case Family::B: return b_[index];
    case Family::C: return c_[index];
    case Family::D: return d_[index];
  }
  throw std::logic_error("unreachable");
}

const XPolynomial& FamilyTable::a(std::size_t n) const { return get(Family::A, n); }
const XPolynomial& FamilyTable::b(std::size_t n) const { return get(Family::B, n); }
const XPolynomial& FamilyTable::c(std::size_t n) const { return get(Family::C, n); }
const XPolynomial& FamilyTable::d(std::size_t n) const { return get(Family::D, n); }

XPolynomial a_poly(std::size_t n) { return FamilyTable(n).a(n); }
XPolynomial b_poly(std::size_t n) { return FamilyTable(n).b(n); }
XPolynomial c_poly(std::size_t n) { return FamilyTable(n).c(n); }
XPolynomial d_poly(std::size_t n) { return FamilyTable(n).d(n); }

// ---------------------------------------------------------------------------

namespace {

// Integral from 0 of the series produced by `integrand(order - 1)`, at `order`.
template <class Integrand>
EgfSeries integral_to(std::size_t order, Integrand&& integrand) {
  if (order == 0) return EgfSeries(0);
  return egf_integrate(integrand(order - 1));
}

EgfSeries one(std::size_t order) { return EgfSeries::constant(XPolynomial::constant(1), order); }

}  // namespace

EgfSeries egf_family(Family f, std::size_t order) {
  const std::size_t coeff_order = order == 0 ? 0 : order - 1;
  switch (f) {
    case Family::A:
      return solve_linear_ode(tan_series(coeff_order), EgfSeries(coeff_order), XPolynomial::constant(1), order);
    case Family::B:
      return solve_linear_ode(tan_series(coeff_order), one(coeff_order), XPolynomial(), order);
    case Family::C:
      return one(order) + integral_to(order, [](std::size_t k) { return sec_series(k) * egf_family(Family::B, k); });
    case Family::D:
      return integral_to(order, [](std::size_t k) { return sec_series(k) * egf_family(Family::A, k); });
  }
  throw std::logic_error("unreachable");
}

XPolynomial egf_family_polynomial(Family f, std::size_t index) {
  const std::size_t length = family_length(f, index);
  return egf_family(f, length)[length];
}

std::string_view to_string(InnerExponent e) { return e == InnerExponent::MinusOneOverX ? "-1/x" : "+1/x"; }

namespace {

const XPolynomial& rate_one_plus_x() {
  static const XPolynomial rate = from_integers({1, 1});
  return rate;
}

}  // namespace

EgfSeries closed_form_a(std::size_t order) { return sec_power(XPolynomial::constant(1), order); }

EgfSeries closed_form_b(std::size_t order) {
  return sec_power(XPolynomial::constant(1), order) *
         integral_to(order, [](std::size_t k) { return sec_power(XPolynomial::constant(-1), k); });
}

EgfSeries closed_form_c(std::size_t order, InnerExponent inner) {
  const XPolynomial inner_rate = XPolynomial::constant(inner == InnerExponent::MinusOneOverX ? -1 : 1);
  return one(order) + integral_to(order, [&](std::size_t k) {
           return sec_power(rate_one_plus_x(), k) * integral_to(k, [&](std::size_t j) { return sec_power(inner_rate, j); });
         });
}

EgfSeries closed_form_d(std::size_t order) {
  return integral_to(order, [](std::size_t k) { return sec_power(rate_one_plus_x(), k); });
}

EgfSeries sec_to_the_x(std::size_t order) {
  const std::size_t coeff_order = order == 0 ? 0 : order - 1;
  return solve_linear_ode(plain_tan_series(coeff_order) * XPolynomial::variable(), EgfSeries(coeff_order),
                          XPolynomial::constant(1), order);
}

// ---------------------------------------------------------------------------

namespace {

struct ChainMember {
  AlternatingClass cls;
  int quadrant;  // 0..3
};

constexpr AlternatingClass kUD = AlternatingClass::UpDown;
constexpr AlternatingClass kDU = AlternatingClass::DownUp;

struct ChainDefinition {
  int id;
  bool odd;
  std::array<ChainMember, 4> members;
};

// mmp^I(s) = mmp^II(s^r) = mmp^IV(s^c) = mmp^III(s^rc), transported along the
// class bijections for each parity.
constexpr std::array<ChainDefinition, 4> kChains = {{
    {1, false, {{{kUD, 0}, {kDU, 1}, {kDU, 3}, {kUD, 2}}}},
    {2, false, {{{kDU, 0}, {kUD, 1}, {kUD, 3}, {kDU, 2}}}},
    {3, true, {{{kUD, 0}, {kUD, 1}, {kDU, 3}, {kDU, 2}}}},
    {4, true, {{{kDU, 0}, {kDU, 1}, {kUD, 3}, {kUD, 2}}}},
}};

constexpr std::array<QuadrantSpec, 4> kUnitSpecs = {kQuadrantI, kQuadrantII, kQuadrantIII, kQuadrantIV};

}  // namespace

std::vector<ChainResult> symmetry_suite(std::size_t max_length, const BruteOptions& options) {
  check_enumerable(max_length, options);
  std::vector<ChainResult> out;
  for (std::size_t length = 1; length <= max_length; ++length) {
    // polys[class][quadrant]
    std::array<std::array<XPolynomial, 4>, 2> polys;
    for (int c = 0; c < 2; ++c) {
      for (int q = 0; q < 4; ++q) {
        polys[c][q] = dist_brute(length, c == 0 ? kUD : kDU, kUnitSpecs[q], options);
      }
    }
    const auto lookup = [&](const ChainMember& m) -> const XPolynomial& {
      return polys[m.cls == kUD ? 0 : 1][m.quadrant];
    };
    for (const auto& chain : kChains) {
      if (chain.odd != (length % 2 == 1)) continue;
      ChainResult result{chain.id, length, true, lookup(chain.members[0]), {}};
      for (const auto& member : chain.members) {
        if (lookup(member) != result.reference) {
          result.holds = false;
          result.counterexample = std::string(to_string(member.cls)) + " " + kUnitSpecs[member.quadrant].display();
          break;
        }
      }
      out.push_back(std::move(result));
    }
  }
  return out;
}

std::vector<SecPowerResult> sec_power_identity(std::size_t max_n, const BruteOptions& options) {
  check_enumerable(2 * max_n, options);
  const EgfSeries series = sec_to_the_x(2 * max_n);
  const QuadrantSpec spec = QuadrantSpec::of(QuadrantRequirement::at_least(1), QuadrantRequirement::at_least(0),
                                             QuadrantRequirement::empty(), QuadrantRequirement::at_least(0));
  std::vector<SecPowerResult> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    // The empty permutation contributes the constant term 1.
    XPolynomial brute = n == 0 ? XPolynomial::constant(1) : dist_brute(2 * n, kUD, spec, options);
    const XPolynomial& coefficient = series[2 * n];
    out.push_back({n, coefficient, brute, coefficient == brute});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

auto record_key(const DistributionRecord& r) {
  return std::make_tuple(static_cast<int>(r.family), r.index, static_cast<int>(r.provenance));
}

}  // namespace

std::string cache_to_json_text(std::vector<DistributionRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const auto& lhs, const auto& rhs) { return record_key(lhs) < record_key(rhs); });
  json out = json::array();
  for (const auto& r : records) {
    json coeffs = json::array();
    for (const auto& c : r.polynomial.coefficients()) coeffs.push_back(to_string(c));
    out.push_back({{"family", std::string(1, family_name(r.family))},
                   {"index", r.index},
                   {"length", family_length(r.family, r.index)},
                   {"coeffs", std::move(coeffs)},
                   {"provenance", std::string(to_string(r.provenance))}});
  }
  return out.dump(2) + "\n";
}

std::vector<DistributionRecord> cache_from_json_text(std::string_view text) {
  std::vector<DistributionRecord> out;
  try {
    const json doc = json::parse(text);
    if (!doc.is_array()) throw UsageError("cache must be a JSON array");
    for (const auto& row : doc) {
      const Family family = parse_family(row.at("family").get<std::string>());
      const auto index = row.at("index").get<std::size_t>();
      if (row.at("length").get<std::size_t>() != family_length(family, index)) {
        throw UsageError("cache row has inconsistent length");
      }
      std::vector<BigRational> coeffs;
      for (const auto& c : row.at("coeffs")) coeffs.push_back(parse_big_rational(c.get<std::string>()));
      out.push_back({family, index, XPolynomial(std::move(coeffs)),
                     parse_provenance(row.at("provenance").get<std::string>())});
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed cache: ") + e.what());
  }
  return out;
}

void write_cache(const std::string& path, std::vector<DistributionRecord> records) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write cache file " + path);
  file << cache_to_json_text(std::move(records));
  if (!file) throw std::runtime_error("cannot write cache file " + path);
}

std::vector<DistributionRecord> read_cache(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read cache file " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return cache_from_json_text(buffer.str());
}

void update_cache(const std::string& path, const std::vector<DistributionRecord>& records) {
  std::map<std::tuple<int, std::size_t, int>, DistributionRecord> merged;
  if (std::ifstream probe(path); probe) {
    for (auto& r : read_cache(path)) merged.insert_or_assign(record_key(r), std::move(r));
  }
  for (const auto& r : records) merged.insert_or_assign(record_key(r), r);
  std::vector<DistributionRecord> all;
  for (auto& [key, r] : merged) all.push_back(std::move(r));
  write_cache(path, std::move(all));
}

}  // namespace meshlab
