#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "meshlab/rational.hpp"

namespace meshlab {

struct MarkerVariable {};    // x, the marker of pattern occurrences
struct HalfLengthVariable {};  // n, the half-length in the coefficient laws

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored in ascending order of power with trailing zeros
/// trimmed, so the zero polynomial has no coefficients at all. The tag keeps
/// polynomials in different variables from being mixed by accident.
template <class Variable>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(BigRational value) { return Polynomial({std::move(value)}); }

  static Polynomial monomial(BigRational value, std::size_t power) {
    std::vector<BigRational> coeffs(power + 1);
    coeffs[power] = std::move(value);
    return Polynomial(std::move(coeffs));
  }

  static Polynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  /// Zero for powers beyond the degree.
  const BigRational& coefficient(std::size_t power) const {
    static const BigRational kZero = 0;
    return power < coeffs_.size() ? coeffs_[power] : kZero;
  }

  std::span<const BigRational> coefficients() const { return coeffs_; }

  /// Smallest power with a nonzero coefficient.
  std::optional<std::size_t> lowest_power() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return i;
    }
    return std::nullopt;
  }

  bool has_integer_coefficients() const {
    for (const auto& c : coeffs_) {
      if (c.get_den() != 1) return false;
    }
    return true;
  }

  BigRational evaluate(const BigRational& at) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at + *it;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const BigRational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial p) { return p *= BigRational(-1); }
  friend Polynomial operator*(Polynomial p, const BigRational& scalar) { return p *= scalar; }
  friend Polynomial operator*(const BigRational& scalar, Polynomial p) { return p *= scalar; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  /// Multiplication by variable^power.
  Polynomial shifted(std::size_t power) const {
    if (is_zero()) return {};
    std::vector<BigRational> out(power);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigRational> coeffs_;
};

using XPolynomial = Polynomial<MarkerVariable>;
using NPolynomial = Polynomial<HalfLengthVariable>;

// Named ring operations; thin wrappers over the operators.
inline XPolynomial poly_add(const XPolynomial& a, const XPolynomial& b) { return a + b; }
inline XPolynomial poly_mul(const XPolynomial& a, const XPolynomial& b) { return a * b; }
inline XPolynomial poly_scale(const XPolynomial& p, const BigRational& s) { return p * s; }
inline BigRational poly_coefficient(const XPolynomial& p, std::size_t k) { return p.coefficient(k); }

/// Builds a polynomial from integer coefficients, ascending powers.
template <class Variable = MarkerVariable>
Polynomial<Variable> from_integers(std::initializer_list<long> coeffs) {
  std::vector<BigRational> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.emplace_back(c);
  return Polynomial<Variable>(std::move(out));
}

}  // namespace meshlab
