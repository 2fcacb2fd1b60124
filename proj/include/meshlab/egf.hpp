#pragma once

#include <cstddef>
#include <vector>

#include "meshlab/polynomial.hpp"
#include "meshlab/rational.hpp"

namespace meshlab {

/// Truncated exponential generating function F(t, x) = sum_{n=0}^{N} c_n(x) t^n / n!.
///
/// The truncation order N is part of the value. Binary operations require
/// equal orders and throw UsageError otherwise, so a verified coefficient is
/// never dropped silently.
class EgfSeries {
 public:
  /// Zero series of the given order.
  explicit EgfSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Order is coeffs.size() - 1; throws UsageError on an empty list.
  explicit EgfSeries(std::vector<XPolynomial> coeffs);

  static EgfSeries constant(const XPolynomial& value, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }

  const XPolynomial& operator[](std::size_t n) const { return coeffs_.at(n); }
  XPolynomial& operator[](std::size_t n) { return coeffs_.at(n); }

  std::span<const XPolynomial> coefficients() const { return coeffs_; }

  /// Drops coefficients above `order`; throws UsageError if `order` exceeds the current one.
  EgfSeries truncated(std::size_t order) const;

  /// Coefficients with x specialized to `at`.
  std::vector<BigRational> evaluate_marker(const BigRational& at) const;

  EgfSeries& operator+=(const EgfSeries& other);
  EgfSeries& operator-=(const EgfSeries& other);
  EgfSeries& operator*=(const XPolynomial& scalar);

  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
  friend EgfSeries operator*(EgfSeries a, const XPolynomial& s) { return a *= s; }
  friend EgfSeries operator*(const XPolynomial& s, EgfSeries a) { return a *= s; }

  friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

 private:
  std::vector<XPolynomial> coeffs_;
};

/// Binomial convolution: c_n(fg) = sum_k C(n,k) c_k(f) c_{n-k}(g).
EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g);
inline EgfSeries operator*(const EgfSeries& f, const EgfSeries& g) { return egf_mul(f, g); }

/// d/dt: order drops by one. Order-0 input is a UsageError (nothing is known about c_1).
EgfSeries egf_differentiate(const EgfSeries& f);

/// Integral from 0: c_0 = 0 and the order rises by one, since c_0..c_N of f fix c_0..c_{N+1}.
EgfSeries egf_integrate(const EgfSeries& f);

/// Unique truncated solution of Y' = f Y + g with Y(0) = y0, to the given order.
/// Needs f and g to order >= order - 1.
EgfSeries solve_linear_ode(const EgfSeries& f, const EgfSeries& g, const XPolynomial& y0, std::size_t order);

/// E_0..E_N, the zigzag (Euler up/down) numbers, via the Seidel triangle.
std::vector<BigInt> zigzag_numbers(std::size_t n);

/// tan(xt): c_n = E_n x^n for odd n.
EgfSeries tan_series(std::size_t order);
/// sec(xt): c_n = E_n x^n for even n.
EgfSeries sec_series(std::size_t order);
/// cos(xt): c_n = (-1)^{n/2} x^n for even n.
EgfSeries cos_series(std::size_t order);
/// tan(t), with coefficients free of x.
EgfSeries plain_tan_series(std::size_t order);

/// (sec(xt))^alpha for alpha * x = `rate`, a polynomial in x, defined as the
/// solution of Y' = rate * tan(xt) * Y, Y(0) = 1. rate = 1 gives sec^{1/x},
/// rate = 1 + x gives sec^{1 + 1/x}, rate = -1 gives sec^{-1/x}.
EgfSeries sec_power(const XPolynomial& rate, std::size_t order);

}  // namespace meshlab
