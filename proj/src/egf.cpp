#include "meshlab/egf.hpp"

#include <string>

#include "meshlab/errors.hpp"

namespace meshlab {
namespace {

void require_same_order(const EgfSeries& f, const EgfSeries& g, const char* op) {
  if (f.order() != g.order()) {
    throw UsageError(std::string(op) + ": series orders differ (" + std::to_string(f.order()) + " vs " +
                     std::to_string(g.order()) + ")");
  }
}

}  // namespace

EgfSeries::EgfSeries(std::vector<XPolynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("a series needs at least the constant coefficient");
}

EgfSeries EgfSeries::constant(const XPolynomial& value, std::size_t order) {
  EgfSeries out(order);
  out[0] = value;
  return out;
}

EgfSeries EgfSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw UsageError("cannot truncate a series to a higher order");
  return EgfSeries(std::vector<XPolynomial>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

std::vector<BigRational> EgfSeries::evaluate_marker(const BigRational& at) const {
  std::vector<BigRational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.evaluate(at));
  return out;
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& other) {
  require_same_order(*this, other, "add");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

EgfSeries& EgfSeries::operator-=(const EgfSeries& other) {
  require_same_order(*this, other, "subtract");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

EgfSeries& EgfSeries::operator*=(const XPolynomial& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g) {
  require_same_order(f, g, "egf_mul");
  const std::size_t order = f.order();
  EgfSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    XPolynomial acc;
    for (std::size_t k = 0; k <= n; ++k) {
      if (f[k].is_zero() || g[n - k].is_zero()) continue;
      acc += (f[k] * g[n - k]) * BigRational(binomial(n, k));
    }
    out[n] = std::move(acc);
  }
  return out;
}

EgfSeries egf_differentiate(const EgfSeries& f) {
  if (f.order() == 0) throw UsageError("cannot differentiate an order-0 series");
  return EgfSeries(std::vector<XPolynomial>(f.coefficients().begin() + 1, f.coefficients().end()));
}

EgfSeries egf_integrate(const EgfSeries& f) {
  std::vector<XPolynomial> coeffs;
  coeffs.reserve(f.order() + 2);
  coeffs.emplace_back();
  coeffs.insert(coeffs.end(), f.coefficients().begin(), f.coefficients().end());
  return EgfSeries(std::move(coeffs));
}

EgfSeries solve_linear_ode(const EgfSeries& f, const EgfSeries& g, const XPolynomial& y0, std::size_t order) {
  if (order > 0 && (f.order() + 1 < order || g.order() + 1 < order)) {
    throw UsageError("solve_linear_ode: coefficient series too short for order " + std::to_string(order));
  }
  EgfSeries y(order);
  y[0] = y0;
  for (std::size_t n = 0; n + 1 <= order; ++n) {
    XPolynomial next = g[n];
    for (std::size_t k = 0; k <= n; ++k) {
      if (f[k].is_zero() || y[n - k].is_zero()) continue;
      next += (f[k] * y[n - k]) * BigRational(binomial(n, k));
    }
    y[n + 1] = std::move(next);
  }
  return y;
}

std::vector<BigInt> zigzag_numbers(std::size_t n) {
  // Boustrophedon rows: each row starts at 0 and accumulates the previous row
  // read backwards; the last entry of row m is E_m.
  std::vector<BigInt> out{1};
  std::vector<BigInt> row{1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.emplace_back(0);
    for (auto it = row.rbegin(); it != row.rend(); ++it) next.push_back(next.back() + *it);
    row = std::move(next);
    out.push_back(row.back());
  }
  return out;
}

EgfSeries tan_series(std::size_t order) {
  const auto zigzag = zigzag_numbers(order);
  EgfSeries out(order);
  for (std::size_t n = 1; n <= order; n += 2) out[n] = XPolynomial::monomial(BigRational(zigzag[n]), n);
  return out;
}

EgfSeries sec_series(std::size_t order) {
  const auto zigzag = zigzag_numbers(order);
  EgfSeries out(order);
  for (std::size_t n = 0; n <= order; n += 2) out[n] = XPolynomial::monomial(BigRational(zigzag[n]), n);
  return out;
}

EgfSeries cos_series(std::size_t order) {
  EgfSeries out(order);
  for (std::size_t n = 0; n <= order; n += 2) out[n] = XPolynomial::monomial(n % 4 == 0 ? 1 : -1, n);
  return out;
}

EgfSeries plain_tan_series(std::size_t order) {
  const auto zigzag = zigzag_numbers(order);
  EgfSeries out(order);
  for (std::size_t n = 1; n <= order; n += 2) out[n] = XPolynomial::constant(BigRational(zigzag[n]));
  return out;
}

EgfSeries sec_power(const XPolynomial& rate, std::size_t order) {
  const std::size_t coeff_order = order == 0 ? 0 : order - 1;
  return solve_linear_ode(tan_series(coeff_order) * rate, EgfSeries(coeff_order), XPolynomial::constant(1), order);
}

}  // namespace meshlab
