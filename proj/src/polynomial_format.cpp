#include "meshlab/polynomial_format.hpp"

#include <cctype>
#include <string>

#include "meshlab/errors.hpp"

namespace meshlab {
namespace {

std::string power_text(std::size_t power, char variable, bool latex) {
  std::string out(1, variable);
  if (power == 1) return out;
  const std::string digits = std::to_string(power);
  if (latex && digits.size() > 1) return out + "^{" + digits + "}";
  return out + "^" + digits;
}

template <class Variable>
std::string expanded(const Polynomial<Variable>& p, char variable, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const BigRational& c = coeffs[k];
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    const BigRational magnitude = abs(c);
    if (k == 0) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) {
      out += to_string(magnitude);
      if (latex) out += " ";
    }
    out += power_text(k, variable, latex);
  }
  return out;
}

template <class Variable>
std::string factored(const Polynomial<Variable>& p, char variable, bool latex) {
  if (p.is_zero()) return "0";
  const std::size_t low = *p.lowest_power();
  BigInt content = 1;
  if (p.has_integer_coefficients()) {
    content = 0;
    for (const auto& c : p.coefficients()) content = gcd(content, BigInt(c.get_num()));
  }
  std::vector<BigRational> inner_coeffs(p.coefficients().begin() + static_cast<long>(low), p.coefficients().end());
  for (auto& c : inner_coeffs) c /= BigRational(content);
  const Polynomial<Variable> inner(std::move(inner_coeffs));

  std::string prefix;
  if (content != 1) prefix += content.get_str();
  if (low > 0) {
    if (latex && !prefix.empty()) prefix += " ";
    prefix += power_text(low, variable, latex);
  }

  if (inner.degree() == 0) {
    // ±1 after integer content is pulled out; any rational for non-integer input.
    const BigRational& c = inner.coefficient(0);
    if (prefix.empty()) return to_string(c);
    if (c == 1) return prefix;
    if (c == -1) return "-" + prefix;
    return to_string(c) + (latex ? " " : "") + prefix;
  }
  const std::string body = expanded(inner, variable, latex);
  if (prefix.empty()) return body;
  if (latex) return prefix + " \\left(" + body + "\\right)";
  return prefix + "(" + body + ")";
}

class Parser {
 public:
  Parser(std::string_view text, char variable) : variable_(variable) {
    // Drop whitespace and LaTeX sizing commands so both renderings share one grammar.
    std::string cleaned;
    for (std::size_t i = 0; i < text.size();) {
      if (text.substr(i, 5) == "\\left") {
        i += 5;
      } else if (text.substr(i, 6) == "\\right") {
        i += 6;
      } else if (text.substr(i, 5) == "\\cdot") {
        cleaned += '*';
        i += 5;
      } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      } else {
        cleaned += text[i++];
      }
    }
    text_ = std::move(cleaned);
  }

  XPolynomial parse() {
    if (text_.empty()) fail("empty polynomial");
    XPolynomial result = expression();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  XPolynomial expression() {
    XPolynomial acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      const bool minus = text_[pos_++] == '-';
      XPolynomial next = term();
      acc += minus ? -next : next;
    }
    return acc;
  }

  XPolynomial term() {
    XPolynomial acc = factor();
    while (true) {
      if (peek() == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == variable_ || c == '(';
  }

  XPolynomial factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigRational value{BigInt(digits())};
      if (peek() == '/') {
        ++pos_;
        value /= BigRational(BigInt(digits()));
      }
      return XPolynomial::constant(value);
    }
    if (c == variable_) {
      ++pos_;
      std::size_t power = 1;
      if (peek() == '^') {
        ++pos_;
        const bool braced = peek() == '{';
        if (braced) ++pos_;
        power = std::stoul(digits());
        if (braced) expect('}');
      }
      return XPolynomial::monomial(1, power);
    }
    if (c == '(') {
      ++pos_;
      XPolynomial inner = expression();
      expect(')');
      return inner;
    }
    fail("expected a number, the variable, or '('");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("cannot parse polynomial '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  std::string text_;
  std::size_t pos_ = 0;
  char variable_;
};

}  // namespace

std::string format_polynomial(const XPolynomial& p, PolynomialStyle style, char variable) {
  return style == PolynomialStyle::Factored ? factored(p, variable, false) : expanded(p, variable, false);
}

std::string format_polynomial(const NPolynomial& p, PolynomialStyle style, char variable) {
  return style == PolynomialStyle::Factored ? factored(p, variable, false) : expanded(p, variable, false);
}

std::string format_polynomial_latex(const XPolynomial& p) { return factored(p, 'x', true); }

XPolynomial parse_polynomial(std::string_view text, char variable) { return Parser(text, variable).parse(); }

}  // namespace meshlab
