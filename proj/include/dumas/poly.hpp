#pragma once

#include <cstdint>
#include <cstdlib>
#include <charconv>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dumas/arith.hpp"

namespace dumas {

// A polynomial whose stated degree is not exact (trailing zero coefficient,
// or a parse that collapses to the zero polynomial).
class InvalidDegreeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Syntax error carrying the offending character offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Integer polynomial A0 + A1 x + ... + An x^n with An != 0.
class Polynomial {
public:
  explicit Polynomial(std::vector<std::int64_t> coefficients)
      : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty())
      throw std::invalid_argument("Polynomial: empty coefficient list");
    if (coeffs_.back() == 0)
      throw InvalidDegreeError("Polynomial: leading coefficient is zero");
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  std::int64_t operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  std::span<const std::int64_t> coefficients() const { return coeffs_; }

  std::int64_t constant_term() const { return coeffs_.front(); }
  std::int64_t leading_coefficient() const { return coeffs_.back(); }

  std::int64_t height() const {
    std::uint64_t h = 0;
    for (const std::int64_t c : coeffs_) h = std::max(h, abs_u64(c));
    return static_cast<std::int64_t>(h);
  }

  std::int64_t evaluate(std::int64_t x) const {
    __int128 acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * x + coeffs_[i];
      if (acc > INT64_MAX || acc < INT64_MIN)
        throw std::overflow_error("Polynomial::evaluate: value out of range");
    }
    return static_cast<std::int64_t>(acc);
  }

  bool operator==(const Polynomial&) const = default;

private:
  std::vector<std::int64_t> coeffs_;
};

// Coefficient reversal An + ... + A0 x^n; needs A0 != 0 to preserve degree.
inline Polynomial reverse(const Polynomial& f) {
  if (f.constant_term() == 0)
    throw std::invalid_argument("reverse: constant term is zero");
  std::vector<std::int64_t> coeffs(f.coefficients().rbegin(),
                                   f.coefficients().rend());
  return Polynomial(std::move(coeffs));
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  std::vector<std::int64_t> out(
      static_cast<std::size_t>(a.degree() + b.degree()) + 1, 0);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) {
      const __int128 term =
          static_cast<__int128>(a[i]) * b[j] + out[static_cast<std::size_t>(i + j)];
      if (term > INT64_MAX || term < INT64_MIN)
        throw std::overflow_error("multiply: coefficient out of range");
      out[static_cast<std::size_t>(i + j)] = static_cast<std::int64_t>(term);
    }
  return Polynomial(std::move(out));
}

namespace detail {

inline constexpr int kMaxParsedDegree = 512;

inline void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

inline std::int64_t parse_integer(std::string_view text, std::size_t& pos,
                                  bool allow_sign) {
  const std::size_t start = pos;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  if (!allow_sign && first < last && (*first == '+' || *first == '-'))
    throw ParseError("expected unsigned integer", start);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError("integer literal out of 64-bit range", start);
  if (ec != std::errc() || ptr == first)
    throw ParseError("expected integer", start);
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

inline Polynomial parse_coefficient_list(std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t pos = 0;
  while (true) {
    skip_spaces(text, pos);
    coeffs.push_back(parse_integer(text, pos, /*allow_sign=*/true));
    skip_spaces(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  if (coeffs.back() == 0)
    throw InvalidDegreeError("parse_polynomial: trailing zero coefficient");
  return Polynomial(std::move(coeffs));
}

// Sum-of-terms grammar: [sign] term (('+'|'-') term)*, where a term is
// INT ['*'] ['x' ['^' INT]] or 'x' ['^' INT]. No parentheses.
inline Polynomial parse_expression(std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t pos = 0;
  bool first = true;
  skip_spaces(text, pos);
  if (pos == text.size()) throw ParseError("empty input", pos);
  while (pos < text.size()) {
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_spaces(text, pos);
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }

    std::int64_t coefficient = 1;
    bool have_coefficient = false;
    if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      coefficient = parse_integer(text, pos, /*allow_sign=*/false);
      have_coefficient = true;
      skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_spaces(text, pos);
        if (pos == text.size() || text[pos] != 'x')
          throw ParseError("expected 'x' after '*'", pos);
      }
    }

    std::int64_t exponent = 0;
    if (pos < text.size() && text[pos] == 'x') {
      ++pos;
      exponent = 1;
      skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_spaces(text, pos);
        const std::size_t at = pos;
        exponent = parse_integer(text, pos, /*allow_sign=*/false);
        if (exponent < 0 || exponent > detail::kMaxParsedDegree)
          throw ParseError("exponent out of range", at);
      }
    } else if (!have_coefficient) {
      throw ParseError("expected term", pos);
    }

    if (coeffs.size() <= static_cast<std::size_t>(exponent))
      coeffs.resize(static_cast<std::size_t>(exponent) + 1, 0);
    auto& slot = coeffs[static_cast<std::size_t>(exponent)];
    if (__builtin_add_overflow(slot, sign * coefficient, &slot))
      throw ParseError("coefficient out of 64-bit range", pos);
    skip_spaces(text, pos);
    first = false;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty())
    throw InvalidDegreeError("parse_polynomial: zero polynomial");
  return Polynomial(std::move(coeffs));
}

}  // namespace detail

// Accepts either a comma-separated coefficient list "A0,A1,...,An" or an
// expression such as "4x^2 + 4x + 2"; the presence of 'x' selects the form.
inline Polynomial parse_polynomial(std::string_view text) {
  if (text.find('x') != std::string_view::npos)
    return detail::parse_expression(text);
  return detail::parse_coefficient_list(text);
}

// Canonical rendering, highest power first; round-trips through
// parse_polynomial.
inline std::string format_polynomial(const Polynomial& f) {
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const std::int64_t c = f[i];
    if (c == 0 && f.degree() > 0) continue;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::uint64_t magnitude = abs_u64(c);
    if (magnitude != 1 || i == 0) out += std::to_string(magnitude);
    if (i >= 1) {
      out += 'x';
      if (i >= 2) {
        out += '^';
        out += std::to_string(i);
      }
    }
  }
  return out;
}

}  // namespace dumas
