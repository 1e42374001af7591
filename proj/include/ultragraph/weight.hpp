#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "ultragraph/error.hpp"

namespace ultragraph {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative rational edge weight. Equality and ordering are exact.
class Weight {
 public:
  Weight() = default;
  Weight(std::int64_t value) : Weight(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Weight(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw Error(ErrorCode::InvalidWeight, "zero denominator");
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    value_ = Rational(numerator, denominator);
    check();
  }
  explicit Weight(Rational value) : value_(std::move(value)) { check(); }

  /// Parses a decimal literal (`3`, `0.25`, `1.5e-3`) or a fraction `p/q`.
  static Weight parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_zero() const { return value_ == 0; }
  double to_double() const { return value_.convert_to<double>(); }

  /// True when the value has a finite decimal expansion.
  bool is_terminating_decimal() const;

  /// Shortest exact decimal if terminating, otherwise `p/q`.
  std::string to_string() const;

  /// Decimal rounded to `digits` fractional digits with trailing zeros removed.
  std::string to_decimal(int digits) const;

  friend Weight operator+(const Weight& a, const Weight& b) { return Weight(a.value_ + b.value_); }
  friend Weight operator*(const Weight& a, const Weight& b) { return Weight(a.value_ * b.value_); }
  friend Weight operator/(const Weight& a, std::int64_t d) { return Weight(a.value_ / d); }

  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.small_ && b.small_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.small_ && b.small_) {
      if (a.den_ == b.den_) return a.num_ <=> b.num_;
      return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

 private:
  void check() {
    if (value_ < 0) throw Error(ErrorCode::NegativeWeight, value_.str());
    const auto& n = boost::multiprecision::numerator(value_);
    const auto& d = boost::multiprecision::denominator(value_);
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    small_ = n <= kMax && d <= kMax;
    if (small_) {
      num_ = n.convert_to<std::int64_t>();
      den_ = d.convert_to<std::int64_t>();
    }
  }

  Rational value_{0};
  // Reduced form cached when both parts fit a machine word.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool small_ = true;
};

namespace detail {

inline BigInt pow10(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

/// Decimal digit string to integer. Leading zeros are stripped because the
/// BigInt string constructor reads them as an octal prefix.
inline BigInt parse_digits(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(digits.substr(first)));
}

inline std::string place_point(const BigInt& scaled, unsigned frac_digits) {
  std::string digits = scaled.str();
  if (frac_digits == 0) return digits;
  if (digits.size() <= frac_digits) digits.insert(0, frac_digits - digits.size() + 1, '0');
  std::string out = digits.substr(0, digits.size() - frac_digits) + "." +
                    digits.substr(digits.size() - frac_digits);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

}  // namespace detail

inline Weight Weight::parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::InvalidWeight, std::string(text)); };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) throw fail();
    BigInt d = detail::parse_digits(den);
    if (d == 0) throw fail();
    value = Rational(detail::parse_digits(num), d);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
        exp_negative = exp.front() == '-';
        exp.remove_prefix(1);
      }
      if (!detail::all_digits(exp) || exp.size() > 6) throw fail();
      exponent = std::stol(std::string(exp));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string_view whole = s, frac;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      whole = s.substr(0, dot);
      frac = s.substr(dot + 1);
    }
    if (whole.empty() && frac.empty()) throw fail();
    if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)))
      throw fail();
    BigInt mantissa = detail::parse_digits(std::string(whole) + std::string(frac));
    exponent -= static_cast<long>(frac.size());
    if (exponent >= 0)
      value = Rational(mantissa * detail::pow10(static_cast<unsigned>(exponent)));
    else
      value = Rational(mantissa, detail::pow10(static_cast<unsigned>(-exponent)));
  }
  if (negative && value != 0) throw Error(ErrorCode::NegativeWeight, std::string(text));
  return Weight(value);
}

inline bool Weight::is_terminating_decimal() const {
  BigInt d = denominator();
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

inline std::string Weight::to_string() const {
  BigInt num = numerator(), den = denominator();
  if (den == 1) return num.str();
  if (!is_terminating_decimal()) return num.str() + "/" + den.str();
  unsigned twos = 0, fives = 0;
  for (BigInt d = den; d % 2 == 0; d /= 2) ++twos;
  for (BigInt d = den; d % 5 == 0; d /= 5) ++fives;
  unsigned k = std::max(twos, fives);
  return detail::place_point(num * detail::pow10(k) / den, k);
}

inline std::string Weight::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  BigInt scale = detail::pow10(static_cast<unsigned>(digits));
  BigInt num = numerator() * scale, den = denominator();
  BigInt q = num / den, r = num % den;
  if (2 * r >= den) ++q;
  return detail::place_point(q, static_cast<unsigned>(digits));
}

}  // namespace ultragraph
