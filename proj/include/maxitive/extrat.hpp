#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace maxitive {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact nonnegative rational extended with +inf.
///
/// Finite values are kept in lowest terms with a positive denominator.
/// The total order places +inf strictly above every rational. Arithmetic
/// follows the measure-theoretic conventions: x + inf = inf, and
/// 0 * inf = inf * 0 = 0. Nothing is ever rounded.
class ExtRat {
public:
  ExtRat() = default;
  ExtRat(unsigned value) : finite_(value) {}
  ExtRat(unsigned long value) : finite_(value) {}
  ExtRat(unsigned long long value) : finite_(value) {}
  ExtRat(int value);

  /// numerator/denominator, reduced on construction. Throws
  /// std::domain_error on a negative numerator or nonpositive denominator.
  static ExtRat fraction(const BigInt& numerator, const BigInt& denominator);
  static ExtRat from_rational(BigRational value);
  static ExtRat infinity();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  bool is_zero() const noexcept { return !infinite_ && finite_.is_zero(); }
  bool is_positive() const noexcept { return infinite_ || !finite_.is_zero(); }

  /// Finite value in lowest terms. Precondition: is_finite().
  const BigRational& rational() const;
  BigInt numerator() const;
  BigInt denominator() const;

  ExtRat operator+(const ExtRat& other) const;
  ExtRat operator*(const ExtRat& other) const;

  /// Exact division. The divisor must be finite and positive.
  ExtRat operator/(const ExtRat& divisor) const;

  bool operator==(const ExtRat& other) const noexcept;
  std::strong_ordering operator<=>(const ExtRat& other) const noexcept;

  /// Accepts exactly the tokens "p/q", "p" (nonnegative integers, q > 0)
  /// and "inf". Anything else yields nullopt.
  static std::optional<ExtRat> parse(std::string_view text);

  /// Renders the same token grammar parse() accepts.
  std::string str() const;

private:
  BigRational finite_{};  // zero whenever infinite_
  bool infinite_ = false;
};

inline const ExtRat& max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

}  // namespace maxitive
