#include "maxitive/extrat.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace maxitive {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

ExtRat::ExtRat(int value) {
  if (value < 0) throw std::domain_error("ExtRat cannot hold a negative value");
  finite_ = value;
}

ExtRat ExtRat::fraction(const BigInt& numerator, const BigInt& denominator) {
  if (numerator < 0) throw std::domain_error("ExtRat numerator must be nonnegative");
  if (denominator <= 0) throw std::domain_error("ExtRat denominator must be positive");
  ExtRat r;
  r.finite_ = BigRational(numerator, denominator);
  return r;
}

ExtRat ExtRat::from_rational(BigRational value) {
  if (value < 0) throw std::domain_error("ExtRat cannot hold a negative value");
  ExtRat r;
  r.finite_ = std::move(value);
  return r;
}

ExtRat ExtRat::infinity() {
  ExtRat r;
  r.infinite_ = true;
  return r;
}

const BigRational& ExtRat::rational() const {
  if (infinite_) throw std::domain_error("ExtRat: rational() called on +inf");
  return finite_;
}

BigInt ExtRat::numerator() const { return boost::multiprecision::numerator(rational()); }

BigInt ExtRat::denominator() const { return boost::multiprecision::denominator(rational()); }

ExtRat ExtRat::operator+(const ExtRat& other) const {
  if (infinite_ || other.infinite_) return infinity();
  ExtRat r;
  r.finite_ = finite_ + other.finite_;
  return r;
}

ExtRat ExtRat::operator*(const ExtRat& other) const {
  // 0 * inf = 0 takes precedence over inf absorption.
  if (is_zero() || other.is_zero()) return ExtRat();
  if (infinite_ || other.infinite_) return infinity();
  ExtRat r;
  r.finite_ = finite_ * other.finite_;
  return r;
}

ExtRat ExtRat::operator/(const ExtRat& divisor) const {
  if (divisor.is_infinite() || divisor.is_zero())
    throw std::domain_error("ExtRat division requires a finite positive divisor");
  if (infinite_) return infinity();
  ExtRat r;
  r.finite_ = finite_ / divisor.finite_;
  return r;
}

bool ExtRat::operator==(const ExtRat& other) const noexcept {
  if (infinite_ != other.infinite_) return false;
  return infinite_ || finite_ == other.finite_;
}

std::strong_ordering ExtRat::operator<=>(const ExtRat& other) const noexcept {
  if (infinite_ && other.infinite_) return std::strong_ordering::equal;
  if (infinite_) return std::strong_ordering::greater;
  if (other.infinite_) return std::strong_ordering::less;
  if (finite_ < other.finite_) return std::strong_ordering::less;
  if (finite_ == other.finite_) return std::strong_ordering::equal;
  return std::strong_ordering::greater;
}

std::optional<ExtRat> ExtRat::parse(std::string_view text) {
  if (text == "inf") return infinity();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!all_digits(text)) return std::nullopt;
    ExtRat r;
    r.finite_ = BigInt(std::string(text));
    return r;
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  BigInt d{std::string(den)};
  if (d == 0) return std::nullopt;
  return fraction(BigInt(std::string(num)), d);
}

std::string ExtRat::str() const {
  if (infinite_) return "inf";
  return finite_.str();
}

}  // namespace maxitive
