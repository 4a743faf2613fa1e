#include "chhs/rational.hpp"

#include <numeric>

#include "chhs/errors.hpp"

namespace chhs {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::BadParameters, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const {
  if (is_infinite()) throw Error(ErrorKind::BadParameters, "floor of infinity");
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  if (is_infinite()) throw Error(ErrorKind::BadParameters, "ceil of infinity");
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) return Rational::infinity();
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (b.is_infinite()) throw Error(ErrorKind::BadParameters, "subtracting infinity");
  if (a.is_infinite()) return a;
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.num_ == 0 || b.num_ == 0) throw Error(ErrorKind::BadParameters, "0 * infinity");
    return Rational::infinity();
  }
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_infinite()) {
    if (a.is_infinite()) throw Error(ErrorKind::BadParameters, "infinity / infinity");
    return Rational(0);
  }
  if (b.num_ == 0) throw Error(ErrorKind::BadParameters, "division by zero");
  if (a.is_infinite()) return a;
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_infinite()) return "inf";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_display() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(std::stoll(std::string(text)));
    return Rational(std::stoll(std::string(text.substr(0, slash))), std::stoll(std::string(text.substr(slash + 1))));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
  }
}

}  // namespace chhs
