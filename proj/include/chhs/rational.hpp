#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace chhs {

/// Exact non-negative-friendly rational with a distinguished +infinity.
/// Every metric constant (delta, lambda, K, C) is reported as one of these;
/// no floating point enters a metric result.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design of arithmetic use
  Rational(std::int64_t num, std::int64_t den);

  static constexpr Rational infinity() {
    Rational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }
  static Rational half(std::int64_t twice) { return Rational(twice, 2); }

  bool is_infinite() const noexcept { return den_ == 0; }
  bool is_finite() const noexcept { return den_ != 0; }
  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Largest integer <= value; infinite values are not allowed.
  std::int64_t floor() const;
  std::int64_t ceil() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  /// "p/q" with q >= 1, or "inf".
  std::string to_string() const;
  /// Human-oriented: "3", "1/2", "inf".
  std::string to_display() const;
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace chhs
