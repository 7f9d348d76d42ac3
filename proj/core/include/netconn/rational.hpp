#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "netconn/error.hpp"

namespace netconn {

/// Non-negative exact fraction, always stored reduced.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::uint64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(std::uint64_t num, std::uint64_t den);

  constexpr std::uint64_t num() const noexcept { return num_; }
  constexpr std::uint64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p" when integral, "p/q" otherwise.
  std::string to_string() const;
  /// Fixed-point decimal rendering with `digits` fractional digits.
  std::string to_decimal(int digits = 4) const;

  /// Accepts "5", "2.5", "11/6".
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num_) * b.den_ <
           static_cast<unsigned __int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace netconn
