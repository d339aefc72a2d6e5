#pragma once

#include <optional>

namespace ppattach {

/// Non-negative rational with 128-bit parts. Arithmetic returns nullopt on
/// overflow so callers can fall back to floating point.
class Rational {
 public:
  using Int = unsigned __int128;

  Rational() = default;
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  long double value() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  static std::optional<Rational> multiply(const Rational& a, const Rational& b);
  /// -1, 0, 1; nullopt on overflow.
  static std::optional<int> compare(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace ppattach
