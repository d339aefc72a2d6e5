#include "ppattach/rational.hpp"

#include <stdexcept>

namespace ppattach {
namespace {

Rational::Int gcd(Rational::Int a, Rational::Int b) {
  while (b != 0) {
    const Rational::Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  const Int g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

std::optional<Rational> Rational::multiply(const Rational& a, const Rational& b) {
  const Int g1 = gcd(a.num_, b.den_);
  const Int g2 = gcd(b.num_, a.den_);
  const Int an = g1 ? a.num_ / g1 : a.num_;
  const Int bd = g1 ? b.den_ / g1 : b.den_;
  const Int bn = g2 ? b.num_ / g2 : b.num_;
  const Int ad = g2 ? a.den_ / g2 : a.den_;
  Int num = 0;
  Int den = 0;
  if (__builtin_mul_overflow(an, bn, &num) || __builtin_mul_overflow(ad, bd, &den)) {
    return std::nullopt;
  }
  return Rational(num, den);
}

std::optional<int> Rational::compare(const Rational& a, const Rational& b) {
  Int lhs = 0;
  Int rhs = 0;
  if (__builtin_mul_overflow(a.num_, b.den_, &lhs) || __builtin_mul_overflow(b.num_, a.den_, &rhs)) {
    return std::nullopt;
  }
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace ppattach
