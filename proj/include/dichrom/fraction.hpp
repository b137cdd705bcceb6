#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dichrom {

using BigInt = boost::multiprecision::cpp_int;

/// Exact signed rational, always stored in lowest terms with a
/// positive denominator. Colouring parameters are ratios k/d of this type.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(BigInt num, BigInt den);
  Fraction(std::int64_t num, std::int64_t den) : Fraction(BigInt(num), BigInt(den)) {}

  /// Parses "k/d" or "k".
  static Fraction parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;

  /// "k/d", or "k" when the denominator is 1.
  std::string str() const;

  Fraction operator-() const { return Fraction(-num_, den_, Reduced{}); }
  Fraction& operator+=(const Fraction& rhs);
  Fraction& operator-=(const Fraction& rhs);
  Fraction& operator*=(const Fraction& rhs);
  Fraction& operator/=(const Fraction& rhs);

  friend Fraction operator+(Fraction lhs, const Fraction& rhs) { return lhs += rhs; }
  friend Fraction operator-(Fraction lhs, const Fraction& rhs) { return lhs -= rhs; }
  friend Fraction operator*(Fraction lhs, const Fraction& rhs) { return lhs *= rhs; }
  friend Fraction operator/(Fraction lhs, const Fraction& rhs) { return lhs /= rhs; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  struct Reduced {};
  Fraction(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace dichrom
