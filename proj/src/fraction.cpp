#include "dichrom/fraction.hpp"

#include <ostream>
#include <stdexcept>

namespace dichrom {

namespace {

BigInt parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

}  // namespace

Fraction::Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("fraction with zero denominator");
  normalize();
}

void Fraction::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction Fraction::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text), BigInt(1));
  return Fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigInt Fraction::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_.sign() < 0 && q * den_ != num_) q -= 1;
  return q;
}

BigInt Fraction::ceil() const {
  BigInt q = num_ / den_;
  if (num_.sign() > 0 && q * den_ != num_) q += 1;
  return q;
}

std::string Fraction::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Fraction& Fraction::operator+=(const Fraction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Fraction& Fraction::operator*=(const Fraction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero fraction");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

}  // namespace dichrom
