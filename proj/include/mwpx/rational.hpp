#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace mwpx {

// Exact rational over int64 with gcd normalization. Ground truths and
// extracted answers are compared through this type so that "8", "8.0" and
// "16/2" are one value and no float drift enters grading.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }
  explicit Rational(std::int64_t whole) : num_(whole), den_(1) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const { return Rational(-num_, den_); }

  Rational operator+(const Rational& o) const {
    return Rational(checked(num_, o.den_) + checked(o.num_, den_),
                    checked(den_, o.den_));
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return Rational(checked(num_, o.num_), checked(den_, o.den_));
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(checked(num_, o.den_), checked(den_, o.num_));
  }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ <
           static_cast<__int128>(o.num_) * den_;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // Canonical text form: exact decimal when the denominator is 2^a*5^b,
  // otherwise "num/den".
  std::string to_string() const;

  // Parses "18", "-4.20", "1234.5", "3/4". No separators or symbols; use
  // extract::parse_numeric for free-form text.
  static std::optional<Rational> parse(const std::string& text);

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  static std::int64_t checked(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN)
      throw std::overflow_error("Rational: overflow");
    return static_cast<std::int64_t>(r);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mwpx
