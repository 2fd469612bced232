#include "mwpx/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace mwpx {

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  // Try to expand the denominator to a power of ten.
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  int digits = twos > fives ? twos : fives;
  __int128 scaled = static_cast<__int128>(num_ < 0 ? -num_ : num_);
  for (int i = twos; i < digits; ++i) scaled *= 2;
  for (int i = fives; i < digits; ++i) scaled *= 5;
  std::string body;
  for (__int128 v = scaled; v > 0; v /= 10)
    body.insert(body.begin(), static_cast<char>('0' + int(v % 10)));
  while (static_cast<int>(body.size()) <= digits) body.insert(body.begin(), '0');
  body.insert(body.size() - digits, ".");
  if (num_ < 0) body.insert(body.begin(), '-');
  return body;
}

std::optional<Rational> Rational::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) return std::nullopt;

  auto read_digits = [&](std::size_t& pos) -> std::optional<std::int64_t> {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      return std::nullopt;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (v > (INT64_MAX - 9) / 10) return std::nullopt;
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  };

  auto intpart = read_digits(i);
  if (!intpart) return std::nullopt;

  if (i < text.size() && text[i] == '/') {
    std::size_t j = i + 1;
    auto den = read_digits(j);
    if (!den || *den == 0 || j != text.size()) return std::nullopt;
    Rational r(*intpart, *den);
    return neg ? -r : r;
  }

  if (i < text.size() && text[i] == '.') {
    std::size_t j = i + 1;
    std::size_t start = j;
    std::int64_t frac = 0, scale = 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      if (scale > INT64_MAX / 10) return std::nullopt;
      frac = frac * 10 + (text[j] - '0');
      scale *= 10;
      ++j;
    }
    if (j == start || j != text.size()) return std::nullopt;
    if (*intpart > (INT64_MAX - frac) / scale) return std::nullopt;
    Rational r(*intpart * scale + frac, scale);
    return neg ? -r : r;
  }

  if (i != text.size()) return std::nullopt;
  Rational r(*intpart);
  return neg ? -r : r;
}

}  // namespace mwpx
