#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cayley {

/// Exact rational on 64-bit numerator/denominator, always normalized
/// (gcd 1, positive denominator). Intermediate products go through
/// 128-bit integers, so the small coupling/energy values this library
/// works with never overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  Rational operator-() const { return Rational(-num_, den_, already_normalized{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Canonical "p/q" form; integers print without the "/q" part.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "-p" or "p/q". Decimal notation is rejected: exactness
  /// is part of the contract, so "0.5" must be written "1/2".
  static Rational parse(const std::string& text);

 private:
  using i128 = __int128;
  struct already_normalized {};
  Rational(std::int64_t num, std::int64_t den, already_normalized)
      : num_(num), den_(den) {}

  static Rational from_i128(i128 num, i128 den) {
    if (den < 0) { num = -num; den = -den; }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      throw std::overflow_error("Rational: value out of 64-bit range");
    return Rational(static_cast<std::int64_t>(num),
                    static_cast<std::int64_t>(den), already_normalized{});
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  if (text.find('.') != std::string::npos)
    throw std::invalid_argument("Rational: decimal notation rejected, use p/q: " + text);
  auto slash = text.find('/');
  auto to_i64 = [&](const std::string& part) {
    std::size_t pos = 0;
    std::int64_t v;
    try {
      v = std::stoll(part, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("Rational: bad integer \"" + part + "\"");
    }
    if (pos != part.size())
      throw std::invalid_argument("Rational: trailing characters in \"" + part + "\"");
    return v;
  };
  if (slash == std::string::npos) return Rational(to_i64(text));
  return Rational(to_i64(text.substr(0, slash)), to_i64(text.substr(slash + 1)));
}

}  // namespace cayley
