#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cohsys {

// Exact fraction over 64-bit integers, always reduced, denominator > 0.
// Every slope and bound comparison in the engine goes through this type:
// the inequalities being tested are sharp, so floating point is banned.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value), den_(1) {}
  Rational(long long num, long long den) { *this = make(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(w(a.num_) * b.den_ + w(b.num_) * a.den_, w(a.den_) * b.den_);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(w(a.num_) * b.num_, w(a.den_) * b.den_);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make(w(a.num_) * b.den_, w(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    // reduced form is canonical
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = w(a.num_) * b.den_;
    __int128 rhs = w(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  static __int128 w(long long x) { return static_cast<__int128>(x); }

  static unsigned __int128 uabs(__int128 x) {
    return x < 0 ? static_cast<unsigned __int128>(-x)
                 : static_cast<unsigned __int128>(x);
  }

  static Rational make(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    unsigned __int128 a = uabs(num), b = uabs(den);
    while (b != 0) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= static_cast<__int128>(a);
      den /= static_cast<__int128>(a);
    }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace cohsys
