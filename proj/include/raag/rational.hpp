// raagkit — computing in right-angled Artin groups and their extension graphs.
// Exact rational arithmetic for translation lengths.  All length computations
// in the library go through this type; no floating point is involved.
//
// Distributed under the MIT license; see LICENSE at the repository root.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace raag {

// A reduced fraction num/den with den > 0.  Comparisons and arithmetic use
// 128-bit intermediates, so values within the library's working range (graph
// distances divided by small powers) are exact and overflow-free.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    reduce();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ <
           static_cast<__int128>(o.num_) * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  Rational operator+(const Rational& o) const {
    return make(static_cast<__int128>(num_) * o.den_ +
                    static_cast<__int128>(o.num_) * den_,
                static_cast<__int128>(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return make(static_cast<__int128>(num_) * o.den_ -
                    static_cast<__int128>(o.num_) * den_,
                static_cast<__int128>(den_) * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return make(static_cast<__int128>(num_) * o.num_,
                static_cast<__int128>(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return make(static_cast<__int128>(num_) * o.den_,
                static_cast<__int128>(den_) * o.num_);
  }

  bool is_integer() const { return den_ == 1; }

  // "21/2", or just "21" when the denominator is 1.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  static Rational make(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rational r;
    r.num_ = checked_narrow(n);
    r.den_ = checked_narrow(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  static long long checked_narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("Rational: value out of 64-bit range");
    return static_cast<long long>(v);
  }

  void reduce() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (den_ == 0) den_ = 1;  // unreachable after ctor check; keeps invariant
  }

  long long num_;
  long long den_;
};

}  // namespace raag
