#ifndef ISOADD_RAT_HPP
#define ISOADD_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "isoadd/errors.hpp"

namespace isoadd {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator; zero is uniquely 0/1. All arithmetic is exact — the library
/// has no floating point mode anywhere.
class Rat {
 public:
  Rat() : value_(0) {}
  Rat(int v) : value_(v) {}                 // NOLINT(google-explicit-constructor)
  Rat(long long v) : value_(v) {}           // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : value_(v) {}          // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);
  Rat(long long num, long long den) : Rat(Int(num), Int(den)) {}

  Int num() const { return boost::multiprecision::numerator(value_); }
  Int den() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return den() == 1; }
  bool is_negative() const { return value_ < 0; }

  /// max(|numerator|, denominator); the measure used to bound searches.
  Int height() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.value_ >= b.value_; }

  Rat squared() const { return *this * *this; }
  Rat abs() const { return is_negative() ? -*this : *this; }
  Rat reciprocal() const;

  /// "num/den", the "/den" omitted for integers; sign on the numerator.
  std::string str() const;

  /// Accepts an optional sign, digits, and an optional "/digits" tail.
  static Rat parse(std::string_view text);

 private:
  boost::multiprecision::cpp_rational value_;

  explicit Rat(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Exact integer square root if v is a perfect square.
std::optional<Int> perfect_square_root(const Int& v);

/// Exact non-negative square root of q when q is the square of a rational
/// (numerator and denominator both perfect squares in lowest terms);
/// std::nullopt otherwise, including for all negative inputs.
std::optional<Rat> sqrt_exact(const Rat& q);

}  // namespace isoadd

#endif  // ISOADD_RAT_HPP
