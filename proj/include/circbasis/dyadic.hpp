// Exact dyadic rationals: numerator / 2^exponent with an arbitrary-precision
// numerator.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace circbasis {

using BigInt = boost::multiprecision::cpp_int;

class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long value) : num_(value) {}  // NOLINT: implicit from integers
  Dyadic(BigInt value) : num_(std::move(value)) {}  // NOLINT
  // numerator / 2^exponent, normalized.
  Dyadic(BigInt numerator, unsigned exponent);

  // 2^-k
  static Dyadic inverse_power_of_two(unsigned k) { return Dyadic(BigInt(1), k); }

  // Normalized: numerator odd, or zero with exponent 0.
  const BigInt& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return exp_ == 0; }
  int sign() const { return num_.sign(); }

  // Multiply by 2^k (k may be negative).
  Dyadic scaled(int k) const;

  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);
  Dyadic operator-() const;
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  // "p" for integers, "p/2^t" otherwise.
  std::string to_string() const;
  // "p" for integers, "p/q" with q = 2^t written out otherwise.
  std::string to_fraction_string() const;

 private:
  void normalize();

  BigInt num_;
  unsigned exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

// A function V_D -> dyadic rationals, indexed by the bitmask of the point.
class FunctionVector {
 public:
  explicit FunctionVector(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }
  Dyadic& operator[](std::uint64_t x) { return values_[x]; }
  const Dyadic& operator[](std::uint64_t x) const { return values_[x]; }
  const std::vector<Dyadic>& values() const { return values_; }

  // Point mass at x.
  static FunctionVector point(int dim, std::uint64_t x);
  // Indicator of a set of points.
  static FunctionVector indicator(int dim, const std::vector<std::uint64_t>& points);

  FunctionVector& operator+=(const FunctionVector& o);
  friend bool operator==(const FunctionVector&, const FunctionVector&) = default;

 private:
  int dim_;
  std::vector<Dyadic> values_;
};

}  // namespace circbasis
