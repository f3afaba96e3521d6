#include "circbasis/dyadic.hpp"

#include "circbasis/gf2.hpp"

#include <algorithm>

namespace circbasis {

Dyadic::Dyadic(BigInt numerator, unsigned exponent) : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const unsigned tz = std::min<unsigned>(static_cast<unsigned>(boost::multiprecision::lsb(abs(num_))), exp_);
  if (tz > 0) {
    num_ >>= tz;
    exp_ -= tz;
  }
}

Dyadic Dyadic::scaled(int k) const {
  if (k >= 0) {
    if (static_cast<unsigned>(k) <= exp_) return Dyadic(num_, exp_ - static_cast<unsigned>(k));
    return Dyadic(BigInt(num_ << (static_cast<unsigned>(k) - exp_)), 0);
  }
  return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (o.exp_ == exp_) {
    num_ += o.num_;
  } else if (o.exp_ > exp_) {
    num_ <<= (o.exp_ - exp_);
    num_ += o.num_;
    exp_ = o.exp_;
  } else {
    num_ += BigInt(o.num_ << (exp_ - o.exp_));
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  num_ *= o.num_;
  exp_ += o.exp_;
  normalize();
  return *this;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  const BigInt lhs = a.num_ << (e - a.exp_);
  const BigInt rhs = b.num_ << (e - b.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

std::string Dyadic::to_fraction_string() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/" + BigInt(BigInt(1) << exp_).str();
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

FunctionVector::FunctionVector(int dim) : dim_(dim) {
  check_dimension(dim);
  if (dim > 24) throw InvalidDimension("function vectors are limited to D <= 24");
  values_.resize(std::size_t{1} << dim);
}

FunctionVector FunctionVector::point(int dim, std::uint64_t x) {
  FunctionVector f(dim);
  f[x] = 1;
  return f;
}

FunctionVector FunctionVector::indicator(int dim, const std::vector<std::uint64_t>& points) {
  FunctionVector f(dim);
  for (std::uint64_t p : points) f[p] = 1;
  return f;
}

FunctionVector& FunctionVector::operator+=(const FunctionVector& o) {
  if (o.dim_ != dim_) throw DimensionMismatch("function vector dimension mismatch");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

}  // namespace circbasis
