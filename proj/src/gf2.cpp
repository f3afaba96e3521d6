#include "circbasis/gf2.hpp"

#include <algorithm>
#include <bit>

namespace circbasis {

namespace {

void require_same_dim(int a, int b) {
  if (a != b) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Image of x under the Gram matrix: neighbours on the path 1 - ... - D.
std::uint64_t gram(std::uint64_t x, int dim) { return ((x << 1) ^ (x >> 1)) & dim_mask(dim); }

}  // namespace

void check_dimension(int dim) {
  if (dim < 2 || dim > kMaxDim || dim % 2 != 0) {
    throw InvalidDimension("dimension must be even and in [2, " + std::to_string(kMaxDim) +
                           "], got " + std::to_string(dim));
  }
}

CircVector::CircVector(int dim, std::uint64_t bits) : dim_(dim), bits_(bits) {
  check_dimension(dim);
  if ((bits & ~dim_mask(dim)) != 0) throw std::invalid_argument("vector bits exceed dimension");
}

CircVector CircVector::basis(int dim, int i) {
  check_dimension(dim);
  if (i < 1 || i > dim + 1) throw std::out_of_range("basis index out of range");
  if (i == dim + 1) return CircVector(dim, dim_mask(dim));
  return CircVector(dim, std::uint64_t{1} << (i - 1));
}

std::vector<int> CircVector::support() const {
  std::vector<int> out;
  for (int i = 1; i <= dim_; ++i) {
    if (coord(i)) out.push_back(i);
  }
  return out;
}

std::string CircVector::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : support()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

CircVector CircVector::rotated(int shift) const {
  const int n = dim_ + 1;
  std::vector<int> image;
  for (int i : support()) image.push_back(((i - 1 + shift) % n + n) % n + 1);
  return vec_from_subset(dim_, image);
}

CircVector& CircVector::operator+=(const CircVector& other) {
  require_same_dim(dim_, other.dim_);
  bits_ ^= other.bits_;
  return *this;
}

CircVector vec_from_subset(int dim, std::span<const int> subset) {
  check_dimension(dim);
  std::uint64_t bits = 0;
  for (int s : subset) {
    if (s < 1 || s > dim + 1) throw std::out_of_range("subset index out of [1, D+1]");
    bits ^= (s == dim + 1) ? dim_mask(dim) : (std::uint64_t{1} << (s - 1));
  }
  return CircVector(dim, bits);
}

CircVector vec_from_subset(int dim, std::initializer_list<int> subset) {
  return vec_from_subset(dim, std::span<const int>(subset.begin(), subset.size()));
}

CircVector add(const CircVector& x, const CircVector& y) { return x + y; }

int form(const CircVector& x, const CircVector& y) {
  require_same_dim(x.dim(), y.dim());
  return std::popcount(x.bits() & gram(y.bits(), y.dim())) & 1;
}

Gf2Subspace::Gf2Subspace(int dim) : dim_(dim) { check_dimension(dim); }

void Gf2Subspace::insert(std::uint64_t v) {
  for (std::uint64_t r : rows_) {
    if (v & (r & -r)) v ^= r;
  }
  if (v == 0) return;
  const std::uint64_t pivot = v & -v;
  for (std::uint64_t& r : rows_) {
    if (r & pivot) r ^= v;
  }
  auto pos = std::find_if(rows_.begin(), rows_.end(),
                          [pivot](std::uint64_t r) { return (r & -r) > pivot; });
  rows_.insert(pos, v);
}

Gf2Subspace Gf2Subspace::span(int dim, std::span<const CircVector> vectors) {
  Gf2Subspace s(dim);
  for (const auto& v : vectors) {
    require_same_dim(dim, v.dim());
    s.insert(v.bits());
  }
  return s;
}

Gf2Subspace Gf2Subspace::whole(int dim) {
  Gf2Subspace s(dim);
  for (int i = 0; i < dim; ++i) s.rows_.push_back(std::uint64_t{1} << i);
  return s;
}

std::vector<CircVector> Gf2Subspace::basis() const {
  std::vector<CircVector> out;
  out.reserve(rows_.size());
  for (std::uint64_t r : rows_) out.emplace_back(dim_, r);
  return out;
}

bool Gf2Subspace::contains(const CircVector& x) const {
  require_same_dim(dim_, x.dim());
  std::uint64_t v = x.bits();
  for (std::uint64_t r : rows_) {
    if (v & (r & -r)) v ^= r;
  }
  return v == 0;
}

Gf2Subspace Gf2Subspace::perp() const {
  // Null space of the matrix whose rows are the Gram images of our rows.
  Gf2Subspace constraints(dim_);
  for (std::uint64_t r : rows_) constraints.insert(gram(r, dim_));
  std::uint64_t pivots = 0;
  for (std::uint64_t r : constraints.rows_) pivots |= r & -r;
  Gf2Subspace out(dim_);
  for (int f = 0; f < dim_; ++f) {
    const std::uint64_t free_bit = std::uint64_t{1} << f;
    if (pivots & free_bit) continue;
    std::uint64_t v = free_bit;
    for (std::uint64_t r : constraints.rows_) {
      if (r & free_bit) v |= r & -r;
    }
    out.insert(v);
  }
  return out;
}

bool Gf2Subspace::is_isotropic() const {
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    for (std::size_t b = a + 1; b < rows_.size(); ++b) {
      if (std::popcount(rows_[a] & gram(rows_[b], dim_)) & 1) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> Gf2Subspace::points() const {
  std::vector<std::uint64_t> out{0};
  out.reserve(std::size_t{1} << rows_.size());
  for (std::uint64_t r : rows_) {
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) out.push_back(out[k] ^ r);
  }
  return out;
}

}  // namespace circbasis
