// Linear algebra over F2 for the symplectic space V_D with a circular basis.
//
// V_D has dimension D (even, 2 <= D <= kMaxDim). The circular basis is
// e_1, ..., e_{D+1} with e_{D+1} = e_1 + ... + e_D; vectors are stored as
// bitmasks over the linear basis e_1, ..., e_D (bit i-1 <-> e_i).
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace circbasis {

inline constexpr int kMaxDim = 62;

class InvalidDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal construction fails one of its asserted
// postconditions. Seeing one means a mathematical claim the code relies on
// did not hold, not that the caller did something wrong.
class ConstructionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Throws InvalidDimension unless D is even and 2 <= D <= kMaxDim.
void check_dimension(int dim);

class CircVector {
 public:
  CircVector() = default;
  // `bits` must only use the low `dim` bits.
  CircVector(int dim, std::uint64_t bits);

  static CircVector zero(int dim) { return CircVector(dim, 0); }
  // The circular basis vector e_i, i in [1, D+1].
  static CircVector basis(int dim, int i);

  int dim() const { return dim_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  // Coordinate at e_i for i in [1, D].
  bool coord(int i) const { return (bits_ >> (i - 1)) & 1u; }
  // Indices i in [1, D] with coordinate 1.
  std::vector<int> support() const;
  // "{1,3}"; the zero vector prints as "{}".
  std::string to_string() const;
  // Image under the relabelling e_i -> e_{i+shift} (indices mod D+1).
  CircVector rotated(int shift) const;

  CircVector& operator+=(const CircVector& other);
  friend CircVector operator+(CircVector a, const CircVector& b) { return a += b; }
  friend bool operator==(const CircVector&, const CircVector&) = default;
  friend auto operator<=>(const CircVector&, const CircVector&) = default;

 private:
  int dim_ = 2;
  std::uint64_t bits_ = 0;
};

inline std::uint64_t dim_mask(int dim) { return (std::uint64_t{1} << dim) - 1; }

// e_S = sum of e_s over s in S, S a subset of [1, D+1]. Repeated indices
// cancel in pairs.
CircVector vec_from_subset(int dim, std::span<const int> subset);
CircVector vec_from_subset(int dim, std::initializer_list<int> subset);

CircVector add(const CircVector& x, const CircVector& y);

// The symplectic form. On e_1..e_D the Gram matrix is the adjacency matrix of
// the path 1 - 2 - ... - D.
int form(const CircVector& x, const CircVector& y);

class Gf2Subspace {
 public:
  explicit Gf2Subspace(int dim = 2);

  static Gf2Subspace span(int dim, std::span<const CircVector> vectors);
  static Gf2Subspace whole(int dim);

  int ambient_dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Reduced row-echelon rows; pivot of a row is its lowest set bit, pivots
  // strictly increase and are cleared in every other row.
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  std::vector<CircVector> basis() const;

  bool contains(const CircVector& x) const;
  Gf2Subspace perp() const;
  bool is_isotropic() const;
  // All 2^rank elements, as raw bitmasks.
  std::vector<std::uint64_t> points() const;

  friend bool operator==(const Gf2Subspace&, const Gf2Subspace&) = default;

 private:
  void insert(std::uint64_t v);

  int dim_;
  std::vector<std::uint64_t> rows_;
};

inline Gf2Subspace span(int dim, std::span<const CircVector> vectors) {
  return Gf2Subspace::span(dim, vectors);
}
inline bool contains(const Gf2Subspace& s, const CircVector& x) { return s.contains(x); }
inline Gf2Subspace perp(const Gf2Subspace& s) { return s.perp(); }
inline bool is_isotropic(const Gf2Subspace& s) { return s.is_isotropic(); }

}  // namespace circbasis
