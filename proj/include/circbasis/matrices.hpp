// Change-of-basis matrices between point masses and the indicator basis
// {box<B>}, the Fourier transform in both bases, and checkers for the
// structural identities they satisfy.
//
// All matrices are indexed by family index (PhiFamily::pattern order); use
// PhiFamily::linext() to walk them in a triangular order.
#pragma once

#include "circbasis/dyadic.hpp"
#include "circbasis/phi_family.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace circbasis {

// d_A^{A'} = 1 iff eps(A') lies in <A>.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(const PhiFamily& family);

  int size() const { return static_cast<int>(rows_.size()); }
  bool at(int row, int col) const { return rows_[row].test(col); }
  const boost::dynamic_bitset<>& row(int r) const { return rows_[r]; }
  // Rows A with d_A^{col} = 1.
  const std::vector<int>& column(int col) const { return columns_[col]; }
  std::size_t nonzeros() const;

 private:
  std::vector<boost::dynamic_bitset<>> rows_;
  std::vector<std::vector<int>> columns_;
};

template <class T>
class SparseMatrix {
 public:
  using Entry = std::pair<int, T>;

  explicit SparseMatrix(int n = 0) : rows_(n) {}

  int size() const { return static_cast<int>(rows_.size()); }
  // Entries sorted by column.
  const std::vector<Entry>& row(int r) const { return rows_[r]; }
  void set_row(int r, std::vector<Entry> entries) { rows_[r] = std::move(entries); }
  T at(int r, int c) const {
    for (const auto& [col, v] : rows_[r]) {
      if (col == c) return v;
    }
    return T{};
  }
  std::size_t nonzeros() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.size();
    return total;
  }

 private:
  std::vector<std::vector<Entry>> rows_;
};

using IntMatrix = SparseMatrix<BigInt>;
using DyadicMatrix = SparseMatrix<Dyadic>;

IncidenceMatrix d_matrix(const PhiFamily& family);

// box{eps(C)} = sum_B r_C^B box<B>.
IntMatrix r_matrix(const PhiFamily& family, const IncidenceMatrix& d);

// Coefficients of an integer-valued function (indexed by point bitmask) in the
// basis {box<B>}, by back-substitution along the reverse linear extension.
std::vector<BigInt> new_basis_coordinates(const PhiFamily& family, const IncidenceMatrix& d,
                                          const std::vector<BigInt>& values);
std::vector<Dyadic> new_basis_coordinates(const PhiFamily& family, const IncidenceMatrix& d,
                                          const FunctionVector& f);

// Fourier matrix on the point basis: entry (y, x) = (-1)^(x,y) * 2^(-D/2).
class FourierMatrix {
 public:
  explicit FourierMatrix(int dim);
  int dim() const { return dim_; }
  int sign(std::uint64_t y, std::uint64_t x) const;
  Dyadic at(std::uint64_t y, std::uint64_t x) const;

 private:
  int dim_;
};

FourierMatrix fourier_point(int dim);

// Unnormalized transform: out(y) = sum_x (-1)^(x,y) f(x), computed with a fast
// Walsh-Hadamard butterfly. Entries must be integers of moderate size.
std::vector<long long> symplectic_walsh(int dim, const std::vector<long long>& f);
// F(f) = 2^(-D/2) * symplectic_walsh(f), exact.
FunctionVector fourier(const FunctionVector& f);

// Fourier transform in the new basis: F(box<B>) = sum_B' n_{B,B'} box<B'>.
// Each row is computed from the transform and compared exactly with the
// closed form 2^(|B| - D/2) box<B>^perp; a mismatch throws
// ConstructionMismatch.
DyadicMatrix n_matrix(const PhiFamily& family, const IncidenceMatrix& d);

// Outcome of a structural check. `detail` names a counterexample on failure.
struct CheckOutcome {
  bool ok = true;
  std::string detail;
  static CheckOutcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
  static CheckOutcome fail(std::string detail) { return {false, std::move(detail)}; }
};

// d is 0/1, row A has 2^|A| ones, d_A^A = 1, and d_A^{A'} != 0 implies A' <= A.
CheckOutcome check_d_unitriangular(const PhiFamily& family, const IncidenceMatrix& d);
// d * r = r * d = identity, r_C^C = 1, r_C^B != 0 implies B <= C.
CheckOutcome check_dr_inverse(const PhiFamily& family, const IncidenceMatrix& d, const IntMatrix& r);
// r_C^B != 0 implies |B| <= |C|.
CheckOutcome check_theorem24(const PhiFamily& family, const IntMatrix& r);
// B' <= B implies |B'| <= |B|.
CheckOutcome check_corollary25(const PhiFamily& family);
// With r = I + N, d = sum_k (-1)^k N^k. Dense; limited to D <= 6.
CheckOutcome chain_identity_check(const PhiFamily& family, const IncidenceMatrix& d, const IntMatrix& r);
// F^2 = identity on the point basis, via the fast transform.
CheckOutcome check_fourier_involution(int dim);
// n_{B,B'} != 0 with B != B' implies B < B' and |B| < |B'|; diagonal is +-1.
CheckOutcome check_n_triangular(const PhiFamily& family, const DyadicMatrix& n);
// n * n = identity.
CheckOutcome check_n_involution(const DyadicMatrix& n);

struct Conjecture34Report {
  bool pass = true;
  std::size_t nonzero = 0;
  // exponent t -> number of entries equal to +-2^-t
  std::map<unsigned, std::size_t> exponent_histogram;
  // "row label | column label | value" for each violation (capped)
  std::vector<std::string> violations;
  std::size_t violation_count = 0;
};

// Every nonzero entry is +-2^-t with t in [0, D/2].
Conjecture34Report conjecture34_check(const PhiFamily& family, const DyadicMatrix& n);

struct Hypothesis36Row {
  int pattern;
  Dyadic value;
  unsigned exponent;
  int chain_height;
  int predicted;
  bool agrees;
};

struct Hypothesis36Report {
  std::vector<Hypothesis36Row> rows;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t negative = 0;
  std::size_t positive = 0;
};

// For each B' with n_{0,B'} != 0 compares the exponent t of n_{0,B'} with
// D/2 - chain_height_above(B'), and tallies signs. Never fails.
Hypothesis36Report hypothesis36_check(const PhiFamily& family, const DyadicMatrix& n);

}  // namespace circbasis
