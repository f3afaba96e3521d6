// The family of admissible patterns for V_D, the epsilon bijection onto V_D,
// the shift move B -> B[i], the recursion D-2 -> D, and the partial order.
#pragma once

#include "circbasis/dyadic.hpp"
#include "circbasis/gf2.hpp"
#include "circbasis/intervals.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <utility>
#include <vector>

namespace circbasis {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Largest D accepted by the brute-force enumerator.
inline constexpr int kBruteForceMaxDim = 8;

// Depth-first search over odd arcs with P0 pruning, filtered by P1. Result is
// sorted. Throws InvalidDimension above kBruteForceMaxDim.
std::vector<Pattern> enumerate_bruteforce(int dim);

// Images of the old point k (on the D-1 cycle) under the stretch that turns
// the old point before j into the three points j-1, j, j+1 of the D+1 cycle.
// `dim` is the new D.
std::vector<int> stretch_point(int dim, int j, int old_point);

// tau_j : V_{D-2} -> V_D, x over V_{D-2}; j in [1, D+1].
CircVector tau(int j, const CircVector& x);
// theta_j(point mass at x') = point mass at tau_j(x') + point mass at tau_j(x') + e_j.
FunctionVector theta(int j, const FunctionVector& f);
// The pattern over V_D whose span is tau_j(<B'>) + F e_j, built by stretching
// the arcs of B' and adjoining {j}. Throws ConstructionMismatch if the result
// fails any of its asserted properties.
Pattern t_insert(int j, const Pattern& smaller);

// Sorted admissible patterns of V_D via the recursion over D-2.
std::vector<Pattern> enumerate_phi_patterns(int dim);

// Removes {i} (if it is the only arc through i) or replaces {i} and the next
// arc I_2 through i by the two halves of I_2 - {i}. Throws DomainError when
// {i} is not in B, ConstructionMismatch if a checked property fails.
Pattern b_shift(const Pattern& pattern, int point);

class PhiFamily {
 public:
  // Builds epsilon tables and the order. Throws ConstructionMismatch if the
  // patterns do not biject onto V_D or the relation is not antisymmetric.
  PhiFamily(int dim, std::vector<Pattern> patterns);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(patterns_.size()); }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const Pattern& pattern(int idx) const { return patterns_[idx]; }
  int pattern_size(int idx) const { return static_cast<int>(patterns_[idx].size()); }
  const std::string& label(int idx) const { return labels_[idx]; }
  // -1 when absent.
  int index_of(const Pattern& pattern) const;

  const CircVector& eps(int idx) const { return eps_[idx]; }
  // B(x): the pattern with epsilon(B) = x.
  int index_of_point(std::uint64_t x) const { return eps_to_index_[x]; }
  int index_of_point(const CircVector& x) const { return eps_to_index_[x.bits()]; }
  const Gf2Subspace& span_of(int idx) const { return spans_[idx]; }

  // A' with eps(A') in <B>, B included (the base relation, read downwards).
  const std::vector<int>& span_members(int idx) const { return span_members_[idx]; }
  // B with eps(A') in <B>, A' included.
  const std::vector<int>& spans_containing(int idx) const { return spans_containing_[idx]; }

  bool leq(int lower, int upper) const { return down_sets_[upper].test(lower); }
  bool less(int lower, int upper) const { return lower != upper && leq(lower, upper); }
  const boost::dynamic_bitset<>& down_set(int idx) const { return down_sets_[idx]; }

  // Topological order of the relation; ties broken by (|B|, label).
  const std::vector<int>& linext() const { return linext_; }
  int position(int idx) const { return position_[idx]; }

  // Covering pairs (lower, upper) of the order.
  std::vector<std::pair<int, int>> covers() const;

  // Longest strict chain from the bottom element up to idx.
  int height(int idx) const { return height_[idx]; }
  // Longest strict chain starting at idx and going up.
  int height_above(int idx) const { return height_above_[idx]; }

 private:
  int dim_;
  std::vector<Pattern> patterns_;
  std::vector<std::string> labels_;
  std::map<Pattern, int> index_;
  std::vector<CircVector> eps_;
  std::vector<int> eps_to_index_;
  std::vector<Gf2Subspace> spans_;
  std::vector<std::vector<int>> span_members_;
  std::vector<std::vector<int>> spans_containing_;
  std::vector<boost::dynamic_bitset<>> down_sets_;
  std::vector<int> linext_;
  std::vector<int> position_;
  std::vector<int> height_;
  std::vector<int> height_above_;
};

PhiFamily enumerate_phi(int dim);

// Length of the longest chain 0 = x_0 < ... < x_k = x.
int nu(const CircVector& x, const PhiFamily& family);
// Length of the longest chain B' = B'_0 < ... < B'_k.
int chain_height_above(int idx, const PhiFamily& family);

}  // namespace circbasis
