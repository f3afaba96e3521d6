// The expansion of box{V_D} in the indicator basis, grouped by rotation
// orbits.
//
// A term c[i_1 ... i_k] stands for c times the sum of box<B(e_J)> over the
// distinct rotations J of {i_1, ..., i_k} inside Z/(D+1). For a pattern B the
// set J is the epsilon support of B, the points i in [1, D+1] where
// g_i(g_i + 1)/2 is odd; "[-]" is the empty set. When D+1 > 9 the points are
// separated by commas, "[1,2,10]".
#pragma once

#include "circbasis/dyadic.hpp"
#include "circbasis/matrices.hpp"
#include "circbasis/phi_family.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circbasis {

struct OrbitTerm {
  Dyadic coefficient;
  // Lexicographically smallest sorted rotation of J.
  std::vector<int> representative;
  std::size_t orbit_size = 1;
};

struct OrbitExpansion {
  int dim = 2;
  // Sorted by (|J| descending, representative).
  std::vector<OrbitTerm> terms;

  std::string to_string() const;
};

// Smallest sorted rotation of a subset of Z/(D+1) (labels 1..D+1).
std::vector<int> minimal_rotation(int dim, const std::vector<int>& points);
// Number of distinct rotations of the subset.
std::size_t orbit_size(int dim, const std::vector<int>& points);

// box{V_D} = 2^(D/2) sum_B' n_{0,B'} box<B'>, grouped by orbits. Throws
// ConstructionMismatch if a coefficient is not constant on an orbit.
OrbitExpansion vd_expansion(const PhiFamily& family, const DyadicMatrix& n);

// Parses the text form back into terms (representatives are normalized).
std::vector<OrbitTerm> parse_expansion(int dim, std::string_view text);

// Equal as multisets of (coefficient, orbit of vectors e_J).
bool same_terms(int dim, const std::vector<OrbitTerm>& a, const std::vector<OrbitTerm>& b);

struct TermDiff {
  std::vector<OrbitTerm> only_left;
  std::vector<OrbitTerm> only_right;

  bool empty() const { return only_left.empty() && only_right.empty(); }
  // "+[1256] / +[1246]" style summary.
  std::string to_string(int dim) const;
};
TermDiff diff_terms(int dim, const std::vector<OrbitTerm>& left, const std::vector<OrbitTerm>& right);

// Checks that sum_B' c_B' box<B'> is 1 at every point of V_D.
CheckOutcome check_expansion_is_whole_space(const PhiFamily& family, const OrbitExpansion& expansion);

// Reference expansions for D = 2, 4, 6, 8.
std::optional<std::string> reference_expansion(int dim);

}  // namespace circbasis
