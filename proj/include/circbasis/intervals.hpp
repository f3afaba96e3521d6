// Arcs on the (D+1)-cycle and finite sets of odd arcs ("patterns").
//
// Points of the cycle are labelled 1..D+1. An arc is a nonempty proper set of
// cyclically consecutive points, stored as (start, len) with start in
// [1, D+1] and len in [1, D]; this pair is unique for every arc.
//
// Text forms: an arc prints as "a..b" (first and last point, so "4..1" is
// {4,5,1} when D = 4); a pattern prints as "{a..b, c..d}" with arcs sorted by
// (start, len), and the empty pattern as "{}".
#pragma once

#include "circbasis/gf2.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace circbasis {

class Interval {
 public:
  Interval() = default;
  Interval(int dim, int start, int len);
  // The arc running clockwise from `first` to `last`.
  static Interval from_range(int dim, int first, int last);

  int dim() const { return dim_; }
  int modulus() const { return dim_ + 1; }
  int start() const { return start_; }
  int len() const { return len_; }
  int last() const { return wrap(start_ + len_ - 1); }
  bool is_odd() const { return len_ % 2 == 1; }

  bool contains(int point) const { return offset_of(point) < len_; }
  // Position of `point` counted clockwise from start(); >= len() if outside.
  int offset_of(int point) const { return ((point - start_) % modulus() + modulus()) % modulus(); }
  // The point at clockwise offset k from start().
  int at(int k) const { return wrap(start_ + k); }
  std::vector<int> elements() const;
  CircVector vector() const;
  // Image under i -> i + shift (mod D+1).
  Interval rotated(int shift) const;

  std::string to_string() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.dim_ == b.dim_ && a.start_ == b.start_ && a.len_ == b.len_;
  }
  friend std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
    if (auto c = a.start_ <=> b.start_; c != 0) return c;
    return a.len_ <=> b.len_;
  }

 private:
  int wrap(int p) const { return ((p - 1) % modulus() + modulus()) % modulus() + 1; }

  int dim_ = 2;
  int start_ = 1;
  int len_ = 1;
};

// Every odd arc on the (D+1)-cycle, in (start, len) order.
std::vector<Interval> odd_arcs(int dim);

// inner is a proper subset of outer and outer - inner is two arcs that do not
// touch (inner shares neither endpoint of outer).
bool prec(const Interval& inner, const Interval& outer);
// Disjoint, and the union is not an arc.
bool spade(const Interval& a, const Interval& b);

// The points i of an odd arc I for which I - {i} splits into two odd arcs
// separated from each other. Closed form: points at odd offset from start.
std::vector<int> ev_set(const Interval& arc);
// The same set, evaluated directly from the definition by searching over all
// pairs of odd arcs. Quadratic in the number of arcs; for cross-checking.
std::vector<int> ev_set_by_definition(const Interval& arc);
bool in_ev_set(const Interval& arc, int point);

class Pattern {
 public:
  explicit Pattern(int dim = 2) : dim_(dim) {}
  // Sorts the arcs. Throws std::invalid_argument on even arcs, repeated
  // arcs, or arcs of another dimension.
  Pattern(int dim, std::vector<Interval> arcs);

  int dim() const { return dim_; }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  const std::vector<Interval>& arcs() const { return arcs_; }
  bool contains(const Interval& arc) const;
  bool has_singleton(int point) const { return contains(Interval(dim_, point, 1)); }

  Pattern rotated(int shift) const;
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.arcs_.begin(), a.arcs_.end(), b.arcs_.begin(),
                                                  b.arcs_.end());
  }

 private:
  int dim_;
  std::vector<Interval> arcs_;
};

Interval parse_interval(int dim, std::string_view text);
Pattern parse_pattern(int dim, std::string_view text);

// Number of arcs of B containing the point i, i in [1, D+1].
int g(const Pattern& pattern, int point);
// Points i in [1, D+1] where g_i(g_i + 1)/2 is odd, i.e. g_i = 1, 2 mod 4.
std::vector<int> epsilon_support(const Pattern& pattern);
CircVector epsilon(const Pattern& pattern);

bool check_p0(const Pattern& pattern);
// Requires check_p0(pattern); throws std::logic_error otherwise.
bool check_p1(const Pattern& pattern);
// Exhaustive search over subcollections of arcs for the disjoint cover.
// Exponential; for cross-checking check_p1 on small patterns.
bool check_p1_exhaustive(const Pattern& pattern);
inline bool is_admissible(const Pattern& pattern) { return check_p0(pattern) && check_p1(pattern); }

Gf2Subspace pattern_span(const Pattern& pattern);

}  // namespace circbasis
