// Slow, independent reimplementations used as test oracles. Nothing here
// calls into the library except for plain value types.
#pragma once

#include "circbasis/gf2.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// Form from the explicit Gram matrix on e_1..e_D.
inline int form(int dim, std::uint64_t x, std::uint64_t y) {
  int total = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if ((i - j == 1 || j - i == 1) && ((x >> i) & 1) && ((y >> j) & 1)) ++total;
    }
  }
  return total & 1;
}

// All vectors orthogonal to every generator.
inline std::set<std::uint64_t> perp(int dim, const std::vector<std::uint64_t>& gens) {
  std::set<std::uint64_t> out;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << dim); ++y) {
    bool ok = true;
    for (auto g : gens) ok = ok && form(dim, g, y) == 0;
    if (ok) out.insert(y);
  }
  return out;
}

// Closure of a generating set under addition.
inline std::set<std::uint64_t> span(const std::vector<std::uint64_t>& gens) {
  std::set<std::uint64_t> out{0};
  for (auto g : gens) {
    std::set<std::uint64_t> next = out;
    for (auto v : out) next.insert(v ^ g);
    out = std::move(next);
  }
  return out;
}

// Points of an arc on Z/n (labels 1..n).
inline std::set<int> arc_points(int n, int start, int len) {
  std::set<int> out;
  for (int k = 0; k < len; ++k) out.insert((start - 1 + k) % n + 1);
  return out;
}

// A nonempty proper subset of Z/n is an arc iff exactly one of its points has
// its successor outside the set.
inline bool is_arc(int n, const std::set<int>& s) {
  if (s.empty() || static_cast<int>(s.size()) >= n) return false;
  int exits = 0;
  for (int p : s) exits += s.count(p % n + 1) ? 0 : 1;
  return exits == 1;
}

// Number of maximal runs of consecutive points of a proper subset.
inline int runs(int n, const std::set<int>& s) {
  int exits = 0;
  for (int p : s) exits += s.count(p % n + 1) ? 0 : 1;
  return exits;
}

inline std::set<int> minus(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool prec(int n, const std::set<int>& inner, const std::set<int>& outer) {
  if (inner.size() >= outer.size() || !std::includes(outer.begin(), outer.end(), inner.begin(), inner.end())) {
    return false;
  }
  return runs(n, minus(outer, inner)) == 2;
}

inline bool spade(int n, const std::set<int>& a, const std::set<int>& b) {
  for (int p : a) {
    if (b.count(p)) return false;
  }
  std::set<int> u = a;
  u.insert(b.begin(), b.end());
  return !is_arc(n, u);
}

// Solves A x = b exactly (A square, invertible) by Gauss-Jordan elimination.
inline std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  return b;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

}  // namespace oracle
