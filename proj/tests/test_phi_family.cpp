#include "circbasis/phi_family.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace circbasis;

namespace {

const PhiFamily& family(int dim) {
  static std::map<int, PhiFamily> cache;
  auto it = cache.find(dim);
  if (it == cache.end()) it = cache.emplace(dim, enumerate_phi(dim)).first;
  return it->second;
}

FunctionVector box(const Gf2Subspace& s) { return FunctionVector::indicator(s.ambient_dim(), s.points()); }

}  // namespace

TEST_CASE("brute-force enumeration at small D") {
  const auto two = enumerate_bruteforce(2);
  REQUIRE(two.size() == 4);
  CHECK(two[0] == Pattern(2));
  CHECK(two[1] == parse_pattern(2, "{1..1}"));
  CHECK(two[2] == parse_pattern(2, "{2..2}"));
  CHECK(two[3] == parse_pattern(2, "{3..3}"));

  std::map<std::size_t, int> sizes;
  for (const auto& b : enumerate_bruteforce(4)) ++sizes[b.size()];
  CHECK(sizes == std::map<std::size_t, int>{{0, 1}, {1, 5}, {2, 10}});
  CHECK_THROWS_AS(enumerate_bruteforce(10), InvalidDimension);
}

TEST_CASE("recursive and brute-force enumerations agree") {
  for (int dim = 2; dim <= 8; dim += 2) {
    CHECK(enumerate_phi_patterns(dim) == enumerate_bruteforce(dim));
  }
}

TEST_CASE("family size and epsilon bijection") {
  for (int dim = 2; dim <= 12; dim += 2) {
    const auto& fam = family(dim);
    REQUIRE(fam.size() == (1 << dim));
    std::vector<bool> hit(fam.size(), false);
    for (int b = 0; b < fam.size(); ++b) {
      const auto x = fam.eps(b).bits();
      CHECK_FALSE(hit[x]);
      hit[x] = true;
      CHECK(fam.index_of_point(x) == b);
      CHECK(fam.index_of(fam.pattern(b)) == b);
      CHECK(fam.eps(b) == epsilon(fam.pattern(b)));
      CHECK(fam.span_of(b).rank() == fam.pattern_size(b));
      CHECK(fam.span_of(b).is_isotropic());
      CHECK(fam.span_of(b).contains(fam.eps(b)));
    }
  }
  CHECK(family(4).index_of(parse_pattern(4, "{1..3}")) == -1);
}

TEST_CASE("tau") {
  CHECK(tau(2, CircVector::zero(2)) == CircVector::zero(4));
  CHECK(tau(2, CircVector::basis(2, 1)) == vec_from_subset(4, {1, 2, 3}));
  for (int dim = 4; dim <= 8; dim += 2) {
    const int old = dim - 2;
    for (int j = 1; j <= dim + 1; ++j) {
      const auto ej = CircVector::basis(dim, j);
      std::set<std::uint64_t> image;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << old); ++x) {
        const auto tx = tau(j, CircVector(old, x));
        image.insert(tx.bits());
        CHECK(form(tx, ej) == 0);
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << old); y += 3) {
          CHECK(form(tx, tau(j, CircVector(old, y))) == form(CircVector(old, x), CircVector(old, y)));
          CHECK(tau(j, CircVector(old, x) + CircVector(old, y)) == tx + tau(j, CircVector(old, y)));
        }
      }
      CHECK(image.size() == (std::size_t{1} << old));
      CHECK(image.count(ej.bits()) == 0);
    }
  }
}

TEST_CASE("theta") {
  for (int j = 1; j <= 5; ++j) {
    CHECK(theta(j, FunctionVector(2)) == FunctionVector(4));
    FunctionVector expected = FunctionVector::point(4, 0);
    expected += FunctionVector::point(4, CircVector::basis(4, j).bits());
    CHECK(theta(j, FunctionVector::point(2, 0)) == expected);
  }
  for (int dim = 4; dim <= 8; dim += 2) {
    const auto& small = family(dim - 2);
    for (int j = 1; j <= dim + 1; ++j) {
      for (int b = 0; b < small.size(); ++b) {
        const Pattern big = t_insert(j, small.pattern(b));
        CHECK(theta(j, box(small.span_of(b))) == box(pattern_span(big)));
      }
    }
  }
}

TEST_CASE("t_insert") {
  for (int j = 1; j <= 5; ++j) CHECK(t_insert(j, Pattern(2)) == Pattern(4, {Interval(4, j, 1)}));
  const Pattern b = t_insert(2, parse_pattern(2, "{1..1}"));
  CHECK(b == parse_pattern(4, "{1..3, 2..2}"));
  const std::vector<CircVector> gens{vec_from_subset(4, {1, 2, 3}), CircVector::basis(4, 2)};
  CHECK(pattern_span(b) == span(4, gens));
  for (int dim = 4; dim <= 8; dim += 2) {
    const auto& small = family(dim - 2);
    for (int j = 1; j <= dim + 1; ++j) {
      for (const auto& p : small.patterns()) {
        const Pattern big = t_insert(j, p);
        CHECK(big.size() == p.size() + 1);
        CHECK(is_admissible(big));
        CHECK(big.has_singleton(j));
      }
    }
  }
}

TEST_CASE("stretch map") {
  // New D = 4, old cycle 1..3; the stretched point goes to j-1, j, j+1.
  CHECK(stretch_point(4, 2, 1) == std::vector<int>{1, 2, 3});
  CHECK(stretch_point(4, 2, 2) == std::vector<int>{4});
  CHECK(stretch_point(4, 2, 3) == std::vector<int>{5});
  CHECK(stretch_point(4, 1, 3) == std::vector<int>{5, 1, 2});
  CHECK(stretch_point(4, 1, 1) == std::vector<int>{3});
  CHECK(stretch_point(4, 5, 1) == std::vector<int>{4, 5, 1});
  CHECK(stretch_point(4, 5, 2) == std::vector<int>{2});
}

TEST_CASE("b_shift examples") {
  CHECK(b_shift(parse_pattern(4, "{2..2}"), 2) == Pattern(4));
  CHECK(b_shift(parse_pattern(4, "{1..3, 2..2}"), 2) == parse_pattern(4, "{1..1, 3..3}"));
  CHECK_THROWS_AS(b_shift(parse_pattern(4, "{1..3, 2..2}"), 1), DomainError);
}

TEST_CASE("b_shift law on every pattern") {
  for (int dim = 2; dim <= 8; dim += 2) {
    const auto& fam = family(dim);
    for (int b = 0; b < fam.size(); ++b) {
      const Pattern& pat = fam.pattern(b);
      for (int i = 1; i <= dim + 1; ++i) {
        if (!pat.has_singleton(i)) continue;
        const Pattern shifted = b_shift(pat, i);
        const int idx = fam.index_of(shifted);
        REQUIRE(idx >= 0);
        CHECK(fam.eps(idx) == fam.eps(b) + CircVector::basis(dim, i));
        const bool alone = g(pat, i) == 1;
        CHECK(shifted.size() == (alone ? pat.size() - 1 : pat.size()));
      }
    }
  }
}

TEST_CASE("singleton criterion from g values") {
  for (int dim = 2; dim <= 8; dim += 2) {
    const auto& fam = family(dim);
    const int n = dim + 1;
    for (const auto& pat : fam.patterns()) {
      for (int i = 1; i <= n; ++i) {
        const int gi = g(pat, i);
        const bool criterion = gi >= 1 && g(pat, i == 1 ? n : i - 1) == gi - 1 && g(pat, i % n + 1) == gi - 1;
        CHECK(criterion == pat.has_singleton(i));
      }
    }
  }
}

TEST_CASE("order matches a transitive-closure oracle") {
  for (int dim = 2; dim <= 6; dim += 2) {
    const auto& fam = family(dim);
    const int n = fam.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) rel[a][b] = fam.span_of(b).contains(fam.eps(a));
    }
    for (int k = 0; k < n; ++k) {
      for (int a = 0; a < n; ++a) {
        if (!rel[a][k]) continue;
        for (int b = 0; b < n; ++b) {
          if (rel[k][b]) rel[a][b] = true;
        }
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) CHECK(fam.leq(a, b) == rel[a][b]);
    }
  }
}

TEST_CASE("order properties") {
  for (int dim = 2; dim <= 8; dim += 2) {
    const auto& fam = family(dim);
    const int empty = fam.index_of(Pattern(dim));
    std::vector<int> sorted = fam.linext();
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < fam.size(); ++k) CHECK(sorted[k] == k);
    for (int b = 0; b < fam.size(); ++b) {
      CHECK(fam.leq(empty, b));
      CHECK(fam.leq(b, b));
      CHECK(fam.linext()[fam.position(b)] == b);
      for (int a = 0; a < fam.size(); ++a) {
        if (!fam.leq(a, b)) continue;
        CHECK(fam.pattern_size(a) <= fam.pattern_size(b));
        CHECK(fam.position(a) <= fam.position(b));
        if (a != b) CHECK_FALSE(fam.leq(b, a));
      }
    }
  }
}

TEST_CASE("covers") {
  const auto& two = family(2);
  const auto covers = two.covers();
  CHECK(covers.size() == 3);
  for (const auto& [lo, hi] : covers) CHECK(two.pattern_size(lo) == 0);
  for (int dim = 4; dim <= 6; dim += 2) {
    const auto& fam = family(dim);
    std::set<std::pair<int, int>> expected;
    for (int a = 0; a < fam.size(); ++a) {
      for (int b = 0; b < fam.size(); ++b) {
        if (!fam.less(a, b)) continue;
        bool between = false;
        for (int c = 0; c < fam.size() && !between; ++c) between = fam.less(a, c) && fam.less(c, b);
        if (!between) expected.insert({a, b});
      }
    }
    const auto got = fam.covers();
    CHECK(std::set<std::pair<int, int>>(got.begin(), got.end()) == expected);
  }
}

TEST_CASE("chain statistics") {
  const auto& two = family(2);
  CHECK(chain_height_above(two.index_of(Pattern(2)), two) == 1);
  for (int dim = 2; dim <= 8; dim += 2) {
    const auto& fam = family(dim);
    CHECK(nu(CircVector::zero(dim), fam) == 0);
    int max_nu = 0;
    for (int b = 0; b < fam.size(); ++b) {
      const auto& x = fam.eps(b);
      max_nu = std::max(max_nu, nu(x, fam));
      if (!x.is_zero()) CHECK(nu(x, fam) >= 1);
      bool maximal = true;
      for (int c = 0; c < fam.size() && maximal; ++c) maximal = !fam.less(b, c);
      if (maximal) CHECK(chain_height_above(b, fam) == 0);
      for (int j = 1; j <= dim + 1; ++j) {
        if (!fam.pattern(b).has_singleton(j)) continue;
        const auto lower = x + CircVector::basis(dim, j);
        CHECK(fam.less(fam.index_of_point(lower), b));
        CHECK(nu(lower, fam) < nu(x, fam));
      }
    }
    CHECK(chain_height_above(fam.index_of(Pattern(dim)), fam) == max_nu);
  }
}

TEST_CASE("rotation is an automorphism of the family and the order") {
  for (int dim = 2; dim <= 8; dim += 2) {
    const auto& fam = family(dim);
    std::vector<int> image(fam.size());
    for (int b = 0; b < fam.size(); ++b) {
      image[b] = fam.index_of(fam.pattern(b).rotated(1));
      REQUIRE(image[b] >= 0);
      CHECK(fam.eps(image[b]) == fam.eps(b).rotated(1));
    }
    for (int a = 0; a < fam.size(); a += 3) {
      for (int b = 0; b < fam.size(); ++b) CHECK(fam.leq(a, b) == fam.leq(image[a], image[b]));
    }
  }
}
