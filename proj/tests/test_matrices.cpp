#include "circbasis/matrices.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace circbasis;
using oracle::Rational;

namespace {

struct Built {
  PhiFamily family;
  IncidenceMatrix d;
  IntMatrix r;
  DyadicMatrix n;
};

const Built& built(int dim) {
  static std::map<int, Built> cache;
  auto it = cache.find(dim);
  if (it == cache.end()) {
    PhiFamily fam = enumerate_phi(dim);
    IncidenceMatrix d = d_matrix(fam);
    IntMatrix r = r_matrix(fam, d);
    DyadicMatrix n = n_matrix(fam, d);
    it = cache.emplace(dim, Built{std::move(fam), std::move(d), std::move(r), std::move(n)}).first;
  }
  return it->second;
}

Rational as_rational(const Dyadic& v) { return Rational(v.numerator()) / Rational(BigInt(1) << v.exponent()); }

// Column B' of the point-by-pattern matrix: the indicator of <B'>.
std::vector<std::vector<Rational>> box_columns(const PhiFamily& fam) {
  const std::size_t size = fam.size();
  std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size, 0));
  for (int b = 0; b < fam.size(); ++b) {
    std::vector<std::uint64_t> gens;
    for (const auto& arc : fam.pattern(b).arcs()) gens.push_back(arc.vector().bits());
    for (auto x : oracle::span(gens)) m[x][b] = 1;
  }
  return m;
}

}  // namespace

TEST_CASE("d rows") {
  for (int dim = 2; dim <= 8; dim += 2) {
    const auto& [fam, d, r, n] = built(dim);
    const int empty = fam.index_of(Pattern(dim));
    CHECK(d.row(empty).count() == 1);
    CHECK(d.at(empty, empty));
    for (int a = 0; a < fam.size(); ++a) {
      if (fam.pattern_size(a) == 1) CHECK(d.row(a).count() == 2);
      std::vector<std::uint64_t> gens;
      for (const auto& arc : fam.pattern(a).arcs()) gens.push_back(arc.vector().bits());
      const auto pts = oracle::span(gens);
      for (int b = 0; b < fam.size(); ++b) CHECK(d.at(a, b) == (pts.count(fam.eps(b).bits()) == 1));
    }
    CHECK(check_d_unitriangular(fam, d).ok);
  }
}

TEST_CASE("r is the exact inverse of d") {
  for (int dim = 2; dim <= 6; dim += 2) {
    const auto& [fam, d, r, n] = built(dim);
    const int size = fam.size();
    // Solve box{eps(C)} = sum_B r_C^B box<B> densely.
    const auto cols = box_columns(fam);
    for (int c = 0; c < size; ++c) {
      std::vector<Rational> rhs(size, 0);
      rhs[fam.eps(c).bits()] = 1;
      const auto x = oracle::solve(cols, rhs);
      for (int b = 0; b < size; ++b) CHECK(x[b] == Rational(r.at(c, b)));
    }
  }
  for (int dim = 2; dim <= 8; dim += 2) {
    const auto& [fam, d, r, n] = built(dim);
    CHECK(check_dr_inverse(fam, d, r).ok);
    CHECK(check_theorem24(fam, r).ok);
    CHECK(check_corollary25(fam).ok);
  }
}

TEST_CASE("checkers report a counterexample when an identity breaks") {
  const auto& [fam, d, r, n] = built(4);
  IntMatrix broken = r;
  const int last = fam.linext().back();
  auto row = broken.row(last);
  row.back().second += 1;
  broken.set_row(last, row);
  const auto outcome = check_dr_inverse(fam, d, broken);
  CHECK_FALSE(outcome.ok);
  CHECK_FALSE(outcome.detail.empty());
  CHECK_FALSE(chain_identity_check(fam, d, broken).ok);

  DyadicMatrix bad_n = n;
  const int empty = fam.index_of(Pattern(4));
  auto nrow = bad_n.row(empty);
  nrow.front().second = Dyadic(BigInt(3), 1);
  bad_n.set_row(empty, nrow);
  CHECK_FALSE(check_n_involution(bad_n).ok);
  CHECK_FALSE(conjecture34_check(fam, bad_n).pass);
  CHECK_FALSE(check_n_triangular(fam, bad_n).ok);
}

TEST_CASE("chain identity") {
  for (int dim = 2; dim <= 6; dim += 2) {
    const auto& [fam, d, r, n] = built(dim);
    CHECK(chain_identity_check(fam, d, r).ok);
  }
}

TEST_CASE("Fourier matrix on points") {
  for (int dim = 2; dim <= 6; dim += 2) {
    const auto f = fourier_point(dim);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << dim); ++y) {
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << dim); ++x) {
        CHECK(f.sign(y, x) == (oracle::form(dim, x, y) ? -1 : 1));
        CHECK(f.at(y, x) == Dyadic(BigInt(f.sign(y, x)), static_cast<unsigned>(dim / 2)));
      }
    }
  }
  for (int dim = 2; dim <= 10; dim += 2) CHECK(check_fourier_involution(dim).ok);
}

TEST_CASE("fast transform matches the direct sum") {
  for (int dim = 2; dim <= 8; dim += 2) {
    const std::size_t size = std::size_t{1} << dim;
    FunctionVector f(dim);
    std::vector<long long> raw(size);
    for (std::size_t x = 0; x < size; ++x) {
      raw[x] = static_cast<long long>(oracle::rng()() % 11) - 5;
      f[x] = Dyadic(raw[x]);
    }
    const auto fast = symplectic_walsh(dim, raw);
    const auto scaled = fourier(f);
    for (std::uint64_t y = 0; y < size; ++y) {
      long long direct = 0;
      for (std::uint64_t x = 0; x < size; ++x) direct += oracle::form(dim, x, y) ? -raw[x] : raw[x];
      CHECK(fast[y] == direct);
      CHECK(scaled[y] == Dyadic(direct).scaled(-dim / 2));
    }
    CHECK(fourier(fourier(f)) == f);
  }
}

TEST_CASE("new-basis coordinates round trip") {
  for (int dim = 2; dim <= 6; dim += 2) {
    const auto& [fam, d, r, n] = built(dim);
    std::vector<long long> coeff(fam.size());
    FunctionVector f(dim);
    for (int b = 0; b < fam.size(); ++b) {
      coeff[b] = static_cast<long long>(oracle::rng()() % 7) - 3;
      for (auto x : fam.span_of(b).points()) f[x] += Dyadic(coeff[b]);
    }
    const auto got = new_basis_coordinates(fam, d, f);
    for (int b = 0; b < fam.size(); ++b) CHECK(got[b] == Dyadic(coeff[b]));
  }
}

TEST_CASE("n matches a dense Fourier solve") {
  for (int dim = 2; dim <= 6; dim += 2) {
    const auto& [fam, d, r, n] = built(dim);
    const std::size_t size = fam.size();
    const auto cols = box_columns(fam);
    const Rational scale = Rational(1) / Rational(BigInt(1) << (dim / 2));
    for (int b = 0; b < fam.size(); ++b) {
      std::vector<Rational> image(size, 0);
      for (std::uint64_t y = 0; y < size; ++y) {
        for (std::uint64_t x = 0; x < size; ++x) {
          if (cols[x][b] == 0) continue;
          image[y] += oracle::form(dim, x, y) ? -scale : scale;
        }
      }
      const auto row = oracle::solve(cols, image);
      for (int c = 0; c < fam.size(); ++c) CHECK(row[c] == as_rational(n.at(b, c)));
    }
  }
}

TEST_CASE("n structure") {
  for (int dim = 2; dim <= 8; dim += 2) {
    const auto& [fam, d, r, n] = built(dim);
    CHECK(check_n_triangular(fam, n).ok);
    CHECK(check_n_involution(n).ok);
    const auto report = conjecture34_check(fam, n);
    CHECK(report.pass);
    CHECK(report.violation_count == 0);
    CHECK(report.nonzero == n.nonzeros());
    for (int b = 0; b < fam.size(); ++b) CHECK(n.at(b, b).exponent() == 0);
    // Row {} evaluated at the zero vector, where every indicator is 1.
    Dyadic total;
    for (const auto& [c, v] : n.row(fam.index_of(Pattern(dim)))) total += v;
    CHECK(total == Dyadic::inverse_power_of_two(dim / 2));
  }
}

TEST_CASE("small n matrices") {
  const auto& [fam, d, r, n] = built(2);
  const int empty = fam.index_of(Pattern(2));
  CHECK(n.at(empty, empty) == Dyadic(-1));
  for (int b = 0; b < 4; ++b) {
    if (b == empty) continue;
    CHECK(n.at(empty, b) == Dyadic::inverse_power_of_two(1));
    CHECK(n.at(b, b) == Dyadic(1));
  }
  CHECK(n.nonzeros() == 7);
}

TEST_CASE("chain-height report") {
  const auto& [fam, d, r, n] = built(4);
  const auto report = hypothesis36_check(fam, n);
  CHECK(report.rows.size() == n.row(fam.index_of(Pattern(4))).size());
  CHECK(report.agree + report.disagree == report.rows.size());
  CHECK(report.positive + report.negative == report.rows.size());
  for (const auto& row : report.rows) {
    if (row.value == Dyadic::inverse_power_of_two(2)) {
      CHECK(row.chain_height == 0);
      CHECK(row.agrees);
    }
  }
  for (int dim = 6; dim <= 8; dim += 2) {
    const auto& b = built(dim);
    const auto rep = hypothesis36_check(b.family, b.n);
    CHECK(rep.agree + rep.disagree == rep.rows.size());
  }
}
