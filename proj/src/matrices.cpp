#include "circbasis/matrices.hpp"

#include <algorithm>
#include <bit>

namespace circbasis {

namespace {

std::uint64_t gram(std::uint64_t x, int dim) { return ((x << 1) ^ (x >> 1)) & dim_mask(dim); }

std::string entry_name(const PhiFamily& family, int row, int col) {
  return "(" + family.label(row) + ", " + family.label(col) + ")";
}

// Row-by-row product of two sparse matrices.
template <class T>
std::vector<std::map<int, T>> multiply(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  std::vector<std::map<int, T>> out(a.size());
  for (int r = 0; r < a.size(); ++r) {
    for (const auto& [mid, x] : a.row(r)) {
      for (const auto& [col, y] : b.row(mid)) out[r][col] += x * y;
    }
  }
  return out;
}

template <class T>
std::optional<std::pair<int, int>> first_non_identity(const std::vector<std::map<int, T>>& product) {
  for (int r = 0; r < static_cast<int>(product.size()); ++r) {
    for (const auto& [col, v] : product[r]) {
      const T expected = (col == r) ? T(1) : T(0);
      if (v != expected) return std::make_pair(r, col);
    }
    if (!product[r].contains(r)) return std::make_pair(r, r);
  }
  return std::nullopt;
}

}  // namespace

IncidenceMatrix::IncidenceMatrix(const PhiFamily& family) {
  const int n = family.size();
  rows_.assign(n, boost::dynamic_bitset<>(n));
  columns_.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int member : family.span_members(a)) {
      rows_[a].set(member);
      columns_[member].push_back(a);
    }
  }
  // Columns sorted by decreasing linext position so solves touch them in
  // dependency order.
  for (auto& col : columns_) {
    std::sort(col.begin(), col.end(), [&](int x, int y) { return family.position(x) > family.position(y); });
  }
}

std::size_t IncidenceMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total;
}

IncidenceMatrix d_matrix(const PhiFamily& family) { return IncidenceMatrix(family); }

IntMatrix r_matrix(const PhiFamily& family, const IncidenceMatrix& d) {
  const int n = family.size();
  IntMatrix r(n);
  std::vector<BigInt> coeff(n);
  for (int c = 0; c < n; ++c) {
    const auto& below = family.down_set(c);
    std::vector<IntMatrix::Entry> row;
    for (int pos = family.position(c); pos >= 0; --pos) {
      const int a = family.linext()[pos];
      if (!below.test(a)) continue;
      BigInt v = (a == c) ? 1 : 0;
      for (int b : d.column(a)) {
        if (b != a && below.test(b)) v -= coeff[b];
      }
      if (!v.is_zero()) row.emplace_back(a, v);
      coeff[a] = std::move(v);
    }
    for (int pos = family.position(c); pos >= 0; --pos) coeff[family.linext()[pos]] = 0;
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    r.set_row(c, std::move(row));
  }
  return r;
}

std::vector<BigInt> new_basis_coordinates(const PhiFamily& family, const IncidenceMatrix& d,
                                          const std::vector<BigInt>& values) {
  const int n = family.size();
  // Points and patterns are equinumerous; values are indexed by point.
  if (values.size() != static_cast<std::size_t>(n)) throw DimensionMismatch("function has the wrong length");
  std::vector<BigInt> coeff(n);
  for (auto it = family.linext().rbegin(); it != family.linext().rend(); ++it) {
    const int a = *it;
    BigInt v = values[family.eps(a).bits()];
    for (int b : d.column(a)) {
      if (b != a) v -= coeff[b];
    }
    coeff[a] = std::move(v);
  }
  return coeff;
}

std::vector<Dyadic> new_basis_coordinates(const PhiFamily& family, const IncidenceMatrix& d,
                                          const FunctionVector& f) {
  const int n = family.size();
  if (f.dim() != family.dim()) throw DimensionMismatch("function and family dimensions differ");
  std::vector<Dyadic> coeff(n);
  for (auto it = family.linext().rbegin(); it != family.linext().rend(); ++it) {
    const int a = *it;
    Dyadic v = f[family.eps(a).bits()];
    for (int b : d.column(a)) {
      if (b != a) v -= coeff[b];
    }
    coeff[a] = std::move(v);
  }
  return coeff;
}

FourierMatrix::FourierMatrix(int dim) : dim_(dim) { check_dimension(dim); }

int FourierMatrix::sign(std::uint64_t y, std::uint64_t x) const {
  return form(CircVector(dim_, x), CircVector(dim_, y)) ? -1 : 1;
}

Dyadic FourierMatrix::at(std::uint64_t y, std::uint64_t x) const {
  return Dyadic(BigInt(sign(y, x)), static_cast<unsigned>(dim_ / 2));
}

FourierMatrix fourier_point(int dim) { return FourierMatrix(dim); }

std::vector<long long> symplectic_walsh(int dim, const std::vector<long long>& f) {
  check_dimension(dim);
  const std::size_t size = std::size_t{1} << dim;
  if (f.size() != size) throw DimensionMismatch("function has the wrong length");
  std::vector<long long> w = f;
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const long long a = w[j];
        const long long b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
    }
  }
  // w(u) = sum_x (-1)^{x.u} f(x); the form pairs x with y through u = G y.
  std::vector<long long> out(size);
  for (std::uint64_t y = 0; y < size; ++y) out[y] = w[gram(y, dim)];
  return out;
}

FunctionVector fourier(const FunctionVector& f) {
  const int dim = f.dim();
  const std::size_t size = f.size();
  std::vector<Dyadic> w = f.values();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        Dyadic a = w[j];
        w[j] += w[j + h];
        a -= w[j + h];
        w[j + h] = std::move(a);
      }
    }
  }
  FunctionVector out(dim);
  for (std::uint64_t y = 0; y < size; ++y) out[y] = w[gram(y, dim)].scaled(-dim / 2);
  return out;
}

DyadicMatrix n_matrix(const PhiFamily& family, const IncidenceMatrix& d) {
  const int dim = family.dim();
  const int n = family.size();
  const std::size_t size = std::size_t{1} << dim;
  DyadicMatrix out(n);
  for (int b = 0; b < n; ++b) {
    const auto& span = family.span_of(b);
    std::vector<long long> indicator(size, 0);
    for (std::uint64_t x : span.points()) indicator[x] = 1;
    const std::vector<long long> transformed = symplectic_walsh(dim, indicator);

    // Closed form: 2^|B| on <B>^perp, zero elsewhere (before the 2^(-D/2) scale).
    const Gf2Subspace orth = span.perp();
    const long long height = 1LL << span.rank();
    for (std::uint64_t y = 0; y < size; ++y) {
      const long long expected = orth.contains(CircVector(dim, y)) ? height : 0;
      if (transformed[y] != expected) {
        throw ConstructionMismatch("Fourier transform of box<" + family.label(b) + "> differs from 2^|B| box<B>^perp at " +
                                   CircVector(dim, y).to_string());
      }
    }
    std::vector<BigInt> by_point(size);
    for (std::uint64_t y = 0; y < size; ++y) by_point[y] = transformed[y];
    const std::vector<BigInt> coeff = new_basis_coordinates(family, d, by_point);
    std::vector<DyadicMatrix::Entry> row;
    for (int a = 0; a < n; ++a) {
      if (!coeff[a].is_zero()) row.emplace_back(a, Dyadic(coeff[a], static_cast<unsigned>(dim / 2)));
    }
    out.set_row(b, std::move(row));
  }
  return out;
}

CheckOutcome check_d_unitriangular(const PhiFamily& family, const IncidenceMatrix& d) {
  for (int a = 0; a < family.size(); ++a) {
    if (!d.at(a, a)) return CheckOutcome::fail("d diagonal is 0 at " + family.label(a));
    const std::size_t ones = d.row(a).count();
    if (ones != (std::size_t{1} << family.pattern_size(a))) {
      return CheckOutcome::fail("row " + family.label(a) + " has " + std::to_string(ones) + " ones");
    }
    for (auto col = d.row(a).find_first(); col != boost::dynamic_bitset<>::npos; col = d.row(a).find_next(col)) {
      if (!family.leq(static_cast<int>(col), a)) {
        return CheckOutcome::fail("d nonzero off the order at " + entry_name(family, a, static_cast<int>(col)));
      }
    }
  }
  return CheckOutcome::pass(std::to_string(d.nonzeros()) + " ones");
}

CheckOutcome check_dr_inverse(const PhiFamily& family, const IncidenceMatrix& d, const IntMatrix& r) {
  const int n = family.size();
  for (int c = 0; c < n; ++c) {
    bool diagonal = false;
    for (const auto& [b, v] : r.row(c)) {
      if (b == c) diagonal = v == 1;
      if (!family.leq(b, c)) return CheckOutcome::fail("r nonzero off the order at " + entry_name(family, c, b));
    }
    if (!diagonal) return CheckOutcome::fail("r diagonal is not 1 at " + family.label(c));
  }
  IntMatrix dm(n);
  for (int a = 0; a < n; ++a) {
    std::vector<IntMatrix::Entry> row;
    for (auto c = d.row(a).find_first(); c != boost::dynamic_bitset<>::npos; c = d.row(a).find_next(c)) {
      row.emplace_back(static_cast<int>(c), BigInt(1));
    }
    dm.set_row(a, std::move(row));
  }
  if (auto bad = first_non_identity(multiply(dm, r))) {
    return CheckOutcome::fail("d*r differs from identity at " + entry_name(family, bad->first, bad->second));
  }
  if (auto bad = first_non_identity(multiply(r, dm))) {
    return CheckOutcome::fail("r*d differs from identity at " + entry_name(family, bad->first, bad->second));
  }
  return CheckOutcome::pass(std::to_string(r.nonzeros()) + " nonzero r entries");
}

CheckOutcome check_theorem24(const PhiFamily& family, const IntMatrix& r) {
  std::size_t checked = 0;
  for (int c = 0; c < family.size(); ++c) {
    for (const auto& [b, v] : r.row(c)) {
      ++checked;
      if (family.pattern_size(b) > family.pattern_size(c)) {
        return CheckOutcome::fail("r" + entry_name(family, c, b) + " = " + v.str() + " with |B| > |C|");
      }
    }
  }
  return CheckOutcome::pass(std::to_string(checked) + " nonzero entries, 0 violations");
}

CheckOutcome check_corollary25(const PhiFamily& family) {
  std::size_t pairs = 0;
  for (int b = 0; b < family.size(); ++b) {
    const auto& below = family.down_set(b);
    for (auto a = below.find_first(); a != boost::dynamic_bitset<>::npos; a = below.find_next(a)) {
      ++pairs;
      if (family.pattern_size(static_cast<int>(a)) > family.pattern_size(b)) {
        return CheckOutcome::fail(family.label(static_cast<int>(a)) + " <= " + family.label(b) + " but is larger");
      }
    }
  }
  return CheckOutcome::pass(std::to_string(pairs) + " comparable pairs, 0 violations");
}

CheckOutcome chain_identity_check(const PhiFamily& family, const IncidenceMatrix& d, const IntMatrix& r) {
  const int n = family.size();
  if (family.dim() > 6) throw InvalidDimension("chain identity check is limited to D <= 6");
  using Dense = std::vector<std::vector<BigInt>>;
  Dense nil(n, std::vector<BigInt>(n));
  for (int c = 0; c < n; ++c) {
    for (const auto& [b, v] : r.row(c)) {
      if (b != c) nil[c][b] = v;
    }
  }
  Dense sum(n, std::vector<BigInt>(n));
  for (int k = 0; k < n; ++k) sum[k][k] = 1;
  Dense power = nil;
  int sign = -1;
  for (int k = 1; k <= n; ++k) {
    bool any = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (power[i][j].is_zero()) continue;
        any = true;
        sum[i][j] += sign * power[i][j];
      }
    }
    if (!any) break;
    Dense next(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
      for (int m = 0; m < n; ++m) {
        if (power[i][m].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (!nil[m][j].is_zero()) next[i][j] += power[i][m] * nil[m][j];
        }
      }
    }
    power = std::move(next);
    sign = -sign;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const BigInt expected = d.at(i, j) ? 1 : 0;
      if (sum[i][j] != expected) {
        return CheckOutcome::fail("alternating chain sum " + sum[i][j].str() + " != d at " + entry_name(family, i, j));
      }
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_fourier_involution(int dim) {
  check_dimension(dim);
  if (dim > 12) throw InvalidDimension("Fourier involution check is limited to D <= 12");
  const std::size_t size = std::size_t{1} << dim;
  const long long scale = 1LL << dim;
  std::vector<long long> f(size, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    f[x] = 1;
    const auto twice = symplectic_walsh(dim, symplectic_walsh(dim, f));
    for (std::uint64_t y = 0; y < size; ++y) {
      if (twice[y] != (y == x ? scale : 0)) {
        return CheckOutcome::fail("F^2 differs from identity at point " + CircVector(dim, x).to_string());
      }
    }
    f[x] = 0;
  }
  return CheckOutcome::pass();
}

CheckOutcome check_n_triangular(const PhiFamily& family, const DyadicMatrix& n) {
  for (int b = 0; b < family.size(); ++b) {
    bool diagonal = false;
    for (const auto& [c, v] : n.row(b)) {
      if (c == b) {
        diagonal = v == Dyadic(1) || v == Dyadic(-1);
        continue;
      }
      if (!family.less(b, c) || family.pattern_size(b) >= family.pattern_size(c)) {
        return CheckOutcome::fail("n" + entry_name(family, b, c) + " = " + v.to_string() + " breaks triangularity");
      }
    }
    if (!diagonal) return CheckOutcome::fail("n diagonal is not +-1 at " + family.label(b));
  }
  return CheckOutcome::pass(std::to_string(n.nonzeros()) + " nonzero n entries");
}

CheckOutcome check_n_involution(const DyadicMatrix& n) {
  const auto product = multiply(n, n);
  for (int r = 0; r < n.size(); ++r) {
    for (const auto& [c, v] : product[r]) {
      if (v != Dyadic(c == r ? 1 : 0)) {
        return CheckOutcome::fail("n*n entry (" + std::to_string(r) + ", " + std::to_string(c) + ") = " + v.to_string());
      }
    }
    if (!product[r].contains(r)) return CheckOutcome::fail("n*n diagonal missing at " + std::to_string(r));
  }
  return CheckOutcome::pass();
}

Conjecture34Report conjecture34_check(const PhiFamily& family, const DyadicMatrix& n) {
  Conjecture34Report report;
  const unsigned max_exponent = static_cast<unsigned>(family.dim() / 2);
  for (int b = 0; b < family.size(); ++b) {
    for (const auto& [c, v] : n.row(b)) {
      ++report.nonzero;
      const bool unit = v.numerator() == 1 || v.numerator() == -1;
      if (unit && v.exponent() <= max_exponent) {
        ++report.exponent_histogram[v.exponent()];
        continue;
      }
      report.pass = false;
      ++report.violation_count;
      if (report.violations.size() < 20) {
        report.violations.push_back(family.label(b) + " | " + family.label(c) + " | " + v.to_string());
      }
    }
  }
  return report;
}

Hypothesis36Report hypothesis36_check(const PhiFamily& family, const DyadicMatrix& n) {
  Hypothesis36Report report;
  const int empty = family.index_of(Pattern(family.dim()));
  for (const auto& [c, v] : n.row(empty)) {
    Hypothesis36Row row{c, v, v.exponent(), chain_height_above(c, family), 0, false};
    row.predicted = family.dim() / 2 - row.chain_height;
    row.agrees = static_cast<int>(row.exponent) == row.predicted;
    ++(row.agrees ? report.agree : report.disagree);
    ++(v.sign() < 0 ? report.negative : report.positive);
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [&](const auto& x, const auto& y) { return family.position(x.pattern) < family.position(y.pattern); });
  return report;
}

}  // namespace circbasis
