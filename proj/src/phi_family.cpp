#include "circbasis/phi_family.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

namespace circbasis {

namespace {

void require_recursive_dim(int dim) {
  check_dimension(dim);
  if (dim < 4) throw InvalidDimension("the recursion D-2 -> D needs D >= 4");
}

void require_point(int dim, int j) {
  if (j < 1 || j > dim + 1) throw std::out_of_range("index j out of [1, D+1]");
}

void extend(const std::vector<Interval>& arcs, const std::vector<std::vector<char>>& compatible,
            std::size_t from, std::vector<int>& chosen, int dim, std::vector<Pattern>& out) {
  std::vector<Interval> current;
  current.reserve(chosen.size());
  for (int c : chosen) current.push_back(arcs[c]);
  Pattern p(dim, std::move(current));
  if (check_p1(p)) out.push_back(std::move(p));
  for (std::size_t k = from; k < arcs.size(); ++k) {
    if (!std::all_of(chosen.begin(), chosen.end(), [&](int c) { return compatible[c][k]; })) continue;
    chosen.push_back(static_cast<int>(k));
    extend(arcs, compatible, k + 1, chosen, dim, out);
    chosen.pop_back();
  }
}

// The old point of the D-1 cycle that gets stretched for a given j.
int stretched_point(int dim, int j) {
  if (j == 1) return dim - 1;
  if (j == dim + 1) return 1;
  return j - 1;
}

Interval stretch_arc(int dim, int j, const Interval& arc) {
  const int p = stretched_point(dim, j);
  const std::vector<int> first = stretch_point(dim, j, arc.start());
  const int grow = arc.contains(p) ? 2 : 0;
  return Interval(dim, first.front(), arc.len() + grow);
}

}  // namespace

std::vector<Pattern> enumerate_bruteforce(int dim) {
  check_dimension(dim);
  if (dim > kBruteForceMaxDim) {
    throw InvalidDimension("brute-force enumeration is limited to D <= " + std::to_string(kBruteForceMaxDim));
  }
  const auto arcs = odd_arcs(dim);
  std::vector<std::vector<char>> compatible(arcs.size(), std::vector<char>(arcs.size(), 0));
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t b = 0; b < arcs.size(); ++b) {
      compatible[a][b] = a != b && (spade(arcs[a], arcs[b]) || prec(arcs[a], arcs[b]) || prec(arcs[b], arcs[a]));
    }
  }
  std::vector<Pattern> out;
  std::vector<int> chosen;
  extend(arcs, compatible, 0, chosen, dim, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> stretch_point(int dim, int j, int old_point) {
  require_recursive_dim(dim);
  require_point(dim, j);
  if (old_point < 1 || old_point > dim - 1) throw std::out_of_range("old point out of [1, D-1]");
  const int n = dim + 1;
  const int p = stretched_point(dim, j);
  if (old_point == p) return {(j + n - 2) % n + 1, j, j % n + 1};
  if (j == 1) return {old_point + 2};
  if (j == dim + 1) return {old_point};
  return {old_point < p ? old_point : old_point + 2};
}

CircVector tau(int j, const CircVector& x) {
  const int dim = x.dim() + 2;
  require_recursive_dim(dim);
  require_point(dim, j);
  std::vector<int> image;
  for (int k : x.support()) {
    const auto pts = stretch_point(dim, j, k);
    image.insert(image.end(), pts.begin(), pts.end());
  }
  return vec_from_subset(dim, image);
}

FunctionVector theta(int j, const FunctionVector& f) {
  const int dim = f.dim() + 2;
  require_recursive_dim(dim);
  require_point(dim, j);
  const CircVector ej = CircVector::basis(dim, j);
  FunctionVector out(dim);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (f[x].is_zero()) continue;
    const CircVector image = tau(j, CircVector(f.dim(), x));
    out[image.bits()] += f[x];
    out[(image + ej).bits()] += f[x];
  }
  return out;
}

Pattern t_insert(int j, const Pattern& smaller) {
  const int dim = smaller.dim() + 2;
  require_recursive_dim(dim);
  require_point(dim, j);
  std::vector<Interval> arcs;
  arcs.reserve(smaller.size() + 1);
  for (const auto& a : smaller.arcs()) arcs.push_back(stretch_arc(dim, j, a));
  arcs.emplace_back(dim, j, 1);
  Pattern result(dim, std::move(arcs));

  const auto fail = [&](const std::string& what) {
    return ConstructionMismatch("t_insert(" + std::to_string(j) + ", " + smaller.to_string() + ") = " +
                                result.to_string() + ": " + what);
  };
  if (result.size() != smaller.size() + 1) throw fail("size is not |B'| + 1");
  if (!check_p0(result)) throw fail("P0 fails");
  if (!check_p1(result)) throw fail("P1 fails");
  std::vector<CircVector> gens;
  for (const auto& v : pattern_span(smaller).basis()) gens.push_back(tau(j, v));
  gens.push_back(CircVector::basis(dim, j));
  if (!(Gf2Subspace::span(dim, gens) == pattern_span(result))) throw fail("span is not tau_j(<B'>) + F e_j");
  return result;
}

std::vector<Pattern> enumerate_phi_patterns(int dim) {
  check_dimension(dim);
  if (dim == 2) return enumerate_bruteforce(2);
  const auto smaller = enumerate_phi_patterns(dim - 2);
  std::set<Pattern> found{Pattern(dim)};
  for (int j = 1; j <= dim + 1; ++j) {
    for (const auto& b : smaller) found.insert(t_insert(j, b));
  }
  return {found.begin(), found.end()};
}

Pattern b_shift(const Pattern& pattern, int point) {
  const int dim = pattern.dim();
  require_point(dim, point);
  if (!pattern.has_singleton(point)) {
    throw DomainError("b_shift needs {" + std::to_string(point) + "} in " + pattern.to_string());
  }
  const auto fail = [&](const std::string& what) {
    return ConstructionMismatch("b_shift(" + pattern.to_string() + ", " + std::to_string(point) + "): " + what);
  };

  std::vector<Interval> chain;
  for (const auto& a : pattern.arcs()) {
    if (a.contains(point)) chain.push_back(a);
  }
  std::sort(chain.begin(), chain.end(), [](const Interval& a, const Interval& b) { return a.len() < b.len(); });
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (!prec(chain[k - 1], chain[k])) throw fail("arcs through the point do not form a chain");
  }
  if (chain.size() >= 2 && !in_ev_set(chain[1], point)) throw fail("point is not in I_2^ev");
  if (chain.size() >= 3 && in_ev_set(chain[2], point)) throw fail("point is not in I_3^odd");

  std::vector<Interval> arcs;
  for (const auto& a : pattern.arcs()) {
    if (a == chain[0] || (chain.size() >= 2 && a == chain[1])) continue;
    arcs.push_back(a);
  }
  if (chain.size() >= 2) {
    const Interval& outer = chain[1];
    const int left = outer.offset_of(point);
    arcs.emplace_back(dim, outer.start(), left);
    arcs.emplace_back(dim, outer.at(left + 1), outer.len() - left - 1);
  }
  Pattern result(dim, std::move(arcs));

  const std::size_t expected = chain.size() == 1 ? pattern.size() - 1 : pattern.size();
  if (result.size() != expected) throw fail("size rule violated");
  if (!is_admissible(result)) throw fail("result is not admissible");
  if (!(epsilon(result) == epsilon(pattern) + CircVector::basis(dim, point))) throw fail("epsilon did not shift by e_i");
  return result;
}

PhiFamily::PhiFamily(int dim, std::vector<Pattern> patterns) : dim_(dim), patterns_(std::move(patterns)) {
  check_dimension(dim);
  if (dim > 24) throw InvalidDimension("families are limited to D <= 24");
  std::sort(patterns_.begin(), patterns_.end());
  const std::size_t points = std::size_t{1} << dim;
  if (patterns_.size() != points) {
    throw ConstructionMismatch("family for D=" + std::to_string(dim) + " has " + std::to_string(patterns_.size()) +
                               " patterns, expected " + std::to_string(points));
  }
  const int n = size();
  labels_.reserve(n);
  eps_.reserve(n);
  spans_.reserve(n);
  eps_to_index_.assign(points, -1);
  for (int b = 0; b < n; ++b) {
    if (patterns_[b].dim() != dim) throw DimensionMismatch("pattern of the wrong dimension in family");
    labels_.push_back(patterns_[b].to_string());
    index_.emplace(patterns_[b], b);
    eps_.push_back(epsilon(patterns_[b]));
    spans_.push_back(pattern_span(patterns_[b]));
    int& slot = eps_to_index_[eps_.back().bits()];
    if (slot != -1) {
      throw ConstructionMismatch("epsilon collision: " + labels_[slot] + " and " + labels_[b]);
    }
    slot = b;
  }

  span_members_.resize(n);
  spans_containing_.resize(n);
  for (int b = 0; b < n; ++b) {
    for (std::uint64_t x : spans_[b].points()) {
      const int a = eps_to_index_[x];
      span_members_[b].push_back(a);
      spans_containing_[a].push_back(b);
    }
    std::sort(span_members_[b].begin(), span_members_[b].end());
  }

  // Kahn's algorithm over the base relation; a leftover node means a cycle.
  std::vector<int> indegree(n, 0);
  for (int b = 0; b < n; ++b) {
    for (int a : span_members_[b]) {
      if (a != b) ++indegree[b];
    }
  }
  const auto key = [this](int b) { return std::make_tuple(patterns_[b].size(), labels_[b], b); };
  const auto later = [&](int a, int b) { return key(a) > key(b); };
  std::priority_queue<int, std::vector<int>, decltype(later)> ready(later);
  for (int b = 0; b < n; ++b) {
    if (indegree[b] == 0) ready.push(b);
  }
  while (!ready.empty()) {
    const int a = ready.top();
    ready.pop();
    linext_.push_back(a);
    for (int b : spans_containing_[a]) {
      if (b != a && --indegree[b] == 0) ready.push(b);
    }
  }
  if (static_cast<int>(linext_.size()) != n) {
    throw ConstructionMismatch("order relation has a cycle (antisymmetry fails)");
  }
  position_.assign(n, 0);
  for (int k = 0; k < n; ++k) position_[linext_[k]] = k;

  down_sets_.assign(n, boost::dynamic_bitset<>(n));
  height_.assign(n, 0);
  for (int b : linext_) {
    down_sets_[b].set(b);
    for (int a : span_members_[b]) {
      if (a == b) continue;
      down_sets_[b] |= down_sets_[a];
      height_[b] = std::max(height_[b], height_[a] + 1);
    }
  }
  height_above_.assign(n, 0);
  for (auto it = linext_.rbegin(); it != linext_.rend(); ++it) {
    const int a = *it;
    for (int b : spans_containing_[a]) {
      if (b != a) height_above_[a] = std::max(height_above_[a], height_above_[b] + 1);
    }
  }
}

int PhiFamily::index_of(const Pattern& pattern) const {
  auto it = index_.find(pattern);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> PhiFamily::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int b : linext_) {
    boost::dynamic_bitset<> shadowed(n);
    for (int a : span_members_[b]) {
      if (a == b) continue;
      boost::dynamic_bitset<> strict = down_sets_[a];
      strict.reset(a);
      shadowed |= strict;
    }
    for (int a : span_members_[b]) {
      if (a != b && !shadowed.test(a)) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end(), [this](const auto& x, const auto& y) {
    return std::make_pair(position_[x.second], position_[x.first]) <
           std::make_pair(position_[y.second], position_[y.first]);
  });
  return out;
}

PhiFamily enumerate_phi(int dim) { return PhiFamily(dim, enumerate_phi_patterns(dim)); }

int nu(const CircVector& x, const PhiFamily& family) {
  if (x.dim() != family.dim()) throw DimensionMismatch("vector and family dimensions differ");
  return family.height(family.index_of_point(x));
}

int chain_height_above(int idx, const PhiFamily& family) { return family.height_above(idx); }

}  // namespace circbasis
