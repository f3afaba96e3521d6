#include "circbasis/intervals.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace circbasis {

namespace {

// Points of the arc as a mask over [1, D+1] (bit p-1 <-> point p).
std::uint64_t point_mask(const Interval& arc) {
  std::uint64_t m = 0;
  for (int k = 0; k < arc.len(); ++k) m |= std::uint64_t{1} << (arc.at(k) - 1);
  return m;
}

void require_same_modulus(const Interval& a, const Interval& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("arcs live on cycles of different length");
}

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Interval::Interval(int dim, int start, int len) : dim_(dim), start_(start), len_(len) {
  check_dimension(dim);
  if (start < 1 || start > dim + 1) throw std::out_of_range("arc start out of [1, D+1]");
  if (len < 1 || len > dim) throw std::out_of_range("arc length out of [1, D]");
}

Interval Interval::from_range(int dim, int first, int last) {
  const int n = dim + 1;
  if (first < 1 || first > n || last < 1 || last > n) throw std::out_of_range("arc endpoint out of [1, D+1]");
  const int len = ((last - first) % n + n) % n + 1;
  return Interval(dim, first, len);
}

std::vector<int> Interval::elements() const {
  std::vector<int> out;
  out.reserve(len_);
  for (int k = 0; k < len_; ++k) out.push_back(at(k));
  return out;
}

CircVector Interval::vector() const { return vec_from_subset(dim_, elements()); }

Interval Interval::rotated(int shift) const { return Interval(dim_, wrap(start_ + shift), len_); }

std::string Interval::to_string() const { return std::to_string(start_) + ".." + std::to_string(last()); }

std::vector<Interval> odd_arcs(int dim) {
  check_dimension(dim);
  std::vector<Interval> out;
  for (int s = 1; s <= dim + 1; ++s) {
    for (int len = 1; len <= dim; len += 2) out.emplace_back(dim, s, len);
  }
  return out;
}

bool prec(const Interval& inner, const Interval& outer) {
  require_same_modulus(inner, outer);
  const int o = outer.offset_of(inner.start());
  return o >= 1 && o + inner.len() <= outer.len() - 1;
}

bool spade(const Interval& a, const Interval& b) {
  require_same_modulus(a, b);
  const int o = b.offset_of(a.start());
  return o > b.len() && o + a.len() < b.modulus();
}

bool in_ev_set(const Interval& arc, int point) {
  const int o = arc.offset_of(point);
  return o < arc.len() - 1 && o % 2 == 1;
}

std::vector<int> ev_set(const Interval& arc) {
  if (!arc.is_odd()) throw std::invalid_argument("ev_set needs an odd arc");
  std::vector<int> out;
  for (int k = 1; k < arc.len() - 1; k += 2) out.push_back(arc.at(k));
  return out;
}

std::vector<int> ev_set_by_definition(const Interval& arc) {
  if (!arc.is_odd()) throw std::invalid_argument("ev_set needs an odd arc");
  const auto arcs = odd_arcs(arc.dim());
  std::vector<std::uint64_t> masks;
  masks.reserve(arcs.size());
  for (const auto& a : arcs) masks.push_back(point_mask(a));
  const std::uint64_t whole = point_mask(arc);
  std::vector<int> out;
  for (int p : arc.elements()) {
    const std::uint64_t rest = whole & ~(std::uint64_t{1} << (p - 1));
    bool found = false;
    for (std::size_t a = 0; a < arcs.size() && !found; ++a) {
      if ((masks[a] & ~rest) != 0) continue;
      for (std::size_t b = a + 1; b < arcs.size(); ++b) {
        if ((masks[a] | masks[b]) == rest && (masks[a] & masks[b]) == 0 && spade(arcs[a], arcs[b])) {
          found = true;
          break;
        }
      }
    }
    if (found) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pattern::Pattern(int dim, std::vector<Interval> arcs) : dim_(dim), arcs_(std::move(arcs)) {
  check_dimension(dim);
  for (const auto& a : arcs_) {
    if (a.dim() != dim) throw DimensionMismatch("arc dimension differs from pattern dimension");
    if (!a.is_odd()) throw std::invalid_argument("pattern arcs must have odd length: " + a.to_string());
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw std::invalid_argument("pattern arcs must be distinct");
  }
}

bool Pattern::contains(const Interval& arc) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), arc);
}

Pattern Pattern::rotated(int shift) const {
  std::vector<Interval> arcs;
  arcs.reserve(arcs_.size());
  for (const auto& a : arcs_) arcs.push_back(a.rotated(shift));
  return Pattern(dim_, std::move(arcs));
}

std::string Pattern::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (k) s += ", ";
    s += arcs_[k].to_string();
  }
  return s + "}";
}

Interval parse_interval(int dim, std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw std::invalid_argument("arc must look like a..b");
  return Interval::from_range(dim, parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2)));
}

Pattern parse_pattern(int dim, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw std::invalid_argument("pattern must be enclosed in braces");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<Interval> arcs;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    if (item.find_first_not_of(' ') != std::string_view::npos) arcs.push_back(parse_interval(dim, item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Pattern(dim, std::move(arcs));
}

int g(const Pattern& pattern, int point) {
  if (point < 1 || point > pattern.dim() + 1) throw std::out_of_range("point out of [1, D+1]");
  return static_cast<int>(std::count_if(pattern.arcs().begin(), pattern.arcs().end(),
                                        [point](const Interval& a) { return a.contains(point); }));
}

std::vector<int> epsilon_support(const Pattern& pattern) {
  std::vector<int> out;
  for (int i = 1; i <= pattern.dim() + 1; ++i) {
    const int gi = g(pattern, i);
    if ((gi * (gi + 1) / 2) % 2 == 1) out.push_back(i);
  }
  return out;
}

CircVector epsilon(const Pattern& pattern) { return vec_from_subset(pattern.dim(), epsilon_support(pattern)); }

bool check_p0(const Pattern& pattern) {
  const auto& arcs = pattern.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      if (!spade(arcs[a], arcs[b]) && !prec(arcs[a], arcs[b]) && !prec(arcs[b], arcs[a])) return false;
    }
  }
  return true;
}

bool check_p1(const Pattern& pattern) {
  if (!check_p0(pattern)) throw std::logic_error("check_p1 requires a pattern satisfying P0");
  // Under P0 the inclusion-maximal arcs below I are pairwise separated, so a
  // disjoint cover exists iff their union covers the ev points.
  for (const auto& outer : pattern.arcs()) {
    std::uint64_t covered = 0;
    for (const auto& inner : pattern.arcs()) {
      if (prec(inner, outer)) covered |= point_mask(inner);
    }
    for (int p : ev_set(outer)) {
      if (!(covered >> (p - 1) & 1)) return false;
    }
  }
  return true;
}

bool check_p1_exhaustive(const Pattern& pattern) {
  for (const auto& outer : pattern.arcs()) {
    std::vector<std::uint64_t> below;
    for (const auto& inner : pattern.arcs()) {
      if (prec(inner, outer)) below.push_back(point_mask(inner));
    }
    if (below.size() > 20) throw std::length_error("exhaustive P1 search too large");
    std::uint64_t need = 0;
    for (int p : ev_set_by_definition(outer)) need |= std::uint64_t{1} << (p - 1);
    bool ok = false;
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << below.size()) && !ok; ++sel) {
      std::uint64_t uni = 0;
      bool disjoint = true;
      for (std::size_t k = 0; k < below.size() && disjoint; ++k) {
        if (!(sel >> k & 1)) continue;
        if (uni & below[k]) disjoint = false;
        uni |= below[k];
      }
      ok = disjoint && (need & ~uni) == 0;
    }
    if (!ok) return false;
  }
  return true;
}

Gf2Subspace pattern_span(const Pattern& pattern) {
  std::vector<CircVector> vs;
  vs.reserve(pattern.size());
  for (const auto& a : pattern.arcs()) vs.push_back(a.vector());
  return Gf2Subspace::span(pattern.dim(), vs);
}

}  // namespace circbasis
