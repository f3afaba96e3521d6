#include "circbasis/expansion.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace circbasis {

namespace {

std::vector<int> rotate_points(int dim, const std::vector<int>& points, int shift) {
  const int n = dim + 1;
  std::vector<int> out;
  out.reserve(points.size());
  for (int p : points) out.push_back(((p - 1 + shift) % n + n) % n + 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t orbit_key(int dim, const std::vector<int>& points) {
  std::uint64_t best = ~std::uint64_t{0};
  for (int h = 0; h <= dim; ++h) best = std::min(best, vec_from_subset(dim, rotate_points(dim, points, h)).bits());
  return best;
}

std::string render_points(int dim, const std::vector<int>& points) {
  if (points.empty()) return "[-]";
  std::string s = "[";
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k && dim + 1 > 9) s += ',';
    s += std::to_string(points[k]);
  }
  return s + "]";
}

Dyadic parse_coefficient(std::string_view text) {
  if (text.empty() || text == "+") return Dyadic(1);
  if (text == "-") return Dyadic(-1);
  const bool negative = text.front() == '-';
  if (text.front() == '+' || text.front() == '-') text.remove_prefix(1);
  const auto slash = text.find('/');
  const auto digits = text.substr(0, slash);
  BigInt num{std::string(digits)};
  unsigned exponent = 0;
  if (slash != std::string_view::npos) {
    auto den_text = text.substr(slash + 1);
    if (den_text.starts_with("2^")) {
      den_text.remove_prefix(2);
      std::from_chars(den_text.data(), den_text.data() + den_text.size(), exponent);
    } else {
      BigInt den(std::string{den_text});
      while (den > 1) {
        if (den % 2 != 0) throw std::invalid_argument("coefficient denominator is not a power of 2");
        den /= 2;
        ++exponent;
      }
    }
  }
  return Dyadic(negative ? BigInt(-num) : num, exponent);
}

}  // namespace

std::vector<int> minimal_rotation(int dim, const std::vector<int>& points) {
  std::vector<int> best = rotate_points(dim, points, 0);
  for (int h = 1; h <= dim; ++h) best = std::min(best, rotate_points(dim, points, h));
  return best;
}

std::size_t orbit_size(int dim, const std::vector<int>& points) {
  std::set<std::vector<int>> seen;
  for (int h = 0; h <= dim; ++h) seen.insert(rotate_points(dim, points, h));
  return seen.size();
}

std::string OrbitExpansion::to_string() const {
  std::string s;
  for (const auto& term : terms) {
    const Dyadic& c = term.coefficient;
    if (c == Dyadic(1)) {
      if (!s.empty()) s += '+';
    } else if (c == Dyadic(-1)) {
      s += '-';
    } else {
      if (c.sign() > 0 && !s.empty()) s += '+';
      s += c.to_fraction_string();
    }
    s += render_points(dim, term.representative);
  }
  return s.empty() ? "0" : s;
}

OrbitExpansion vd_expansion(const PhiFamily& family, const DyadicMatrix& n) {
  const int dim = family.dim();
  const int empty = family.index_of(Pattern(dim));
  std::vector<Dyadic> coeff(family.size());
  for (const auto& [col, v] : n.row(empty)) coeff[col] = v.scaled(dim / 2);

  std::map<std::vector<int>, Dyadic> by_orbit;
  for (int b = 0; b < family.size(); ++b) {
    const auto rep = minimal_rotation(dim, epsilon_support(family.pattern(b)));
    auto [it, inserted] = by_orbit.emplace(rep, coeff[b]);
    if (!inserted && it->second != coeff[b]) {
      throw ConstructionMismatch("coefficient of box<" + family.label(b) + "> differs within its rotation orbit");
    }
  }
  OrbitExpansion out;
  out.dim = dim;
  for (const auto& [rep, c] : by_orbit) {
    if (!c.is_zero()) out.terms.push_back({c, rep, orbit_size(dim, rep)});
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const OrbitTerm& a, const OrbitTerm& b) {
    if (a.representative.size() != b.representative.size()) return a.representative.size() > b.representative.size();
    return a.representative < b.representative;
  });
  return out;
}

std::vector<OrbitTerm> parse_expansion(int dim, std::string_view text) {
  check_dimension(dim);
  std::string cleaned;
  for (std::size_t k = 0; k < text.size(); ++k) {
    // U+2212 MINUS SIGN
    if (text.substr(k).starts_with("\xE2\x88\x92")) {
      cleaned += '-';
      k += 2;
    } else if (text[k] != ' ') {
      cleaned += text[k];
    }
  }
  std::vector<OrbitTerm> terms;
  std::string_view rest = cleaned;
  while (!rest.empty()) {
    const auto open = rest.find('[');
    const auto close = rest.find(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
      throw std::invalid_argument("malformed expansion near '" + std::string(rest) + "'");
    }
    OrbitTerm term;
    term.coefficient = parse_coefficient(rest.substr(0, open));
    const auto body = rest.substr(open + 1, close - open - 1);
    std::vector<int> points;
    if (body != "-") {
      if (body.find(',') != std::string_view::npos) {
        std::string_view items = body;
        while (!items.empty()) {
          const auto comma = items.find(',');
          const auto item = items.substr(0, comma);
          int v = 0;
          std::from_chars(item.data(), item.data() + item.size(), v);
          points.push_back(v);
          if (comma == std::string_view::npos) break;
          items.remove_prefix(comma + 1);
        }
      } else {
        for (char ch : body) points.push_back(ch - '0');
      }
    }
    for (int p : points) {
      if (p < 1 || p > dim + 1) throw std::invalid_argument("orbit point out of range in expansion");
    }
    term.representative = minimal_rotation(dim, points);
    term.orbit_size = orbit_size(dim, points);
    terms.push_back(std::move(term));
    rest.remove_prefix(close + 1);
  }
  return terms;
}

bool same_terms(int dim, const std::vector<OrbitTerm>& a, const std::vector<OrbitTerm>& b) {
  return diff_terms(dim, a, b).empty();
}

TermDiff diff_terms(int dim, const std::vector<OrbitTerm>& left, const std::vector<OrbitTerm>& right) {
  using Key = std::pair<std::uint64_t, std::string>;
  std::multimap<Key, const OrbitTerm*> pool;
  for (const auto& t : right) pool.emplace(Key{orbit_key(dim, t.representative), t.coefficient.to_string()}, &t);
  TermDiff out;
  for (const auto& t : left) {
    const auto it = pool.find(Key{orbit_key(dim, t.representative), t.coefficient.to_string()});
    if (it == pool.end()) {
      out.only_left.push_back(t);
    } else {
      pool.erase(it);
    }
  }
  for (const auto& [key, t] : pool) out.only_right.push_back(*t);
  return out;
}

std::string TermDiff::to_string(int dim) const {
  const auto render = [dim](const std::vector<OrbitTerm>& terms) {
    if (terms.empty()) return std::string("none");
    std::string s;
    for (const auto& t : terms) {
      if (!s.empty()) s += ' ';
      s += (t.coefficient.sign() < 0 ? "" : "+") + t.coefficient.to_fraction_string() + render_points(dim, t.representative);
    }
    return s;
  };
  return render(only_left) + " / " + render(only_right);
}

CheckOutcome check_expansion_is_whole_space(const PhiFamily& family, const OrbitExpansion& expansion) {
  const int dim = family.dim();
  std::vector<Dyadic> coeff(family.size());
  for (const auto& term : expansion.terms) {
    std::set<std::vector<int>> seen;
    for (int h = 0; h <= dim; ++h) {
      auto pts = rotate_points(dim, term.representative, h);
      if (!seen.insert(pts).second) continue;
      coeff[family.index_of_point(vec_from_subset(dim, pts))] += term.coefficient;
    }
  }
  for (int a = 0; a < family.size(); ++a) {
    Dyadic value;
    for (int b : family.spans_containing(a)) value += coeff[b];
    if (value != Dyadic(1)) {
      return CheckOutcome::fail("expansion takes value " + value.to_string() + " at " + family.eps(a).to_string());
    }
  }
  return CheckOutcome::pass();
}

std::optional<std::string> reference_expansion(int dim) {
  switch (dim) {
    case 2:
      return "[1]-2[-]";
    case 4:
      return "[123]-4[-]";
    case 6:
      return "[1245]+[1235]+[1236]-2[123]-2[135]+4[13]-4[1]+8[-]";
    case 8:
      return "[1246]+[123467]+[124567]-2[1234567]+2[123457]+2[134567]+2[123567]"
             "-2[13457]-2[12357]-2[13567]-4[12345]+4[1235]+4[1238]+4[147]"
             "-8[123]+8[13]-8[14]+16[-]";
    default:
      return std::nullopt;
  }
}

}  // namespace circbasis
