#include "circbasis/export.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>

namespace circbasis {

namespace {

using nlohmann::ordered_json;

struct Cell {
  int row;
  int col;
  BigInt num;
  unsigned exp;
};

// Nonzero entries in linext positions, row-major.
template <class RowEntries>
std::vector<Cell> cells(const PhiFamily& family, RowEntries row_entries) {
  std::vector<Cell> out;
  for (int pos = 0; pos < family.size(); ++pos) {
    auto row = row_entries(family.linext()[pos]);
    std::sort(row.begin(), row.end(), [&](const auto& a, const auto& b) { return family.position(a.first) < family.position(b.first); });
    for (auto& [col, value] : row) out.push_back({pos, family.position(col), value.numerator(), value.exponent()});
  }
  return out;
}

std::vector<std::pair<int, Dyadic>> incidence_row(const IncidenceMatrix& d, int r) {
  std::vector<std::pair<int, Dyadic>> out;
  for (auto c = d.row(r).find_first(); c != boost::dynamic_bitset<>::npos; c = d.row(r).find_next(c)) {
    out.emplace_back(static_cast<int>(c), Dyadic(1));
  }
  return out;
}

template <class T>
std::vector<std::pair<int, Dyadic>> sparse_row(const SparseMatrix<T>& m, int r) {
  std::vector<std::pair<int, Dyadic>> out;
  for (const auto& [c, v] : m.row(r)) out.emplace_back(c, Dyadic(v));
  return out;
}

void write_csv(std::ostream& os, const PhiFamily& family, const std::vector<Cell>& entries) {
  const int n = family.size();
  for (int pos = 0; pos < n; ++pos) os << ',' << csv_escape(family.label(family.linext()[pos]));
  os << '\n';
  std::size_t next = 0;
  for (int r = 0; r < n; ++r) {
    os << csv_escape(family.label(family.linext()[r]));
    for (int c = 0; c < n; ++c) {
      os << ',';
      if (next < entries.size() && entries[next].row == r && entries[next].col == c) {
        os << Dyadic(entries[next].num, entries[next].exp).to_string();
        ++next;
      } else {
        os << '0';
      }
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const PhiFamily& family, const std::vector<Cell>& entries) {
  ordered_json doc;
  doc["dim"] = family.dim();
  auto order = ordered_json::array();
  for (int b : family.linext()) order.push_back(family.label(b));
  doc["order"] = std::move(order);
  auto list = ordered_json::array();
  for (const auto& cell : entries) {
    ordered_json num;
    if (cell.num >= std::numeric_limits<long long>::min() && cell.num <= std::numeric_limits<long long>::max()) {
      num = cell.num.convert_to<long long>();
    } else {
      num = cell.num.str();
    }
    list.push_back(ordered_json::array({cell.row, cell.col, num, cell.exp}));
  }
  doc["entries"] = std::move(list);
  os << doc.dump() << '\n';
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_enum_text(std::ostream& os, const PhiFamily& family) {
  for (int b : family.linext()) {
    os << family.label(b) << '\t' << family.pattern_size(b) << '\t' << family.eps(b).to_string() << '\t'
       << family.span_of(b).rank() << '\n';
  }
}

void write_enum_json(std::ostream& os, const PhiFamily& family) {
  ordered_json doc;
  doc["dim"] = family.dim();
  auto list = ordered_json::array();
  for (int b : family.linext()) {
    list.push_back({{"pattern", family.label(b)},
                    {"size", family.pattern_size(b)},
                    {"epsilon", family.eps(b).support()},
                    {"span_dim", family.span_of(b).rank()}});
  }
  doc["patterns"] = std::move(list);
  os << doc.dump() << '\n';
}

void write_matrix_csv(std::ostream& os, const PhiFamily& family, const IncidenceMatrix& d) {
  write_csv(os, family, cells(family, [&](int r) { return incidence_row(d, r); }));
}
void write_matrix_csv(std::ostream& os, const PhiFamily& family, const IntMatrix& m) {
  write_csv(os, family, cells(family, [&](int r) { return sparse_row(m, r); }));
}
void write_matrix_csv(std::ostream& os, const PhiFamily& family, const DyadicMatrix& m) {
  write_csv(os, family, cells(family, [&](int r) { return sparse_row(m, r); }));
}
void write_matrix_json(std::ostream& os, const PhiFamily& family, const IncidenceMatrix& d) {
  write_json(os, family, cells(family, [&](int r) { return incidence_row(d, r); }));
}
void write_matrix_json(std::ostream& os, const PhiFamily& family, const IntMatrix& m) {
  write_json(os, family, cells(family, [&](int r) { return sparse_row(m, r); }));
}
void write_matrix_json(std::ostream& os, const PhiFamily& family, const DyadicMatrix& m) {
  write_json(os, family, cells(family, [&](int r) { return sparse_row(m, r); }));
}

void write_poset_dot(std::ostream& os, const PhiFamily& family) {
  os << "digraph phi_D" << family.dim() << " {\n  rankdir=BT;\n";
  for (int pos = 0; pos < family.size(); ++pos) {
    const int b = family.linext()[pos];
    os << "  n" << pos << " [label=\"" << dot_escape(family.label(b)) << "\\neps=" << family.eps(b).to_string()
       << "\"];\n";
  }
  for (const auto& [lower, upper] : family.covers()) {
    os << "  n" << family.position(lower) << " -> n" << family.position(upper) << ";\n";
  }
  os << "}\n";
}

}  // namespace circbasis
