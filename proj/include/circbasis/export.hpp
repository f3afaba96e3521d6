// Text exports: enumeration listings, CSV/JSON matrices and the Hasse
// diagram in DOT. Rows and columns always follow the family's linear
// extension and are labelled with pattern text.
#pragma once

#include "circbasis/matrices.hpp"
#include "circbasis/phi_family.hpp"

#include <ostream>
#include <string>

namespace circbasis {

// One line per pattern: label, |B|, eps(B), dim<B>, tab separated.
void write_enum_text(std::ostream& os, const PhiFamily& family);
void write_enum_json(std::ostream& os, const PhiFamily& family);

// CSV: header row and first column hold labels; integers print plainly and
// dyadic entries as "p/2^t".
void write_matrix_csv(std::ostream& os, const PhiFamily& family, const IncidenceMatrix& d);
void write_matrix_csv(std::ostream& os, const PhiFamily& family, const IntMatrix& m);
void write_matrix_csv(std::ostream& os, const PhiFamily& family, const DyadicMatrix& m);

// {"dim": D, "order": [labels], "entries": [[row, col, num, exp], ...]} with
// row/col positions in "order". num is a JSON integer when it fits in 64
// bits and a decimal string otherwise.
void write_matrix_json(std::ostream& os, const PhiFamily& family, const IncidenceMatrix& d);
void write_matrix_json(std::ostream& os, const PhiFamily& family, const IntMatrix& m);
void write_matrix_json(std::ostream& os, const PhiFamily& family, const DyadicMatrix& m);

// Hasse diagram; edges point from the smaller to the larger pattern.
void write_poset_dot(std::ostream& os, const PhiFamily& family);

std::string csv_escape(const std::string& field);

}  // namespace circbasis
