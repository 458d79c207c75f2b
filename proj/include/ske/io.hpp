#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ske/electre.hpp"

namespace ske {

// Shortest round-trip decimal form (std::to_chars); CSV output built from
// this is byte-stable across runs and thread counts.
std::string fmt_double(double v);

// Decision-matrix CSV: header "node,<name1>,<name2>,...", one row per node,
// first field the node label. Returns the matrix plus the labels column.
struct MatrixFile {
    DecisionMatrix matrix;
    std::vector<std::string> labels;
};
MatrixFile read_decision_matrix_csv(std::istream& in);
MatrixFile read_decision_matrix_csv_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

} // namespace ske
