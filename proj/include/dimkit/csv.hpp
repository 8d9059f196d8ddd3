#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dimkit/types.hpp"

namespace dimkit {

/// Shortest round-trip decimal form of a double; infinities render as
/// "inf" / "-inf".
std::string format_double(double value);

/// Comma-separated numeric matrix. Lines starting with '#' are skipped; a
/// non-numeric first line is treated as a header and skipped.
Matrix read_csv_matrix(std::istream& in);
Matrix read_csv_matrix_file(const std::string& path);

/// Writes the matrix with format_double per entry; optional header y1..yd.
void write_csv_matrix(std::ostream& out, const Matrix& m, bool header = false);
void write_csv_matrix_file(const std::string& path, const Matrix& m,
                           bool header = false);

/// Single integer column.
Labels read_csv_labels_file(const std::string& path);

}  // namespace dimkit
