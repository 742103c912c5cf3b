#pragma once

#include <iosfwd>
#include <string>

#include "ripbound/matrix.hpp"

namespace ripbound {

/// Text format: first non-comment line "m n", then m lines of n
/// whitespace-separated decimal literals. Lines starting with '#' are
/// comments. LF endings, trailing newline optional.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

/// Writes the same format at 17 significant digits, so a round trip
/// reproduces the doubles bit for bit.
void write_matrix(std::ostream& out, const Matrix& M);
void write_matrix_file(const std::string& path, const Matrix& M);

/// Shortest-faithful decimal rendering of a double (%.17g).
std::string format_g17(double v);

}  // namespace ripbound
