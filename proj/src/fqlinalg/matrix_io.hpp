#pragma once

#include <iosfwd>
#include <string>

#include "fqlinalg/matrix.hpp"

namespace starprod::fq {

// Text format: first data line "q rows cols", then `rows` lines of `cols`
// integers in [0, q). Blank lines and lines starting with '#' are skipped.
// Errors: Parse on malformed input, plus the Field/Mat construction errors.
Mat read_matrix(std::istream& in);
Mat read_matrix_file(const std::string& path);  // Errors: Io.
Mat parse_matrix(const std::string& text);

void write_matrix(std::ostream& out, const Mat& m);
std::string format_matrix(const Mat& m);

}  // namespace starprod::fq
