#pragma once

#include <iosfwd>
#include <string>

#include "hadamard/matrix.hpp"

namespace hadamard {

// Matrix text format, row-major:
//   order 4
//   ++++
//   +-+-
//   ++--
//   +--+
// The first line is the literal word "order" followed by the order; a bare
// integer is also accepted on input. Entry 1 is written '+', entry -1 '-'.

SignMatrix read_sign_matrix(std::istream& in);
SignMatrix read_sign_matrix_file(const std::string& path);

void write_sign_matrix(std::ostream& out, const SignMatrix& m);
std::string to_text(const SignMatrix& m);

}  // namespace hadamard
