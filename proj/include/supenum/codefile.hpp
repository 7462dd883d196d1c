// The on-disk code format.
//
//   # optional comments anywhere
//   field <p> <m> [<c_0> ... <c_m>]   modulus coefficients, only when m > 1
//   length <n>                        optional when generator rows follow
//   <k rows of n element indices>
//
// UTF-8, LF or CRLF.  The `length` line is required for k = 0 files (a
// zero-row body otherwise leaves n undetermined) and must match the row
// length when both are present.
#pragma once

#include <iosfwd>
#include <string>

#include "supenum/code.hpp"

namespace supenum {

struct CodeFile {
    FieldPtr field;
    Matrix generator;  // as given in the file, not canonicalized
};

CodeFile parse_code_file(std::istream& in);
CodeFile parse_code_file_string(const std::string& text);
CodeFile load_code_file(const std::string& path);  // Error on unreadable file

/// Canonical emission: header, length line, generator rows.  Feeding the
/// output back through parse + RREF reproduces the same code.
std::string emit_code_file(const Matrix& generator);
std::string emit_code_file(const LinearCode& code);

}  // namespace supenum
