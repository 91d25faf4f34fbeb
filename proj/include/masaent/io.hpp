#pragma once

#include <stdexcept>
#include <string>

#include "masaent/matrix.hpp"
#include "masaent/relent.hpp"

namespace masaent {

/// Malformed input documents and unreadable files. Distinct from
/// std::invalid_argument so callers can map "bad document" and "bad
/// mathematics" to different exit codes.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest of 9 significant digits ("%.9g"); reports use it everywhere so
// identical runs produce identical bytes.
std::string format9(double x);

// Matrix documents: {"n": 2, "entries": [[re, im], ...]} with n*n entries
// in row-major order.
CMatrix parse_matrix(const std::string& text);
CMatrix read_matrix_file(const std::string& path);
std::string write_matrix(const CMatrix& m);
void write_file(const std::string& path, const std::string& content);

// Plain list of reals, e.g. [0.7, 0.3].
RVector parse_real_vector(const std::string& text);
std::string write_real_vector(const RVector& v);

// Flat key-value lines: value, closed_form, gap, iterations, seed.
std::string write_report(const VariationalReport& r);

}  // namespace masaent
