#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gencheb/linalg.hpp"
#include "gencheb/trace.hpp"

namespace gencheb::io {

/// Reads a real general Matrix Market file, `array` (column-major) or
/// `coordinate` (1-based), into dense storage. Throws ParseError with the
/// offending line number, or UnsupportedField for anything other than a
/// real (or integer) general matrix.
DenseMatrix read_matrix_market(std::istream& in);
DenseMatrix read_matrix_market(const std::filesystem::path& path);

/// A right-hand side, solution or offset vector: an n x 1 Matrix Market file.
DenseVector read_vector(std::istream& in);
DenseVector read_vector(const std::filesystem::path& path);

/// Writes `array real general` with round-trip precision. Only real parts are
/// written; a matrix with nonzero imaginary parts is rejected.
void write_matrix_market(std::ostream& out, const DenseMatrix& a);
void write_matrix_market(const std::filesystem::path& path, const DenseMatrix& a);
void write_vector(std::ostream& out, const DenseVector& v);
void write_vector(const std::filesystem::path& path, const DenseVector& v);

/// Parses `re`, `re+imi`, `re-imi` or `imi` (e.g. "0.2+0.333333i").
Scalar parse_scalar(std::string_view text);
std::string format_scalar(Scalar z, int precision = 12);

/// Trace CSV: header `m,x_1..x_n,residual,error,c1_re,c1_im,c2_re,c2_im,c3_re,c3_im`,
/// one row per iteration index; unknown or inapplicable cells are blank.
/// Iterate columns carry real parts.
void write_trace_csv(std::ostream& out, const IterationTrace& trace);

struct TraceRow {
  std::size_t m = 0;
  std::vector<double> x;
  double residual = 0.0;
  std::optional<double> error;
  std::optional<Scalar> c1, c2, c3;
};

std::vector<TraceRow> read_trace_csv(std::istream& in);

}  // namespace gencheb::io
