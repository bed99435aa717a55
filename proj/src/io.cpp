#include "gencheb/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace gencheb::io {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw ParseError("not a finite number: '" + std::string(s) + "'", line);
  }
  return v;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("not a nonnegative integer: '" + tok + "'", line);
  }
  return v;
}

}  // namespace

DenseMatrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty file", 1);
  ++lineno;

  const auto header = split_ws(lower(line));
  if (header.size() != 5 || header[0] != "%%matrixmarket" || header[1] != "matrix") {
    throw ParseError("expected '%%MatrixMarket matrix <format> <field> <symmetry>'", lineno);
  }
  const std::string& format = header[2];
  const std::string& field = header[3];
  const std::string& symmetry = header[4];
  if (format != "array" && format != "coordinate") {
    throw ParseError("unknown format '" + format + "'", lineno);
  }
  if (field != "real" && field != "integer") {
    throw UnsupportedField("unsupported field '" + field + "' (only real general matrices)");
  }
  if (symmetry != "general") {
    throw UnsupportedField("unsupported symmetry '" + symmetry + "' (only general)");
  }

  // Size line, skipping comments and blank lines.
  std::vector<std::string> size_tokens;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line) || line.front() == '%') continue;
    size_tokens = split_ws(line);
    break;
  }
  const bool coordinate = format == "coordinate";
  if (size_tokens.size() != (coordinate ? 3u : 2u)) {
    throw ParseError("malformed size line", lineno);
  }
  const std::size_t rows = parse_index(size_tokens[0], lineno);
  const std::size_t cols = parse_index(size_tokens[1], lineno);
  if (rows == 0 || cols == 0) throw ParseError("matrix dimensions must be positive", lineno);
  const std::size_t expected = coordinate ? parse_index(size_tokens[2], lineno) : rows * cols;

  DenseMatrix a(rows, cols);
  std::size_t seen = 0;
  while (seen < expected && std::getline(in, line)) {
    ++lineno;
    if (blank(line) || line.front() == '%') continue;
    const auto tok = split_ws(line);
    if (coordinate) {
      if (tok.size() != 3) throw ParseError("expected 'row col value'", lineno);
      const std::size_t i = parse_index(tok[0], lineno);
      const std::size_t j = parse_index(tok[1], lineno);
      if (i < 1 || i > rows || j < 1 || j > cols) throw ParseError("index out of range", lineno);
      a(i - 1, j - 1) = parse_double(tok[2], lineno);
    } else {
      if (tok.size() != 1) throw ParseError("expected one value per line", lineno);
      a(seen % rows, seen / rows) = parse_double(tok[0], lineno);
    }
    ++seen;
  }
  if (seen < expected) {
    throw ParseError("expected " + std::to_string(expected) + " entries, found " +
                         std::to_string(seen),
                     lineno);
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank(line) && line.front() != '%') throw ParseError("trailing data", lineno);
  }
  return a;
}

DenseMatrix read_matrix_market(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_matrix_market(in);
}

DenseVector read_vector(std::istream& in) {
  const DenseMatrix a = read_matrix_market(in);
  if (a.cols() != 1) {
    throw ParseError("vector file must have exactly one column, found " +
                         std::to_string(a.cols()),
                     2);
  }
  return a.column(0);
}

DenseVector read_vector(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_vector(in);
}

void write_matrix_market(std::ostream& out, const DenseMatrix& a) {
  if (!a.is_real()) throw InvalidArgument("only real matrices can be written");
  out << "%%MatrixMarket matrix array real general\n";
  out << a.rows() << ' ' << a.cols() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) out << a(i, j).real() << '\n';
}

void write_matrix_market(const std::filesystem::path& path, const DenseMatrix& a) {
  auto out = open_output(path);
  write_matrix_market(out, a);
}

void write_vector(std::ostream& out, const DenseVector& v) {
  DenseMatrix col(v.size(), 1);
  col.set_column(0, v);
  write_matrix_market(out, col);
}

void write_vector(const std::filesystem::path& path, const DenseVector& v) {
  auto out = open_output(path);
  write_vector(out, v);
}

Scalar parse_scalar(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty scalar", 1);

  if (s.back() != 'i') return checked_scalar(parse_double(s, 1));
  s.pop_back();
  // Split at the last sign that is not part of an exponent or the leading sign.
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  auto imag_of = [](std::string part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double(part, 1);
  };
  if (cut == std::string::npos) return checked_scalar(0.0, imag_of(s));
  return checked_scalar(parse_double(s.substr(0, cut), 1), imag_of(s.substr(cut)));
}

std::string format_scalar(Scalar z, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? '-' : '+') << std::abs(z.imag()) << 'i';
  return os.str();
}

void write_trace_csv(std::ostream& out, const IterationTrace& trace) {
  const std::size_t n = trace.iterates.empty() ? 0 : trace.iterates.front().size();
  out << 'm';
  for (std::size_t i = 1; i <= n; ++i) out << ",x_" << i;
  out << ",residual,error,c1_re,c1_im,c2_re,c2_im,c3_re,c3_im\n";

  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  auto cell = [&out](const std::optional<Scalar>& z) {
    out << ',';
    if (z) out << z->real() + 0.0;
    out << ',';
    if (z) out << z->imag() + 0.0;
  };
  for (std::size_t m = 0; m < trace.size(); ++m) {
    out << m;
    for (const auto& z : trace.iterates[m]) out << ',' << z.real();
    out << ',' << trace.residual_norms[m] << ',';
    if (trace.has_errors()) out << trace.error_norms[m];
    std::optional<StepCoefficients> w;
    if (m < trace.coefficients.size()) w = trace.coefficients[m];
    cell(w ? std::optional<Scalar>(w->c1) : std::nullopt);
    cell(w ? std::optional<Scalar>(w->c2) : std::nullopt);
    cell(w ? w->c3 : std::nullopt);
    out << '\n';
  }
}

std::vector<TraceRow> read_trace_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  std::vector<std::string> header;
  {
    std::istringstream ss(line);
    for (std::string tok; std::getline(ss, tok, ',');) header.push_back(tok);
  }
  if (header.size() < 9 || header.front() != "m") throw ParseError("bad trace header", 1);
  const std::size_t n = header.size() - 9;

  std::vector<TraceRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (cells.size() != header.size()) throw ParseError("wrong number of cells", lineno);

    TraceRow row;
    row.m = parse_index(cells[0], lineno);
    for (std::size_t i = 0; i < n; ++i) row.x.push_back(parse_double(cells[1 + i], lineno));
    row.residual = parse_double(cells[1 + n], lineno);
    if (!cells[2 + n].empty()) row.error = parse_double(cells[2 + n], lineno);
    auto pair = [&](std::size_t k) -> std::optional<Scalar> {
      if (cells[k].empty()) return std::nullopt;
      return Scalar(parse_double(cells[k], lineno), parse_double(cells[k + 1], lineno));
    };
    row.c1 = pair(3 + n);
    row.c2 = pair(5 + n);
    row.c3 = pair(7 + n);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gencheb::io
