#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>
#include <complex>

namespace gencheb {

/// Root of every error raised by the library. Callers that only need a
/// message can catch this; the subclasses carry structured detail.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class RepeatedEigenvalue : public Error {
 public:
  using Error::Error;
};

class ZeroSpectrum : public Error {
 public:
  using Error::Error;
};

class DivergentSpectrum : public Error {
 public:
  using Error::Error;
};

class NonRealResult : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyWindow : public Error {
 public:
  using Error::Error;
};

class ZeroDiagonal : public Error {
 public:
  explicit ZeroDiagonal(std::size_t row)
      : Error("zero (or negligible) diagonal entry in row " + std::to_string(row)),
        row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class InadmissibleSpectrum : public Error {
 public:
  InadmissibleSpectrum(std::string what, std::vector<std::complex<double>> offenders)
      : Error(std::move(what)), offenders_(std::move(offenders)) {}
  const std::vector<std::complex<double>>& offenders() const noexcept { return offenders_; }

 private:
  std::vector<std::complex<double>> offenders_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

}  // namespace gencheb
