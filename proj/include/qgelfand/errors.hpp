#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgelfand {

// Arithmetic that has no answer in the field it was asked in.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public MathError {
 public:
  DivisionByZero() : MathError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : MathError(what) {}
};

class SingularMatrix : public MathError {
 public:
  explicit SingularMatrix(std::size_t row)
      : MathError("singular matrix: no pivot for row " + std::to_string(row)), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class NoSeriesAtZero : public MathError {
 public:
  NoSeriesAtZero() : MathError("no series at u=0: denominator vanishes at 0") {}
};

class DivergentLimit : public MathError {
 public:
  DivergentLimit() : MathError("divergent limit: pole at q=1") {}
};

class NotAnEigenvector : public MathError {
 public:
  explicit NotAnEigenvector(std::size_t coordinate)
      : MathError("not an eigenvector: inconsistent at coordinate " + std::to_string(coordinate)),
        coordinate_(coordinate) {}
  std::size_t coordinate() const { return coordinate_; }

 private:
  std::size_t coordinate_;
};

class NoHighestWeight : public MathError {
 public:
  explicit NoHighestWeight(const std::string& what) : MathError(what) {}
};

class RepeatedShiftedWeight : public MathError {
 public:
  explicit RepeatedShiftedWeight(const std::string& what) : MathError(what) {}
};

// Tensor-factor bookkeeping violations (wrong site, mismatched shape).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qgelfand
