#pragma once

#include <stdexcept>
#include <string>

namespace tkh {

// Base for every error raised by the library. The CLI maps MathError to exit
// code 1 and everything else to 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MathError : public Error {
 public:
  using Error::Error;
};

class DivisionError : public Error {
 public:
  DivisionError(const std::string& what, std::string remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class SeriesBaseError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class ScaleError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

class FinitenessError : public Error {
 public:
  using Error::Error;
};

class ModelError : public MathError {
 public:
  using MathError::MathError;
};

class CutoffError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public MathError {
 public:
  ConsistencyError(const std::string& what, std::string residual)
      : MathError(what), residual_(std::move(residual)) {}
  const std::string& residual() const { return residual_; }

 private:
  std::string residual_;
};

class GradingError : public Error {
 public:
  using Error::Error;
};

class FormulaError : public MathError {
 public:
  using MathError::MathError;
};

class NotCyclotomicError : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace tkh
