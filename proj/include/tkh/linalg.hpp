#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tkh/rational.hpp"

namespace tkh {

// Dense row-major matrix over Q; sizes here stay in the hundreds.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  bool is_zero() const;
  bool is_symmetric() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(Matrix m);
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);
Rational determinant(Matrix m);

}  // namespace tkh
