#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hopfrec/scalar.hpp"

namespace hopfrec {

/// Dense row-major matrix over Scalar. Entries are promoted to a common
/// conductor on construction; results of arithmetic inherit promotion from
/// Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& s);
  /// Single column holding v.
  static Matrix column(std::vector<Scalar> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<Scalar>& entries() const { return data_; }

  /// Least common multiple of entry conductors.
  int conductor() const;

  Matrix transpose() const;
  std::vector<Scalar> col(std::size_t j) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_identity() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with the pivot columns, left to right.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Right null space. Columns of the result form the unique reduced column
/// echelon basis: scanning rows top to bottom, each column has a leading 1
/// in a row where every other column is 0.
Matrix mat_kernel(const Matrix& m);

/// X with A X = B, or nullopt when the system is inconsistent. Free
/// variables are set to zero, so the answer is deterministic.
std::optional<Matrix> mat_solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Kronecker product with (A (x) B)[i*rB + k, j*cB + l] = A[i,j] B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

/// Block diagonal sum in the given order.
Matrix direct_sum(const std::vector<Matrix>& blocks);

}  // namespace hopfrec
