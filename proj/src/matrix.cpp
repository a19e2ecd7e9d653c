#include "hopfrec/matrix.hpp"

#include <numeric>
#include <sstream>

#include "hopfrec/errors.hpp"

namespace hopfrec {

namespace {

void promote_all(std::vector<Scalar>& v) {
  int m = 1;
  for (const auto& s : v) m = std::lcm(m, s.conductor());
  if (m == 1) return;
  for (auto& s : v)
    if (s.conductor() != m) s = s.promoted(m);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw ShapeError("matrix entry count " + std::to_string(data_.size()) +
                     " does not match " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  promote_all(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  promote_all(data_);
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::column(std::vector<Scalar> v) {
  const std::size_t n = v.size();
  return Matrix(n, 1, std::move(v));
}

int Matrix::conductor() const {
  int m = 1;
  for (const auto& s : data_) m = std::lcm(m, s.conductor());
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw ShapeError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& s = (*this)(i, j);
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ShapeError("matrix difference shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw ShapeError("matrix product " + std::to_string(a.rows_) + "x" +
                     std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                     "x" + std::to_string(b.cols_));
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Echelon row_reduce(Matrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix mat_kernel(const Matrix& m) {
  const Echelon e = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  const std::size_t nullity = n - e.pivots.size();
  // Free-variable basis: one vector per free column.
  Matrix basis_rows(nullity, n);
  std::size_t k = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis_rows(k, f) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis_rows(k, e.pivots[r]) = -e.reduced(r, f);
    ++k;
  }
  // Canonicalize the span: row-reduce the basis vectors as rows.
  return row_reduce(std::move(basis_rows)).reduced.transpose();
}

std::optional<Matrix> mat_solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("mat_solve: row count mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() >= n) return std::nullopt;
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return mat_solve(m, Matrix::identity(m.rows()));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return c;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix out(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace hopfrec
