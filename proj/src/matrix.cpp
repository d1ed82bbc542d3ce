#include "orthomat/matrix.hpp"

#include <algorithm>
#include <set>

#include "orthomat/errors.hpp"

namespace orthomat {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

RationalMatrix RationalMatrix::from_ints(std::size_t rows, std::size_t cols,
                                         std::initializer_list<long> values) {
  if (values.size() != rows * cols) throw DimensionError("value count does not match shape");
  RationalMatrix m(rows, cols);
  std::size_t i = 0;
  for (long v : values) m.data_[i++] = v;
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw IndexError("matrix index out of range");
  return (*this)(r, c);
}

void RationalMatrix::set_labels(std::vector<GroundElement> labels) {
  if (labels.size() != cols_) throw InvariantError("label count differs from column count");
  std::set<GroundElement> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw InvariantError("column labels are not distinct");
  labels_ = std::move(labels);
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void RationalMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  if (labels_) std::swap((*labels_)[a], (*labels_)[b]);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::columns(std::span<const std::size_t> which) const {
  RationalMatrix out(rows_, which.size());
  for (std::size_t j = 0; j < which.size(); ++j) {
    if (which[j] >= cols_) throw IndexError("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, which[j]);
  }
  return out;
}

RationalMatrix RationalMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                                     std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw IndexError("block exceeds matrix");
  RationalMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(row0 + r, col0 + c);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  return out;
}

bool is_symmetric(const RationalMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_skew_symmetric(const RationalMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

SkewSymmetricMatrix::SkewSymmetricMatrix(RationalMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw InvariantError("skew-symmetric matrix must be square");
  if (!is_skew_symmetric(m_)) throw InvariantError("matrix is not skew-symmetric");
}

SkewSymmetricMatrix SkewSymmetricMatrix::from_upper(std::size_t n, const std::vector<Rational>& upper) {
  if (upper.size() != n * (n - (n > 0 ? 1 : 0)) / 2) throw DimensionError("wrong number of upper entries");
  SkewSymmetricMatrix s(n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s.set(i, j, upper[idx++]);
  return s;
}

void SkewSymmetricMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= dim() || j >= dim()) throw IndexError("skew matrix index out of range");
  if (i == j) {
    if (value != 0) throw InvariantError("skew-symmetric diagonal must be zero");
    return;
  }
  m_(i, j) = value;
  m_(j, i) = -value;
}

}  // namespace orthomat
