#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orthomat/ground_set.hpp"
#include "orthomat/rational.hpp"

namespace orthomat {

// Dense row-major matrix of exact rationals. Shapes with zero rows or
// columns are legal.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  // Throws DimensionError if the rows are ragged.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long> values);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  // Bounds-checked access; throws IndexError.
  const Rational& at(std::size_t r, std::size_t c) const;

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::optional<std::vector<GroundElement>>& labels() const { return labels_; }
  // Throws InvariantError unless labels.size() == cols() and pairwise distinct.
  void set_labels(std::vector<GroundElement> labels);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  RationalMatrix transpose() const;
  RationalMatrix columns(std::span<const std::size_t> which) const;
  RationalMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
  std::optional<std::vector<GroundElement>> labels_;
};

bool is_symmetric(const RationalMatrix& m);
bool is_skew_symmetric(const RationalMatrix& m);

// Square matrix with a_ij = -a_ji and zero diagonal; indices are 0-based in
// code, 1-based in I.
class SkewSymmetricMatrix {
 public:
  SkewSymmetricMatrix() = default;
  explicit SkewSymmetricMatrix(std::size_t n) : m_(n, n) {}
  // Throws InvariantError if `m` is not skew-symmetric.
  explicit SkewSymmetricMatrix(RationalMatrix m);
  // Builds from the strict upper triangle a12, a13, ..., a1n, a23, ...
  static SkewSymmetricMatrix from_upper(std::size_t n, const std::vector<Rational>& upper);

  std::size_t dim() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  // Sets a_ij and a_ji = -value together.
  void set(std::size_t i, std::size_t j, const Rational& value);
  const RationalMatrix& matrix() const { return m_; }

  friend bool operator==(const SkewSymmetricMatrix&, const SkewSymmetricMatrix&) = default;

 private:
  RationalMatrix m_;
};

}  // namespace orthomat
