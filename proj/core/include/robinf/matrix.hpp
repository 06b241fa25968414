#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "robinf/rational.hpp"

namespace robinf {

/// Dense exact vector; never empty.
class RatVector {
 public:
  using value_type = Rational;
  using iterator = std::vector<Rational>::iterator;
  using const_iterator = std::vector<Rational>::const_iterator;

  /// `size` zeros.
  explicit RatVector(std::size_t size);
  explicit RatVector(std::vector<Rational> entries);
  RatVector(std::initializer_list<Rational> entries);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }

  iterator begin() { return entries_.begin(); }
  iterator end() { return entries_.end(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const;
  Rational sum() const;

  RatVector& operator+=(const RatVector& rhs);
  RatVector& operator-=(const RatVector& rhs);
  RatVector& operator*=(const Rational& scale);

  friend RatVector operator+(RatVector lhs, const RatVector& rhs) { return lhs += rhs; }
  friend RatVector operator-(RatVector lhs, const RatVector& rhs) { return lhs -= rhs; }
  friend RatVector operator*(RatVector v, const Rational& scale) { return v *= scale; }
  friend RatVector operator*(const Rational& scale, RatVector v) { return v *= scale; }

  friend bool operator==(const RatVector&, const RatVector&) = default;
  friend auto operator<=>(const RatVector&, const RatVector&) = default;

  /// Space-separated literals, e.g. "1/3 2/3 0".
  std::string str() const;

 private:
  std::vector<Rational> entries_;
};

/// Inner product. Throws DimensionError on length mismatch.
Rational dot(const RatVector& x, const RatVector& y);

std::ostream& operator<<(std::ostream& os, const RatVector& v);

/// Dense row-major exact matrix with at least one row and one column.
class RatMatrix {
 public:
  /// rows x cols zeros.
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  /// Throws DimensionError when the grid is empty or ragged.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix from_rows(std::span<const RatVector> rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;
  RatMatrix transpose() const;

  /// Columns [0, cols) of *this followed by the columns of rhs.
  RatMatrix hconcat(const RatMatrix& rhs) const;
  /// Rows of *this followed by the rows of rhs.
  RatMatrix vconcat(const RatMatrix& rhs) const;
  /// Columns [first, first + count).
  RatMatrix col_block(std::size_t first, std::size_t count) const;

  RatVector row_sums() const;
  RatVector col_sums() const;
  bool has_negative_entry() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  /// One row per line, entries separated by a single space.
  std::string str() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
RatVector operator*(const RatMatrix& m, const RatVector& v);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace robinf
