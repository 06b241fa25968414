#include "robinf/matrix.hpp"

#include <ostream>
#include <sstream>

#include "robinf/errors.hpp"

namespace robinf {
namespace {

void require_same_length(const RatVector& x, const RatVector& y, const char* what) {
  if (x.size() != y.size()) {
    throw DimensionError(std::string(what) + ": length " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
  }
}

}  // namespace

RatVector::RatVector(std::size_t size) : entries_(size) {
  if (size == 0) throw DimensionError("RatVector must have at least one entry");
}

RatVector::RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("RatVector must have at least one entry");
}

RatVector::RatVector(std::initializer_list<Rational> entries)
    : RatVector(std::vector<Rational>(entries)) {}

bool RatVector::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Rational RatVector::sum() const {
  Rational total;
  for (const auto& x : entries_) total += x;
  return total;
}

RatVector& RatVector::operator+=(const RatVector& rhs) {
  require_same_length(*this, rhs, "vector addition");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& rhs) {
  require_same_length(*this, rhs, "vector subtraction");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& scale) {
  for (auto& x : entries_) x *= scale;
  return *this;
}

std::string RatVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += entries_[i].str();
  }
  return out;
}

Rational dot(const RatVector& x, const RatVector& y) {
  require_same_length(x, y, "inner product");
  Rational total;
  for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * y[i];
  return total;
}

std::ostream& operator<<(std::ostream& os, const RatVector& v) { return os << '(' << v.str() << ')'; }

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("RatMatrix must be at least 1x1");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RatMatrix(from_rows(std::vector<std::vector<Rational>>(rows.begin(), rows.end()))) {}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) throw DimensionError("RatMatrix must be at least 1x1");
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw DimensionError("ragged matrix: row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(m.cols_));
    }
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows) {
  std::vector<std::vector<Rational>> grid;
  grid.reserve(rows.size());
  for (const auto& r : rows) grid.emplace_back(r.begin(), r.end());
  return from_rows(grid);
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(std::vector<Rational>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                         entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::hconcat(const RatMatrix& rhs) const {
  if (rhs.rows_ != rows_) throw DimensionError("hconcat: row counts differ");
  RatMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

RatMatrix RatMatrix::vconcat(const RatMatrix& rhs) const {
  if (rhs.cols_ != cols_) throw DimensionError("vconcat: column counts differ");
  RatMatrix out(rows_ + rhs.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(rhs.entries_.begin(), rhs.entries_.end(),
            out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return out;
}

RatMatrix RatMatrix::col_block(std::size_t first, std::size_t count) const {
  if (count == 0 || first + count > cols_) throw DimensionError("col_block out of range");
  RatMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

RatVector RatMatrix::row_sums() const {
  RatVector sums(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[r] += (*this)(r, c);
  return sums;
}

RatVector RatMatrix::col_sums() const {
  RatVector sums(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[c] += (*this)(r, c);
  return sums;
}

bool RatMatrix::has_negative_entry() const {
  for (const auto& x : entries_) {
    if (x.sign() < 0) return true;
  }
  return false;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << '\n';
    os << row(r).str();
  }
  return os.str();
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("matrix product: " + std::to_string(lhs.rows()) + "x" +
                         std::to_string(lhs.cols()) + " times " + std::to_string(rhs.rows()) +
                         "x" + std::to_string(rhs.cols()));
  }
  RatMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational& a = lhs(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) {
    throw DimensionError("matrix-vector product: " + std::to_string(m.cols()) + " columns, vector length " +
                         std::to_string(v.size()));
  }
  RatVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return os << m.str(); }

}  // namespace robinf
