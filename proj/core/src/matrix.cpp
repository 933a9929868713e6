#include "algkit/matrix.hpp"

#include "algkit/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace algkit {

namespace {

std::string shape(const RationalMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw ShapeError("entry count " + std::to_string(entries_.size()) + " does not match " +
                     std::to_string(rows_) + "x" + std::to_string(cols_));
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows,
                                            std::span<const RationalVector> columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw ShapeError("column " + std::to_string(c) + " has length " +
                       std::to_string(columns[c].size()) + ", expected " + std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

bool RationalMatrix::is_zero() const { return algkit::is_zero(entries_); }

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_) throw ShapeError("vstack of " + shape(*this) + " and " + shape(below));
  RationalMatrix m(rows_ + below.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
  std::copy(below.entries_.begin(), below.entries_.end(),
            m.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return m;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& right) const {
  if (right.rows_ != rows_) throw ShapeError("hstack of " + shape(*this) + " and " + shape(right));
  RationalMatrix m(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
  }
  return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw ShapeError("adding " + shape(other) + " to " + shape(*this));
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw ShapeError("subtracting " + shape(other) + " from " + shape(*this));
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("multiplying " + shape(a) + " by " + shape(b));
  RationalMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size())
    throw ShapeError("multiplying " + shape(a) + " by vector of length " + std::to_string(v.size()));
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (v[k] != 0) out[i] += a(i, k) * v[k];
  return out;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::size_t flat_index(std::size_t n, std::size_t row, std::size_t col) { return col * n + row; }

RationalVector flatten(const RationalMatrix& m) {
  if (!m.is_square()) throw ShapeError("flatten expects a square matrix, got " + shape(m));
  const std::size_t n = m.rows();
  RationalVector v(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) v[flat_index(n, p, q)] = m(p, q);
  return v;
}

RationalMatrix unflatten(std::span<const Rational> v, std::size_t n) {
  if (v.size() != n * n)
    throw ShapeError("cannot reshape vector of length " + std::to_string(v.size()) + " to " +
                     std::to_string(n) + "x" + std::to_string(n));
  RationalMatrix m(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) m(p, q) = v[flat_index(n, p, q)];
  return m;
}

}  // namespace algkit
