#pragma once

#include "algkit/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace algkit {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-wise literal, e.g. {{1, 2}, {3, 4}}. All rows must have equal length.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(std::size_t rows, std::span<const RationalVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  RationalVector column(std::size_t c) const;
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  RationalMatrix transpose() const;
  /// Rows stacked on top of `below` (column counts must agree).
  RationalMatrix vstack(const RationalMatrix& below) const;
  /// Columns of `right` appended (row counts must agree).
  RationalMatrix hstack(const RationalMatrix& right) const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(RationalMatrix a, const Rational& s);
RationalMatrix operator*(const Rational& s, RationalMatrix a);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> v);

/// Commutator a·b − b·a.
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

bool is_zero(std::span<const Rational> v);

// Endomorphisms of an n-dimensional space are flattened column-major:
// entry (p, q) (row p, column q; column q holds the image of e_q) sits at
// index q*n + p. Every module uses this one coordinatization.
std::size_t flat_index(std::size_t n, std::size_t row, std::size_t col);
RationalVector flatten(const RationalMatrix& m);
RationalMatrix unflatten(std::span<const Rational> v, std::size_t n);

}  // namespace algkit
