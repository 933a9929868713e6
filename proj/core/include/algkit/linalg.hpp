#pragma once

#include "algkit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace algkit {

struct RrefResult {
  RationalMatrix matrix;
  std::vector<std::size_t> pivot_columns;  // increasing

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Reduced row echelon form. Pivots are the first nonzero entry found in
/// each column; no magnitude pivoting is needed in exact arithmetic.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Inverse of a square matrix, or nullopt when it is singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// A linear subspace of Q^ambient_dim.
///
/// `basis()` holds linearly independent columns in the order they were
/// produced (for kernels: one vector per free variable, free variable set to
/// 1). `canonical()` is the column-reduced echelon form of the same space:
/// each column has a leading 1 at its pivot row and every other canonical
/// column is zero in that row. Two subspaces are equal iff their canonical
/// forms are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the columns of `generators`, which may be dependent.
  static Subspace span(const RationalMatrix& generators);
  static Subspace span(std::size_t ambient_dim, std::span<const RationalVector> generators);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const RationalMatrix& basis() const noexcept { return basis_; }
  const RationalMatrix& canonical() const noexcept { return canonical_; }
  /// Row index of each canonical column's leading 1.
  const std::vector<std::size_t>& pivot_rows() const noexcept { return pivot_rows_; }
  std::vector<RationalVector> basis_vectors() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.canonical_ == b.canonical_;
  }

 private:
  friend Subspace kernel_basis(const RationalMatrix& m);
  Subspace(std::size_t ambient_dim, RationalMatrix independent_basis);

  std::size_t ambient_dim_ = 0;
  RationalMatrix basis_;
  RationalMatrix canonical_;
  std::vector<std::size_t> pivot_rows_;
};

/// {x : m x = 0}, with dim = cols(m) - rank(m).
Subspace kernel_basis(const RationalMatrix& m);

/// a ∩ b. Throws AmbientMismatchError when the ambient dimensions differ.
Subspace intersect(const Subspace& a, const Subspace& b);

/// a + b. Throws AmbientMismatchError when the ambient dimensions differ.
Subspace sum(const Subspace& a, const Subspace& b);

/// True iff v lies in `space`. Throws ShapeError on a length mismatch.
bool contains(const Subspace& space, std::span<const Rational> v);

/// True iff a ⊆ b.
bool is_subspace_of(const Subspace& a, const Subspace& b);

/// True iff m^n = 0 for the n×n matrix m. Throws ShapeError when m is not square.
bool is_nilpotent_matrix(const RationalMatrix& m);

}  // namespace algkit
