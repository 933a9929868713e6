#include "algkit/linalg.hpp"

#include "algkit/errors.hpp"

#include <string>
#include <utility>

namespace algkit {

RrefResult rref(const RationalMatrix& m) {
  RrefResult out{m, {}};
  RationalMatrix& a = out.matrix;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && a(r, c) == 0) ++r;
    if (r == rows) continue;

    if (r != pivot_row) {
      auto lhs = a.row(r);
      auto rhs = a.row(pivot_row);
      std::swap_ranges(lhs.begin(), lhs.end(), rhs.begin());
    }

    const Rational inv = 1 / a(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j) a(pivot_row, j) *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || a(i, c) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= factor * a(pivot_row, j);
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank(); }

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square())
    throw ShapeError("inverse of non-square " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " matrix");
  const std::size_t n = m.rows();
  const RrefResult r = rref(m.hstack(RationalMatrix::identity(n)));
  if (r.rank() < n || (n > 0 && r.pivot_columns[n - 1] != n - 1)) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim, RationalMatrix independent_basis)
    : ambient_dim_(ambient_dim), basis_(std::move(independent_basis)) {
  const RrefResult r = rref(basis_.transpose());
  canonical_ = RationalMatrix(ambient_dim_, r.rank());
  for (std::size_t k = 0; k < r.rank(); ++k)
    for (std::size_t i = 0; i < ambient_dim_; ++i) canonical_(i, k) = r.matrix(k, i);
  pivot_rows_ = r.pivot_columns;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, RationalMatrix(ambient_dim, 0));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(ambient_dim, RationalMatrix::identity(ambient_dim));
}

Subspace Subspace::span(const RationalMatrix& generators) {
  const RrefResult r = rref(generators);
  RationalMatrix independent(generators.rows(), r.rank());
  for (std::size_t k = 0; k < r.rank(); ++k)
    for (std::size_t i = 0; i < generators.rows(); ++i)
      independent(i, k) = generators(i, r.pivot_columns[k]);
  return Subspace(generators.rows(), std::move(independent));
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const RationalVector> generators) {
  return span(RationalMatrix::from_columns(ambient_dim, generators));
}

std::vector<RationalVector> Subspace::basis_vectors() const {
  std::vector<RationalVector> out;
  out.reserve(dim());
  for (std::size_t c = 0; c < dim(); ++c) out.push_back(basis_.column(c));
  return out;
}

Subspace kernel_basis(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivot_columns) is_pivot[c] = true;

  RationalMatrix basis(n, n - r.rank());
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t row = 0; row < r.rank(); ++row)
      basis(r.pivot_columns[row], k) = -r.matrix(row, free);
    ++k;
  }
  return Subspace(n, std::move(basis));
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatchError(std::string(op) + " of subspaces of Q^" +
                               std::to_string(a.ambient_dim()) + " and Q^" +
                               std::to_string(b.ambient_dim()));
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersection");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());

  // A x = B y  <=>  [A | -B] (x, y) = 0; the intersection is spanned by A x.
  const Subspace pairs = kernel_basis(a.basis().hstack(b.basis() * Rational(-1)));
  RationalMatrix generators(a.ambient_dim(), pairs.dim());
  for (std::size_t k = 0; k < pairs.dim(); ++k)
    for (std::size_t i = 0; i < a.ambient_dim(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < a.dim(); ++j) s += a.basis()(i, j) * pairs.basis()(j, k);
      generators(i, k) = s;
    }
  return Subspace::span(generators);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  return Subspace::span(a.basis().hstack(b.basis()));
}

bool contains(const Subspace& space, std::span<const Rational> v) {
  if (v.size() != space.ambient_dim())
    throw ShapeError("vector of length " + std::to_string(v.size()) + " tested against Q^" +
                     std::to_string(space.ambient_dim()));
  RationalVector residual(v.begin(), v.end());
  const RationalMatrix& c = space.canonical();
  for (std::size_t k = 0; k < space.dim(); ++k) {
    const Rational coeff = residual[space.pivot_rows()[k]];
    if (coeff == 0) continue;
    for (std::size_t i = 0; i < residual.size(); ++i)
      if (c(i, k) != 0) residual[i] -= coeff * c(i, k);
  }
  return is_zero(residual);
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "inclusion test");
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!contains(b, a.basis().column(k))) return false;
  return true;
}

bool is_nilpotent_matrix(const RationalMatrix& m) {
  if (!m.is_square())
    throw ShapeError("nilpotency test needs a square matrix, got " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()));
  const std::size_t n = m.rows();
  RationalMatrix power = m;
  for (std::size_t exponent = 1; exponent < n; exponent *= 2) power = power * power;
  return power.is_zero();
}

}  // namespace algkit
