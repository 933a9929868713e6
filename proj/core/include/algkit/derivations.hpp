#pragma once

#include "algkit/algebra.hpp"
#include "algkit/linalg.hpp"

#include <cstddef>
#include <vector>

namespace algkit {

/// Der(A) as a subspace of flattened n×n matrices (column-major, see flatten()).
struct DerivationSpace {
  StructureConstants algebra;
  Subspace space;

  std::size_t dim() const noexcept { return space.dim(); }
  /// Basis vectors reshaped to n×n matrices, in kernel order.
  std::vector<RationalMatrix> basis_matrices() const;
};

/// Leibniz system over the unknowns d(p,q): one row per (i, j, p) in
/// lexicographic order,
///   sum_k g(i,j,k) d(p,k) - sum_k d(k,i) g(k,j,p) - sum_k d(k,j) g(i,k,p) = 0,
/// i.e. the p-th coordinate of d(e_i e_j) - d(e_i) e_j - e_i d(e_j).
/// Shape n^3 × n^2.
RationalMatrix derivation_constraint_matrix(const StructureConstants& sc);

DerivationSpace derivations(const StructureConstants& sc);

/// Membership test against the Leibniz system.
bool is_derivation(const StructureConstants& sc, const RationalMatrix& d);

/// Operator form: [D, L_{e_i}] = L_{D e_i} and [D, R_{e_i}] = R_{D e_i} for
/// every basis vector. Equivalent to is_derivation; kept as an independent
/// cross-check. Throws ShapeError when D is not n×n.
bool verify_theorem_p2(const StructureConstants& sc, const RationalMatrix& d);

/// True iff [D_a, D_b] lies in the space for every pair of basis elements.
bool bracket_closure_check(const DerivationSpace& ds);

}  // namespace algkit
