#pragma once

#include "algkit/algebra.hpp"
#include "algkit/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace algkit {

/// Γ(A) = {φ : φ(xy) = φ(x)y = xφ(y)} as a subspace of flattened n×n matrices.
struct CentroidSpace {
  StructureConstants algebra;
  Subspace space;

  std::size_t dim() const noexcept { return space.dim(); }
  std::vector<RationalMatrix> basis_matrices() const;
};

/// C(A) = Γ(A) ∩ Der(A), plus the definitional characterizations
/// (φ(A) ⊆ Z and φ(A²) = 0) computed independently for both readings of Z.
struct CentralDerivationSpace {
  StructureConstants algebra;
  Subspace space;
  /// φ(A) inside the annihilator center and φ(A²) = 0.
  Subspace annihilator_definition;
  /// φ(A) inside the commutant center and φ(A²) = 0.
  Subspace commutant_definition;

  std::size_t dim() const noexcept { return space.dim(); }
  bool agrees_with_annihilator_definition() const { return space == annihilator_definition; }
  bool agrees_with_commutant_definition() const { return space == commutant_definition; }
  std::vector<RationalMatrix> basis_matrices() const;
};

/// 2n^3 × n^2 system over the unknowns a(p,q): the n^3 left rows (i, j, p)
///   sum_k g(i,j,k) a(p,k) - sum_k a(k,i) g(k,j,p) = 0      [φ(e_i e_j) = φ(e_i) e_j]
/// followed by the n^3 right rows
///   sum_k g(i,j,k) a(p,k) - sum_k a(k,j) g(i,k,p) = 0      [φ(e_i e_j) = e_i φ(e_j)]
RationalMatrix centroid_constraint_matrix(const StructureConstants& sc);

CentroidSpace centroid(const StructureConstants& sc);

bool is_centroidal(const StructureConstants& sc, const RationalMatrix& phi);

CentralDerivationSpace central_derivations(const StructureConstants& sc);

/// Outcome of checking the composition properties that tie Der(A) and Γ(A)
/// together, over every pair (d, φ) of basis elements.
struct CompositionReport {
  struct Failure {
    std::size_t derivation_index;
    std::size_t centroid_index;
    std::string check;
  };

  std::size_t pairs_checked = 0;
  /// Pairs where d∘φ lies in Γ(A); each of these must have φ∘d in C(A).
  std::size_t composition_in_centroid = 0;
  std::vector<Failure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// For every (d, φ) in Der-basis × Γ-basis: φ∘d ∈ Der(A), and
/// [d∘φ ∈ Γ(A)] ⇔ [φ∘d ∈ C(A)].
CompositionReport verify_centroid_derivation_props(const StructureConstants& sc);

}  // namespace algkit
