#include "algkit/centroid.hpp"

#include "algkit/derivations.hpp"
#include "algkit/errors.hpp"

namespace algkit {

namespace {

std::vector<RationalMatrix> reshape_all(const Subspace& s, std::size_t n) {
  std::vector<RationalMatrix> out;
  for (const RationalVector& v : s.basis_vectors()) out.push_back(unflatten(v, n));
  return out;
}

/// Rows forcing φ(A²) = 0: for each (i, j, p), sum_k g(i,j,k) a(p,k) = 0.
RationalMatrix kills_square_rows(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  RationalMatrix m(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t k = 0; k < n; ++k)
          m((i * n + j) * n + p, flat_index(n, p, k)) = sc.gamma(i, j, k);
  return m;
}

/// Rows forcing φ(e_q) ∈ Z for every q, where Z = kernel(z_equations).
RationalMatrix image_in_rows(const RationalMatrix& z_equations, std::size_t n) {
  RationalMatrix m(z_equations.rows() * n, n * n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t r = 0; r < z_equations.rows(); ++r)
      for (std::size_t k = 0; k < n; ++k)
        m(q * z_equations.rows() + r, flat_index(n, k, q)) = z_equations(r, k);
  return m;
}

/// Equations whose kernel is the annihilator center: x e_j = 0, e_j x = 0.
RationalMatrix annihilator_equations(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  RationalMatrix m(0, n);
  for (std::size_t j = 0; j < n; ++j) {
    const AlgebraElement e = AlgebraElement::basis(n, j);
    m = m.vstack(right_mult_operator(e, sc)).vstack(left_mult_operator(e, sc));
  }
  return m;
}

/// Equations whose kernel is the commutant center: x e_j - e_j x = 0.
RationalMatrix commutant_equations(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  RationalMatrix m(0, n);
  for (std::size_t j = 0; j < n; ++j) {
    const AlgebraElement e = AlgebraElement::basis(n, j);
    m = m.vstack(right_mult_operator(e, sc) - left_mult_operator(e, sc));
  }
  return m;
}

}  // namespace

std::vector<RationalMatrix> CentroidSpace::basis_matrices() const {
  return reshape_all(space, algebra.dim());
}

std::vector<RationalMatrix> CentralDerivationSpace::basis_matrices() const {
  return reshape_all(space, algebra.dim());
}

RationalMatrix centroid_constraint_matrix(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  const std::size_t block = n * n * n;
  RationalMatrix m(2 * block, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) {
        const std::size_t left = (i * n + j) * n + p;
        const std::size_t right = block + left;
        for (std::size_t k = 0; k < n; ++k) {
          m(left, flat_index(n, p, k)) += sc.gamma(i, j, k);
          m(left, flat_index(n, k, i)) -= sc.gamma(k, j, p);
          m(right, flat_index(n, p, k)) += sc.gamma(i, j, k);
          m(right, flat_index(n, k, j)) -= sc.gamma(i, k, p);
        }
      }
  return m;
}

CentroidSpace centroid(const StructureConstants& sc) {
  return {sc, kernel_basis(centroid_constraint_matrix(sc))};
}

bool is_centroidal(const StructureConstants& sc, const RationalMatrix& phi) {
  if (phi.rows() != sc.dim() || phi.cols() != sc.dim())
    throw ShapeError("centroid candidate must be " + std::to_string(sc.dim()) + "x" +
                     std::to_string(sc.dim()));
  return is_zero(centroid_constraint_matrix(sc) * flatten(phi));
}

CentralDerivationSpace central_derivations(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  const RationalMatrix square = kills_square_rows(sc);
  return {
      sc,
      intersect(centroid(sc).space, derivations(sc).space),
      kernel_basis(square.vstack(image_in_rows(annihilator_equations(sc), n))),
      kernel_basis(square.vstack(image_in_rows(commutant_equations(sc), n))),
  };
}

CompositionReport verify_centroid_derivation_props(const StructureConstants& sc) {
  const DerivationSpace der = derivations(sc);
  const CentroidSpace gamma = centroid(sc);
  const Subspace central = intersect(gamma.space, der.space);

  CompositionReport report;
  const auto ds = der.basis_matrices();
  const auto phis = gamma.basis_matrices();
  for (std::size_t a = 0; a < ds.size(); ++a)
    for (std::size_t b = 0; b < phis.size(); ++b) {
      ++report.pairs_checked;
      const RationalMatrix phi_after_d = phis[b] * ds[a];
      const RationalMatrix d_after_phi = ds[a] * phis[b];
      if (!contains(der.space, flatten(phi_after_d)))
        report.failures.push_back({a, b, "phi∘d is not a derivation"});
      const bool in_gamma = contains(gamma.space, flatten(d_after_phi));
      const bool in_central = contains(central, flatten(phi_after_d));
      if (in_gamma) ++report.composition_in_centroid;
      if (in_gamma != in_central)
        report.failures.push_back(
            {a, b, in_gamma ? "d∘phi in centroid but phi∘d not central"
                            : "phi∘d central but d∘phi not in centroid"});
    }
  return report;
}

}  // namespace algkit
