#include "algkit/derivations.hpp"

#include "algkit/errors.hpp"

#include <string>

namespace algkit {

std::vector<RationalMatrix> DerivationSpace::basis_matrices() const {
  std::vector<RationalMatrix> out;
  for (const RationalVector& v : space.basis_vectors())
    out.push_back(unflatten(v, algebra.dim()));
  return out;
}

RationalMatrix derivation_constraint_matrix(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  RationalMatrix m(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) {
        const std::size_t row = (i * n + j) * n + p;
        for (std::size_t k = 0; k < n; ++k) {
          m(row, flat_index(n, p, k)) += sc.gamma(i, j, k);
          m(row, flat_index(n, k, i)) -= sc.gamma(k, j, p);
          m(row, flat_index(n, k, j)) -= sc.gamma(i, k, p);
        }
      }
  return m;
}

DerivationSpace derivations(const StructureConstants& sc) {
  return {sc, kernel_basis(derivation_constraint_matrix(sc))};
}

bool is_derivation(const StructureConstants& sc, const RationalMatrix& d) {
  if (d.rows() != sc.dim() || d.cols() != sc.dim())
    throw ShapeError("derivation candidate must be " + std::to_string(sc.dim()) + "x" +
                     std::to_string(sc.dim()));
  return is_zero(derivation_constraint_matrix(sc) * flatten(d));
}

bool verify_theorem_p2(const StructureConstants& sc, const RationalMatrix& d) {
  const std::size_t n = sc.dim();
  if (d.rows() != n || d.cols() != n)
    throw ShapeError("operator must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraElement e = AlgebraElement::basis(n, i);
    const AlgebraElement image{d.column(i)};
    if (commutator(d, left_mult_operator(e, sc)) != left_mult_operator(image, sc)) return false;
    if (commutator(d, right_mult_operator(e, sc)) != right_mult_operator(image, sc)) return false;
  }
  return true;
}

bool bracket_closure_check(const DerivationSpace& ds) {
  const auto basis = ds.basis_matrices();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!contains(ds.space, flatten(commutator(basis[a], basis[b])))) return false;
  return true;
}

}  // namespace algkit
