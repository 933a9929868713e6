#pragma once

// Independent oracles and random generators shared by the unit and
// acceptance suites. The oracles are built from multiply() and the
// multiplication operators only, never from the constraint-matrix builders
// they are used to check.

#include <algkit/algebra.hpp>
#include <algkit/linalg.hpp>
#include <algkit/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace algkit::testing {

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 5, int den_bound = 3) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                    int num_bound = 5, int den_bound = 3) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, num_bound, den_bound);
  return m;
}

/// Sparse random matrix: most entries zero, so ranks vary.
inline RationalMatrix random_sparse_matrix(std::mt19937_64& rng, std::size_t rows,
                                           std::size_t cols) {
  std::bernoulli_distribution keep(0.35);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m(r, c) = random_rational(rng);
  return m;
}

inline RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    RationalMatrix p = random_matrix(rng, n, n, 3, 2);
    if (rank(p) == n) return p;
  }
}

inline AlgebraElement random_element(std::mt19937_64& rng, std::size_t n) {
  AlgebraElement x = AlgebraElement::zero(n);
  for (auto& c : x.coords) c = random_rational(rng);
  return x;
}

/// Random linear combination of the given matrices with small integer weights.
inline RationalMatrix random_combination(std::mt19937_64& rng,
                                         const std::vector<RationalMatrix>& basis,
                                         std::size_t n) {
  std::uniform_int_distribution<int> w(-4, 4);
  RationalMatrix d(n, n);
  for (const auto& b : basis) d += b * Rational(w(rng));
  return d;
}

/// D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0 on every basis pair, evaluated
/// with multiply() and matrix-vector products.
inline bool leibniz_residual_zero(const StructureConstants& sc, const RationalMatrix& d) {
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const AlgebraElement ei = AlgebraElement::basis(n, i);
      const AlgebraElement ej = AlgebraElement::basis(n, j);
      const RationalVector lhs = d * multiply(ei, ej, sc).coords;
      const AlgebraElement dei{d * ei.coords};
      const AlgebraElement dej{d * ej.coords};
      const AlgebraElement rhs = multiply(dei, ej, sc) + multiply(ei, dej, sc);
      if (lhs != rhs.coords) return false;
    }
  return true;
}

/// φ(e_i e_j) = φ(e_i) e_j = e_i φ(e_j) on every basis pair.
inline bool centroid_residual_zero(const StructureConstants& sc, const RationalMatrix& phi) {
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const AlgebraElement ei = AlgebraElement::basis(n, i);
      const AlgebraElement ej = AlgebraElement::basis(n, j);
      const RationalVector img = phi * multiply(ei, ej, sc).coords;
      const AlgebraElement pei{phi * ei.coords};
      const AlgebraElement pej{phi * ej.coords};
      if (multiply(pei, ej, sc).coords != img) return false;
      if (multiply(ei, pej, sc).coords != img) return false;
    }
  return true;
}

/// Matrix of a linear map End(A) -> Q^m, assembled by evaluating it on the
/// elementary matrices E_pq (column index = flat_index(n, p, q)).
inline RationalMatrix assemble(std::size_t n,
                               const std::function<RationalVector(const RationalMatrix&)>& map) {
  std::vector<RationalVector> columns(n * n);
  std::size_t out_dim = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      RationalMatrix e(n, n);
      e(p, q) = 1;
      columns[flat_index(n, p, q)] = map(e);
      out_dim = columns[flat_index(n, p, q)].size();
    }
  return RationalMatrix::from_columns(out_dim, columns);
}

inline void append(RationalVector& out, const RationalMatrix& m) {
  out.insert(out.end(), m.entries().begin(), m.entries().end());
}

/// Der(A) from the operator identities [D, L_e] = L_{D e}, [D, R_e] = R_{D e}.
inline Subspace operator_form_derivations(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  return kernel_basis(assemble(n, [&](const RationalMatrix& d) {
    RationalVector out;
    for (std::size_t i = 0; i < n; ++i) {
      const AlgebraElement e = AlgebraElement::basis(n, i);
      const AlgebraElement de{d * e.coords};
      append(out, commutator(d, left_mult_operator(e, sc)) - left_mult_operator(de, sc));
      append(out, commutator(d, right_mult_operator(e, sc)) - right_mult_operator(de, sc));
    }
    return out;
  }));
}

/// Γ(A) as the commutant of all multiplication operators: φ L_e = L_e φ and
/// φ R_e = R_e φ for every basis vector e.
inline Subspace commutant_form_centroid(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  return kernel_basis(assemble(n, [&](const RationalMatrix& phi) {
    RationalVector out;
    for (std::size_t i = 0; i < n; ++i) {
      const AlgebraElement e = AlgebraElement::basis(n, i);
      append(out, commutator(phi, left_mult_operator(e, sc)));
      append(out, commutator(phi, right_mult_operator(e, sc)));
    }
    return out;
  }));
}

/// Associative algebras of dimension 1..max_dim found by sparse random search,
/// filtered by check_associative; pairwise distinct tensors.
inline std::vector<StructureConstants> random_associative_algebras(std::mt19937_64& rng,
                                                                   std::size_t count,
                                                                   std::size_t max_dim = 3) {
  std::vector<StructureConstants> out;
  std::set<std::vector<Rational>> seen;
  std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
  std::uniform_int_distribution<int> value(-2, 2);
  while (out.size() < count) {
    const std::size_t n = dim_dist(rng);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<std::size_t> nnz(1, 2 * n);
    StructureConstants sc(n, "random_" + std::to_string(out.size() + 1));
    for (std::size_t t = nnz(rng); t > 0; --t) sc.gamma(idx(rng), idx(rng), idx(rng)) = value(rng);
    if (std::all_of(sc.tensor().begin(), sc.tensor().end(), [](const Rational& x) { return x == 0; }))
      continue;
    if (!check_associative(sc)) continue;
    if (!seen.insert(sc.tensor()).second) continue;
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace algkit::testing
