#include "algkit/algebra.hpp"

#include "algkit/errors.hpp"

#include <utility>

namespace algkit {

namespace {

void require_size(std::size_t got, std::size_t dim, const char* what) {
  if (got != dim)
    throw ShapeError(std::string(what) + " has " + std::to_string(got) +
                     " coordinates, algebra has dimension " + std::to_string(dim));
}

}  // namespace

AlgebraElement AlgebraElement::basis(std::size_t n, std::size_t i) {
  AlgebraElement e = zero(n);
  e.coords.at(i) = 1;
  return e;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_size(b.size(), a.size(), "summand");
  AlgebraElement out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

StructureConstants::StructureConstants(std::size_t dim, std::string name,
                                       std::vector<ParameterBinding> parameters)
    : dim_(dim), name_(std::move(name)), parameters_(std::move(parameters)),
      gamma_(dim * dim * dim) {}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  require_size(a.size(), n, "left factor");
  require_size(b.size(), n, "right factor");
  AlgebraElement out = AlgebraElement::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords[j] == 0) continue;
      const Rational ab = a.coords[i] * b.coords[j];
      for (std::size_t k = 0; k < n; ++k)
        if (sc.gamma(i, j, k) != 0) out.coords[k] += ab * sc.gamma(i, j, k);
    }
  }
  return out;
}

RationalMatrix left_mult_operator(const AlgebraElement& a, const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  require_size(a.size(), n, "operand");
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) += a.coords[i] * sc.gamma(i, j, k);
  }
  return m;
}

RationalMatrix right_mult_operator(const AlgebraElement& a, const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  require_size(a.size(), n, "operand");
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) += a.coords[i] * sc.gamma(j, i, k);
  }
  return m;
}

std::optional<std::array<std::size_t, 4>> find_associativity_violation(
    const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 0; s < n; ++s) {
          Rational lhs = 0;
          Rational rhs = 0;
          for (std::size_t t = 0; t < n; ++t) {
            lhs += sc.gamma(i, j, t) * sc.gamma(t, k, s);
            rhs += sc.gamma(j, k, t) * sc.gamma(i, t, s);
          }
          if (lhs != rhs) return std::array<std::size_t, 4>{i, j, k, s};
        }
  return std::nullopt;
}

bool check_associative(const StructureConstants& sc) {
  return !find_associativity_violation(sc).has_value();
}

Subspace algebra_square(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  RationalMatrix products(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) products(k, i * n + j) = sc.gamma(i, j, k);
  return Subspace::span(products);
}

Subspace centralizer(std::span<const AlgebraElement> h, const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  RationalMatrix stacked(0, n);
  for (const auto& x : h)
    stacked = stacked.vstack(right_mult_operator(x, sc)).vstack(left_mult_operator(x, sc));
  return kernel_basis(stacked);
}

Subspace center(const StructureConstants& sc) {
  std::vector<AlgebraElement> basis;
  for (std::size_t i = 0; i < sc.dim(); ++i) basis.push_back(AlgebraElement::basis(sc.dim(), i));
  return centralizer(basis, sc);
}

Subspace commutant_center(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  RationalMatrix stacked(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraElement e = AlgebraElement::basis(n, i);
    stacked = stacked.vstack(right_mult_operator(e, sc) - left_mult_operator(e, sc));
  }
  return kernel_basis(stacked);
}

bool is_nilpotent_algebra(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  std::vector<AlgebraElement> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(AlgebraElement::basis(n, i));

  Subspace power = Subspace::full(n);
  for (std::size_t step = 0; step <= n; ++step) {
    if (power.dim() == 0) return true;
    std::vector<RationalVector> products;
    for (const RationalVector& x : power.basis_vectors())
      for (const AlgebraElement& e : basis) {
        products.push_back(multiply({x}, e, sc).coords);
        products.push_back(multiply(e, {x}, sc).coords);
      }
    Subspace next = Subspace::span(n, products);
    if (next.dim() == power.dim()) return false;  // chain stabilized above zero
    power = std::move(next);
  }
  return power.dim() == 0;
}

StructureConstants change_basis(const StructureConstants& sc, const RationalMatrix& p) {
  const std::size_t n = sc.dim();
  if (p.rows() != n || p.cols() != n)
    throw ShapeError("basis change must be " + std::to_string(n) + "x" + std::to_string(n));
  const auto p_inv = inverse(p);
  if (!p_inv) throw PreconditionError("basis change matrix is singular");

  StructureConstants out(n, sc.name(), sc.parameters());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // f_i f_j expressed on e, then mapped back to f coordinates.
      RationalVector on_e(n);
      for (std::size_t a = 0; a < n; ++a) {
        if (p(a, i) == 0) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (p(b, j) == 0) continue;
          const Rational w = p(a, i) * p(b, j);
          for (std::size_t c = 0; c < n; ++c)
            if (sc.gamma(a, b, c) != 0) on_e[c] += w * sc.gamma(a, b, c);
        }
      }
      const RationalVector on_f = *p_inv * on_e;
      for (std::size_t k = 0; k < n; ++k) out.gamma(i, j, k) = on_f[k];
    }
  return out;
}

}  // namespace algkit
