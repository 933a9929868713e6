#pragma once

#include "algkit/linalg.hpp"
#include "algkit/matrix.hpp"
#include "algkit/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace algkit {

/// Value bound to a family parameter such as alpha, together with the values
/// the family forbids.
struct ParameterBinding {
  std::string name;
  Rational value;
  std::vector<Rational> excluded;

  bool operator==(const ParameterBinding&) const = default;
};

/// Coordinates of an element on the algebra's basis.
struct AlgebraElement {
  RationalVector coords;

  static AlgebraElement zero(std::size_t n) { return {RationalVector(n)}; }
  static AlgebraElement basis(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords.size(); }
  bool operator==(const AlgebraElement&) const = default;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);

/// Bilinear product on a fixed basis e_1..e_n: e_i e_j = sum_k gamma(i,j,k) e_k.
/// Indices are 0-based in the API; user-facing text is 1-based.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim, std::string name = {},
                              std::vector<ParameterBinding> parameters = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<ParameterBinding>& parameters() const noexcept { return parameters_; }

  const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * dim_ + j) * dim_ + k];
  }
  Rational& gamma(std::size_t i, std::size_t j, std::size_t k) {
    return gamma_[(i * dim_ + j) * dim_ + k];
  }
  /// All n^3 entries, ordered by (i, j, k).
  const std::vector<Rational>& tensor() const noexcept { return gamma_; }

  void set_name(std::string name) { name_ = std::move(name); }

  /// Same tensor, same name/parameters.
  bool operator==(const StructureConstants&) const = default;

 private:
  std::size_t dim_ = 0;
  std::string name_;
  std::vector<ParameterBinding> parameters_;
  std::vector<Rational> gamma_;
};

/// (a b)_k = sum_{i,j} a_i b_j gamma(i,j,k). Throws ShapeError on length mismatch.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        const StructureConstants& sc);

/// L_a: x -> a x. Column j is a e_j.
RationalMatrix left_mult_operator(const AlgebraElement& a, const StructureConstants& sc);
/// R_a: x -> x a. Column j is e_j a.
RationalMatrix right_mult_operator(const AlgebraElement& a, const StructureConstants& sc);

/// First basis quadruple (i, j, k, s), 0-based and lexicographic, at which
/// ((e_i e_j) e_k)_s != (e_i (e_j e_k))_s.
std::optional<std::array<std::size_t, 4>> find_associativity_violation(
    const StructureConstants& sc);

bool check_associative(const StructureConstants& sc);

/// A^2 = span{e_i e_j}.
Subspace algebra_square(const StructureConstants& sc);

/// Z_A(H) = {x : x h = h x = 0 for all h in H} (two-sided annihilator of H).
Subspace centralizer(std::span<const AlgebraElement> h, const StructureConstants& sc);

/// Annihilator center Z_A(A): elements whose products with everything vanish.
Subspace center(const StructureConstants& sc);

/// Commutant center {x : x y = y x for all y}.
Subspace commutant_center(const StructureConstants& sc);

/// True iff the chain A^1 = A, A^{k+1} = A^k A + A A^k reaches {0}.
bool is_nilpotent_algebra(const StructureConstants& sc);

/// Structure constants after the basis change f_i = sum_a p(a, i) e_a.
/// Throws PreconditionError when p is singular, ShapeError when it is not n×n.
StructureConstants change_basis(const StructureConstants& sc, const RationalMatrix& p);

}  // namespace algkit
