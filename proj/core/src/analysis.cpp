#include "algkit/analysis.hpp"

#include "algkit/errors.hpp"

#include <random>

namespace algkit {

EngelFlag all_derivations_nilpotent(const DerivationSpace& ds) {
  if (!bracket_closure_check(ds))
    throw PreconditionError("derivation space of '" + ds.algebra.name() +
                            "' is not closed under commutators");

  const std::size_t n = ds.algebra.dim();
  const auto ops = ds.basis_matrices();

  EngelFlag flag;
  flag.last = Subspace::zero(n);
  flag.chain.push_back(0);
  while (flag.last.dim() < n) {
    // Rows of `annihilator` cut out the current V_k: V_k = kernel(annihilator).
    const RationalMatrix annihilator = kernel_basis(flag.last.basis().transpose()).basis().transpose();
    RationalMatrix stacked(0, n);
    for (const RationalMatrix& d : ops) stacked = stacked.vstack(annihilator * d);
    Subspace next = ops.empty() ? Subspace::full(n) : kernel_basis(stacked);
    if (next.dim() == flag.last.dim()) {
      flag.all_nilpotent = false;
      return flag;
    }
    flag.chain.push_back(next.dim());
    flag.last = std::move(next);
  }
  flag.all_nilpotent = true;
  return flag;
}

std::optional<RationalMatrix> find_non_nilpotent_derivation(const DerivationSpace& ds,
                                                            std::uint64_t seed,
                                                            std::size_t attempts) {
  const auto basis = ds.basis_matrices();
  for (const RationalMatrix& d : basis)
    if (!is_nilpotent_matrix(d)) return d;
  if (basis.empty()) return std::nullopt;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  const std::size_t n = ds.algebra.dim();
  for (std::size_t t = 0; t < attempts; ++t) {
    RationalMatrix d(n, n);
    for (const RationalMatrix& b : basis) d += b * Rational(coeff(rng));
    if (!is_nilpotent_matrix(d)) return d;
  }
  return std::nullopt;
}

ClassificationFlags classify(const StructureConstants& sc) { return classify(sc, derivations(sc)); }

ClassificationFlags classify(const StructureConstants& sc, const DerivationSpace& ds) {
  ClassificationFlags flags;
  flags.associative = check_associative(sc);
  flags.algebra_nilpotent = is_nilpotent_algebra(sc);
  const EngelFlag engel = all_derivations_nilpotent(ds);
  flags.all_derivations_nilpotent = engel.all_nilpotent;
  flags.flag_chain = engel.chain;
  flags.characteristically_nilpotent = flags.algebra_nilpotent && flags.all_derivations_nilpotent;
  return flags;
}

}  // namespace algkit
