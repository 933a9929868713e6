#pragma once

#include "algkit/algebra.hpp"
#include "algkit/derivations.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace algkit {

/// Result of the Engel flag construction V_0 = 0 ⊂ V_1 ⊂ ... where
/// V_{k+1} = {v : D v ∈ V_k for every D in the family}.
struct EngelFlag {
  bool all_nilpotent = false;
  /// dim V_0, dim V_1, ...; strictly increasing. Ends at n iff all_nilpotent.
  std::vector<std::size_t> chain;
  /// Last subspace reached (V when all_nilpotent, the stalled V_k otherwise).
  Subspace last;
};

/// Common-kernel flag of the Der basis acting on A. Throws PreconditionError
/// if the space is not closed under commutators, since the flag criterion
/// only characterizes nilpotency for a Lie algebra of operators.
EngelFlag all_derivations_nilpotent(const DerivationSpace& ds);

/// Searches for a derivation that is not a nilpotent operator: basis
/// elements first, then seeded random integer combinations of the basis.
std::optional<RationalMatrix> find_non_nilpotent_derivation(const DerivationSpace& ds,
                                                            std::uint64_t seed = 1,
                                                            std::size_t attempts = 64);

struct ClassificationFlags {
  bool associative = false;
  bool algebra_nilpotent = false;
  bool all_derivations_nilpotent = false;
  /// algebra_nilpotent && all_derivations_nilpotent.
  bool characteristically_nilpotent = false;
  std::vector<std::size_t> flag_chain;
};

ClassificationFlags classify(const StructureConstants& sc);
ClassificationFlags classify(const StructureConstants& sc, const DerivationSpace& ds);

}  // namespace algkit
