#pragma once

#include "algkit/algebra.hpp"
#include "algkit/analysis.hpp"
#include "algkit/centroid.hpp"
#include "algkit/derivations.hpp"
#include "algkit/report.hpp"

#include <span>
#include <string>
#include <string_view>

namespace algkit {

// JSON documents. Rationals are always "p/q" strings; matrices are arrays of
// rows. Output is deterministic (sorted keys, two-space indent, trailing newline).

std::string to_json(const StructureConstants& sc);
/// Inverse of to_json(StructureConstants). Throws Error on malformed input.
StructureConstants structure_constants_from_json(std::string_view json);

std::string to_json(const DerivationSpace& ds);
std::string to_json(const CentroidSpace& cs);
std::string to_json(const CentralDerivationSpace& cds);
std::string to_json(const StructureConstants& sc, const ClassificationFlags& flags);
std::string to_json(std::span<const AlgebraReport> reports);

}  // namespace algkit
