#pragma once

#include "algkit/algebra.hpp"
#include "algkit/analysis.hpp"
#include "algkit/corpus.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace algkit {

/// Computed dimension that differs from the tabulated one, with the echelon
/// basis of the computed space as evidence.
struct Discrepancy {
  std::string table;  // "der" or "centroid"
  std::size_t expected = 0;
  std::size_t computed = 0;
  std::vector<RationalMatrix> evidence;
};

struct AlgebraReport {
  std::string name;
  std::size_t dim = 0;
  std::vector<ParameterBinding> params;
  std::size_t dim_der = 0;
  std::size_t dim_centroid = 0;
  std::size_t dim_central_der = 0;
  ClassificationFlags flags;
  bool central_der_matches_annihilator_definition = false;
  bool central_der_matches_commutant_definition = false;
  std::vector<Discrepancy> discrepancies;
  std::vector<RationalMatrix> der_basis;
  std::vector<RationalMatrix> centroid_basis;
  std::vector<RationalMatrix> central_der_basis;
  /// Set when the entry could not be analyzed; the other fields are then
  /// left at their defaults (except name).
  std::optional<std::string> error;
};

struct ExpectedDims {
  std::optional<std::size_t> der;
  std::optional<std::size_t> centroid;
};

/// Full analysis of one algebra; discrepancies are filled against `expected`.
AlgebraReport analyze(const StructureConstants& sc, const ExpectedDims& expected = {});

/// One report per entry, in corpus order. Entries are evaluated on up to
/// `jobs` threads (0 = hardware concurrency); output order never depends on
/// completion order. A failing entry yields a report with `error` set.
std::vector<AlgebraReport> dimension_report(std::span<const CorpusEntry> corpus,
                                            unsigned jobs = 0);

}  // namespace algkit
