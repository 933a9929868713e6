#pragma once

#include <algkit/analysis.hpp>
#include <algkit/centroid.hpp>
#include <algkit/derivations.hpp>
#include <algkit/report.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace algkit::cli {

enum class OutputFormat { kText, kJson, kLatex };

/// Parses "text" | "json" | "latex"; nullopt otherwise.
std::optional<OutputFormat> parse_format(std::string_view name);

/// A computed space of endomorphisms together with how to label it.
struct SpaceView {
  const StructureConstants& algebra;
  std::string title;   // "derivations", "centroid", ...
  std::string symbol;  // basis element prefix in output: "d", "phi", "c"
  std::vector<RationalMatrix> basis;
  std::vector<std::string> notes;
};

std::string render_space_text(const SpaceView& view);
std::string render_space_latex(const SpaceView& view);

std::string render_flags_text(const StructureConstants& sc, const ClassificationFlags& flags);
std::string render_flags_latex(const StructureConstants& sc, const ClassificationFlags& flags);

std::string render_report_text(std::span<const AlgebraReport> reports);
/// Standalone LaTeX document with one longtable row per class:
/// IC | Dim(Der) | Dim(Γ). Cells that disagree with the tables carry a dagger
/// and the tabulated value; characteristically nilpotent classes are marked CN.
std::string render_report_latex(std::span<const AlgebraReport> reports);

}  // namespace algkit::cli
