#pragma once

#include "algkit/algebra.hpp"
#include "algkit/rational.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace algkit {

/// One isomorphism class of the bundled classification: its definition text,
/// declared parameters (defaults and exclusions) and the dimensions printed
/// in the published tables. The expected dimensions are comparison metadata
/// only; nothing in the solvers reads them.
struct CorpusEntry {
  std::string name;
  std::size_t index = 0;  // 1-based class number
  std::string definition;
  std::vector<ParameterBinding> parameters;
  std::size_t expected_dim_der = 0;
  std::size_t expected_dim_centroid = 0;

  /// Parses the definition, optionally overriding parameter values.
  StructureConstants algebra(const std::map<std::string, Rational, std::less<>>& overrides = {}) const;
};

/// $ALGKIT_CORPUS_DIR when set, otherwise the bundled data directory.
std::filesystem::path default_corpus_dir();

/// Reads `index.json` and the definition files it lists. Every definition is
/// parsed once at its default binding. Throws CorpusError naming the entry on
/// any missing or corrupt file.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);
std::vector<CorpusEntry> load_corpus();

/// Looks an entry up by name ("As4_9"); nullptr when absent.
const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, std::string_view name);

}  // namespace algkit
