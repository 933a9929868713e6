#include "algkit/corpus.hpp"

#include "algkit/errors.hpp"
#include "algkit/parser.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef ALGKIT_SOURCE_CORPUS_DIR
#define ALGKIT_SOURCE_CORPUS_DIR ""
#endif
#ifndef ALGKIT_INSTALLED_CORPUS_DIR
#define ALGKIT_INSTALLED_CORPUS_DIR ""
#endif

namespace algkit {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path, const std::string& entry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError(entry + ": cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

StructureConstants CorpusEntry::algebra(
    const std::map<std::string, Rational, std::less<>>& overrides) const {
  return parse_algebra(definition, {name, overrides});
}

fs::path default_corpus_dir() {
  if (const char* env = std::getenv("ALGKIT_CORPUS_DIR"); env && *env) return env;
  const fs::path source = ALGKIT_SOURCE_CORPUS_DIR;
  std::error_code ec;
  if (!source.empty() && fs::exists(source / "index.json", ec)) return source;
  return ALGKIT_INSTALLED_CORPUS_DIR;
}

std::vector<CorpusEntry> load_corpus() { return load_corpus(default_corpus_dir()); }

std::vector<CorpusEntry> load_corpus(const fs::path& dir) {
  nlohmann::json index;
  try {
    index = nlohmann::json::parse(read_file(dir / "index.json", "index"));
  } catch (const nlohmann::json::parse_error& e) {
    throw CorpusError(std::string("index: invalid JSON: ") + e.what());
  }

  std::vector<CorpusEntry> corpus;
  std::size_t position = 0;
  try {
    for (const auto& item : index.at("classes")) {
      CorpusEntry e;
      e.name = item.at("name").get<std::string>();
      e.index = ++position;
      e.expected_dim_der = item.at("expected_dim_der").get<std::size_t>();
      e.expected_dim_centroid = item.at("expected_dim_centroid").get<std::size_t>();
      if (find_entry(corpus, e.name)) throw CorpusError(e.name + ": duplicate class name");
      e.definition = read_file(dir / item.at("file").get<std::string>(), e.name);
      try {
        e.parameters = e.algebra().parameters();
      } catch (const Error& err) {
        throw CorpusError(e.name + ": " + err.what());
      }
      corpus.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& err) {
    throw CorpusError("index: entry " + std::to_string(position) + ": " + err.what());
  }
  return corpus;
}

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, std::string_view name) {
  for (const auto& e : corpus)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace algkit
