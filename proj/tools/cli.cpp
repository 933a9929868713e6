#include "cli.hpp"

#include "render.hpp"

#include <algkit/analysis.hpp>
#include <algkit/centroid.hpp>
#include <algkit/corpus.hpp>
#include <algkit/derivations.hpp>
#include <algkit/errors.hpp>
#include <algkit/parser.hpp>
#include <algkit/report.hpp>
#include <algkit/serialize.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace algkit::cli {

namespace fs = std::filesystem;

namespace {

/// Failure that maps directly onto an exit code.
struct CommandFailure {
  int code;
  std::string message;
};

struct Options {
  std::string input;
  std::vector<std::string> params;
  std::string format = "text";
  std::string corpus;
  std::string output;
  unsigned jobs = 0;
};

using Overrides = std::map<std::string, Rational, std::less<>>;

Overrides parse_overrides(const std::vector<std::string>& params) {
  Overrides out;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CommandFailure{kParameterFailure, "--params expects name=value, got '" + p + "'"};
    try {
      out[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw CommandFailure{kParameterFailure, "--params " + p + ": " + e.what()};
    }
  }
  return out;
}

std::vector<CorpusEntry> corpus_for(const Options& opt) {
  try {
    return opt.corpus.empty() ? load_corpus() : load_corpus(opt.corpus);
  } catch (const CorpusError& e) {
    throw CommandFailure{kIoFailure, e.what()};
  }
}

/// Loads the algebra named on the command line: a definition file path, or
/// failing that the name of a corpus class.
StructureConstants load_algebra(const Options& opt) {
  const Overrides overrides = parse_overrides(opt.params);
  std::string text;
  std::string name;

  std::error_code ec;
  if (fs::is_regular_file(opt.input, ec)) {
    std::ifstream in(opt.input, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in && !in.eof()) throw CommandFailure{kIoFailure, "cannot read " + opt.input};
    text = buf.str();
    name = fs::path(opt.input).stem().string();
  } else {
    std::optional<std::vector<CorpusEntry>> corpus;
    try {
      corpus = opt.corpus.empty() ? load_corpus() : load_corpus(opt.corpus);
    } catch (const CorpusError&) {
    }
    const CorpusEntry* entry = corpus ? find_entry(*corpus, opt.input) : nullptr;
    if (!entry)
      throw CommandFailure{kIoFailure,
                           "cannot read " + opt.input + ": no such file or corpus class"};
    text = entry->definition;
    name = entry->name;
  }

  try {
    return parse_algebra(text, {name, overrides});
  } catch (const ParseError& e) {
    throw CommandFailure{kParseFailure, opt.input + ":" + e.what()};
  } catch (const ParameterError& e) {
    throw CommandFailure{kParameterFailure, e.what()};
  }
}

OutputFormat format_of(const Options& opt) {
  if (auto f = parse_format(opt.format)) return *f;
  throw CommandFailure{kUsage, "unknown format '" + opt.format + "' (text, json, latex)"};
}

void emit(const Options& opt, const std::string& payload, std::ostream& out) {
  if (opt.output.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary | std::ios::trunc);
  file << payload;
  if (!file) throw CommandFailure{kIoFailure, "cannot write " + opt.output};
}

int cmd_check(const Options& opt, std::ostream& out) {
  const StructureConstants sc = load_algebra(opt);
  if (const auto bad = find_associativity_violation(sc)) {
    const auto [i, j, k, s] = *bad;
    std::ostringstream msg;
    msg << sc.name() << ": not associative: (e" << i + 1 << " e" << j + 1 << ") e" << k + 1
        << " != e" << i + 1 << " (e" << j + 1 << " e" << k + 1 << ") in coordinate e" << s + 1
        << "; witness (" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
    throw CommandFailure{kNotAssociative, msg.str()};
  }
  emit(opt, sc.name() + ": ok (dim " + std::to_string(sc.dim()) + ", associative)\n", out);
  return kOk;
}

std::string render_space(OutputFormat fmt, const SpaceView& view, const std::string& json) {
  switch (fmt) {
    case OutputFormat::kJson: return json;
    case OutputFormat::kLatex: return render_space_latex(view);
    case OutputFormat::kText: break;
  }
  return render_space_text(view);
}

int cmd_der(const Options& opt, std::ostream& out) {
  const OutputFormat fmt = format_of(opt);
  const DerivationSpace ds = derivations(load_algebra(opt));
  emit(opt, render_space(fmt, {ds.algebra, "derivations", "d", ds.basis_matrices(), {}}, to_json(ds)),
       out);
  return kOk;
}

int cmd_centroid(const Options& opt, std::ostream& out) {
  const OutputFormat fmt = format_of(opt);
  const CentroidSpace cs = centroid(load_algebra(opt));
  emit(opt, render_space(fmt, {cs.algebra, "centroid", "phi", cs.basis_matrices(), {}}, to_json(cs)),
       out);
  return kOk;
}

int cmd_central_der(const Options& opt, std::ostream& out) {
  const OutputFormat fmt = format_of(opt);
  const CentralDerivationSpace cds = central_derivations(load_algebra(opt));
  std::vector<std::string> notes{
      std::string("annihilator-center definition agrees: ") +
          (cds.agrees_with_annihilator_definition() ? "yes" : "no"),
      std::string("commutant-center definition agrees: ") +
          (cds.agrees_with_commutant_definition() ? "yes" : "no") + " (dim " +
          std::to_string(cds.commutant_definition.dim()) + ")"};
  emit(opt,
       render_space(fmt, {cds.algebra, "central derivations", "c", cds.basis_matrices(), notes},
                    to_json(cds)),
       out);
  return kOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const OutputFormat fmt = format_of(opt);
  const StructureConstants sc = load_algebra(opt);
  const ClassificationFlags flags = classify(sc);
  switch (fmt) {
    case OutputFormat::kJson: emit(opt, to_json(sc, flags), out); break;
    case OutputFormat::kLatex: emit(opt, render_flags_latex(sc, flags), out); break;
    case OutputFormat::kText: emit(opt, render_flags_text(sc, flags), out); break;
  }
  return kOk;
}

int cmd_report(const Options& opt, std::ostream& out) {
  const OutputFormat fmt = format_of(opt);
  const std::vector<CorpusEntry> corpus = corpus_for(opt);
  const std::vector<AlgebraReport> reports = dimension_report(corpus, opt.jobs);
  switch (fmt) {
    case OutputFormat::kJson: emit(opt, to_json(reports), out); break;
    case OutputFormat::kLatex: emit(opt, render_report_latex(reports), out); break;
    case OutputFormat::kText: emit(opt, render_report_text(reports), out); break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derivations, centroids and structure invariants of finite-dimensional algebras",
               "algkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool takes_file) {
    if (takes_file) {
      sub->add_option("file", opt.input, "Algebra definition file or corpus class name")
          ->required();
      sub->add_option("--params", opt.params, "Override a parameter: name=value (repeatable)");
    }
    sub->add_option("--format", opt.format, "Output format: text, json or latex");
    sub->add_option("--corpus", opt.corpus, "Corpus directory (default: bundled or $ALGKIT_CORPUS_DIR)");
    sub->add_option("--output", opt.output, "Write output to PATH instead of stdout");
  };

  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> commands;
  auto add = [&](const char* name, const char* help, bool takes_file, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, takes_file);
    commands[sub] = fn;
    return sub;
  };
  add("check", "Parse a definition and verify associativity", true, cmd_check);
  add("der", "Basis of the derivation algebra", true, cmd_der);
  add("centroid", "Basis of the centroid", true, cmd_centroid);
  add("central-der", "Basis of the central derivations", true, cmd_central_der);
  add("classify", "Nilpotency and characteristic-nilpotency flags", true, cmd_classify);
  CLI::App* report = add("report", "Dimension tables for the whole corpus", false, cmd_report);
  report->add_option("--jobs", opt.jobs, "Worker threads (0 = hardware concurrency)");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "algkit: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) return fn(opt, out);
  } catch (const CommandFailure& f) {
    err << "algkit: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "algkit: " << e.what() << "\n";
    return kParseFailure;
  }
  return kUsage;
}

}  // namespace algkit::cli
