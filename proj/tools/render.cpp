#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace algkit::cli {

namespace {

std::string params_suffix(const std::vector<ParameterBinding>& params) {
  if (params.empty()) return "";
  std::string s = " [";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ", ";
    s += params[i].name + "=" + to_short_string(params[i].value);
  }
  return s + "]";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_matrix_text(std::ostream& out, const RationalMatrix& m) {
  std::size_t width = 1;
  for (const auto& x : m.entries()) width = std::max(width, to_short_string(x).size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  [";
    for (const auto& x : m.row(r)) {
      const std::string s = to_short_string(x);
      out << ' ' << std::string(width - s.size(), ' ') << s;
    }
    out << " ]\n";
  }
}

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  const std::string sign = r < 0 ? "-" : "";
  return sign + "\\frac{" + mpz_class(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string latex_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$') out += '\\';
    out += c;
  }
  return out;
}

/// "As4_12" -> "As_{4}^{12}"; anything else is escaped verbatim.
std::string latex_class_name(const std::string& name) {
  if (name.rfind("As", 0) == 0) {
    const auto us = name.find('_');
    if (us != std::string::npos && us > 2)
      return "$As_{" + name.substr(2, us - 2) + "}^{" + name.substr(us + 1) + "}$";
  }
  return latex_escape(name);
}

constexpr const char* kLatexPreamble =
    "\\documentclass{article}\n"
    "\\usepackage{amsmath}\n"
    "\\usepackage{longtable}\n"
    "\\begin{document}\n";
constexpr const char* kLatexEnd = "\\end{document}\n";

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "latex") return OutputFormat::kLatex;
  return std::nullopt;
}

std::string render_space_text(const SpaceView& view) {
  std::ostringstream out;
  out << "algebra " << view.algebra.name() << " (dim " << view.algebra.dim() << ")"
      << params_suffix(view.algebra.parameters()) << "\n";
  out << view.title << "\n";
  out << "dim " << view.basis.size() << "\n";
  for (std::size_t i = 0; i < view.basis.size(); ++i) {
    out << view.symbol << i + 1 << " =\n";
    write_matrix_text(out, view.basis[i]);
  }
  for (const auto& note : view.notes) out << note << "\n";
  return out.str();
}

std::string render_space_latex(const SpaceView& view) {
  std::ostringstream out;
  out << kLatexPreamble;
  out << "\\noindent " << latex_escape(view.title) << " of "
      << latex_class_name(view.algebra.name()) << ", dimension " << view.basis.size() << ".\n";
  for (std::size_t i = 0; i < view.basis.size(); ++i) {
    out << "\\[ " << view.symbol << "_{" << i + 1 << "} = \\begin{pmatrix}\n";
    const RationalMatrix& m = view.basis[i];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " & " : "  ") << latex_rational(m(r, c));
      out << (r + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    out << "\\end{pmatrix} \\]\n";
  }
  for (const auto& note : view.notes) out << "\n\\noindent " << latex_escape(note) << "\n";
  out << kLatexEnd;
  return out.str();
}

std::string render_flags_text(const StructureConstants& sc, const ClassificationFlags& f) {
  std::ostringstream out;
  out << "algebra " << sc.name() << " (dim " << sc.dim() << ")" << params_suffix(sc.parameters())
      << "\n";
  out << "associative: " << yes_no(f.associative) << "\n";
  out << "algebra nilpotent: " << yes_no(f.algebra_nilpotent) << "\n";
  out << "all derivations nilpotent: " << yes_no(f.all_derivations_nilpotent) << "\n";
  out << "characteristically nilpotent: " << yes_no(f.characteristically_nilpotent) << "\n";
  out << "flag chain:";
  for (std::size_t d : f.flag_chain) out << ' ' << d;
  out << "\n";
  return out.str();
}

std::string render_flags_latex(const StructureConstants& sc, const ClassificationFlags& f) {
  std::ostringstream out;
  out << kLatexPreamble;
  out << "\\begin{tabular}{|l|c|}\n\\hline\n";
  out << "IC & " << latex_class_name(sc.name()) << " \\\\\n\\hline\n";
  out << "associative & " << yes_no(f.associative) << " \\\\\n";
  out << "nilpotent & " << yes_no(f.algebra_nilpotent) << " \\\\\n";
  out << "all derivations nilpotent & " << yes_no(f.all_derivations_nilpotent) << " \\\\\n";
  out << "characteristically nilpotent & " << yes_no(f.characteristically_nilpotent)
      << " \\\\\n\\hline\n";
  out << "\\end{tabular}\n" << kLatexEnd;
  return out.str();
}

std::string render_report_text(std::span<const AlgebraReport> reports) {
  std::vector<std::string> labels;
  std::size_t width = 5;
  for (const AlgebraReport& r : reports) {
    labels.push_back(r.name + params_suffix(r.params));
    width = std::max(width, labels.back().size());
  }
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.insert(0, w - s.size(), ' ');
    return s;
  };

  std::ostringstream out;
  out << "class" << std::string(width - 5, ' ')
      << "  dim_der  dim_centroid  dim_central_der  flags  discrepancies\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const AlgebraReport& r = reports[i];
    out << labels[i] << std::string(width - labels[i].size(), ' ');
    if (r.error) {
      out << "  ERROR: " << *r.error << "\n";
      continue;
    }
    std::ostringstream row;
    row << pad(std::to_string(r.dim_der), 9) << pad(std::to_string(r.dim_centroid), 14)
        << pad(std::to_string(r.dim_central_der), 17) << "  "
        << (r.flags.characteristically_nilpotent ? "CN   " : "     ");
    for (std::size_t k = 0; k < r.discrepancies.size(); ++k) {
      const auto& d = r.discrepancies[k];
      row << (k ? "; " : "  ") << d.table << ": table " << d.expected << ", computed "
          << d.computed;
    }
    std::string line = row.str();
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  return out.str();
}

std::string render_report_latex(std::span<const AlgebraReport> reports) {
  std::ostringstream out;
  out << kLatexPreamble;
  out << "\\begin{longtable}{|l|c|c|}\n\\hline\n";
  out << "\\textbf{IC} & \\textbf{Dim(Der)} & \\textbf{Dim($\\Gamma$)} \\\\\n\\hline\n\\endhead\n";
  for (const AlgebraReport& r : reports) {
    out << latex_class_name(r.name);
    if (r.flags.characteristically_nilpotent) out << "\\textsuperscript{CN}";
    if (r.error) {
      out << " & \\multicolumn{2}{c|}{error} \\\\\n\\hline\n";
      continue;
    }
    auto cell = [&](const char* table, std::size_t computed) {
      std::string s = std::to_string(computed);
      for (const auto& d : r.discrepancies)
        if (d.table == table) s += "$^{\\dagger}$ (" + std::to_string(d.expected) + ")";
      return s;
    };
    out << " & " << cell("der", r.dim_der) << " & " << cell("centroid", r.dim_centroid)
        << " \\\\\n\\hline\n";
  }
  out << "\\end{longtable}\n";
  out << "\\noindent $^{\\dagger}$ computed value differs from the tabulated one (shown in "
         "parentheses).\n";
  out << kLatexEnd;
  return out.str();
}

}  // namespace algkit::cli
