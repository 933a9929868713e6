#include "algkit/serialize.hpp"

#include "algkit/errors.hpp"

#include <json.hpp>

#include <stdexcept>

namespace algkit {

namespace {

using nlohmann::json;

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const Rational& x : m.row(r)) row.push_back(to_pq_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrices_json(const std::vector<RationalMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

json params_json(const std::vector<ParameterBinding>& params) {
  json out = json::array();
  for (const auto& p : params) {
    json excluded = json::array();
    for (const auto& x : p.excluded) excluded.push_back(to_pq_string(x));
    out.push_back({{"name", p.name}, {"value", to_pq_string(p.value)}, {"exclude", excluded}});
  }
  return out;
}

json algebra_header(const StructureConstants& sc) {
  return {{"name", sc.name()}, {"dim", sc.dim()}, {"params", params_json(sc.parameters())}};
}

std::vector<RationalMatrix> canonical_matrices(const Subspace& s, std::size_t n) {
  std::vector<RationalMatrix> out;
  for (std::size_t c = 0; c < s.dim(); ++c) out.push_back(unflatten(s.canonical().column(c), n));
  return out;
}

json space_json(const char* kind, const StructureConstants& sc, const Subspace& s,
                const std::vector<RationalMatrix>& basis) {
  return {{"kind", kind},
          {"algebra", algebra_header(sc)},
          {"dim", s.dim()},
          {"flattening", "column-major"},
          {"basis", matrices_json(basis)},
          {"canonical", matrices_json(canonical_matrices(s, sc.dim()))}};
}

json flags_json(const ClassificationFlags& f) {
  return {{"associative", f.associative},
          {"algebra_nilpotent", f.algebra_nilpotent},
          {"all_derivations_nilpotent", f.all_derivations_nilpotent},
          {"characteristically_nilpotent", f.characteristically_nilpotent},
          {"flag_chain", f.flag_chain}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Rational rational_field(const json& j, const char* what) {
  if (!j.is_string()) throw Error(std::string(what) + " must be a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string to_json(const StructureConstants& sc) {
  json gamma = json::array();
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sc.gamma(i, j, k) != 0)
          gamma.push_back(
              {{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", to_pq_string(sc.gamma(i, j, k))}});
  json doc = algebra_header(sc);
  doc["gamma"] = std::move(gamma);
  return dump(doc);
}

StructureConstants structure_constants_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("dim").get<std::size_t>();
    std::vector<ParameterBinding> params;
    for (const auto& p : doc.at("params")) {
      ParameterBinding b{p.at("name").get<std::string>(), rational_field(p.at("value"), "value"), {}};
      for (const auto& x : p.at("exclude")) b.excluded.push_back(rational_field(x, "exclude"));
      params.push_back(std::move(b));
    }
    StructureConstants sc(n, doc.at("name").get<std::string>(), std::move(params));
    for (const auto& g : doc.at("gamma")) {
      const auto i = g.at("i").get<std::size_t>();
      const auto j = g.at("j").get<std::size_t>();
      const auto k = g.at("k").get<std::size_t>();
      if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
        throw Error("structure constant index out of range");
      sc.gamma(i - 1, j - 1, k - 1) = rational_field(g.at("value"), "value");
    }
    return sc;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed structure-constant document: ") + e.what());
  }
}

std::string to_json(const DerivationSpace& ds) {
  return dump(space_json("derivations", ds.algebra, ds.space, ds.basis_matrices()));
}

std::string to_json(const CentroidSpace& cs) {
  return dump(space_json("centroid", cs.algebra, cs.space, cs.basis_matrices()));
}

std::string to_json(const CentralDerivationSpace& cds) {
  json doc = space_json("central_derivations", cds.algebra, cds.space, cds.basis_matrices());
  doc["matches_annihilator_definition"] = cds.agrees_with_annihilator_definition();
  doc["matches_commutant_definition"] = cds.agrees_with_commutant_definition();
  doc["dim_commutant_definition"] = cds.commutant_definition.dim();
  return dump(doc);
}

std::string to_json(const StructureConstants& sc, const ClassificationFlags& flags) {
  return dump({{"algebra", algebra_header(sc)}, {"flags", flags_json(flags)}});
}

std::string to_json(std::span<const AlgebraReport> reports) {
  json entries = json::array();
  for (const AlgebraReport& r : reports) {
    json discrepancies = json::array();
    for (const Discrepancy& d : r.discrepancies)
      discrepancies.push_back({{"table", d.table},
                               {"expected", d.expected},
                               {"computed", d.computed},
                               {"evidence", matrices_json(d.evidence)}});
    entries.push_back({
        {"name", r.name},
        {"dim", r.dim},
        {"params", params_json(r.params)},
        {"dim_der", r.dim_der},
        {"dim_centroid", r.dim_centroid},
        {"dim_central_der", r.dim_central_der},
        {"flags", flags_json(r.flags)},
        {"central_der_checks",
         {{"matches_annihilator_definition", r.central_der_matches_annihilator_definition},
          {"matches_commutant_definition", r.central_der_matches_commutant_definition}}},
        {"discrepancies", discrepancies},
        {"bases",
         {{"der", matrices_json(r.der_basis)},
          {"centroid", matrices_json(r.centroid_basis)},
          {"central_der", matrices_json(r.central_der_basis)}}},
        {"error", r.error ? json(*r.error) : json(nullptr)},
    });
  }
  return dump({{"schema", "algkit-report/1"}, {"reports", entries}});
}

}  // namespace algkit
