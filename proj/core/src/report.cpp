#include "algkit/report.hpp"

#include "algkit/centroid.hpp"
#include "algkit/derivations.hpp"

#include <algorithm>
#include <exception>
#include <future>
#include <thread>

namespace algkit {

namespace {

std::vector<RationalMatrix> canonical_matrices(const Subspace& s, std::size_t n) {
  std::vector<RationalMatrix> out;
  for (std::size_t c = 0; c < s.dim(); ++c) out.push_back(unflatten(s.canonical().column(c), n));
  return out;
}

AlgebraReport analyze_entry(const CorpusEntry& entry) {
  try {
    return analyze(entry.algebra(), {entry.expected_dim_der, entry.expected_dim_centroid});
  } catch (const std::exception& e) {
    AlgebraReport failed;
    failed.name = entry.name;
    failed.error = e.what();
    return failed;
  }
}

}  // namespace

AlgebraReport analyze(const StructureConstants& sc, const ExpectedDims& expected) {
  const std::size_t n = sc.dim();
  const DerivationSpace der = derivations(sc);
  const CentroidSpace gamma = centroid(sc);
  const CentralDerivationSpace central = central_derivations(sc);

  AlgebraReport r;
  r.name = sc.name();
  r.dim = n;
  r.params = sc.parameters();
  r.dim_der = der.dim();
  r.dim_centroid = gamma.dim();
  r.dim_central_der = central.dim();
  r.flags = classify(sc, der);
  r.central_der_matches_annihilator_definition = central.agrees_with_annihilator_definition();
  r.central_der_matches_commutant_definition = central.agrees_with_commutant_definition();
  r.der_basis = der.basis_matrices();
  r.centroid_basis = gamma.basis_matrices();
  r.central_der_basis = central.basis_matrices();

  if (expected.der && *expected.der != der.dim())
    r.discrepancies.push_back({"der", *expected.der, der.dim(), canonical_matrices(der.space, n)});
  if (expected.centroid && *expected.centroid != gamma.dim())
    r.discrepancies.push_back(
        {"centroid", *expected.centroid, gamma.dim(), canonical_matrices(gamma.space, n)});
  return r;
}

std::vector<AlgebraReport> dimension_report(std::span<const CorpusEntry> corpus, unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  std::vector<AlgebraReport> out(corpus.size());
  for (std::size_t start = 0; start < corpus.size(); start += jobs) {
    const std::size_t stop = std::min(corpus.size(), start + jobs);
    if (jobs == 1) {
      out[start] = analyze_entry(corpus[start]);
      continue;
    }
    std::vector<std::future<AlgebraReport>> batch;
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::async(std::launch::async, analyze_entry, std::cref(corpus[i])));
    for (std::size_t i = start; i < stop; ++i) out[i] = batch[i - start].get();
  }
  return out;
}

}  // namespace algkit
