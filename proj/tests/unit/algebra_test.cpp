#include <algkit/algebra.hpp>
#include <algkit/corpus.hpp>
#include <algkit/errors.hpp>
#include <algkit/parser.hpp>
#include <algkit/serialize.hpp>

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "test_support.hpp"

namespace algkit {
namespace {

using testing::random_element;

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = load_corpus();
  return c;
}

StructureConstants entry(const std::string& name) {
  const CorpusEntry* e = find_entry(corpus(), name);
  if (e == nullptr) throw std::runtime_error("no corpus entry " + name);
  return e->algebra();
}

AlgebraElement e(std::size_t n, std::size_t i) { return AlgebraElement::basis(n, i - 1); }

StructureConstants non_associative_dim2() {
  // e1e1 = e2, e2e1 = e1
  return parse_algebra("dim 2\ne1*e1 = e2\ne2*e1 = e1\n");
}

TEST(Parse, SemicolonSeparatedAs4_1) {
  const auto sc = parse_algebra("dim 4; e1*e1 = e3; e2*e2 = e4");
  ASSERT_EQ(sc.dim(), 4u);
  EXPECT_EQ(sc.tensor().size(), 64u);
  std::size_t nonzero = 0;
  for (const auto& x : sc.tensor()) nonzero += (x != 0);
  EXPECT_EQ(nonzero, 2u);
  EXPECT_EQ(sc.gamma(0, 0, 2), 1);
  EXPECT_EQ(sc.gamma(1, 1, 3), 1);
}

TEST(Parse, NoProductsIsZeroAlgebra) {
  const auto sc = parse_algebra("dim 2");
  EXPECT_EQ(sc.dim(), 2u);
  for (const auto& x : sc.tensor()) EXPECT_EQ(x, 0);
}

TEST(Parse, ParameterExpression) {
  const auto sc = parse_algebra(
      "dim 4; param alpha = 2 exclude 1; e1*e2 = e4; e2*e1 = ((1+alpha)/(1-alpha)) e4; e2*e2 = e3");
  EXPECT_EQ(sc.gamma(1, 0, 3), -3);
  EXPECT_EQ(sc.gamma(0, 1, 3), 1);
  ASSERT_EQ(sc.parameters().size(), 1u);
  EXPECT_EQ(sc.parameters()[0].name, "alpha");
  EXPECT_EQ(sc.parameters()[0].value, 2);
}

TEST(Parse, OverrideAndExcludedValue) {
  const std::string text = "dim 4\nparam alpha = 2 exclude 1\ne2*e1 = ((1+alpha)/(1-alpha)) e4\n";
  ParseOptions opts;
  opts.overrides["alpha"] = 3;
  EXPECT_EQ(parse_algebra(text, opts).gamma(1, 0, 3), -2);
  opts.overrides["alpha"] = 1;
  try {
    parse_algebra(text, opts);
    FAIL() << "expected ParameterError";
  } catch (const ParameterError& err) {
    EXPECT_NE(std::string(err.what()).find("excluded parameter value alpha=1"), std::string::npos);
  }
  ParseOptions unknown;
  unknown.overrides["beta"] = 1;
  EXPECT_THROW(parse_algebra(text, unknown), ParameterError);
}

TEST(Parse, TermsCommentsAndSigns) {
  const auto sc = parse_algebra(
      "# comment line\n"
      "dim 4   # trailing comment\n"
      "e1*e1 = -2 e3 + e4\n"
      "e1*e2 = 1/2*e3 - (3/4) e4\n"
      "e2*e2 = 0\n");
  EXPECT_EQ(sc.gamma(0, 0, 2), -2);
  EXPECT_EQ(sc.gamma(0, 0, 3), 1);
  EXPECT_EQ(sc.gamma(0, 1, 2), Rational(1, 2));
  EXPECT_EQ(sc.gamma(0, 1, 3), Rational(-3, 4));
}

struct BadInput {
  const char* text;
  ParseErrorKind kind;
  std::size_t line;
};

class ParseErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseErrors, KindAndLocation) {
  const BadInput& bad = GetParam();
  try {
    parse_algebra(bad.text);
    FAIL() << "expected ParseError for: " << bad.text;
  } catch (const ParseError& err) {
    EXPECT_EQ(err.kind(), bad.kind) << err.what();
    EXPECT_EQ(err.line(), bad.line) << err.what();
    EXPECT_GE(err.column(), 1u);
    EXPECT_NE(std::string(err.what()).find(to_string(bad.kind)), std::string::npos);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Kinds, ParseErrors,
    ::testing::Values(BadInput{"dim 4\ne1*e1 = = e3\n", ParseErrorKind::kSyntax, 2},
                      BadInput{"e1*e1 = e3\n", ParseErrorKind::kSyntax, 1},
                      BadInput{"dim 4\ne1*f2 = e3\n", ParseErrorKind::kUnknownSymbol, 2},
                      BadInput{"dim 4\n\ne1*e1 = e9\n", ParseErrorKind::kIndexOutOfRange, 3},
                      BadInput{"dim 4\ne1*e1 = (beta) e3\n", ParseErrorKind::kUnboundParameter, 2},
                      BadInput{"dim 4\ne1*e1 = e3\ne1*e1 = e4\n", ParseErrorKind::kDuplicateProduct, 3},
                      BadInput{"dim 4\ne1*e1 = (1/0) e3\n", ParseErrorKind::kDivisionByZero, 2},
                      BadInput{"dim 4\nparam a = 1\ne1*e1 = (1/(a-1)) e3\n",
                               ParseErrorKind::kDivisionByZero, 3}));

TEST(Multiply, Examples) {
  const auto as1 = entry("As4_1");
  EXPECT_EQ(multiply(e(4, 1), e(4, 1), as1), e(4, 3));
  EXPECT_EQ(multiply(e(4, 2), AlgebraElement::zero(4), as1), AlgebraElement::zero(4));
  const auto as48 = entry("As4_48");
  EXPECT_EQ(multiply(e(4, 1), e(4, 2), as48), e(4, 3));
  EXPECT_EQ(multiply(e(4, 2), e(4, 1), as48), e(4, 3));
}

TEST(Multiply, ShapeMismatch) {
  const auto as1 = entry("As4_1");
  EXPECT_THROW(multiply(AlgebraElement::zero(3), e(4, 1), as1), ShapeError);
  EXPECT_THROW(left_mult_operator(AlgebraElement::zero(2), as1), ShapeError);
}

TEST(MultOperators, Examples) {
  const auto as10 = entry("As4_10");
  EXPECT_EQ(left_mult_operator(e(4, 1), as10), RationalMatrix::identity(4));
  const auto as1 = entry("As4_1");
  RationalMatrix expected(4, 4);
  expected(2, 0) = 1;
  EXPECT_EQ(left_mult_operator(e(4, 1), as1), expected);
  EXPECT_EQ(right_mult_operator(e(4, 1), as1), expected);
  EXPECT_TRUE(left_mult_operator(AlgebraElement::zero(4), as1).is_zero());
}

TEST(Associativity, Examples) {
  EXPECT_TRUE(check_associative(parse_algebra("dim 3")));
  const auto bad = non_associative_dim2();
  EXPECT_FALSE(check_associative(bad));
  // (e1e1)e1 = e2e1 = e1 but e1(e1e1) = e1e2 = 0; first failing triple is (1,1,1).
  const auto w = find_associativity_violation(bad);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ((*w)[0], 0u);
  EXPECT_EQ((*w)[1], 0u);
  EXPECT_EQ((*w)[2], 0u);
}

TEST(AlgebraSquare, Examples) {
  EXPECT_EQ(algebra_square(parse_algebra("dim 3")), Subspace::zero(3));
  const std::vector<RationalVector> e34{{0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(algebra_square(entry("As4_1")), Subspace::span(4, e34));
  EXPECT_EQ(algebra_square(entry("As4_10")).dim(), 4u);
}

TEST(Center, Examples) {
  EXPECT_EQ(center(parse_algebra("dim 3")), Subspace::full(3));
  const std::vector<RationalVector> e34{{0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(center(entry("As4_1")), Subspace::span(4, e34));
  EXPECT_EQ(center(entry("As4_20")), Subspace::zero(4));
  // Four orthogonal idempotents: commutative, so the commutant center is everything.
  EXPECT_EQ(commutant_center(entry("As4_20")), Subspace::full(4));
  const AlgebraElement h[] = {e(4, 1)};
  EXPECT_EQ(centralizer(h, entry("As4_1")).dim(), 3u);
}

TEST(Center, AnnihilatorInsideCommutant) {
  for (const auto& c : corpus()) {
    const auto sc = c.algebra();
    EXPECT_TRUE(is_subspace_of(center(sc), commutant_center(sc))) << c.name;
  }
}

TEST(AlgebraNilpotent, Examples) {
  EXPECT_TRUE(is_nilpotent_algebra(parse_algebra("dim 2")));
  EXPECT_TRUE(is_nilpotent_algebra(entry("As4_48")));
  EXPECT_FALSE(is_nilpotent_algebra(entry("As4_20")));
  EXPECT_FALSE(is_nilpotent_algebra(entry("As4_10")));
}

TEST(ChangeBasis, IdentityIsNoop) {
  const auto sc = entry("As4_9");
  EXPECT_EQ(change_basis(sc, RationalMatrix::identity(4)).tensor(), sc.tensor());
  EXPECT_THROW(change_basis(sc, RationalMatrix{{1, 2}, {2, 4}}), Error);
}

// Randomized properties.

class AlgebraProperty : public ::testing::TestWithParam<std::string> {};

TEST_P(AlgebraProperty, BilinearAndCoherent) {
  const auto sc = entry(GetParam());
  const std::size_t n = sc.dim();
  std::mt19937_64 rng(std::hash<std::string>{}(GetParam()));
  for (int t = 0; t < 25; ++t) {
    const auto a = random_element(rng, n), a2 = random_element(rng, n), b = random_element(rng, n);
    EXPECT_EQ(multiply(a + a2, b, sc), multiply(a, b, sc) + multiply(a2, b, sc));
    EXPECT_EQ(multiply(b, a + a2, sc), multiply(b, a, sc) + multiply(b, a2, sc));
    EXPECT_EQ(left_mult_operator(a, sc) * b.coords, multiply(a, b, sc).coords);
    EXPECT_EQ(right_mult_operator(a, sc) * b.coords, multiply(b, a, sc).coords);
  }
}

TEST_P(AlgebraProperty, AssociativeOnRandomTriples) {
  const auto sc = entry(GetParam());
  ASSERT_TRUE(check_associative(sc));
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_element(rng, 4), y = random_element(rng, 4), z = random_element(rng, 4);
    ASSERT_EQ(multiply(multiply(x, y, sc), z, sc), multiply(x, multiply(y, z, sc), sc));
  }
}

TEST_P(AlgebraProperty, TextAndJsonRoundTrip) {
  const auto sc = entry(GetParam());
  const auto again = parse_algebra(to_definition_text(sc), {sc.name(), {}});
  EXPECT_EQ(again.tensor(), sc.tensor());
  EXPECT_EQ(again.parameters(), sc.parameters());
  const auto from_json = structure_constants_from_json(to_json(sc));
  EXPECT_EQ(from_json, sc);
  EXPECT_EQ(to_json(from_json), to_json(sc));
}

TEST_P(AlgebraProperty, BasisChangePreservesAssociativity) {
  const auto sc = entry(GetParam());
  std::mt19937_64 rng(5);
  const auto p = testing::random_invertible(rng, 4);
  const auto moved = change_basis(sc, p);
  EXPECT_TRUE(check_associative(moved));
  // Structure constants transform so that P maps products to products.
  const auto x = random_element(rng, 4), y = random_element(rng, 4);
  const AlgebraElement px{p * x.coords}, py{p * y.coords};
  EXPECT_EQ(p * multiply(x, y, moved).coords, multiply(px, py, sc).coords);
}

INSTANTIATE_TEST_SUITE_P(Corpus, AlgebraProperty,
                         ::testing::Values("As4_1", "As4_9", "As4_10", "As4_22", "As4_23",
                                           "As4_35", "As4_36", "As4_48", "As4_54", "As4_58"));

TEST(AlgebraCorpus, AllAssociative) {
  for (const auto& c : corpus()) {
    const auto sc = c.algebra();
    const auto w = find_associativity_violation(sc);
    EXPECT_FALSE(w.has_value()) << c.name;
  }
}

}  // namespace
}  // namespace algkit
