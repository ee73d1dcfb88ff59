#include <gtest/gtest.h>

#include "sullivan/cohomology.hpp"
#include "sullivan/dgca.hpp"
#include "sullivan/format.hpp"

#include "fixture_models.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace sullivan;
using sullivan::testkit::Rng;

namespace {

/// Builds a free dgca from "name:deg" pairs and differential text.
FreeDGCA dgca(const std::vector<Generator>& gens, const std::vector<std::pair<std::string, std::string>>& d,
              int truncation) {
  FreeDGCA D;
  D.gens = GeneratorSet(gens);
  D.differential.assign(D.gens.size(), Element());
  for (const auto& [name, text] : d) D.differential[D.gens.id_of(name)] = parse_element(D.gens, text);
  D.truncation = truncation;
  return D;
}

FreeDGCA sphere_model() { return dgca({{"a", 2}, {"b", 3}}, {{"b", "a^2"}}, 6); }

Element el(const FreeDGCA& D, const std::string& s) { return parse_element(D.gens, s); }

}  // namespace

TEST(DExtend, SphereProduct) {
  const FreeDGCA D = sphere_model();
  EXPECT_EQ(d_extend(D, el(D, "a*b")), el(D, "a^3"));
}

TEST(DExtend, OddFirstFactorSign) {
  const FreeDGCA D = dgca({{"a1", 2}, {"a2", 2}, {"b1", 3}, {"b2", 3}}, {{"b1", "a1^2"}, {"b2", "a2^2"}}, 6);
  EXPECT_EQ(d_extend(D, el(D, "b1*b2")), el(D, "a1^2*b2 - a2^2*b1"));
}

TEST(DExtend, WedgeModelGeneratorDifferential) {
  const BigradedModel M = testkit::model_of_fixture("wedge3-s2");
  const auto& g = M.generators();
  EXPECT_EQ(d_extend(M.dgca, parse_element(g, "k12")), parse_element(g, "a2*c12 - a1*c21 + b1*b2"));
}

TEST(DExtend, RejectsInhomogeneousAndOverTruncation) {
  const FreeDGCA D = sphere_model();
  EXPECT_THROW(d_extend(D, el(D, "a + b")), InputError);
  EXPECT_THROW(d_extend(D, el(D, "a^2*b")), TruncationError);
}

TEST(VerifyDSquared, SphereModel) { EXPECT_FALSE(verify_d_squared(sphere_model())); }

TEST(VerifyDSquared, WedgeModel) { EXPECT_FALSE(verify_d_squared(testkit::model_of_fixture("ex3.2").dgca)); }

TEST(VerifyDSquared, CorruptedModelReportsCounterexample) {
  const FreeDGCA D = dgca({{"a1", 2}, {"a2", 2}, {"b1", 3}, {"c", 4}}, {{"b1", "a1*a2"}, {"c", "b1*a1"}}, 5);
  const auto f = verify_d_squared(D);
  ASSERT_TRUE(f);
  EXPECT_EQ(D.gens[f->generator].name, "c");
  EXPECT_EQ(f->residue, el(D, "a1^2*a2"));
}

TEST(CheckDgca, DegreeMismatchAndMinimality) {
  FreeDGCA D = sphere_model();
  EXPECT_TRUE(check_dgca(D).empty());
  EXPECT_TRUE(is_minimal(D));
  D.differential[D.gens.id_of("b")] = el(D, "a");
  EXPECT_EQ(check_dgca(D).size(), 1u);
  EXPECT_FALSE(is_minimal(D));
}

TEST(Cohomology, SphereModelDegreeTwo) {
  const FreeDGCA D = sphere_model();
  const auto h = cohomology(D, 2);
  ASSERT_EQ(h.dimension(), 1u);
  EXPECT_EQ(to_string(D.gens, h.classes()[0].representative), "a");
}

TEST(Cohomology, SphereModelSquareIsExact) { EXPECT_EQ(cohomology(sphere_model(), 4).dimension(), 0u); }

TEST(Cohomology, SphereModelDegreeThree) { EXPECT_EQ(cohomology(sphere_model(), 3).dimension(), 0u); }

TEST(Cohomology, CoordinatesRejectNonCocycles) {
  const FreeDGCA D = sphere_model();
  EXPECT_THROW(cohomology(D, 3).coordinates(Cochain{el(D, "b"), 0}), InputError);
}

TEST(ClassProduct, SphereSquareIsZero) {
  const FreeDGCA D = sphere_model();
  const auto a = cohomology(D, 2).classes()[0];
  EXPECT_TRUE(class_product(D, a, a).is_zero());
}

TEST(ClassProduct, SquareFreeProductSurvives) {
  const BigradedModel M = build_minimal_model(
      testkit::algebra({{"x1", 2}, {"x2", 2}, {"x3", 2}}, {"x1^2", "x2^2", "x3^2", "x1*x2*x3"}, 6), 5);
  const auto h2 = cohomology(M.dgca, 2);
  ASSERT_EQ(h2.dimension(), 3u);
  const auto p = class_product(M.dgca, h2.classes()[0], h2.classes()[1]);
  EXPECT_FALSE(p.is_zero());
  EXPECT_EQ(to_string(M.generators(), p.representative), "x1*x2");
}

TEST(ClassProduct, ZeroClassAnnihilates) {
  const BigradedModel M = testkit::model_of_fixture("wedge3-s2");
  const auto h2 = cohomology(M.dgca, 2);
  const auto zero = h2.make_class(Vector(h2.dimension()));
  EXPECT_TRUE(class_product(M.dgca, h2.classes()[1], zero).is_zero());
}

TEST(DecomposableSubspace, SphereDegreeFour) { EXPECT_EQ(decomposable_subspace(sphere_model(), 4).dimension(), 0u); }

TEST(DecomposableSubspace, SquareFreeDegreeFourIsEverything) {
  const BigradedModel M = build_minimal_model(
      testkit::algebra({{"x1", 2}, {"x2", 2}, {"x3", 2}}, {"x1^2", "x2^2", "x3^2", "x1*x2*x3"}, 6), 5);
  const auto dec = decomposable_subspace(M.dgca, 4);
  EXPECT_EQ(dec.dimension(), 3u);
  EXPECT_EQ(cohomology(M.dgca, 4).dimension(), 3u);
}

TEST(DecomposableSubspace, DegreeTwoHasNoProducts) {
  const BigradedModel M = testkit::model_of_fixture("wedge3-s2");
  EXPECT_EQ(decomposable_subspace(M.dgca, 2).dimension(), 0u);
  EXPECT_THROW(decomposable_subspace(M.dgca, 6), TruncationError);
}

TEST(DgcaProperties, CohomologyDimensionsMatchBruteForce) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(1700 + i);
    const BigradedModel M = testkit::random_model(rng);
    const oracle::Dgca O = oracle::from_model(M);
    for (int m = 0; m <= M.truncation(); ++m) {
      EXPECT_EQ(cohomology(M.dgca, m).dimension(), oracle::cohomology_dimension(O, m))
          << "seed " << 1700 + i << " degree " << m;
    }
  }
}

TEST(DgcaProperties, OracleProductAgreesWithLibrary) {
  // the oracle multiplies by sorting words letter by letter, the library by
  // merging sorted factor lists
  for (int i = 0; i < 200; ++i) {
    Rng rng(1900 + i);
    const GeneratorSet gens = testkit::random_generator_set(rng, testkit::uniform(rng, 2, 4));
    oracle::Dgca O;
    for (const auto& g : gens.all()) {
      O.names.push_back(g.name);
      O.degrees.push_back(g.degree);
      O.d.emplace_back();
    }
    auto to_poly = [&](const Element& x) {
      oracle::Poly p;
      for (const auto& [m, c] : x.terms()) {
        oracle::Exps e(gens.size(), 0);
        for (const auto& f : m.factors()) e[f.gen] = static_cast<int>(f.exponent);
        oracle::add_to(p, e, c);
      }
      return p;
    };
    const Element x = testkit::random_element(rng, gens, testkit::uniform(rng, 1, 5));
    const Element y = testkit::random_element(rng, gens, testkit::uniform(rng, 1, 5));
    EXPECT_EQ(O.multiply(to_poly(x), to_poly(y)), to_poly(multiply(gens, x, y)));
  }
}
