#include <gtest/gtest.h>

#include "sullivan/attachment.hpp"
#include "sullivan/format.hpp"

#include "fixture_models.hpp"
#include "properties.hpp"

using namespace sullivan;
using sullivan::testkit::Rng;

namespace {

Cochain lambda(const BigradedModel& M, const std::string& s) { return Cochain{parse_element(M.generators(), s), 0}; }

const BigradedModel& cp1() {
  static const BigradedModel M = testkit::model_of_fixture("cp1");
  return M;
}

const BigradedModel& ex31() {
  static const BigradedModel M = testkit::model_of_fixture("ex3.1");
  return M;
}

const BigradedModel& ex32() {
  static const BigradedModel M = testkit::model_of_fixture("ex3.2");
  return M;
}

AlphaFunctional cp2_alpha() { return {4, {{"b", Scalar(1)}}}; }

}  // namespace

TEST(BuildAttachment, SphereWithFourCell) {
  const AttachmentModel Ma = build_attachment(cp1(), cp2_alpha());
  const Cochain d = Ma.complex().d(lambda(cp1(), "b"));
  EXPECT_EQ(to_string(cp1().generators(), d), "a^2 + u");
}

TEST(BuildAttachment, ZeroAlphaLeavesDifferentialAlone) {
  const AttachmentModel Ma = build_attachment(ex32(), {6, {}});
  const CochainComplex C = Ma.complex();
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const Element x = testkit::random_element(rng, ex32().generators(), testkit::uniform(rng, 2, 5));
    const Cochain dx = C.d(Cochain{x, 0});
    EXPECT_EQ(dx.u, 0);
    EXPECT_EQ(dx.lambda, d_extend(ex32().dgca, x));
  }
}

TEST(BuildAttachment, PairingAddsMultipleOfU) {
  for (const int m : {1, 3}) {
    const AttachmentModel Ma = build_attachment(ex31(), {6, {{"g12", Scalar(1)}, {"z", Scalar(m)}}});
    const Cochain d = Ma.complex().d(lambda(ex31(), "z"));
    EXPECT_EQ(d.lambda, parse_element(ex31().generators(), "x1*x2*x3"));
    EXPECT_EQ(d.u, m);
  }
}

TEST(BuildAttachment, Errors) {
  EXPECT_THROW(build_attachment(cp1(), {1, {}}), InputError);
  EXPECT_THROW(build_attachment(cp1(), {5, {}}), TruncationError);
  try {
    build_attachment(cp1(), {4, {{"q", Scalar(1)}, {"w7", Scalar(2)}, {"a", Scalar(1)}}});
    FAIL();
  } catch (const ValidationError& e) {
    ASSERT_EQ(e.problems().size(), 2u);
    EXPECT_EQ(e.problems()[0], "unknown generator names in alpha: q w7");
    EXPECT_NE(e.problems()[1].find("'a' of degree 2"), std::string::npos);
  }
}

TEST(BuildAttachment, TwoCellIsCoercedToZero) {
  const AttachmentModel Ma = build_attachment(cp1(), {2, {{"a", Scalar(1)}}});
  EXPECT_TRUE(Ma.alpha.is_zero());
  ASSERT_EQ(Ma.notices.size(), 1u);
  EXPECT_FALSE(u_class(Ma).is_zero());
}

TEST(AttachmentCohomology, SphereWithFourCell) {
  const AttachmentModel Ma = build_attachment(cp1(), cp2_alpha());
  const auto h4 = attachment_cohomology(Ma, 4);
  ASSERT_EQ(h4.dimension(), 1u);
  const Vector u = h4.coordinates(Cochain{Element(), 1});
  const Vector a2 = h4.coordinates(lambda(cp1(), "a^2"));
  EXPECT_EQ(u, Vector{Scalar(-1)} );
  EXPECT_EQ(a2, Vector{Scalar(1)});
  std::vector<std::size_t> dims;
  for (int m = 0; m <= 4; ++m) dims.push_back(attachment_cohomology(Ma, m).dimension());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 0, 1, 0, 1}));
}

TEST(AttachmentCohomology, ZeroAlphaAddsOneDimension) {
  const AttachmentModel Ma = build_attachment(cp1(), {4, {}});
  EXPECT_EQ(attachment_cohomology(Ma, 4).dimension(), cp1().algebra.dimension(4) + 1);
}

TEST(UClass, SquareFreeExample) {
  const AttachmentModel Ma = build_attachment(ex31(), testkit::alpha_of_fixture("ex3.1"));
  const CohomologyClass u = u_class(Ma);
  const auto h6 = attachment_cohomology(Ma, 6);
  EXPECT_EQ(u.coordinates, h6.coordinates(lambda(ex31(), "-x1*x2*x3")));
  EXPECT_EQ(class_to_string(ex31().generators(), h6, u.coordinates), "-[x1*x2*x3]");
}

TEST(UClass, WedgeExampleSpansTopDegree) {
  const AttachmentModel Ma = build_attachment(ex32(), testkit::alpha_of_fixture("ex3.2"));
  EXPECT_FALSE(u_class(Ma).is_zero());
  EXPECT_EQ(attachment_cohomology(Ma, 6).dimension(), 1u);
}

TEST(UClass, StageZeroSupportKillsU) {
  const BigradedModel M = testkit::model_of_fixture("wedge3-s2");
  const AttachmentModel Ma = build_attachment(M, {3, {{"a2", Scalar(5)}}});
  EXPECT_TRUE(u_class(Ma).is_zero());
  EXPECT_EQ(attachment_cohomology(Ma, 2).dimension(), M.algebra.dimension(2) - 1);
}

TEST(IsUDecomposable, SquareFreeExample) {
  const AttachmentModel Ma = build_attachment(ex31(), testkit::alpha_of_fixture("ex3.1"));
  const Decomposability d = is_u_decomposable(Ma);
  EXPECT_TRUE(d.decomposable);
  EXPECT_EQ(decomposition_to_string(ex31().generators(), d.witness), "-[x1]*[x2*x3]");
}

TEST(IsUDecomposable, WedgeExample) {
  const AttachmentModel Ma = build_attachment(ex32(), testkit::alpha_of_fixture("ex3.2"));
  const Decomposability d = is_u_decomposable(Ma);
  EXPECT_FALSE(d.decomposable);
  EXPECT_TRUE(d.witness.empty());
  EXPECT_EQ(d.h_dimension, 1u);
  EXPECT_EQ(d.decomposable_dimension, 0u);
}

TEST(IsUDecomposable, SphereWithFourCell) {
  const AttachmentModel Ma = build_attachment(cp1(), cp2_alpha());
  const Decomposability d = is_u_decomposable(Ma);
  EXPECT_TRUE(d.decomposable);
  EXPECT_EQ(decomposition_to_string(cp1().generators(), d.witness), "-[a]*[a]");
}

TEST(IsUDecomposable, ZeroUIsAPreconditionError) {
  const AttachmentModel Ma = build_attachment(cp1(), {3, {{"a", Scalar(1)}}});
  EXPECT_THROW(is_u_decomposable(Ma), InputError);
}

TEST(AttachmentProperties, UClassNonzeroIffHurewiczVanishes) {
  const auto r = testkit::property_u_hurewicz();
  EXPECT_GE(r.cases, 200);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(AttachmentProperties, DAlphaSquaredVanishes) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(2300 + i);
    const BigradedModel M = testkit::random_model(rng);
    const int n = testkit::random_cell(rng, M);
    if (n == 0) continue;
    const AttachmentModel Ma = build_attachment(M, testkit::random_alpha(rng, M, n));
    const CochainComplex C = Ma.complex();
    const int m = testkit::uniform(rng, 2, M.truncation() - 1);
    const Element x = testkit::random_element(rng, M.generators(), m);
    EXPECT_TRUE(C.d(C.d(Cochain{x, 0})).is_zero()) << "seed " << 2300 + i;
  }
}
