#include <gtest/gtest.h>

#include "generators.hpp"

using namespace phimod;
using phimod::gen::Rng;

namespace {

VecF vec(const FieldPtr& F, std::vector<long> v) {
  std::vector<FieldElement> out;
  for (long x : v) out.emplace_back(F, x);
  return VecF(out);
}

}  // namespace

TEST(ProductRing, PhiShift) {
  FieldPtr F = FieldSpec::rationals(3);
  VecF v = vec(F, {1, 2, 3});
  EXPECT_EQ(phi_shift(v, 1), vec(F, {2, 3, 1}));
  EXPECT_EQ(phi_shift(v, 0), v);
  EXPECT_EQ(phi_shift(v, 3), v);
  EXPECT_EQ(phi_shift(v, -1), vec(F, {3, 1, 2}));
}

TEST(ProductRing, NormAndTrace) {
  FieldPtr F = FieldSpec::rationals(3);
  EXPECT_EQ(nm_phi(vec(F, {2, 3})), vec(F, {6, 6}));
  EXPECT_EQ(nm_phi(VecF::ones(F, 4)), VecF::ones(F, 4));
  EXPECT_EQ(tr_phi(vec(F, {2, 3, 4})), vec(F, {9, 9, 9}));
  Mat2F D = Mat2F::diag(vec(F, {2, 3}), vec(F, {5, 7}));
  EXPECT_EQ(nm_phi(D), Mat2F::diag(vec(F, {6, 6}), vec(F, {35, 35})));
}

TEST(ProductRing, TwistedEquation) {
  const long p = 3;
  FieldPtr F = FieldSpec::rationals(p);
  auto g = solve_twisted(vec(F, {1, 4}), vec(F, {2, 2}));
  ASSERT_TRUE(g);
  EXPECT_EQ(*g, VecF({FieldElement::one(F), FieldElement(F, Rational(1, 2))}));
  EXPECT_EQ(*solve_twisted(VecF::ones(F, 3), VecF::ones(F, 3)), VecF::ones(F, 3));
  EXPECT_FALSE(solve_twisted(vec(F, {1, 1}), vec(F, {p, 1})));
  EXPECT_THROW(solve_twisted(vec(F, {0, 1}), vec(F, {1, 1})), Error);
}

TEST(ProductRing, TensorE) {
  FieldPtr F = FieldSpec::rationals(2);
  EXPECT_EQ(tensor_e(vec(F, {1, 2}), 2), VecM(vec(F, {1, 2, 1, 2}).data()));
  VecF v = vec(F, {5, 6, 7});
  EXPECT_EQ(tensor_e(v, 1).data(), v.data());
  VecF u = vec(F, {2, 3, 4});
  EXPECT_EQ(tensor_e(u * v, 3), tensor_e(u, 3) * tensor_e(v, 3));
}

TEST(ProductRing, IndexSetsAndIdempotents) {
  FieldPtr F = FieldSpec::rationals(2);
  IndexSet A(5, {0, 2, 3}), B(5, {2, 4});
  EXPECT_EQ((A & B).elements(), std::vector<size_t>({2}));
  EXPECT_EQ((A | B).count(), 4u);
  EXPECT_EQ(A.complement().elements(), std::vector<size_t>({1, 4}));
  EXPECT_EQ(idempotent(A, F) * idempotent(B, F), idempotent(A & B, F));
  EXPECT_EQ(support(idempotent(A, F)), A);
}

TEST(ProductRing, Mat2Basics) {
  FieldPtr F = FieldSpec::rationals(5);
  Mat2 M{FieldElement(F, 1L), FieldElement(F, 2L), FieldElement(F, 3L), FieldElement(F, 4L)};
  EXPECT_EQ(M.det(), FieldElement(F, -2L));
  EXPECT_EQ(M * M.inverse(), Mat2::identity(F));
  Mat2 S{FieldElement(F, 1L), FieldElement(F, 2L), FieldElement(F, 2L), FieldElement(F, 4L)};
  EXPECT_THROW(S.inverse(), Error);
}

TEST(ProductRingProperty, NormIsShiftInvariantAndMultiplicative) {
  Rng rng(21);
  FieldPtr F = gen::sqrt_field(3);
  for (int n = 0; n < 200; ++n) {
    size_t f = static_cast<size_t>(rng.uniform(1, 4));
    VecF u = gen::random_unit_vecf(F, f, rng), v = gen::random_unit_vecf(F, f, rng);
    ASSERT_EQ(nm_phi(phi_shift(v, 1)), nm_phi(v));
    ASSERT_EQ(nm_phi(u * v), nm_phi(u) * nm_phi(v));
    ASSERT_EQ(phi_shift(v, static_cast<long>(f)), v);
  }
}

TEST(ProductRingProperty, TwistedSolutionsSubstitute) {
  Rng rng(22);
  FieldPtr F = FieldSpec::rationals(5);
  for (int n = 0; n < 200; ++n) {
    size_t f = static_cast<size_t>(rng.uniform(1, 4));
    VecF a = gen::random_unit_vecf(F, f, rng), b = gen::random_unit_vecf(F, f, rng);
    if (n % 2 == 0) b[0] = b[0] * nm_phi(a)[0] / nm_phi(b)[0];
    auto g = solve_twisted(a, b);
    ASSERT_EQ(g.has_value(), nm_phi(a) == nm_phi(b));
    if (g) {
      ASSERT_EQ(a * *g, b * phi_shift(*g));
      ASSERT_TRUE((*g)[0].is_one());
    }
  }
}

TEST(ProductRingProperty, NormOfMatrixConjugates) {
  // Nm(P M phi(P)^-1) = P_0 Nm(M) P_0^-1 at coordinate 0.
  Rng rng(23);
  FieldPtr F = FieldSpec::rationals(3);
  for (int n = 0; n < 100; ++n) {
    size_t f = static_cast<size_t>(rng.uniform(1, 3));
    Mat2F M = gen::random_basechange(F, f, rng), P = gen::random_basechange(F, f, rng);
    Mat2F N = P * M * phi_shift(P).inverse();
    ASSERT_EQ(nm_phi(N).at(0), P.at(0) * nm_phi(M).at(0) * P.at(0).inverse());
  }
}
