#include <gtest/gtest.h>

#include "test_support.hpp"

namespace affcl {
namespace {

using testing::Generator;

std::vector<IntegerVector> vecs(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<IntegerVector> out;
  for (auto r : rows) out.push_back(make_vector(r));
  return out;
}

ErrorKind kind_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

TEST(ConeFromGenerators, FirstQuadrant) {
  const auto c = cone_from_generators(2, vecs({{1, 0}, {0, 1}}));
  EXPECT_EQ(c.facet_normals(), vecs({{0, 1}, {1, 0}}));
  EXPECT_EQ(c.facet_count(), 2u);
}

TEST(ConeFromGenerators, A1Cone) {
  const auto c = cone_from_generators(2, vecs({{0, 1}, {2, -1}}));
  EXPECT_EQ(c.facet_normals(), vecs({{1, 0}, {1, 2}}));
  // each normal vanishes on exactly one ray and is positive on the other
  for (const auto &n : c.facet_normals()) {
    int zeros = 0;
    for (const auto &g : c.generators()) {
      EXPECT_GE(dot(n, g), 0);
      zeros += dot(n, g) == 0;
    }
    EXPECT_EQ(zeros, 1);
  }
}

TEST(ConeFromGenerators, Errors) {
  EXPECT_EQ(kind_of([] { cone_from_generators(2, vecs({{1, 0}, {-1, 0}})); }),
            ErrorKind::NotFullDimensional);
  EXPECT_EQ(kind_of([] { cone_from_generators(2, vecs({{1, 0}, {-1, 0}, {0, 1}})); }),
            ErrorKind::NotPointed);
  EXPECT_EQ(kind_of([] { cone_from_generators(2, vecs({{1, 0}, {0, 0}})); }),
            ErrorKind::ZeroRay);
  EXPECT_EQ(kind_of([] { cone_from_generators(3, vecs({{1, 0, 0}, {0, 1, 0}})); }),
            ErrorKind::NotFullDimensional);
  EXPECT_EQ(kind_of([] { cone_from_generators(2, {}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { cone_from_generators(2, vecs({{1, 0, 0}})); }),
            ErrorKind::DimensionMismatch);
}

TEST(ConeFromGenerators, DropsRedundantAndScaledRays) {
  const auto c = cone_from_generators(2, vecs({{2, 0}, {0, 3}, {1, 1}, {4, 0}}));
  EXPECT_EQ(c.generators(), vecs({{0, 1}, {1, 0}}));
}

TEST(ConeFromNormals, Examples) {
  EXPECT_EQ(cone_from_normals(2, vecs({{0, 1}, {1, 0}})).generators(), vecs({{0, 1}, {1, 0}}));
  EXPECT_EQ(cone_from_normals(2, vecs({{1, 0}, {1, 2}})),
            cone_from_generators(2, vecs({{0, 1}, {2, -1}})));
  const auto sq = cone_from_normals(3, vecs({{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}, {0, -1, 1}}));
  EXPECT_EQ(sq.generators().size(), 4u);
  EXPECT_EQ(sq, testing::square_cone().cone());
}

TEST(ConeFromNormals, Errors) {
  EXPECT_EQ(kind_of([] { cone_from_normals(2, vecs({{1, 0}})); }), ErrorKind::NotPointed);
  // a line: not pointed
  EXPECT_EQ(kind_of([] { cone_from_normals(2, vecs({{1, 0}, {-1, 0}})); }),
            ErrorKind::NotPointed);
  // only the origin
  EXPECT_EQ(kind_of([] { cone_from_normals(2, vecs({{1, 0}, {0, 1}, {-1, -1}})); }),
            ErrorKind::NotFullDimensional);
}

TEST(ValuationMatrix, Examples) {
  // rows follow the lexicographic facet order
  EXPECT_EQ(valuation_matrix(testing::first_quadrant().cone()), (IntegerMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(valuation_matrix(testing::a1_cone().cone()), (IntegerMatrix{{1, 0}, {1, 2}}));
  const auto nu = valuation_matrix(testing::square_cone().cone());
  EXPECT_EQ(nu.rows(), 4u);
  EXPECT_EQ(testing::rational_rank(nu), 3u);
}

// Independent facet oracle: a primitive vector is a facet normal iff it is
// nonnegative on all rays and vanishes on rank-1 independent rays.
bool is_facet_by_oracle(const RationalCone &c, const IntegerVector &n) {
  std::vector<IntegerVector> tight;
  for (const auto &g : c.generators()) {
    if (dot(n, g) < 0) return false;
    if (dot(n, g) == 0) tight.push_back(g);
  }
  if (tight.empty()) return c.ambient_rank() == 1;
  return testing::rational_rank(IntegerMatrix::from_rows(tight, c.ambient_rank())) ==
         c.ambient_rank() - 1;
}

TEST(RationalCone, RandomConeProperties) {
  Generator gen(21);
  int built = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = gen.index(2, 4);
    const auto c = gen.cone(d, gen.index(d, d + 3), -5, 5);
    if (!c) continue;
    ++built;
    const auto nu = valuation_matrix(*c);
    ASSERT_EQ(testing::rational_rank(nu), d);
    ASSERT_TRUE(std::is_sorted(c->facet_normals().begin(), c->facet_normals().end()));
    for (const auto &n : c->facet_normals()) {
      ASSERT_EQ(content(n), 1);
      ASSERT_TRUE(is_facet_by_oracle(*c, n)) << to_string(n);
    }
    for (const auto &g : c->generators()) {
      ASSERT_EQ(content(g), 1);
      ASSERT_TRUE(c->contains(g));
    }
    // duality round trip
    ASSERT_EQ(cone_from_normals(d, nu.row_vectors()), *c);
    ASSERT_EQ(cone_from_generators(d, c->generators()), *c);
  }
  EXPECT_GT(built, 100);
}

TEST(RationalCone, FacetCountAtLeastRank) {
  for (const auto &m : testing::small_rings())
    EXPECT_GE(m.facet_count(), m.lattice_rank());
}

} // namespace
} // namespace affcl
