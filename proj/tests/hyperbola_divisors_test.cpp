#include <gtest/gtest.h>

#include "test_support.hpp"

namespace affcl {
namespace {

HyperbolaDatum hyp(std::initializer_list<long long> d) { return HyperbolaDatum(make_vector(d)); }

ErrorKind kind_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

TEST(HyperbolaClassGroup, Examples) {
  EXPECT_EQ(to_string(class_group(hyp({3, 3}))), "Z + Z/3");
  EXPECT_EQ(to_string(class_group(hyp({1, 1}))), "Z");
  EXPECT_EQ(to_string(class_group(hyp({5}))), "Z/5");
  for (const auto &d : {make_vector({3, 3}), make_vector({1, 1}), make_vector({5}),
                        make_vector({2, 4, 6})}) {
    EXPECT_EQ(class_group(HyperbolaDatum(d)),
              FGAbelianGroup::from_invariant_factors(
                  d.size(), testing::invariant_factors_by_minors(IntegerMatrix::column(d))));
  }
}

TEST(HyperbolaAffineClassGroup, Examples) {
  EXPECT_EQ(to_string(affine_class_group_local(hyp({3, 3}))), "Z");
  EXPECT_TRUE(affine_class_group_local(hyp({5})).is_trivial());
  EXPECT_EQ(to_string(affine_class_group_local(hyp({1, 1, 1}))), "Z^2");
}

TEST(HyperbolaAffineClassGroup, FreeRankOneLess) {
  testing::Generator gen(51);
  for (int t = 0; t < 50; ++t) {
    const HyperbolaDatum h(gen.vector(gen.index(1, 4), 1, 9));
    const auto g = affine_class_group_local(h);
    EXPECT_EQ(g.free_rank(), h.size() - 1);
    EXPECT_TRUE(g.is_torsion_free());
  }
}

TEST(HyperbolaCoaffine, Examples) {
  const auto h = hyp({3, 3});
  EXPECT_TRUE(is_coaffine(h, {1, 2}));
  EXPECT_FALSE(is_coaffine(h, {2, 3}));
  EXPECT_FALSE(is_coaffine(h, {-1, 0}));
  EXPECT_TRUE(is_coaffine(h, {3, 3}));
  EXPECT_TRUE(coaffine_verdict(h, {3, 3}).principal);
  EXPECT_EQ(coaffine_verdict(h, {4, 5}).shift, Integer(1));
}

TEST(HyperbolaCoaffine, SumOfCoaffineNeedNotBeCoaffine) {
  const auto h = hyp({3, 3});
  EXPECT_TRUE(is_coaffine(h, {1, 1}));
  EXPECT_TRUE(is_coaffine(h, {1, 2}));
  EXPECT_FALSE(is_coaffine(h, HyperbolaDivisor{1, 1} + HyperbolaDivisor{1, 2}));
}

TEST(HyperbolaAffineTrivial, Examples) {
  const auto h = hyp({3, 3});
  EXPECT_TRUE(is_affine_trivial(h, {1, 1}));
  EXPECT_FALSE(is_affine_trivial(h, {1, 2}));
  EXPECT_TRUE(is_affine_trivial(h, {0, 0}));
  EXPECT_TRUE(is_strongly_coaffine(h, {1, 1}));
  EXPECT_FALSE(is_strongly_coaffine(h, {1, 2}));
  EXPECT_TRUE(is_strongly_coaffine(h, {0, 0}));
  EXPECT_EQ(class_order(h, {1, 1}), Integer(3));
  EXPECT_EQ(class_order(hyp({2, 4}), {1, 2}), Integer(2));
}

// Direct reading of the classification: search k in a wide window.
bool coaffine_by_search(const IntegerVector &d, const IntegerVector &n) {
  for (long long k = -20; k <= 20; ++k) {
    bool all_zero = true, strictly_between = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Integer v = n[i] - k * d[i];
      all_zero = all_zero && v == 0;
      strictly_between = strictly_between && v > 0 && v < d[i];
    }
    if (all_zero || strictly_between) return true;
  }
  return false;
}

void for_each_divisor(std::size_t r, long long bound,
                      const std::function<void(const IntegerVector &)> &f) {
  testing::for_each_box_point(r, bound, f);
}

TEST(HyperbolaProperties, ExhaustiveSmallGrid) {
  const std::vector<IntegerVector> exps = {make_vector({1}),       make_vector({3}),
                                           make_vector({1, 1}),    make_vector({2, 3}),
                                           make_vector({3, 3}),    make_vector({2, 2, 2}),
                                           make_vector({1, 2, 3})};
  for (const auto &d : exps) {
    const HyperbolaDatum h(d);
    for_each_divisor(d.size(), 6, [&](const IntegerVector &nv) {
      const HyperbolaDivisor n(nv);
      const bool c = is_coaffine(h, n), a = is_affine_trivial(h, n);
      ASSERT_EQ(c, coaffine_by_search(d, nv)) << to_string(nv);
      // class invariance
      for (long long k = -4; k <= 4; ++k) {
        const HyperbolaDivisor m(add(nv, scale(k, d)));
        ASSERT_EQ(is_coaffine(h, m), c);
        ASSERT_EQ(is_affine_trivial(h, m), a);
      }
      // strong coaffineness equals the quantified definition
      ASSERT_EQ(is_strongly_coaffine(h, n), oracle_hyperbola_strong(h, n, 6)) << to_string(nv);
      if (a)
        for (long long k = -6; k <= 6; ++k) { ASSERT_TRUE(is_coaffine(h, Integer(k) * n)); }
      for (long long k = 1; k <= 4; ++k)
        if (is_coaffine(h, Integer(k) * n)) { ASSERT_TRUE(c) << to_string(nv); }
      for (long long k = -4; k <= 4; ++k)
        if (k != 0) { ASSERT_EQ(is_affine_trivial(h, Integer(k) * n), a); }
    });
  }
}

TEST(HyperbolaProperties, AffineTrivialSubgroup) {
  const auto h = hyp({2, 4});
  std::vector<HyperbolaDivisor> trivial;
  for_each_divisor(2, 6, [&](const IntegerVector &nv) {
    if (is_affine_trivial(h, HyperbolaDivisor(nv))) trivial.emplace_back(nv);
  });
  ASSERT_GT(trivial.size(), 3u);
  for (const auto &a : trivial) {
    EXPECT_TRUE(is_affine_trivial(h, -a));
    for (const auto &b : trivial) EXPECT_TRUE(is_affine_trivial(h, a + b));
  }
}

TEST(HyperbolaDatum, Validation) {
  EXPECT_EQ(kind_of([] { hyp({0, 1}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { HyperbolaDatum(make_vector({1, 2}), false, std::nullopt); }),
            ErrorKind::MissingComaximalData);
  EXPECT_EQ(kind_of([] {
              HyperbolaDatum(make_vector({1, 2}), false,
                             std::vector<std::vector<bool>>{{true, true}, {false, true}});
            }),
            ErrorKind::InvalidArgument);
  const HyperbolaDatum nl(make_vector({1, 2}), false,
                          std::vector<std::vector<bool>>{{true, true}, {true, true}});
  EXPECT_EQ(kind_of([&] { is_coaffine(nl, {1, 1}); }), ErrorKind::NonLocalBase);
  EXPECT_EQ(kind_of([&] { is_affine_trivial(nl, {1, 1}); }), ErrorKind::NonLocalBase);
  EXPECT_EQ(kind_of([&] { affine_class_group_local(nl); }), ErrorKind::NonLocalBase);
  EXPECT_EQ(kind_of([] { is_coaffine(hyp({3, 3}), {1}); }), ErrorKind::DimensionMismatch);
}

TEST(HyperbolaNonLocal, AclVanishing) {
  using M = std::vector<std::vector<bool>>;
  EXPECT_TRUE(acl_vanishes_nonlocal(HyperbolaDatum(make_vector({4}), false, M{{false}})));
  EXPECT_TRUE(acl_vanishes_nonlocal(
      HyperbolaDatum(make_vector({1, 2, 3}), false,
                     M{{false, true, true}, {true, false, true}, {true, true, false}})));
  EXPECT_FALSE(acl_vanishes_nonlocal(
      HyperbolaDatum(make_vector({1, 2, 3}), false,
                     M{{false, true, false}, {true, false, true}, {false, true, false}})));
  EXPECT_THROW(acl_vanishes_nonlocal(hyp({1, 2})), Error);
}

TEST(ToricModel, Examples) {
  const auto m1 = toric_model(hyp({1}));
  EXPECT_EQ(m1.facet_count(), 2u);
  EXPECT_TRUE(class_group(m1).is_trivial());
  EXPECT_EQ(class_group(toric_model(hyp({2}))), class_group(hyp({2})));
  EXPECT_EQ(to_string(class_group(toric_model(hyp({2})))), "Z/2");
  EXPECT_EQ(class_group(toric_model(hyp({1, 1}))), class_group(hyp({1, 1})));
  EXPECT_EQ(to_string(class_group(toric_model(hyp({1, 1})))), "Z");
}

TEST(ToricModel, TranslationMatchesValuations) {
  for (const auto &d : {make_vector({2}), make_vector({1, 1}), make_vector({3, 3}),
                        make_vector({1, 2, 3})}) {
    const HyperbolaDatum h(d);
    const auto model = toric_model(h);
    const auto f = toric_model_facets(h, model);
    const std::size_t r = d.size();
    IntegerVector x(r + 1), y(d);
    x[r] = 1;
    y.push_back(-1);
    // div X = sum d_i p_i, div Y = sum d_i q_i, div U_i = p_i + q_i
    EXPECT_EQ(model.principal_divisor(x), to_toric_model(h, model, HyperbolaDivisor(d)).coefficients);
    for (std::size_t i = 0; i < r; ++i) {
      IntegerVector u(r + 1);
      u[i] = 1;
      const auto val = model.principal_divisor(u);
      EXPECT_EQ(val[f.p[i]], 1);
      EXPECT_EQ(val[f.q[i]], 1);
      EXPECT_EQ(model.principal_divisor(y)[f.q[i]], d[i]);
    }
    testing::for_each_box_point(r, 3, [&](const IntegerVector &n) {
      const HyperbolaDivisor hd(n);
      const auto td = to_toric_model(h, model, hd);
      EXPECT_EQ(from_toric_model(h, model, td), hd);
      // the translated divisor is in the same class group element
      EXPECT_EQ(is_affine_trivial(h, hd), is_affine_trivial(model, td));
    });
  }
}

} // namespace
} // namespace affcl
