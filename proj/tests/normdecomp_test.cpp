#include "polynorm/normdecomp.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "polynorm/algebra.hpp"
#include "polynorm/error.hpp"
#include "polynorm/random.hpp"
#include "test_util.hpp"

namespace polynorm {
namespace {

using testing::box;
using testing::poly;
using testing::pt;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

TEST(StretchTest, Square) {
  const auto s = stretch(box({{-1, 1}, {-1, 1}}));
  EXPECT_EQ(s.d, 2);
  EXPECT_EQ(s.y, box({{-1, 1}, {-3, 3}}));
  EXPECT_EQ(s.slice, box({{-1, 1}}));
}

TEST(StretchTest, SkewQuadrilateral) {
  const auto s = stretch(testing::skew_quadrilateral(1));
  EXPECT_EQ(s.d, 2);
  EXPECT_EQ(s.y, poly(2, {{1, 3}, {1, -2}, {-1, -3}, {-1, 2}}));
  EXPECT_EQ(s.slice, box({{-1, 1}}));
}

TEST(StretchTest, FlatInput) {
  const Polytope p = poly(2, {{-2, 0}, {2, 0}});
  const auto s = stretch(p);
  EXPECT_EQ(s.d, 1);
  EXPECT_EQ(s.slice, box({{-2, 2}}));
  EXPECT_EQ(s.y, box({{-2, 2}, {-1, 1}}));
  EXPECT_EQ(code_of([] { stretch(Polytope::origin(0)); }), ErrorCode::DimensionMismatch);
}

TEST(DecomposeTest, Interval) {
  const auto d = decompose(box({{-2, 2}}));
  EXPECT_EQ(d.q, box({{0, 3}}));
  EXPECT_EQ(d.r, box({{0, 5}}));
  EXPECT_EQ(box({{-2, 2}}) + d.q + mirror(d.q), box({{-5, 5}}));
}

TEST(DecomposeTest, Square) {
  const Polytope p = box({{-1, 1}, {-1, 1}});
  const auto d = decompose(p);
  EXPECT_EQ(d.p, p);
  EXPECT_EQ(d.q, box({{0, 3}, {0, 2}}));
  EXPECT_EQ(d.r, box({{-1, 3}, {0, 3}}));
  EXPECT_EQ(d.r + mirror(d.r), box({{-4, 4}, {-3, 3}}));
}

TEST(DecomposeTest, Origin) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto d = decompose(Polytope::origin(n));
    EXPECT_EQ(d.q, Polytope::origin(n));
    EXPECT_EQ(d.r, Polytope::origin(n));
  }
}

TEST(DecomposeTest, RejectsNonSymmetric) {
  EXPECT_EQ(code_of([] { decompose(box({{0, 1}})); }), ErrorCode::NotSymmetric);
}

TEST(VerifyNormIdentityTest, Examples) {
  EXPECT_TRUE(verify_norm_identity(box({{-3, 3}}), Polytope::origin(1), box({{0, 3}})));
  EXPECT_TRUE(verify_norm_identity(box({{-1, 1}, {-1, 1}}), box({{0, 3}, {0, 2}}),
                                   box({{-1, 3}, {0, 3}})));
  EXPECT_FALSE(verify_norm_identity(box({{-1, 1}}), Polytope::origin(1), box({{0, 2}})));
  EXPECT_EQ(code_of([] { verify_norm_identity(box({{-1, 1}}), Polytope::origin(2), box({{0, 1}})); }),
            ErrorCode::DimensionMismatch);
}

TEST(IntegralNormTest, Examples) {
  // The lexicographically least witness; [0,3] is the same norm up to translation.
  const auto interval = is_integral_norm(box({{-3, 3}}));
  ASSERT_TRUE(interval);
  EXPECT_EQ(*interval, box({{-3, 0}}));
  EXPECT_EQ(translate(*interval, pt({3})), box({{0, 3}}));

  EXPECT_FALSE(is_integral_norm(testing::skew_quadrilateral(1)));

  const auto square = is_integral_norm(box({{-1, 1}, {-1, 1}}));
  ASSERT_TRUE(square);
  EXPECT_EQ(*square, box({{-1, 0}, {-1, 0}}));
  EXPECT_EQ(translate(*square, pt({1, 1})), box({{0, 1}, {0, 1}}));
}

TEST(IntegralNormTest, Errors) {
  EXPECT_EQ(code_of([] { is_integral_norm(box({{-1, 1}, {-2, 2}}), 10); }),
            ErrorCode::SearchCapExceeded);
  EXPECT_EQ(code_of([] { is_integral_norm(box({{0, 1}})); }), ErrorCode::NotSymmetric);
}

TEST(IntegralNormTest, ReportsLatticePointCount) {
  const auto result = search_integral_norm(testing::skew_quadrilateral(1));
  EXPECT_FALSE(result.witness);
  EXPECT_EQ(result.lattice_point_count, 5u);
}

TEST(IntegralNormTest, CounterexampleFamily) {
  for (long k = 1; k <= 3; ++k) {
    const Polytope p = testing::skew_quadrilateral(k);
    EXPECT_FALSE(is_integral_norm(p)) << k;
    const auto d = decompose(p);
    EXPECT_TRUE(verify_norm_identity(p, d.q, d.r)) << k;
  }
  const Polytope lifted = embed_at_zero(testing::skew_quadrilateral(1));
  EXPECT_EQ(lifted.dim(), 3u);
  EXPECT_FALSE(is_integral_norm(lifted));
}

TEST(IntegralNormTest, OneDimensionalIntervalsAreNorms) {
  for (long x = 0; x <= 10; ++x) {
    // [-10, 10] has 21 lattice points, one more than the default cap.
    EXPECT_TRUE(is_integral_norm(box({{-x, x}}), 32)) << x;
    EXPECT_TRUE(verify_norm_identity(box({{-x, x}}), Polytope::origin(1), box({{0, x}})));
  }
}

TEST(IntegralNormTest, WitnessIndependentOfWorkerCount) {
  const std::vector<Polytope> inputs = {box({{-1, 1}, {-1, 1}}), poly(2, {{-2, -1}, {2, 1}, {0, 1}, {0, -1}}),
                                        box({{-4, 4}}), testing::skew_quadrilateral(2)};
  for (const auto& p : inputs) {
    const auto base = search_integral_norm(p, {.cap = 20, .workers = 1});
    for (unsigned w : {2u, 3u, 8u}) {
      const auto other = search_integral_norm(p, {.cap = 20, .workers = w});
      EXPECT_EQ(base.witness, other.witness) << p.to_string() << " workers=" << w;
    }
  }
}

class NormProperties : public ::testing::TestWithParam<int> {
 protected:
  random::Engine rng{static_cast<std::uint64_t>(3000 + GetParam())};
  std::size_t n = 1 + GetParam() % 3;
};

TEST_P(NormProperties, DecompositionVerifies) {
  const Polytope p = random::symmetric_polytope(rng, n, 5, 5);
  const auto d = decompose(p);
  EXPECT_TRUE(verify_norm_identity(p, d.q, d.r)) << p.to_string();
}

TEST_P(NormProperties, StretchSliceMatchesOracle) {
  const Polytope p = random::polytope(rng, n, 5, 4);
  const auto s = stretch(p);
  for (const auto& v : p.vertices()) EXPECT_GT(s.d, abs(v[n - 1]));
  std::set<LatticePoint> cut;
  for (const auto& z : oracle::lattice_points(s.y.vertices())) {
    if (z[n - 1] == 0) cut.insert(z);
  }
  const auto expected = lattice_points(embed_at_zero(project_drop_last(p)));
  EXPECT_EQ(cut, std::set<LatticePoint>(expected.begin(), expected.end()));
}

TEST_P(NormProperties, RoundTripFindsSomeWitness) {
  Polytope q0 = random::polytope(rng, n, 3, 1);
  q0 = translate(q0, -q0.vertices().front());
  const Polytope p = q0 + mirror(q0);
  if (lattice_points(p).size() > 12) GTEST_SKIP() << "too many lattice points";
  const auto w = is_integral_norm(p);
  ASSERT_TRUE(w) << p.to_string();
  EXPECT_EQ(*w + mirror(*w), p);
}

INSTANTIATE_TEST_SUITE_P(Seeds, NormProperties, ::testing::Range(0, 30));

}  // namespace
}  // namespace polynorm
