#include <gtest/gtest.h>

#include "builders.hpp"
#include "flownet/covering.hpp"
#include "flownet/random.hpp"

namespace flownet {
namespace {

using testing::incidence_network;

Network circle() { return incidence_network({"x", "y"}, {{"p", "x", "y"}, {"q", "y", "x"}}); }

Covering circle_covering() {
  Covering c{Poset({"i", "j", "k"}, {{"k", "i"}, {"k", "j"}}), {}};
  c.pieces["i"] = {{"x", "y"}, {"p"}, {}};
  c.pieces["j"] = {{"x", "y"}, {"q"}, {}};
  c.pieces["k"] = {{"x", "y"}, {}, {}};
  return c;
}

TEST(Covering, CircleValidates) { EXPECT_TRUE(validate_covering(circle_covering(), circle()).ok()); }

TEST(Covering, MissingLowerBoundIsRejected) {
  Covering c{Poset({"i", "j"}, {}), {}};
  c.pieces["i"] = {{"x", "y"}, {"p"}, {}};
  c.pieces["j"] = {{"x", "y"}, {"q"}, {}};
  const ValidationReport r = validate_covering(c, circle());
  EXPECT_FALSE(r.ok());
  try {
    mv_verify(c, circle());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationError);
  }
}

TEST(Covering, NonMonotoneIsRejected) {
  Covering c = circle_covering();
  c.pieces["k"].arrows.insert("q");
  EXPECT_FALSE(validate_covering(c, circle()).ok());
}

TEST(Covering, MissingItemsAreRejected) {
  Covering c = circle_covering();
  c.pieces["j"].arrows.clear();
  EXPECT_FALSE(validate_covering(c, circle()).ok());
}

TEST(Covering, PieceNetworkRestricts) {
  const Network piece = piece_network(circle_covering(), circle(), "i");
  EXPECT_EQ(piece.graph.arrows().size(), 1u);
  EXPECT_EQ(piece.graph.vertices().size(), 2u);
}

TEST(Covering, CircleDimensions) {
  const MvReport r = mv_verify(circle_covering(), circle());
  EXPECT_EQ(r.colim2_obstruction, 0u);
  EXPECT_EQ(r.colim0_flow, 0u);
  EXPECT_EQ(r.global_flow, 1u);
  EXPECT_EQ(r.colim1_obstruction, 1u);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.euler_characteristic(), 0);
}

TEST(Covering, SinglePieceIsTrivial) {
  const Network n = circle();
  Covering c{Poset({"all"}, {}), {}};
  c.pieces["all"] = {{"x", "y"}, {"p", "q"}, {}};
  const MvReport r = mv_verify(c, n);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.colim0_flow, r.global_flow);
  EXPECT_EQ(r.ker_mu, 0u);
  EXPECT_EQ(r.coker_mu, 0u);
}

TEST(Covering, InducedFunctorsValidate) {
  const Covering c = circle_covering();
  const FinCategory index = poset_category(c.poset);
  EXPECT_TRUE(validate_functor(index, induced_flow_functor(c, circle())).ok());
  EXPECT_TRUE(validate_functor(index, induced_obstruction_functor(c, circle())).ok());
}

TEST(Covering, RandomPushoutCoverings) {
  RandomNetworkOptions opts;
  opts.external_probability = 0.3;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Network n = random_network(rng, opts);
    const Covering c = random_pushout_covering(rng, n);
    ASSERT_TRUE(validate_covering(c, n).ok()) << "seed " << seed << ": " << validate_covering(c, n).summary();
    const MvReport r = mv_verify(c, n);
    EXPECT_TRUE(r.pass) << "seed " << seed;
    if (r.pass) EXPECT_EQ(r.euler_characteristic(), 0) << "seed " << seed;
  }
}

}  // namespace
}  // namespace flownet
