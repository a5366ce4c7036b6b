#include <gtest/gtest.h>

#include "builders.hpp"
#include "flownet/category.hpp"
#include "flownet/derived_colim.hpp"
#include "flownet/random.hpp"

namespace flownet {
namespace {

bool has_violation(const ValidationReport& r, std::string_view needle) {
  for (const auto& v : r.violations) {
    if (v.message.find(needle) != std::string::npos) return true;
  }
  return false;
}

FinCategory pushout_poset() { return poset_category({"i", "j", "k"}, {{"k", "i"}, {"k", "j"}}); }

TEST(Category, PosetCategoryValidates) {
  const FinCategory c = poset_category({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_TRUE(validate_category(c).ok());
  EXPECT_EQ(c.morphisms().size(), 3u);
  EXPECT_EQ(c.morphism_count(), 6u);
  EXPECT_EQ(c.compose("a<=b", "b<=c"), std::optional<std::string>("a<=c"));
  EXPECT_EQ(c.compose("id:a", "a<=b"), std::optional<std::string>("a<=b"));
}

TEST(Category, CyclicRelationIsNotAPoset) {
  try {
    Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAPoset);
  }
}

TEST(Category, DetectsRetraction) {
  const FinCategory c({"x", "y"}, {{"f", "x", "y"}, {"g", "y", "x"}},
                      {{"f", "g", "id:x"}, {"g", "f", "id:y"}});
  const ValidationReport r = validate_category(c);
  EXPECT_TRUE(has_violation(r, "retraction"));
}

TEST(Category, DetectsMissingComposite) {
  const FinCategory c({"x", "y", "z"}, {{"f", "x", "y"}, {"g", "y", "z"}}, {});
  EXPECT_TRUE(has_violation(validate_category(c), "missing"));
}

TEST(Category, DetectsUnboundedChains) {
  const FinCategory c({"x"}, {{"e", "x", "x"}}, {{"e", "e", "e"}});
  EXPECT_TRUE(has_violation(validate_category(c), "unbounded"));
}

TEST(Category, DetectsReservedPrefix) {
  const FinCategory c({"x", "y"}, {{"id:f", "x", "y"}}, {});
  EXPECT_TRUE(has_violation(validate_category(c), "reserved"));
}

TEST(Category, DetectsNonAssociativity) {
  // Two parallel composites out of a, then a third leg that tells them apart.
  const FinCategory c({"a", "b", "c", "d"},
                      {{"f", "a", "b"}, {"g", "b", "c"}, {"h", "c", "d"}, {"gf", "a", "c"}, {"hg", "b", "d"},
                       {"p", "a", "d"}, {"r", "a", "d"}},
                      {{"f", "g", "gf"}, {"g", "h", "hg"}, {"gf", "h", "p"}, {"f", "hg", "r"}});
  EXPECT_TRUE(has_violation(validate_category(c), "associative"));
}

TEST(Functor, CompositionMustBeRespected) {
  const FinCategory c = poset_category({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CatFunctor f = constant_functor(c, Ring::Q, 1);
  EXPECT_TRUE(validate_functor(c, f).ok());
  f.morphism_maps["a<=c"] = testing::scalar(2);
  EXPECT_TRUE(has_violation(validate_functor(c, f), "composition"));
}

TEST(Functor, ShapeChecked) {
  const FinCategory c = poset_category({"a", "b"}, {{"a", "b"}});
  CatFunctor f = constant_functor(c, Ring::Q, 1);
  f.morphism_maps["a<=b"] = RatMatrix::identity(2);
  EXPECT_FALSE(validate_functor(c, f).ok());
}

TEST(NormalizedComplex, ChainsOfAThreeElementChain) {
  const FinCategory c = poset_category({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const NormalizedComplex cx(c, constant_functor(c, Ring::Q, 1));
  EXPECT_EQ(cx.top_degree(), 2u);
  EXPECT_EQ(cx.rank(0), 3u);
  EXPECT_EQ(cx.rank(1), 3u);
  EXPECT_EQ(cx.rank(2), 1u);
  EXPECT_EQ(cx.rank(3), 0u);
  EXPECT_TRUE((cx.boundary(1) * cx.boundary(2)).is_zero());
}

TEST(DerivedColim, PushoutAntidiagonal) {
  const FinCategory c = pushout_poset();
  CatFunctor g;
  g.object_dims = {{"i", 0}, {"j", 0}, {"k", 1}};
  g.morphism_maps = {{"k<=i", RatMatrix(0, 1)}, {"k<=j", RatMatrix(0, 1)}};
  EXPECT_EQ(derived_colimit(c, g, 1, Ring::Q).free_rank, 1u);
  EXPECT_EQ(derived_colimit(c, g, 0, Ring::Q).free_rank, 0u);
}

TEST(DerivedColim, ConstantOnPushoutIsContractible) {
  const FinCategory c = pushout_poset();
  const CatFunctor g = constant_functor(c, Ring::Q, 1);
  EXPECT_EQ(derived_colimit(c, g, 0, Ring::Q).free_rank, 1u);
  EXPECT_TRUE(derived_colimit(c, g, 1, Ring::Q).is_zero());
}

TEST(DerivedColim, TerminalObjectConstant) {
  const FinCategory c = poset_category({"a", "b", "top"}, {{"a", "top"}, {"b", "top"}});
  const CatFunctor g = constant_functor(c, Ring::Q, 1);
  EXPECT_EQ(derived_colimit(c, g, 0, Ring::Q).free_rank, 1u);
  EXPECT_TRUE(derived_colimit(c, g, 1, Ring::Q).is_zero());
}

TEST(DerivedColim, BeyondChainBoundIsZero) {
  const FinCategory c = pushout_poset();
  EXPECT_TRUE(derived_colimit(c, constant_functor(c, Ring::Q, 2), 7, Ring::Q).is_zero());
}

TEST(DerivedColim, InvalidFunctorIsValidationError) {
  const FinCategory c = pushout_poset();
  CatFunctor g = constant_functor(c, Ring::Q, 1);
  g.object_dims.erase("i");
  try {
    derived_colimit(c, g, 0, Ring::Q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationError);
  }
}

TEST(DerivedColim, EulerCharacteristicMatchesChainRanks) {
  // sum (-1)^n rank C_n = sum (-1)^n dim colim_n over Q.
  const FinCategory c = poset_category({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "d"}});
  const CatFunctor g = constant_functor(c, Ring::Q, 2);
  const NormalizedComplex cx(c, g);
  long chains = 0, homology = 0;
  for (std::size_t n = 0; n <= cx.top_degree(); ++n) {
    const long sign = n % 2 == 0 ? 1 : -1;
    chains += sign * static_cast<long>(cx.rank(n));
    homology += sign * static_cast<long>(derived_colimit(c, g, n, Ring::Q).free_rank);
  }
  EXPECT_EQ(chains, homology);
}

TEST(Factorization, ShapeOfSubcategory) {
  const Network n = testing::current_divider();
  const FinCategory c = factorization_subcategory(n.graph);
  EXPECT_EQ(c.objects().size(), 4u);
  EXPECT_EQ(c.morphisms().size(), 4u);
  EXPECT_TRUE(validate_category(c).ok());
  EXPECT_TRUE(validate_functor(c, rep_to_factorization_functor(n.graph, n.representation)).ok());
}

TEST(Factorization, NoChainsAboveDegreeOne) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Network n = random_network(rng);
    const NormalizedComplex cx(factorization_subcategory(n.graph),
                               rep_to_factorization_functor(n.graph, n.representation));
    EXPECT_LE(cx.top_degree(), 1u);
    EXPECT_TRUE(cx.chains(2).empty());
  }
}

}  // namespace
}  // namespace flownet
