#include <gtest/gtest.h>

#include "builders.hpp"
#include "flownet/commands.hpp"
#include "flownet/random.hpp"
#include "oracles.hpp"

namespace flownet {
namespace {

using io::Json;

cmd::Document fixture(const std::string& role, const std::string& name) {
  return cmd::read_document(role, std::string(FLOWNET_FIXTURES) + "/" + name);
}

cmd::Document inline_json(const std::string& role, const Json& j) { return cmd::inline_document(role, j.dump()); }

cmd::Options with_ring(Ring r) {
  cmd::Options o;
  o.ring = r;
  return o;
}

// ---- JSON parsing -------------------------------------------------------

TEST(Json, Rationals) {
  EXPECT_EQ(io::rational_from_json(Json(3)), Rational(3));
  EXPECT_EQ(io::rational_from_json(Json("-2/4")), make_rational(-1, 2));
  EXPECT_THROW(io::rational_from_json(Json(0.5)), Error);
  EXPECT_THROW(io::rational_from_json(Json("1/0")), Error);
  EXPECT_EQ(io::to_json(make_rational(6, -4)), Json("-3/2"));
  EXPECT_EQ(io::to_json(Rational(5)), Json("5"));
}

TEST(Json, NetworkRoundTrip) {
  Rng rng(11);
  RandomNetworkOptions opts;
  opts.external_probability = 0.5;
  const Network n = random_network(rng, opts);
  EXPECT_EQ(io::network_from_json(io::to_json(n)), n);
}

TEST(Json, OmittedMatrixOnlyForZeroShapes) {
  const Json ok = Json::parse(R"({"vertices":[{"id":"a","dim":0},{"id":"b","dim":2}],
                                  "arrows":[{"id":"x","source":"a","target":"b"}]})");
  const Network n = io::network_from_json(ok);
  EXPECT_EQ(n.representation.map("x").rows(), 2u);
  EXPECT_EQ(n.representation.map("x").cols(), 0u);
  EXPECT_TRUE(validate_network(n).ok());
  const Json bad = Json::parse(R"({"vertices":[{"id":"a","dim":1}],
                                   "arrows":[{"id":"x","source":"a","target":"a"}]})");
  EXPECT_THROW(io::network_from_json(bad), Error);
}

TEST(Json, GramDiagonalForms) {
  const Network n = testing::current_divider();
  const ChainLayout layout = chain1_layout(n.graph, n.representation);
  const GramForm listed = io::gram_from_json(Json::parse(R"({"diagonal": [1, 3]})"), layout);
  const GramForm keyed = io::gram_from_json(Json::parse(R"({"diagonal": {"r2": 3, "r1": 1}})"), layout);
  EXPECT_EQ(listed.gram, keyed.gram);
  EXPECT_EQ(listed.gram, RatMatrix::from_rows({{1, 0}, {0, 3}}));
  EXPECT_THROW(io::gram_from_json(Json::parse(R"({"diagonal": [1]})"), layout), Error);
  EXPECT_THROW(io::gram_from_json(Json::parse(R"({"gram": [[1, 2], [0, 1]]})"), layout), Error);
}

TEST(Json, CategoryCompositionOrder) {
  const FinCategory c = io::category_from_json(Json::parse(R"({
    "objects": ["a", "b", "c"],
    "morphisms": [{"id":"f","source":"a","target":"b"}, {"id":"g","source":"b","target":"c"},
                  {"id":"gf","source":"a","target":"c"}],
    "compositions": [{"after": "f", "then": "g", "equals": "gf"}]})"));
  EXPECT_TRUE(validate_category(c).ok());
  EXPECT_EQ(c.compose("f", "g"), std::optional<std::string>("gf"));
}

TEST(Json, CoveringRoundTrip) {
  Rng rng(3);
  const Network n = random_network(rng);
  const Covering c = random_pushout_covering(rng, n);
  const Covering back = io::covering_from_json(io::to_json(c));
  EXPECT_EQ(back.poset.elements(), c.poset.elements());
  EXPECT_TRUE(back.poset.less("k", "i"));
  EXPECT_EQ(back.pieces.at("i").arrows, c.pieces.at("i").arrows);
}

// ---- commands -----------------------------------------------------------

TEST(CmdBasis, Loop) {
  const auto r = cmd::basis(fixture("network", "loop.json"), {});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["dim"], 1);
  EXPECT_EQ(r.report["inputs"][0]["sha256"].get<std::string>().size(), 64u);
}

TEST(CmdBasis, IncidenceNetworkCycleRank) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const Network n = random_classical_network(rng);
    oracle::UnionFind uf(n.graph.vertices().size());
    for (const auto& a : n.graph.arrows()) uf.unite(*n.graph.vertex_index(a.source), *n.graph.vertex_index(a.target));
    const auto r = cmd::basis(inline_json("network", io::to_json(n)), {});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.report["result"]["dim"].get<std::size_t>(),
              n.graph.arrows().size() + uf.components() - n.graph.vertices().size());
  }
}

TEST(CmdBasis, MalformedJsonIsInputError) {
  const auto r = cmd::basis(fixture("network", "malformed.json"), {});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["error"]["code"], "InputError");
}

TEST(CmdBasis, MissingFileIsInputError) {
  const auto r = cmd::basis(fixture("network", "does_not_exist.json"), {});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(r.report["inputs"][0]["sha256"].is_null());
}

TEST(CmdBasis, InvalidNetworkIsValidationError) {
  const Json j = Json::parse(R"({"vertices":[{"id":"a","dim":1}],
                                 "arrows":[{"id":"x","source":"a","target":"zz","matrix":[]}]})");
  const auto r = cmd::basis(inline_json("network", j), {});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["error"]["code"], "ValidationError");
}

TEST(CmdBasis, ExternalOverride) {
  cmd::Options o;
  o.external_override = std::set<std::string>{};
  const auto plain = cmd::basis(fixture("network", "two_terminal.json"), o);
  const auto with_e = cmd::basis(fixture("network", "two_terminal.json"), {});
  EXPECT_EQ(plain.exit_code, 0);
  EXPECT_LT(plain.report["result"]["dim"].get<int>(), with_e.report["result"]["dim"].get<int>());
}

TEST(CmdObstruction, LoopOverZ) {
  const auto r = cmd::obstruction(fixture("network", "loop3_z.json"), with_ring(Ring::Z));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["presentation"]["text"], "Z/2");
  EXPECT_EQ(r.report["result"]["presentation"]["torsion"], Json::array({"2"}));
}

TEST(CmdObstruction, RingFlagOverridesFile) {
  const auto r = cmd::obstruction(fixture("network", "loop3_z.json"), with_ring(Ring::Q));
  EXPECT_EQ(r.report["result"]["presentation"]["text"], "0");
}

TEST(CmdObstruction, ConnectedIncidence) {
  const auto r = cmd::obstruction(fixture("network", "current_divider.json"), {});
  EXPECT_EQ(r.report["result"]["presentation"]["free_rank"], 1);
}

TEST(CmdObstruction, EmptyGraph) {
  const auto r = cmd::obstruction(fixture("network", "empty_graph.json"), {});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["presentation"]["free_rank"], 0);
}

TEST(CmdCheck, ZeroChainPasses) {
  const auto r = cmd::check(fixture("network", "single_arrow.json"), fixture("chain", "zero_chain.json"), {});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.report["result"]["pass"].get<bool>());
}

TEST(CmdCheck, UnitChainFailsWithResiduals) {
  const auto r = cmd::check(fixture("network", "single_arrow.json"), fixture("chain", "unit_chain.json"), {});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_FALSE(r.report["result"]["pass"].get<bool>());
  EXPECT_EQ(r.report["result"]["residual"]["internal"]["a"], Json::array({"-1"}));
  EXPECT_EQ(r.report["result"]["residual"]["internal"]["b"], Json::array({"1"}));
}

TEST(CmdCheck, ExternalResidualsAreReportedSeparately) {
  const Json net = Json::parse(R"({"vertices":[{"id":"a","dim":1},{"id":"b","dim":1}],
      "arrows":[{"id":"x","source":"a","target":"b","matrix":[[1]]}], "external":["a","b"]})");
  const auto r = cmd::check(inline_json("network", net), inline_json("chain", Json::parse(R"({"x":[1]})")), {});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_FALSE(r.report["result"]["is_flow"].get<bool>());
  EXPECT_EQ(r.report["result"]["residual"]["external"]["b"], Json::array({"1"}));
}

TEST(CmdCheck, UnknownArrowIsLayoutMismatch) {
  const auto r =
      cmd::check(fixture("network", "single_arrow.json"), fixture("chain", "unknown_arrow_chain.json"), {});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["error"]["code"], "LayoutMismatch");
}

TEST(CmdSolve2, CurrentDivider) {
  const auto r = cmd::solve2(fixture("network", "current_divider.json"), fixture("gram", "divider_unit_gram.json"),
                             fixture("potential", "divider_potential.json"), {});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["chain"]["r1"], Json::array({"1/2"}));
  EXPECT_EQ(r.report["result"]["chain"]["r2"], Json::array({"1/2"}));
  EXPECT_TRUE(r.report["result"]["verification"]["both_zero"].get<bool>());
}

TEST(CmdSolve2, Weighted) {
  const auto r = cmd::solve2(fixture("network", "current_divider.json"),
                             fixture("gram", "divider_weighted_gram.json"),
                             fixture("potential", "divider_potential.json"), {});
  EXPECT_EQ(r.report["result"]["chain"]["r1"], Json::array({"3/4"}));
  EXPECT_EQ(r.report["result"]["chain"]["r2"], Json::array({"1/4"}));
}

TEST(CmdSolve2, ObstructedPotential) {
  const auto r = cmd::solve2(fixture("network", "current_divider.json"), fixture("gram", "divider_unit_gram.json"),
                             fixture("potential", "unbalanced_potential.json"), {});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.report["error"]["code"], "ObstructionNonzero");
}

TEST(CmdSolve2, ZeroGram) {
  const auto r = cmd::solve2(fixture("network", "current_divider.json"), fixture("gram", "zero_gram.json"),
                             fixture("potential", "divider_potential.json"), {});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.report["error"]["code"], "NotEuclidean");
}

TEST(CmdSolve2, IntegerRingIsInputError) {
  const auto r = cmd::solve2(fixture("network", "current_divider.json"), fixture("gram", "divider_unit_gram.json"),
                             fixture("potential", "divider_potential.json"), with_ring(Ring::Z));
  EXPECT_EQ(r.exit_code, 2);
}

TEST(CmdOracle, EveryNetworkFixtureMatches) {
  for (const char* name : {"loop.json", "single_arrow.json", "current_divider.json", "circle.json",
                           "two_terminal.json", "empty_graph.json"}) {
    const auto r = cmd::oracle(fixture("network", name), {});
    EXPECT_EQ(r.exit_code, 0) << name;
    EXPECT_TRUE(r.report["result"]["match"].get<bool>()) << name;
  }
}

TEST(CmdOracle, LoopTorsion) {
  const auto r = cmd::oracle(fixture("network", "loop3_z.json"), {});
  EXPECT_EQ(r.report["result"]["phi0"]["direct"]["text"], "Z/2");
  EXPECT_EQ(r.report["result"]["phi0"]["oracle"]["text"], "Z/2");
}

TEST(CmdOracle, SeedMode) {
  cmd::Options o;
  o.seed = 40;
  o.count = 25;
  const auto r = cmd::oracle(std::nullopt, o);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["cases"].size(), 25u);
  EXPECT_TRUE(r.report["result"]["all_match"].get<bool>());
}

TEST(CmdCover, Circle) {
  const auto r = cmd::cover(fixture("network", "circle.json"), fixture("covering", "circle_covering.json"), {});
  EXPECT_EQ(r.exit_code, 0);
  const Json& dims = r.report["result"]["dims"];
  EXPECT_EQ(dims["colim2_obstruction"], 0);
  EXPECT_EQ(dims["colim0_flow"], 0);
  EXPECT_EQ(dims["global_flow"], 1);
  EXPECT_EQ(dims["colim1_obstruction"], 1);
}

TEST(CmdCover, SinglePiece) {
  const auto r = cmd::cover(fixture("network", "circle.json"), fixture("covering", "single_piece_covering.json"), {});
  EXPECT_EQ(r.exit_code, 0);
}

TEST(CmdCover, BrokenCovering) {
  const auto r = cmd::cover(fixture("network", "circle.json"), fixture("covering", "broken_covering.json"), {});
  EXPECT_EQ(r.exit_code, 2);
}

TEST(CmdColim, PushoutDegreeOne) {
  cmd::Options o;
  o.degree = 1;
  const auto r = cmd::colim(fixture("category", "pushout_poset.json"), fixture("functor", "pushout_functor.json"), o);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["presentation"]["free_rank"], 1);
}

TEST(CmdColim, TerminalObject) {
  const auto r = cmd::colim(fixture("category", "terminal_category.json"), fixture("functor", "constant_functor.json"), {});
  EXPECT_EQ(r.report["result"]["presentation"]["free_rank"], 1);
}

TEST(CmdColim, BeyondChainBound) {
  cmd::Options o;
  o.degree = 9;
  const auto r = cmd::colim(fixture("category", "terminal_category.json"), fixture("functor", "constant_functor.json"), o);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["presentation"]["free_rank"], 0);
}

TEST(CmdColim, RetractionIsRejected) {
  const auto r = cmd::colim(fixture("category", "retraction_category.json"), fixture("functor", "constant_functor.json"), {});
  EXPECT_EQ(r.exit_code, 2);
}

TEST(CmdReport, Deterministic) {
  const auto a = cmd::cover(fixture("network", "circle.json"), fixture("covering", "circle_covering.json"), {});
  const auto b = cmd::cover(fixture("network", "circle.json"), fixture("covering", "circle_covering.json"), {});
  EXPECT_EQ(a.text(), b.text());
}

}  // namespace
}  // namespace flownet
