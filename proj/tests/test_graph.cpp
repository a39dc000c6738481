#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <set>

#include "sortkit/cli.hpp"
#include "sortkit/graph.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace sortkit;

namespace {

std::vector<std::vector<int>> as_lists(const std::vector<VertexMask>& sets) {
  std::vector<std::vector<int>> out;
  for (auto s : sets) out.push_back(vertex_list(s));
  return out;
}

std::set<VertexMask> as_set(const std::vector<VertexMask>& v) { return {v.begin(), v.end()}; }

std::set<std::vector<std::string>> named(const SimpleGraph& g, const std::vector<VertexMask>& sets) {
  std::set<std::vector<std::string>> out;
  for (auto s : sets) {
    std::vector<std::string> names;
    for (int v : vertex_list(s)) names.push_back(g.names().name(static_cast<std::size_t>(v - 1)));
    std::sort(names.begin(), names.end());
    out.insert(names);
  }
  return out;
}

WhiskerSpec spec(std::vector<std::vector<int>> blocks, std::vector<int> r) { return {{std::move(blocks)}, std::move(r)}; }

}  // namespace

TEST(SimpleGraphType, Validation) {
  EXPECT_THROW(SimpleGraph(2, {{1, 1}}), StructuralError);
  EXPECT_THROW(SimpleGraph(2, {{1, 3}}), StructuralError);
  EXPECT_THROW(SimpleGraph(65, {}), StructuralError);
  EXPECT_EQ(SimpleGraph(3, {{1, 2}, {2, 1}}).edges().size(), 1u);
}

TEST(MinimalCovers, Examples) {
  EXPECT_EQ(as_lists(minimal_vertex_covers(SimpleGraph::path(3))), (std::vector<std::vector<int>>{{1, 3}, {2}}));
  EXPECT_EQ(minimal_vertex_covers(SimpleGraph(4, {})), (std::vector<VertexMask>{0}));
  EXPECT_EQ(as_lists(minimal_vertex_covers(SimpleGraph::cycle(4))), (std::vector<std::vector<int>>{{1, 3}, {2, 4}}));
}

TEST(AllCovers, Examples) {
  EXPECT_EQ(as_set(all_vertex_covers(SimpleGraph::path(3))), oracle::all_covers(SimpleGraph::path(3)));
  EXPECT_EQ(all_vertex_covers(SimpleGraph::path(3)).size(), 5u);
  EXPECT_EQ(as_lists(all_vertex_covers(SimpleGraph(2, {{1, 2}}))), (std::vector<std::vector<int>>{{1, 2}, {1}, {2}}));
  EXPECT_EQ(all_vertex_covers(SimpleGraph(5, {})).size(), 32u);
  EXPECT_THROW(all_vertex_covers(SimpleGraph(5, {}), 4), CapExceeded);
}

TEST(ProperInterval, Examples) {
  EXPECT_TRUE(is_proper_interval_labeling(SimpleGraph::path(3)));
  EXPECT_FALSE(is_proper_interval_labeling(SimpleGraph::cycle(4)));
  EXPECT_TRUE(is_proper_interval_labeling(SimpleGraph::complete(5)));

  const SimpleGraph bent(3, {{2, 1}, {1, 3}});  // path 2-1-3
  EXPECT_FALSE(is_proper_interval_labeling(bent));
  auto perm = find_proper_interval_labeling(bent);
  ASSERT_TRUE(perm.has_value());
  EXPECT_TRUE(is_proper_interval_labeling(bent.relabel(*perm)));

  EXPECT_EQ(find_proper_interval_labeling(SimpleGraph::complete(3)), (std::vector<int>{1, 2, 3}));
  EXPECT_FALSE(find_proper_interval_labeling(SimpleGraph::cycle(4)).has_value());
  EXPECT_THROW(find_proper_interval_labeling(SimpleGraph(11, {})), CapExceeded);
}

TEST(CoverIdeal, Examples) {
  const VarSet x3 = VarSet::numbered("x", 3);
  auto gens = [&](const SimpleGraph& g) {
    std::vector<std::string> out;
    for (const auto& u : cover_ideal(g)) out.push_back(format(u, x3));
    return out;
  };
  EXPECT_EQ(gens(SimpleGraph::path(3)), (std::vector<std::string>{"x1*x3", "x2"}));
  EXPECT_EQ(cover_ideal(SimpleGraph(2, {{1, 2}})).size(), 2u);
  EXPECT_EQ(gens(SimpleGraph::complete(3)), (std::vector<std::string>{"x1*x2", "x1*x3", "x2*x3"}));
}

TEST(Whisker, EdgeExample) {
  const SimpleGraph edge(2, {{1, 2}});
  const auto w = multi_whisker(edge, spec({{1}, {2}}, {1, 1}));
  EXPECT_EQ(w.graph.names().names(), (std::vector<std::string>{"z1^{1}", "z1^{2}", "x1", "x2"}));
  // path z1^{1} - x1 - x2 - z1^{2}
  EXPECT_EQ(w.graph.edges().size(), 3u);
  EXPECT_TRUE(w.graph.adjacent(1, 3));
  EXPECT_TRUE(w.graph.adjacent(3, 4));
  EXPECT_TRUE(w.graph.adjacent(2, 4));

  const auto covers = whisker_minimal_covers(edge, spec({{1}, {2}}, {1, 1}));
  std::vector<VertexMask> cs;
  for (const auto& c : covers) cs.push_back(c.cover);
  EXPECT_EQ(named(w.graph, cs), (std::set<std::vector<std::string>>{{"x1", "z1^{2}"}, {"x2", "z1^{1}"}, {"x1", "x2"}}));
  EXPECT_EQ(as_set(cs), oracle::minimal_covers(w.graph));
}

TEST(Whisker, ClassicalWhiskeringIsSpecialCase) {
  const auto g = SimpleGraph::path(3);
  const auto w = multi_whisker(g, spec({{1}, {2}, {3}}, {1, 1, 1}));
  EXPECT_EQ(w.graph.order(), 6);
  EXPECT_EQ(w.graph.edges().size(), 5u);
  for (int v = 1; v <= 3; ++v) EXPECT_EQ(std::popcount(w.graph.neighbors(v)), 1);
}

TEST(Whisker, CliqueBlockExample) {
  const auto k3 = SimpleGraph::complete(3);
  const auto s = spec({{1, 2, 3}}, {2});
  const auto w = multi_whisker(k3, s);
  EXPECT_EQ(w.graph.names().names(), (std::vector<std::string>{"z1^{1}", "z2^{1}", "x1", "x2", "x3"}));
  for (int z = 1; z <= 2; ++z) EXPECT_EQ(w.graph.neighbors(z), mask_of({3, 4, 5}));

  const auto covers = whisker_minimal_covers(k3, s);
  std::map<VertexMask, VertexMask> by_base;
  for (const auto& c : covers) by_base[c.base_cover] = c.cover;
  EXPECT_EQ(by_base.at(mask_of({1, 2})), mask_of({1, 2, 3, 4}));
  EXPECT_EQ(by_base.at(mask_of({1, 2, 3})), mask_of({3, 4, 5}));
  std::vector<VertexMask> cs;
  for (const auto& c : covers) cs.push_back(c.cover);
  EXPECT_EQ(as_set(cs), oracle::minimal_covers(w.graph));
}

TEST(Whisker, EdgelessExample) {
  const SimpleGraph g(2, {});
  const auto covers = whisker_minimal_covers(g, spec({{1}, {2}}, {1, 1}));
  std::map<VertexMask, VertexMask> by_base;
  for (const auto& c : covers) by_base[c.base_cover] = c.cover;
  EXPECT_EQ(by_base.at(0), mask_of({1, 2}));
  EXPECT_EQ(by_base.at(mask_of({1, 2})), mask_of({3, 4}));
}

TEST(Whisker, InvalidPartitions) {
  const auto p3 = SimpleGraph::path(3);
  EXPECT_THROW(spec({{1, 3}, {2}}, {1, 1}).validate(p3), StructuralError);
  EXPECT_THROW(spec({{1}, {2}}, {1, 1}).validate(p3), StructuralError);
  EXPECT_THROW(spec({{1}, {1, 2}, {3}}, {1, 1, 1}).validate(p3), StructuralError);
  EXPECT_THROW(spec({{1}, {2}, {3}}, {1, 0, 1}).validate(p3), StructuralError);
  EXPECT_THROW(spec({{1}, {2}, {3}}, {1, 1}).validate(p3), StructuralError);
}

TEST(GraphProperty, CoversMatchBruteForce) {
  gen::Rng rng(31);
  for (int it = 0; it < 200; ++it) {
    const auto g = gen::graph(rng, gen::uniform(rng, 0, 9), 0.4);
    const auto mins = minimal_vertex_covers(g);
    ASSERT_EQ(as_set(mins), oracle::minimal_covers(g));
    ASSERT_EQ(as_set(all_vertex_covers(g)), oracle::all_covers(g));
    for (std::size_t i = 1; i < mins.size(); ++i) ASSERT_TRUE(lex_greater(mins[i - 1], mins[i]));
    for (std::size_t i = 1; i < mins.size(); ++i)
      ASSERT_GT(cover_monomial(g, mins[i - 1]), cover_monomial(g, mins[i]));
  }
}

TEST(GraphProperty, ProperIntervalMatchesBruteForce) {
  gen::Rng rng(32);
  for (int it = 0; it < 150; ++it) {
    const auto g = gen::graph(rng, gen::uniform(rng, 1, 6), 0.5);
    ASSERT_EQ(is_proper_interval_labeling(g), oracle::proper_interval(g));
    auto perm = find_proper_interval_labeling(g);
    ASSERT_EQ(perm.has_value(), oracle::has_proper_interval_labeling(g));
    if (perm) ASSERT_TRUE(oracle::proper_interval(g.relabel(*perm)));
  }
}

TEST(GraphProperty, WhiskerBijection) {
  gen::Rng rng(33);
  for (int it = 0; it < 100; ++it) {
    const auto g = gen::graph(rng, gen::uniform(rng, 1, 6), 0.5);
    const auto s = gen::whisker_spec(rng, g, 2);
    const auto covers = whisker_minimal_covers(g, s);
    const auto w = multi_whisker(g, s);
    std::vector<VertexMask> cs;
    for (const auto& c : covers) cs.push_back(c.cover);
    ASSERT_EQ(as_set(cs).size(), cs.size());
    ASSERT_EQ(as_set(cs), oracle::minimal_covers(w.graph));
    ASSERT_EQ(covers.size(), oracle::all_covers(g).size());
  }
}

TEST(Generator, ProperIntervalByConstruction) {
  EXPECT_TRUE(cli::generate_proper_interval(7, 0.0, 1).edges().empty());
  EXPECT_EQ(cli::generate_proper_interval(7, 1.0, 1), SimpleGraph::complete(7));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = cli::generate_proper_interval(1 + static_cast<int>(seed % 10), 0.4, seed);
    ASSERT_TRUE(oracle::proper_interval(g));
    ASSERT_EQ(g, cli::generate_proper_interval(1 + static_cast<int>(seed % 10), 0.4, seed));
  }
  EXPECT_THROW(cli::generate_proper_interval(13, 0.5, 1), PreconditionError);
}
