#include <gtest/gtest.h>

#include <set>

#include "sortkit/powers.hpp"
#include "sortkit/rees.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace sortkit;

namespace {

const VarSet X4 = VarSet::numbered("x", 4);

Monomial m(const char* s) { return parse_monomial(s, X4); }

std::vector<Monomial> ms(std::initializer_list<const char*> xs) {
  std::vector<Monomial> out;
  for (auto x : xs) out.push_back(m(x));
  return out;
}

WhiskerSpec spec(std::vector<std::vector<int>> blocks, std::vector<int> r) { return {{std::move(blocks)}, std::move(r)}; }

std::vector<Monomial> in_order(const std::vector<Monomial>& gens, const std::vector<std::size_t>& order) {
  std::vector<Monomial> out;
  for (auto i : order) out.push_back(gens[i]);
  return out;
}

}  // namespace

TEST(PowerMinGens, Examples) {
  EXPECT_EQ(power_min_gens(MonomialSet(ms({"x1", "x2"})), 2).gens, ms({"x1^2", "x1*x2", "x2^2"}));
  EXPECT_EQ(power_min_gens(MonomialSet(ms({"x2", "x1*x3"})), 1).gens, ms({"x1*x3", "x2"}));
  EXPECT_THROW(power_min_gens(MonomialSet(ms({"x1"})), 5), CapExceeded);
  EXPECT_THROW(power_min_gens(MonomialSet(ms({"x1"})), 0), PreconditionError);
}

TEST(PowerMinGens, WhiskeredEdgeSquare) {
  const auto p = build_rees(SimpleGraph(2, {{1, 2}}), spec({{1}, {2}}, {1, 1}));
  const MonomialSet ideal(p.cover_monomials);
  const auto gl = power_min_gens(ideal, 2);
  const auto want = oracle::minimal_power_gens(ideal.elements(), 2);
  EXPECT_EQ(std::set<Monomial>(gl.gens.begin(), gl.gens.end()), want);
  EXPECT_EQ(gl.distinct_products, 6u);
  for (std::size_t i = 0; i < gl.gens.size(); ++i) {
    Monomial prod(ideal.nvars());
    for (auto r : gl.representatives[i]) prod = mul(prod, ideal[r]);
    EXPECT_EQ(prod, gl.gens[i]);
  }
}

TEST(Colon, Examples) {
  EXPECT_TRUE(colon_is_variable_generated(ms({"x2"}), m("x1*x3")));
  EXPECT_FALSE(colon_is_variable_generated(ms({"x1*x3"}), m("x2")));
  EXPECT_TRUE(colon_is_variable_generated({}, m("x2")));
  auto w = colon_witnesses(ms({"x2"}), m("x1*x3"));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::vector<ColonWitness>{{1, 0, 0, 1}}));
}

TEST(LinearQuotients, Examples) {
  auto a = find_linear_quotients_order(ms({"x2", "x1*x3"}));
  EXPECT_EQ(a.status, LqStatus::found);
  EXPECT_EQ(a.order, (std::vector<std::size_t>{0, 1}));

  const auto sq = ms({"x1^2", "x1*x2", "x2^2"});
  const std::vector<std::vector<std::size_t>> lex_desc{{0, 1, 2}};
  auto b = find_linear_quotients_order(sq, {}, lex_desc);
  EXPECT_EQ(b.status, LqStatus::found);
  EXPECT_EQ(b.strategy, "suggested");
  EXPECT_TRUE(replay_certificate(sq, b.order, b.witnesses).ok);

  auto c = find_linear_quotients_order(ms({"x1*x2", "x3*x4"}));
  EXPECT_EQ(c.status, LqStatus::absent);
}

TEST(LinearQuotients, InconclusiveBeyondCaps) {
  Caps caps;
  caps.lq_greedy = 1;
  caps.lq_exhaustive = 1;
  EXPECT_EQ(find_linear_quotients_order(ms({"x1*x2", "x3*x4"}), caps).status, LqStatus::inconclusive);
}

TEST(Replay, RejectsTamperedCertificates) {
  const auto gens = ms({"x1^2", "x1*x2", "x2^2"});
  auto r = find_linear_quotients_order(gens);
  ASSERT_EQ(r.status, LqStatus::found);
  ASSERT_TRUE(replay_certificate(gens, r.order, r.witnesses).ok);

  auto w = r.witnesses;
  w.pop_back();
  EXPECT_FALSE(replay_certificate(gens, r.order, w).ok);

  w = r.witnesses;
  w[0].variable = (w[0].variable + 1) % 4;
  EXPECT_FALSE(replay_certificate(gens, r.order, w).ok);

  auto order = r.order;
  order[0] = order[1];
  EXPECT_FALSE(replay_certificate(gens, order, r.witnesses).ok);
}

TEST(Certify, Examples) {
  const auto edge = certify_powers_linear_quotients(SimpleGraph(2, {{1, 2}}), spec({{1}, {2}}, {1, 1}), 2);
  ASSERT_EQ(edge.certificates.size(), 2u);
  const auto k3 = certify_powers_linear_quotients(SimpleGraph::complete(3), spec({{1, 2, 3}}, {1}), 3);
  ASSERT_EQ(k3.certificates.size(), 3u);
  for (const auto* rep : {&edge, &k3}) {
    EXPECT_FALSE(rep->falsified());
    EXPECT_FALSE(rep->inconclusive());
    for (const auto& c : rep->certificates) {
      EXPECT_EQ(c.result.status, LqStatus::found);
      EXPECT_TRUE(c.replay.ok);
      EXPECT_TRUE(oracle::order_has_linear_quotients(in_order(c.generators, c.result.order)));
    }
  }
  EXPECT_THROW(certify_powers_linear_quotients(SimpleGraph(2, {{1, 2}}), spec({{1}, {2}}, {1, 1}), 5), CapExceeded);
}

TEST(PowersProperty, CertificatesAgreeWithOracles) {
  gen::Rng rng(61);
  for (int it = 0; it < 8; ++it) {
    const auto g = gen::graph(rng, gen::uniform(rng, 1, 4), 0.5);
    const auto s = gen::whisker_spec(rng, g, 2);
    const auto rep = certify_powers_linear_quotients(g, s, 2);
    const auto p = build_rees(g, s);
    for (const auto& c : rep.certificates) {
      const auto want = oracle::minimal_power_gens(p.cover_monomials, c.k);
      ASSERT_EQ(std::set<Monomial>(c.generators.begin(), c.generators.end()), want);
      ASSERT_EQ(c.result.status, LqStatus::found);
      ASSERT_TRUE(c.replay.ok) << c.replay.message;
      ASSERT_TRUE(oracle::order_has_linear_quotients(in_order(c.generators, c.result.order)));
    }
  }
}

// power_min_gens(I, 1) is I itself for a minimal I
TEST(PowersProperty, FirstPowerIsMinimalForm) {
  gen::Rng rng(62);
  for (int it = 0; it < 100; ++it) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 5; ++k) gens.push_back(gen::monomial(rng, 4, 3, 1));
    const MonomialSet set(gens);
    const auto gl = power_min_gens(set, 1);
    const auto want = oracle::minimal_power_gens(set.elements(), 1);
    ASSERT_EQ(std::set<Monomial>(gl.gens.begin(), gl.gens.end()), want);
    ASSERT_EQ(minimalize(gl.gens), gl.gens);
  }
}
