#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sortkit/graph.hpp"
#include "sortkit/monomial.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline sortkit::Monomial monomial(Rng& rng, std::size_t nvars, int max_degree, int min_degree = 0) {
  const int d = uniform(rng, min_degree, max_degree);
  std::vector<sortkit::Monomial::Exponent> e(nvars, 0);
  for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(nvars) - 1))];
  return sortkit::Monomial(std::move(e));
}

inline std::vector<sortkit::Monomial> tuple(Rng& rng, std::size_t q, std::size_t nvars, int max_degree) {
  std::vector<sortkit::Monomial> t;
  for (std::size_t i = 0; i < q; ++i) t.push_back(monomial(rng, nvars, max_degree));
  return t;
}

inline sortkit::SimpleGraph graph(Rng& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  std::bernoulli_distribution coin(p);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return sortkit::SimpleGraph(n, edges);
}

// Greedy clique partition over a shuffled vertex order.
inline sortkit::CliquePartition clique_partition(Rng& rng, const sortkit::SimpleGraph& g) {
  std::vector<int> order;
  for (int v = 1; v <= g.order(); ++v) order.push_back(v);
  std::shuffle(order.begin(), order.end(), rng);
  sortkit::CliquePartition p;
  for (int v : order) {
    bool placed = false;
    for (auto& block : p.blocks) {
      bool fits = true;
      for (int w : block) fits = fits && g.adjacent(v, w);
      if (fits) {
        block.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) p.blocks.push_back({v});
  }
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

inline sortkit::WhiskerSpec whisker_spec(Rng& rng, const sortkit::SimpleGraph& g, int max_r) {
  sortkit::WhiskerSpec s;
  s.partition = clique_partition(rng, g);
  for (std::size_t i = 0; i < s.partition.blocks.size(); ++i) s.multiplicities.push_back(uniform(rng, 1, max_r));
  return s;
}

}  // namespace gen
