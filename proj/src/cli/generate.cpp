#include <algorithm>
#include <random>

#include "sortkit/cli.hpp"
#include "sortkit/errors.hpp"

namespace sortkit::cli {

SimpleGraph generate_proper_interval(int n, double density, std::uint64_t seed, int max_vertices) {
  if (n < 1 || n > max_vertices)
    throw PreconditionError("generate_proper_interval: n must lie in [1, " + std::to_string(max_vertices) + "]");
  if (!(density >= 0.0 && density <= 1.0)) throw PreconditionError("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  auto bernoulli = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < density; };

  std::vector<std::pair<int, int>> edges;
  int reach = 0;
  for (int i = 1; i <= n; ++i) {
    int extension = 0;
    for (int t = 0; t < n - i; ++t) extension += bernoulli() ? 1 : 0;
    reach = std::max({reach, i, i + extension});
    for (int j = i + 1; j <= reach; ++j) edges.emplace_back(i, j);
  }
  return SimpleGraph(n, edges);
}

}  // namespace sortkit::cli
