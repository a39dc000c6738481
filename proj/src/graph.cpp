#include "sortkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace sortkit {

namespace {

VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

int lowest_vertex(VertexMask m) { return std::countr_zero(m) + 1; }

}  // namespace

std::vector<int> vertex_list(VertexMask mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(lowest_vertex(mask));
    mask &= mask - 1;
  }
  return out;
}

VertexMask mask_of(const std::vector<int>& vertices) {
  VertexMask m = 0;
  for (int v : vertices) {
    if (v < 1 || v > SimpleGraph::kMaxVertices) throw StructuralError("vertex label out of range");
    m |= vertex_bit(v);
  }
  return m;
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : SimpleGraph(n, edges, n > 0 ? VarSet::numbered("x", static_cast<std::size_t>(n)) : VarSet{}) {}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges, VarSet names)
    : n_(n), names_(std::move(names)) {
  if (n < 0 || n > kMaxVertices) throw StructuralError("graph order must lie in [0, 64]");
  if (names_.size() != static_cast<std::size_t>(n)) throw StructuralError("graph needs one name per vertex");
  adj_.assign(static_cast<std::size_t>(n), 0);
  std::set<std::pair<int, int>> unique;
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw StructuralError("edge {" + std::to_string(a) + "," + std::to_string(b) + "} has an endpoint outside 1.." +
                            std::to_string(n));
    if (a == b) throw StructuralError("loop at vertex " + std::to_string(a));
    unique.emplace(std::min(a, b), std::max(a, b));
  }
  edges_.assign(unique.begin(), unique.end());
  for (auto [a, b] : edges_) {
    adj_[static_cast<std::size_t>(a - 1)] |= vertex_bit(b);
    adj_[static_cast<std::size_t>(b - 1)] |= vertex_bit(a);
  }
}

SimpleGraph SimpleGraph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, e);
}

SimpleGraph SimpleGraph::cycle(int n) {
  auto e = path(n).edges();
  if (n >= 3) e.emplace_back(1, n);
  return SimpleGraph(n, e);
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return SimpleGraph(n, e);
}

VertexMask SimpleGraph::all_vertices() const { return low_mask(n_); }

bool SimpleGraph::is_vertex_cover(VertexMask c) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [c](auto e) { return (c & (vertex_bit(e.first) | vertex_bit(e.second))) != 0; });
}

bool SimpleGraph::is_clique(VertexMask c) const {
  for (int v : vertex_list(c))
    if ((c & ~vertex_bit(v) & ~neighbors(v)) != 0) return false;
  return true;
}

SimpleGraph SimpleGraph::relabel(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw StructuralError("relabel: permutation has wrong length");
  std::vector<int> seen(perm.begin(), perm.end());
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < n_; ++i)
    if (seen[static_cast<std::size_t>(i)] != i + 1) throw StructuralError("relabel: not a permutation");
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : edges_) e.emplace_back(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(b - 1)]);
  return SimpleGraph(n_, e);
}

Monomial cover_monomial(const SimpleGraph& g, VertexMask c) {
  MonomialBuilder b(static_cast<std::size_t>(g.order()));
  for (int v : vertex_list(c)) b.add(static_cast<std::size_t>(v - 1));
  return std::move(b).build();
}

bool lex_greater(VertexMask a, VertexMask b) {
  const VertexMask diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

void sort_lex_descending(std::vector<VertexMask>& sets) { std::sort(sets.begin(), sets.end(), lex_greater); }

namespace {

// Bron-Kerbosch with pivoting over the complement graph: its maximal
// cliques are the maximal independent sets of g.
void maximal_independent_sets(const std::vector<VertexMask>& non_adj, VertexMask r, VertexMask p, VertexMask x,
                              std::vector<VertexMask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  const VertexMask px = p | x;
  int pivot = lowest_vertex(px);
  std::size_t best = 0;
  for (VertexMask m = px; m != 0; m &= m - 1) {
    int u = lowest_vertex(m);
    auto c = static_cast<std::size_t>(std::popcount(p & non_adj[static_cast<std::size_t>(u - 1)]));
    if (c >= best) {
      best = c;
      pivot = u;
    }
  }
  for (VertexMask cand = p & ~non_adj[static_cast<std::size_t>(pivot - 1)]; cand != 0; cand &= cand - 1) {
    const int v = lowest_vertex(cand);
    const VertexMask nv = non_adj[static_cast<std::size_t>(v - 1)];
    maximal_independent_sets(non_adj, r | vertex_bit(v), p & nv, x & nv, out);
    p &= ~vertex_bit(v);
    x |= vertex_bit(v);
  }
}

}  // namespace

std::vector<VertexMask> minimal_vertex_covers(const SimpleGraph& g) {
  const int n = g.order();
  const VertexMask all = g.all_vertices();
  std::vector<VertexMask> non_adj(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) non_adj[static_cast<std::size_t>(v - 1)] = all & ~g.neighbors(v) & ~vertex_bit(v);
  std::vector<VertexMask> independent;
  maximal_independent_sets(non_adj, 0, all, 0, independent);
  std::vector<VertexMask> covers;
  covers.reserve(independent.size());
  for (auto s : independent) covers.push_back(all & ~s);
  sort_lex_descending(covers);
  return covers;
}

std::vector<VertexMask> all_vertex_covers(const SimpleGraph& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices)
    throw CapExceeded("all_vertex_covers: " + std::to_string(n) + " vertices exceeds the cap of " +
                      std::to_string(max_vertices));
  std::vector<VertexMask> earlier(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) earlier[static_cast<std::size_t>(v - 1)] = g.neighbors(v) & low_mask(v - 1);
  std::vector<VertexMask> out;
  // Decide vertices in order; leaving v out forces all earlier neighbours in.
  std::function<void(int, VertexMask)> walk = [&](int v, VertexMask chosen) {
    if (v > n) {
      out.push_back(chosen);
      return;
    }
    walk(v + 1, chosen | vertex_bit(v));
    const VertexMask need = earlier[static_cast<std::size_t>(v - 1)];
    if ((need & ~chosen) == 0) walk(v + 1, chosen);
  };
  walk(1, 0);
  sort_lex_descending(out);
  return out;
}

bool is_proper_interval_labeling(const SimpleGraph& g) {
  for (auto [i, j] : g.edges()) {
    VertexMask interval = 0;
    for (int k = i; k <= j; ++k) interval |= vertex_bit(k);
    if (!g.is_clique(interval)) return false;
  }
  return true;
}

std::optional<std::vector<int>> find_proper_interval_labeling(const SimpleGraph& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices)
    throw CapExceeded("find_proper_interval_labeling: " + std::to_string(n) + " vertices exceeds the cap of " +
                      std::to_string(max_vertices));
  std::vector<int> at;  // at[p] = vertex placed at label p+1
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  // Placing w at the next label: every earlier a adjacent to w must be
  // adjacent to everything placed between a and w.
  auto fits = [&](int w) {
    for (std::size_t a = 0; a < at.size(); ++a) {
      if (!g.adjacent(at[a], w)) continue;
      for (std::size_t b = a + 1; b < at.size(); ++b)
        if (!g.adjacent(at[a], at[b]) || !g.adjacent(at[b], w)) return false;
    }
    return true;
  };
  std::function<bool()> place = [&]() {
    if (static_cast<int>(at.size()) == n) return true;
    for (int w = 1; w <= n; ++w) {
      if (used[static_cast<std::size_t>(w)] || !fits(w)) continue;
      used[static_cast<std::size_t>(w)] = true;
      at.push_back(w);
      if (place()) return true;
      at.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  if (!place()) return std::nullopt;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < at.size(); ++p) perm[static_cast<std::size_t>(at[p] - 1)] = static_cast<int>(p) + 1;
  return perm;
}

MonomialSet cover_ideal(const SimpleGraph& g) {
  if (g.order() == 0) throw PreconditionError("cover_ideal: graph without vertices has no polynomial ring");
  std::vector<Monomial> gens;
  for (auto c : minimal_vertex_covers(g)) gens.push_back(cover_monomial(g, c));
  return MonomialSet(std::move(gens));
}

void CliquePartition::validate(const SimpleGraph& g) const {
  VertexMask seen = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw StructuralError("clique partition has an empty block");
    VertexMask b = 0;
    for (int v : block) {
      if (v < 1 || v > g.order()) throw StructuralError("clique partition names vertex " + std::to_string(v) +
                                                        " outside 1.." + std::to_string(g.order()));
      if ((seen | b) & vertex_bit(v)) throw StructuralError("clique partition blocks are not disjoint");
      b |= vertex_bit(v);
    }
    if (!g.is_clique(b)) throw StructuralError("clique partition block is not a clique");
    seen |= b;
  }
  if (seen != g.all_vertices()) throw StructuralError("clique partition does not cover every vertex");
}

CliquePartition CliquePartition::singletons(int n) {
  CliquePartition p;
  for (int v = 1; v <= n; ++v) p.blocks.push_back({v});
  return p;
}

void WhiskerSpec::validate(const SimpleGraph& g) const {
  partition.validate(g);
  if (multiplicities.size() != partition.blocks.size())
    throw StructuralError("whisker spec needs one multiplicity per block");
  for (int r : multiplicities)
    if (r < 1) throw StructuralError("whisker multiplicities must be positive");
}

std::string whisker_name(int k, int block) { return "z" + std::to_string(k) + "^{" + std::to_string(block) + "}"; }

VertexMask WhiskeredGraph::lift(VertexMask base_set) const {
  VertexMask out = 0;
  for (int v : vertex_list(base_set)) out |= vertex_bit(base_vertex[static_cast<std::size_t>(v - 1)]);
  return out;
}

WhiskeredGraph multi_whisker(const SimpleGraph& g, const WhiskerSpec& spec) {
  spec.validate(g);
  WhiskeredGraph w;
  const auto& blocks = spec.partition.blocks;
  w.whisker_count = std::accumulate(spec.multiplicities.begin(), spec.multiplicities.end(), 0);
  const int total = g.order() + w.whisker_count;
  if (total > SimpleGraph::kMaxVertices) throw CapExceeded("whiskered graph exceeds 64 vertices");

  std::vector<std::string> names;
  int next = 1;
  w.whisker_vertices.resize(blocks.size());
  w.whisker_block_mask.assign(blocks.size(), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int k = 1; k <= spec.multiplicities[i]; ++k) {
      names.push_back(whisker_name(k, static_cast<int>(i) + 1));
      w.whisker_vertices[i].push_back(next);
      w.whisker_block_mask[i] |= vertex_bit(next);
      ++next;
    }
  for (int v = 1; v <= g.order(); ++v) {
    names.push_back(g.names().name(static_cast<std::size_t>(v - 1)));
    w.base_vertex.push_back(next++);
  }

  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges())
    edges.emplace_back(w.base_vertex[static_cast<std::size_t>(a - 1)], w.base_vertex[static_cast<std::size_t>(b - 1)]);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int x : blocks[i])
      for (int z : w.whisker_vertices[i]) edges.emplace_back(w.base_vertex[static_cast<std::size_t>(x - 1)], z);
  w.graph = SimpleGraph(total, edges, VarSet(std::move(names)));
  return w;
}

std::vector<WhiskerCover> whisker_minimal_covers(const SimpleGraph& g, const WhiskerSpec& spec,
                                                 const WhiskeredGraph& whiskered, int max_vertices) {
  const auto& blocks = spec.partition.blocks;
  std::vector<VertexMask> block_masks;
  for (const auto& b : blocks) block_masks.push_back(mask_of(b));
  std::vector<WhiskerCover> out;
  for (auto c : all_vertex_covers(g, max_vertices)) {
    VertexMask lifted = whiskered.lift(c);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if ((block_masks[i] & ~c) != 0) lifted |= whiskered.whisker_block_mask[i];
    out.push_back({c, lifted});
  }
  std::sort(out.begin(), out.end(), [](const WhiskerCover& a, const WhiskerCover& b) { return lex_greater(a.cover, b.cover); });
  return out;
}

std::vector<WhiskerCover> whisker_minimal_covers(const SimpleGraph& g, const WhiskerSpec& spec, int max_vertices) {
  return whisker_minimal_covers(g, spec, multi_whisker(g, spec), max_vertices);
}

}  // namespace sortkit
