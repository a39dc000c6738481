#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sortkit/monomial.hpp"
#include "sortkit/sorting.hpp"

namespace sortkit {

/// Vertex subset of a graph with at most 64 vertices; bit v-1 is vertex v.
using VertexMask = std::uint64_t;

constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }
std::vector<int> vertex_list(VertexMask mask);
VertexMask mask_of(const std::vector<int>& vertices);

/// Finite simple graph on vertices 1..n. Vertex v is named names()[v-1];
/// the name order is also the variable order used for lex comparisons.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 64;

  SimpleGraph() = default;
  /// Default names x1..xn. Throws StructuralError on loops, bad endpoints
  /// or n outside [0, 64]; duplicate edges are merged.
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges, VarSet names);

  static SimpleGraph path(int n);
  static SimpleGraph cycle(int n);
  static SimpleGraph complete(int n);

  int order() const { return n_; }
  /// Edges {i, j} with i < j in ascending order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int i, int j) const { return (adj_[static_cast<std::size_t>(i - 1)] & vertex_bit(j)) != 0; }
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v - 1)]; }
  VertexMask all_vertices() const;
  /// Empty VarSet when n == 0.
  const VarSet& names() const { return names_; }

  bool is_vertex_cover(VertexMask c) const;
  bool is_clique(VertexMask c) const;
  /// Graph with vertex v moved to label perm[v-1]; names reset to x1..xn.
  SimpleGraph relabel(const std::vector<int>& perm) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.names_ == b.names_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexMask> adj_;
  VarSet names_;
};

/// Squarefree monomial x_C over the graph's names.
Monomial cover_monomial(const SimpleGraph& g, VertexMask c);

/// Descending pure lex order of x_C (vertex 1 is the largest variable).
bool lex_greater(VertexMask a, VertexMask b);
void sort_lex_descending(std::vector<VertexMask>& sets);

/// All minimal vertex covers (complements of maximal independent sets),
/// in descending lex order of their monomials.
std::vector<VertexMask> minimal_vertex_covers(const SimpleGraph& g);

/// Every vertex cover, descending lex. CapExceeded when n > max_vertices.
std::vector<VertexMask> all_vertex_covers(const SimpleGraph& g, int max_vertices = 24);

/// For all i < j adjacent, the vertices i..j induce a complete subgraph.
bool is_proper_interval_labeling(const SimpleGraph& g);

/// A permutation perm (perm[v-1] = new label of v) under which the graph is
/// proper-interval labeled, found by pruned search over permutations.
std::optional<std::vector<int>> find_proper_interval_labeling(const SimpleGraph& g, int max_vertices = 10);

/// Minimal generators x_C of the cover ideal.
MonomialSet cover_ideal(const SimpleGraph& g);

/// Disjoint cliques V_1, ..., V_m covering the vertex set.
struct CliquePartition {
  std::vector<std::vector<int>> blocks;

  /// Throws StructuralError unless the blocks partition [n] into cliques.
  void validate(const SimpleGraph& g) const;
  /// Each vertex in its own block.
  static CliquePartition singletons(int n);
};

struct WhiskerSpec {
  CliquePartition partition;
  std::vector<int> multiplicities;

  void validate(const SimpleGraph& g) const;
};

/// Name of the k-th whisker vertex attached to block i (both 1-based).
std::string whisker_name(int k, int block);

/// Clique multi-whiskered graph. Whisker vertices come first in the vertex
/// numbering (block by block), followed by the original vertices, so that
/// vertex order equals the variable chain z_1^(1) > ... > z_rm^(m) > x_1 > ... > x_n.
struct WhiskeredGraph {
  SimpleGraph graph;
  /// base_vertex[j-1] is the whiskered-graph vertex of original vertex j.
  std::vector<int> base_vertex;
  /// whisker_vertices[i] lists the whisker vertices of block i.
  std::vector<std::vector<int>> whisker_vertices;
  /// Union of whisker_vertices[i].
  std::vector<VertexMask> whisker_block_mask;
  int whisker_count = 0;

  /// Image of a cover of the base graph in the whiskered vertex numbering.
  VertexMask lift(VertexMask base_set) const;
};

WhiskeredGraph multi_whisker(const SimpleGraph& g, const WhiskerSpec& spec);

struct WhiskerCover {
  /// Vertex cover C of the base graph (base numbering).
  VertexMask base_cover = 0;
  /// C' = C plus every whisker block whose clique is not inside C
  /// (whiskered numbering).
  VertexMask cover = 0;
};

/// C -> C' over every vertex cover C of g, in descending lex order of C'.
std::vector<WhiskerCover> whisker_minimal_covers(const SimpleGraph& g, const WhiskerSpec& spec,
                                                 const WhiskeredGraph& whiskered, int max_vertices = 24);
std::vector<WhiskerCover> whisker_minimal_covers(const SimpleGraph& g, const WhiskerSpec& spec,
                                                 int max_vertices = 24);

}  // namespace sortkit
