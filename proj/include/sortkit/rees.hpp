#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sortkit/caps.hpp"
#include "sortkit/graph.hpp"
#include "sortkit/toric.hpp"

namespace sortkit {

/// Presentation of the Rees algebra of a clique multi-whiskered cover ideal.
///
/// The ambient ring is y_1..y_q followed by the base chain z..., x... of the
/// whiskered graph. y_l maps to u_{C'_l} t, base variables map to
/// themselves; t is the last target variable and only records y-degree.
/// (The clique partition and this presentation map share a symbol in the
/// literature; here they are `spec` and `map`.)
struct ReesPresentation {
  SimpleGraph base_graph;
  WhiskerSpec spec;
  WhiskeredGraph whiskered;
  /// Covers C'_1, ..., C'_q in strictly descending lex of u_{C'}.
  std::vector<WhiskerCover> covers;
  /// u_{C'_l} over the base chain.
  std::vector<Monomial> cover_monomials;
  PresentationMap map;

  std::size_t q() const { return covers.size(); }
  const VarSet& base_chain() const { return whiskered.graph.names(); }
  std::size_t base_count() const { return base_chain().size(); }
  /// Position of a base cover C in the y numbering.
  std::size_t index_of_base_cover(VertexMask c) const;
  /// Ring variable of original vertex j.
  std::size_t x_variable(int j) const;
  /// Ring variable of a whiskered-graph vertex.
  std::size_t base_variable(int whiskered_vertex) const { return q() + static_cast<std::size_t>(whiskered_vertex - 1); }
  /// Toric presentation of K[u_{C'_1} t, ..., u_{C'_q} t] alone.
  ToricPresentation fiber_ring() const;
};

ReesPresentation build_rees(const SimpleGraph& g, const WhiskerSpec& spec, const Caps& caps = {});

/// The block order: y-parts by pure lex, ties by lex on the base chain.
BlockOrder block_order(const ReesPresentation& pres);

/// x_j y_a - z_1^(i) ... z_{r_i}^(i) y_b, C_b = C_a + {x_j}, one per cover
/// C_a and vertex x_j of a block not contained in C_a.
std::vector<MarkedBinomial> gprime_relations(const ReesPresentation& pres);

/// Reduced Groebner basis of the y-only toric ideal under pure lex
/// y_1 > ... > y_q through `degree`, embedded into the full ring.
std::vector<MarkedBinomial> g_relations(const ReesPresentation& pres, int degree, const Caps& caps = {});

struct XConditionViolation {
  std::size_t index = 0;
  std::int64_t base_degree = 0;
};

struct XConditionResult {
  bool holds = true;
  std::vector<XConditionViolation> violations;
};

/// Every lead has degree at most one in the base variables.
XConditionResult x_condition_check(std::span<const MarkedBinomial> basis, std::size_t y_count);

struct ReesBasisReport {
  bool kernel_ok = true;
  bool spairs_ok = true;
  bool omega_ok = true;
  bool x_condition_ok = true;
  std::size_t g_size = 0;
  std::size_t gprime_size = 0;
  std::size_t basis_size = 0;
  std::size_t spairs_checked = 0;
  std::size_t standard_monomials = 0;
  std::vector<std::string> violations;

  bool ok() const { return kernel_ok && spairs_ok && omega_ok && x_condition_ok; }
};

/// Runs kernel membership, S-pair reduction (pairs whose lead lcm has
/// y-degree at most `degree`), standard-monomial injectivity up to
/// `degree`, and the x-condition on the supplied basis.
ReesBasisReport verify_basis(const ReesPresentation& pres, std::span<const MarkedBinomial> basis, int degree);

/// verify_basis on G + G' built from the presentation. `drop_gprime`
/// removes one G' element first (falsification harness).
ReesBasisReport verify_rees_basis(const ReesPresentation& pres, int degree, const Caps& caps = {},
                             std::optional<std::size_t> drop_gprime = std::nullopt);

}  // namespace sortkit
