#pragma once

#include <cstddef>

namespace sortkit {

/// Enumeration caps. Every check in the library is an exponential oracle,
/// so each one is bounded by a knob here.
struct Caps {
  /// Largest tuple length for fiber enumeration.
  std::size_t fiber_q = 4;
  /// Largest degree for toric kernel enumeration.
  int kernel_degree = 4;
  /// Largest generator set handed to toric routines.
  std::size_t generators = 64;
  /// Largest graph for exhaustive vertex-cover enumeration.
  int cover_vertices = 24;
  /// Largest power of an ideal.
  int power_k = 4;
  /// Element budget for Buchberger completion.
  std::size_t basis_budget = 10000;
  /// Largest generator list for greedy linear-quotient search.
  std::size_t lq_greedy = 64;
  /// Largest generator list for exhaustive linear-quotient search.
  std::size_t lq_exhaustive = 12;
  /// Largest graph for brute-force proper interval labeling search.
  int labeling_vertices = 10;
  /// Largest graph produced by the proper interval generator.
  int generator_vertices = 12;
};

}  // namespace sortkit
