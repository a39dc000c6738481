#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sortkit/caps.hpp"
#include "sortkit/graph.hpp"
#include "sortkit/sorting.hpp"

namespace sortkit {

/// Minimal generators of I^k, descending lex, with one factorisation each.
struct GeneratorList {
  std::vector<Monomial> gens;
  /// representatives[i]: nondecreasing positions into I whose product is gens[i].
  std::vector<std::vector<std::size_t>> representatives;
  /// Distinct products of k generators before divisibility pruning.
  std::size_t distinct_products = 0;
};

GeneratorList power_min_gens(const MonomialSet& ideal, int k, const Caps& caps = {});

/// Drops every element divisible by another; keeps descending lex order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Position i (in the order) needs, for each earlier j, an earlier l whose
/// colon quotient h_l / gcd(h_l, h_i) is the variable x_variable dividing
/// h_j / gcd(h_j, h_i).
struct ColonWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t witness_l = 0;
  std::size_t variable = 0;

  friend bool operator==(const ColonWitness&, const ColonWitness&) = default;
};

/// Witnesses that (prefix) : h is generated by variables, or nullopt.
/// Positions i, j, l refer to the prefix and i = prefix.size().
std::optional<std::vector<ColonWitness>> colon_witnesses(std::span<const Monomial> prefix, const Monomial& h);
bool colon_is_variable_generated(std::span<const Monomial> prefix, const Monomial& h);

enum class LqStatus { found, absent, inconclusive };
std::string to_string(LqStatus s);

struct LqResult {
  LqStatus status = LqStatus::inconclusive;
  /// order[p] = index into the generator list placed at position p.
  std::vector<std::size_t> order;
  std::vector<ColonWitness> witnesses;
  /// "suggested", "greedy" or "exhaustive"; empty when nothing was found.
  std::string strategy;
};

/// Tries each suggested order, then a greedy extension (degree ascending,
/// then lex descending), then exhaustive search. Absence is only reported
/// after a complete exhaustive search.
LqResult find_linear_quotients_order(std::span<const Monomial> gens, const Caps& caps = {},
                                     std::span<const std::vector<std::size_t>> suggested = {});

struct ReplayResult {
  bool ok = true;
  std::string message;
};

/// Re-checks every witness of an order independently of the search.
ReplayResult replay_certificate(std::span<const Monomial> gens, std::span<const std::size_t> order,
                                std::span<const ColonWitness> witnesses);

struct PowerCertificate {
  int k = 0;
  std::vector<Monomial> generators;
  std::size_t distinct_products = 0;
  LqResult result;
  /// The order induced by standard y-representatives worked as is.
  bool standard_order_worked = false;
  ReplayResult replay;
};

struct PowersReport {
  VarSet vars;
  std::vector<PowerCertificate> certificates;

  bool falsified() const;
  bool inconclusive() const;
};

/// Linear-quotient certificates for I^1, ..., I^kmax of the whiskered cover
/// ideal.
PowersReport certify_powers_linear_quotients(const SimpleGraph& g, const WhiskerSpec& spec, int kmax,
                                             const Caps& caps = {});

}  // namespace sortkit
