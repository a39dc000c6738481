#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sortkit/monomial.hpp"

namespace sortkit {

using Tuple = std::vector<Monomial>;

/// A q-tuple in sorted normal form. Entries 0..r-1 have degree d+1, the
/// rest degree d, and every pair (i < j) is a sorted pair.
struct SortedTuple {
  Tuple entries;
  std::int64_t d = 0;
  std::int64_t r = 0;

  friend bool operator==(const SortedTuple&, const SortedTuple&) = default;
};

/// Finite set of distinct monomials over one ring, kept in descending lex
/// order.
class MonomialSet {
 public:
  MonomialSet() = default;
  /// Deduplicates; throws StructuralError on mixed variable counts.
  explicit MonomialSet(std::vector<Monomial> elements);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  /// 0 for the empty set.
  std::size_t nvars() const { return elements_.empty() ? 0 : elements_.front().size(); }
  const std::vector<Monomial>& elements() const { return elements_; }
  const Monomial& operator[](std::size_t i) const { return elements_[i]; }
  bool contains(const Monomial& u) const;
  /// Position in descending lex order, if present.
  std::optional<std::size_t> index_of(const Monomial& u) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  std::vector<Monomial> elements_;
};

/// Interleaves the ascending factor list of uv: odd positions go to the
/// first component, even positions to the second.
std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v);
bool is_sorted_pair(const Monomial& u, const Monomial& v);

/// The unique sorted tuple with the same product. Requires total degree
/// m >= q (DegenerateInput otherwise, reported as PreconditionError).
SortedTuple sort_tuple(std::span<const Monomial> tuple);
/// Every pair (i < j) sorted.
bool is_sorted_tuple(std::span<const Monomial> tuple);

/// Replaces (tuple[i], tuple[j]) by their sorting; requires i < j.
Tuple single_sort_step(Tuple tuple, std::size_t i, std::size_t j);

struct SortStep {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const SortStep&, const SortStep&) = default;
};

struct Reduction {
  SortedTuple result;
  std::size_t steps = 0;
  std::vector<SortStep> trace;
};

/// Applies single sorting steps until the tuple is sorted. Pair choice:
/// while the degree spread exceeds one, the first max-degree entry against
/// the first min-degree entry; then the first pair whose left entry has the
/// smaller degree; then the first unsorted pair.
Reduction reduce_to_sorted(std::span<const Monomial> tuple);

/// Sum over i < j of |deg w_i - deg w_j|.
std::int64_t potential_f(std::span<const Monomial> tuple);

/// True iff the first r entries have degree d+1 and the rest degree d,
/// where m = qd + r.
bool in_balanced_class(std::span<const Monomial> tuple);
/// Column-major index sequence k of a balanced tuple: k_{i+(j-1)q} is the
/// j-th smallest factor of entry i. PreconditionError outside the class.
std::vector<std::size_t> interleaved_sequence(std::span<const Monomial> tuple);
/// Sum over a < b of (k_b - k_a) on the interleaved sequence.
std::int64_t potential_g(std::span<const Monomial> tuple);

struct SortabilityResult {
  bool sortable = true;
  /// First pair (in generator order) whose sorting leaves the set.
  std::optional<std::pair<Monomial, Monomial>> witness;
};

SortabilityResult is_sortable_set(const MonomialSet& set);

/// Smallest sortable superset; throws CapExceeded past `max_size`.
MonomialSet sortable_closure(const MonomialSet& set, std::size_t max_size);

Monomial product(std::span<const Monomial> tuple);

}  // namespace sortkit
