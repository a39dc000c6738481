#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "sortkit/caps.hpp"
#include "sortkit/monomial.hpp"
#include "sortkit/sorting.hpp"

namespace sortkit {

/// Monomial map from a presentation ring onto a monomial algebra: ring
/// variable i goes to images[i], a monomial over `target`.
struct PresentationMap {
  VarSet ring;
  VarSet target;
  std::vector<Monomial> images;

  Monomial image(const Monomial& w) const;
};

/// Binomial lead - trail with a designated leading term.
struct MarkedBinomial {
  Monomial lead;
  Monomial trail;

  friend bool operator==(const MarkedBinomial&, const MarkedBinomial&) = default;
};

/// Checks lead != trail and that both have the same image; a failed image
/// check is a Falsification, since callers only build kernel elements.
MarkedBinomial make_marked(Monomial lead, Monomial trail, const PresentationMap& map);
bool image_balanced(const MarkedBinomial& b, const PresentationMap& map);

/// Monomial order on a ring whose variables are y_1..y_q followed by base
/// variables: y-parts compare by pure lex (y_1 largest), ties break by pure
/// lex on the base part.
class BlockOrder {
 public:
  BlockOrder(std::size_t y_count, std::size_t base_count) : y_count_(y_count), base_count_(base_count) {}
  /// Pure lex on n variables.
  static BlockOrder lex(std::size_t n) { return BlockOrder(0, n); }

  std::size_t y_count() const { return y_count_; }
  std::size_t base_count() const { return base_count_; }
  std::size_t size() const { return y_count_ + base_count_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  std::size_t y_count_;
  std::size_t base_count_;
};

/// Strict "descending" comparator for ordered containers.
struct OrderDescending {
  const BlockOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

/// K[B] presented by y_1..y_q with y_i -> u_i t, where u_1 > ... > u_q in
/// lex. The degree marker t is the last target variable.
struct ToricPresentation {
  MonomialSet generators;
  VarSet base;
  PresentationMap map;

  std::size_t q() const { return generators.size(); }
  /// y_{i_1} ... y_{i_k} for generator positions i_*.
  Monomial y_monomial(std::span<const std::size_t> indices) const;
  /// y-monomial whose factors are the given generators; StructuralError if
  /// one is not a generator.
  Monomial y_monomial_of(std::span<const Monomial> tuple) const;
  /// Generators named by a y-monomial, with multiplicity, in position order.
  std::vector<Monomial> tuple_of(const Monomial& y) const;
};

ToricPresentation make_toric_presentation(const MonomialSet& generators, const VarSet& base);
/// Names y1..yq.
VarSet y_variables(std::size_t q);
/// Zero-pads w (over `size` variables) into a ring of `total` variables at `offset`.
Monomial embed(const Monomial& w, std::size_t offset, std::size_t total);

/// y_u y_v - y_u' y_v' for every unordered pair whose sorting changes the
/// pair as a multiset, marked at the unsorted side. PreconditionError when
/// the generators are not sortable.
std::vector<MarkedBinomial> sorting_relations(const ToricPresentation& pres);

/// A rewrite sequence revisited a monomial.
class RewriteCycle : public Falsification {
 public:
  explicit RewriteCycle(std::vector<Monomial> cycle);
  const std::vector<Monomial>& cycle() const { return cycle_; }

 private:
  std::vector<Monomial> cycle_;
};

struct RewriteResult {
  Monomial normal_form;
  std::size_t steps = 0;
};

/// Rewrites lead -> trail until no lead divides. Picks the first applicable
/// rule, or a uniformly random one when `rng` is given. Throws RewriteCycle
/// when a monomial repeats.
RewriteResult reduce(const Monomial& mon, std::span<const MarkedBinomial> rules, std::mt19937_64* rng = nullptr);

/// All q-multisets of generator positions (nondecreasing) whose product is
/// `target`.
std::vector<std::vector<std::size_t>> fiber(const MonomialSet& generators, std::size_t q, const Monomial& target,
                                            const Caps& caps = {});

struct FiberCount {
  std::size_t sorted_multisets = 0;
  std::size_t distinct_products = 0;
  bool equal = false;
};

/// Counts q-multisets of generators that are sorted (up to order) and the
/// distinct products of q generators.
FiberCount standard_vs_fiber_count(const MonomialSet& generators, std::size_t q, const Caps& caps = {});

/// Unmarked binomial plus - minus with plus > minus in lex.
struct Binomial {
  Monomial plus;
  Monomial minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Every y^a - y^b with 2 <= |a| = |b| <= degree, equal images and a != b.
std::vector<Binomial> toric_kernel_up_to_degree(const ToricPresentation& pres, int degree, const Caps& caps = {});

/// Throws PreconditionError unless every lead is the order-maximal term.
void require_marked_by(std::span<const MarkedBinomial> basis, const BlockOrder& order);

/// Full reduction of a +-1 binomial sum; returns the remainder terms.
std::vector<std::pair<Monomial, int>> reduce_polynomial(std::vector<std::pair<Monomial, int>> terms,
                                                        std::span<const MarkedBinomial> basis,
                                                        const BlockOrder& order);

/// S-polynomial of g1, g2 reduces to zero modulo `basis` under `order`.
bool s_pair_reduces_to_zero(const MarkedBinomial& g1, const MarkedBinomial& g2,
                            std::span<const MarkedBinomial> basis, const BlockOrder& order);

/// Buchberger completion of binomial generators, then minimalization and
/// interreduction. Budget overruns throw CapExceeded. A positive
/// `max_degree` skips S-pairs whose lead lcm is of higher degree; for
/// homogeneous generators the result is the reduced basis through that
/// degree.
std::vector<MarkedBinomial> reduced_groebner_basis(std::span<const Binomial> generators, const BlockOrder& order,
                                                   std::size_t budget, int max_degree = 0);

/// Orients a binomial by the order.
MarkedBinomial mark(const Binomial& b, const BlockOrder& order);

}  // namespace sortkit
