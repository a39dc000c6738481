#include "sortkit/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace sortkit {

namespace {

// Calls visit(indices) for every nondecreasing sequence of length k over [0, q).
void for_each_multiset(std::size_t q, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (q == 0) return;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    visit(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == q - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[pos - 1];
  }
}

void require_generator_cap(const MonomialSet& gens, const Caps& caps) {
  if (gens.size() > caps.generators)
    throw CapExceeded(std::to_string(gens.size()) + " generators exceed the cap of " + std::to_string(caps.generators));
}

}  // namespace

Monomial PresentationMap::image(const Monomial& w) const {
  if (w.size() != ring.size()) throw StructuralError("monomial does not live in the presentation ring");
  MonomialBuilder b(target.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    const auto& img = images[i];
    for (std::size_t t = 0; t < img.size(); ++t)
      if (img[t] != 0) b.add(t, img[t] * w[i]);
  }
  return std::move(b).build();
}

MarkedBinomial make_marked(Monomial lead, Monomial trail, const PresentationMap& map) {
  require_same_ring(lead, trail);
  if (lead == trail) throw StructuralError("marked binomial with equal terms is zero");
  if (map.image(lead) != map.image(trail))
    throw Falsification("binomial " + format(lead, map.ring) + " - " + format(trail, map.ring) +
                        " is not in the kernel of the presentation");
  return {std::move(lead), std::move(trail)};
}

bool image_balanced(const MarkedBinomial& b, const PresentationMap& map) {
  return map.image(b.lead) == map.image(b.trail);
}

std::strong_ordering BlockOrder::compare(const Monomial& a, const Monomial& b) const {
  require_same_ring(a, b);
  if (a.size() != size()) throw StructuralError("monomial does not match the block order's ring");
  // y-block by pure lex, then base block by pure lex
  for (std::size_t i = 0; i < y_count_; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  for (std::size_t i = y_count_; i < size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

VarSet y_variables(std::size_t q) { return VarSet::numbered("y", q); }

Monomial embed(const Monomial& w, std::size_t offset, std::size_t total) {
  if (offset + w.size() > total) throw StructuralError("embed: target ring too small");
  MonomialBuilder b(total);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) b.add(offset + i, w[i]);
  return std::move(b).build();
}

Monomial ToricPresentation::y_monomial(std::span<const std::size_t> indices) const {
  MonomialBuilder b(q());
  for (auto i : indices) b.add(i);
  return std::move(b).build();
}

Monomial ToricPresentation::y_monomial_of(std::span<const Monomial> tuple) const {
  MonomialBuilder b(q());
  for (const auto& u : tuple) {
    auto i = generators.index_of(u);
    if (!i) throw StructuralError("monomial " + format(u, base) + " is not a generator");
    b.add(*i);
  }
  return std::move(b).build();
}

std::vector<Monomial> ToricPresentation::tuple_of(const Monomial& y) const {
  std::vector<Monomial> out;
  for (auto i : factor_sequence(y)) out.push_back(generators[i]);
  return out;
}

ToricPresentation make_toric_presentation(const MonomialSet& generators, const VarSet& base) {
  if (generators.empty()) throw PreconditionError("toric presentation needs generators");
  if (generators.nvars() != base.size()) throw StructuralError("generators do not match the base variables");
  ToricPresentation p{generators, base, {}};
  p.map.ring = y_variables(generators.size());
  p.map.target = base.concat(VarSet({"t"}));
  for (const auto& u : generators) {
    MonomialBuilder b(base.size() + 1);
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0) b.add(i, u[i]);
    b.add(base.size());
    p.map.images.push_back(std::move(b).build());
  }
  return p;
}

std::vector<MarkedBinomial> sorting_relations(const ToricPresentation& pres) {
  const auto& gens = pres.generators;
  std::vector<MarkedBinomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      auto [a, b] = sort_pair(gens[i], gens[j]);
      auto ia = gens.index_of(a), ib = gens.index_of(b);
      if (!ia || !ib)
        throw PreconditionError("sorting_relations: generator set is not sortable (" + format(gens[i], pres.base) +
                                ", " + format(gens[j], pres.base) + ")");
      std::size_t lead_idx[] = {i, j};
      std::size_t trail_idx[] = {*ia, *ib};
      auto lead = pres.y_monomial(lead_idx);
      auto trail = pres.y_monomial(trail_idx);
      // sortings that only swap the pair give the zero relation
      if (lead == trail) continue;
      out.push_back(make_marked(std::move(lead), std::move(trail), pres.map));
    }
  return out;
}

RewriteCycle::RewriteCycle(std::vector<Monomial> cycle)
    : Falsification("rewriting revisited a monomial after " + std::to_string(cycle.size()) + " steps"),
      cycle_(std::move(cycle)) {}

RewriteResult reduce(const Monomial& mon, std::span<const MarkedBinomial> rules, std::mt19937_64* rng) {
  RewriteResult out{mon, 0};
  std::vector<Monomial> path{mon};
  std::unordered_set<Monomial, MonomialHash> seen{mon};
  std::vector<std::size_t> applicable;
  while (true) {
    applicable.clear();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (divides(rules[r].lead, out.normal_form)) {
        applicable.push_back(r);
        if (rng == nullptr) break;
      }
    }
    if (applicable.empty()) return out;
    std::size_t pick = 0;
    if (rng != nullptr) pick = std::uniform_int_distribution<std::size_t>(0, applicable.size() - 1)(*rng);
    const auto& rule = rules[applicable[pick]];
    out.normal_form = mul(quotient(out.normal_form, rule.lead), rule.trail);
    ++out.steps;
    if (!seen.insert(out.normal_form).second) {
      auto start = std::find(path.begin(), path.end(), out.normal_form);
      throw RewriteCycle(std::vector<Monomial>(start, path.end()));
    }
    path.push_back(out.normal_form);
  }
}

std::vector<std::vector<std::size_t>> fiber(const MonomialSet& generators, std::size_t q, const Monomial& target,
                                            const Caps& caps) {
  if (q > caps.fiber_q)
    throw CapExceeded("fiber: q = " + std::to_string(q) + " exceeds the cap of " + std::to_string(caps.fiber_q));
  require_generator_cap(generators, caps);
  std::vector<std::vector<std::size_t>> out;
  if (q == 0) {
    if (target.is_unit()) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const Monomial&)> walk = [&](std::size_t from, const Monomial& rest) {
    if (chosen.size() == q) {
      if (rest.is_unit()) out.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < generators.size(); ++i) {
      if (!divides(generators[i], rest)) continue;
      chosen.push_back(i);
      walk(i, quotient(rest, generators[i]));
      chosen.pop_back();
    }
  };
  walk(0, target);
  return out;
}

FiberCount standard_vs_fiber_count(const MonomialSet& generators, std::size_t q, const Caps& caps) {
  if (q == 0 || q > caps.fiber_q)
    throw CapExceeded("standard_vs_fiber_count: q must lie in [1, " + std::to_string(caps.fiber_q) + "]");
  require_generator_cap(generators, caps);
  FiberCount out;
  std::unordered_set<Monomial, MonomialHash> products;
  std::vector<Monomial> tuple(q);
  for_each_multiset(generators.size(), q, [&](const std::vector<std::size_t>& idx) {
    // nondecreasing positions = descending lex, the only order a sorted
    // tuple can appear in
    for (std::size_t i = 0; i < q; ++i) tuple[i] = generators[idx[i]];
    products.insert(product(tuple));
    if (is_sorted_tuple(tuple)) ++out.sorted_multisets;
  });
  out.distinct_products = products.size();
  out.equal = out.sorted_multisets == out.distinct_products;
  return out;
}

std::vector<Binomial> toric_kernel_up_to_degree(const ToricPresentation& pres, int degree, const Caps& caps) {
  if (degree > caps.kernel_degree)
    throw CapExceeded("kernel degree " + std::to_string(degree) + " exceeds the cap of " +
                      std::to_string(caps.kernel_degree));
  require_generator_cap(pres.generators, caps);
  std::vector<Binomial> out;
  for (int k = 2; k <= degree; ++k) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> slot;
    std::vector<std::vector<Monomial>> fibers;
    for_each_multiset(pres.q(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& idx) {
      auto y = pres.y_monomial(idx);
      auto [it, fresh] = slot.emplace(pres.map.image(y), fibers.size());
      if (fresh) fibers.emplace_back();
      fibers[it->second].push_back(std::move(y));
    });
    // multisets arrive in descending lex, so each fiber is already sorted
    for (const auto& f : fibers)
      for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = a + 1; b < f.size(); ++b) out.push_back({f[a], f[b]});
  }
  return out;
}

void require_marked_by(std::span<const MarkedBinomial> basis, const BlockOrder& order) {
  for (const auto& g : basis)
    if (!order.greater(g.lead, g.trail)) throw PreconditionError("mis-marked basis element: lead is not the order maximum");
}

namespace {

using TermMap = std::map<Monomial, int, OrderDescending>;

void add_term(TermMap& terms, const Monomial& m, int c) {
  auto [it, fresh] = terms.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) {
    terms.erase(it);
  } else if (it->second != 1 && it->second != -1) {
    throw Falsification("binomial reduction produced a coefficient outside {+1, -1}");
  }
}

const MarkedBinomial* find_reducer(const Monomial& m, std::span<const MarkedBinomial> basis) {
  for (const auto& g : basis)
    if (divides(g.lead, m)) return &g;
  return nullptr;
}

std::optional<MarkedBinomial> remainder_as_binomial(const std::vector<std::pair<Monomial, int>>& rem) {
  if (rem.empty()) return std::nullopt;
  if (rem.size() != 2 || rem[0].second != -rem[1].second)
    throw Falsification("toric S-pair reduction left a non-binomial remainder");
  // remainder terms are listed in descending order
  return MarkedBinomial{rem[0].first, rem[1].first};
}

std::vector<std::pair<Monomial, int>> s_polynomial(const MarkedBinomial& g1, const MarkedBinomial& g2) {
  auto l = lcm(g1.lead, g2.lead);
  return {{mul(quotient(l, g1.lead), g1.trail), 1}, {mul(quotient(l, g2.lead), g2.trail), -1}};
}

}  // namespace

std::vector<std::pair<Monomial, int>> reduce_polynomial(std::vector<std::pair<Monomial, int>> input,
                                                        std::span<const MarkedBinomial> basis,
                                                        const BlockOrder& order) {
  TermMap terms(OrderDescending{&order});
  for (auto& [m, c] : input) add_term(terms, m, c);
  std::vector<std::pair<Monomial, int>> remainder;
  while (!terms.empty()) {
    auto it = terms.begin();
    Monomial m = it->first;
    const int c = it->second;
    terms.erase(it);
    if (const auto* g = find_reducer(m, basis)) {
      // c*m = c*(m/lead)*lead  ==  c*(m/lead)*trail  modulo g
      add_term(terms, mul(quotient(m, g->lead), g->trail), c);
    } else {
      remainder.emplace_back(std::move(m), c);
    }
  }
  return remainder;
}

bool s_pair_reduces_to_zero(const MarkedBinomial& g1, const MarkedBinomial& g2,
                            std::span<const MarkedBinomial> basis, const BlockOrder& order) {
  const MarkedBinomial pair[] = {g1, g2};
  require_marked_by(pair, order);
  require_marked_by(basis, order);
  if (g1 == g2 || coprime(g1.lead, g2.lead)) return true;
  return reduce_polynomial(s_polynomial(g1, g2), basis, order).empty();
}

MarkedBinomial mark(const Binomial& b, const BlockOrder& order) {
  if (order.greater(b.plus, b.minus)) return {b.plus, b.minus};
  if (order.greater(b.minus, b.plus)) return {b.minus, b.plus};
  throw StructuralError("binomial with equal terms is zero");
}

std::vector<MarkedBinomial> reduced_groebner_basis(std::span<const Binomial> generators, const BlockOrder& order,
                                                   std::size_t budget, int max_degree) {
  std::vector<MarkedBinomial> basis;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto insert = [&](MarkedBinomial g) {
    if (basis.size() == budget)
      throw CapExceeded("Buchberger completion exceeds the budget of " + std::to_string(budget) + " elements");
    for (std::size_t i = 0; i < basis.size(); ++i) pairs.emplace_back(i, basis.size());
    basis.push_back(std::move(g));
  };

  // Generators in ascending degree, each reduced against what is known.
  std::vector<MarkedBinomial> marked;
  for (const auto& b : generators) marked.push_back(mark(b, order));
  std::stable_sort(marked.begin(), marked.end(),
                   [](const auto& a, const auto& b) { return a.lead.degree() < b.lead.degree(); });

  auto complete = [&] {
    while (!pairs.empty()) {
      auto [i, j] = pairs.back();
      pairs.pop_back();
      if (coprime(basis[i].lead, basis[j].lead)) continue;
      if (max_degree > 0 && lcm(basis[i].lead, basis[j].lead).degree() > max_degree) continue;
      auto rem = remainder_as_binomial(reduce_polynomial(s_polynomial(basis[i], basis[j]), basis, order));
      if (rem) insert(std::move(*rem));
    }
  };
  for (const auto& g : marked) {
    if (max_degree > 0 && g.lead.degree() > max_degree) continue;
    auto rem = remainder_as_binomial(reduce_polynomial({{g.lead, 1}, {g.trail, -1}}, basis, order));
    if (!rem) continue;
    insert(std::move(*rem));
    complete();
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<MarkedBinomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(basis[j].lead, basis[i].lead)) continue;
      redundant = basis[j].lead != basis[i].lead || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // interreduce trails
  for (auto& g : minimal) {
    auto nf = reduce(g.trail, minimal).normal_form;
    if (nf == g.lead) throw Falsification("interreduction collapsed a basis element");
    g.trail = std::move(nf);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const MarkedBinomial& a, const MarkedBinomial& b) { return order.greater(a.lead, b.lead); });
  return minimal;
}

}  // namespace sortkit
