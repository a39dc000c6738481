#include "sortkit/sorting.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sortkit {

namespace {

void require_common_ring(std::span<const Monomial> tuple) {
  for (const auto& u : tuple) require_same_ring(tuple.front(), u);
}

// Generous bound; the termination argument guarantees far fewer steps.
constexpr std::size_t kMaxSortSteps = 1'000'000;

}  // namespace

MonomialSet::MonomialSet(std::vector<Monomial> elements) : elements_(std::move(elements)) {
  for (const auto& u : elements_) require_same_ring(elements_.front(), u);
  std::sort(elements_.begin(), elements_.end(), std::greater<>());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool MonomialSet::contains(const Monomial& u) const { return index_of(u).has_value(); }

std::optional<std::size_t> MonomialSet::index_of(const Monomial& u) const {
  if (!empty()) require_same_ring(elements_.front(), u);
  auto it = std::lower_bound(elements_.begin(), elements_.end(), u, std::greater<>());
  if (it == elements_.end() || *it != u) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

Monomial product(std::span<const Monomial> tuple) {
  if (tuple.empty()) throw PreconditionError("product of an empty tuple");
  Monomial p = tuple.front();
  for (std::size_t i = 1; i < tuple.size(); ++i) p = mul(p, tuple[i]);
  return p;
}

std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  MonomialBuilder first(u.size()), second(u.size());
  std::int64_t emitted = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::int64_t e = static_cast<std::int64_t>(u[i]) + v[i];
    if (e == 0) continue;
    // positions emitted .. emitted+e-1; even (0-based) positions go first
    const std::int64_t to_first = (emitted % 2 == 0) ? (e + 1) / 2 : e / 2;
    if (to_first > 0) first.add(i, static_cast<Monomial::Exponent>(to_first));
    if (e - to_first > 0) second.add(i, static_cast<Monomial::Exponent>(e - to_first));
    emitted += e;
  }
  return {std::move(first).build(), std::move(second).build()};
}

bool is_sorted_pair(const Monomial& u, const Monomial& v) {
  auto [a, b] = sort_pair(u, v);
  return a == u && b == v;
}

SortedTuple sort_tuple(std::span<const Monomial> tuple) {
  if (tuple.empty()) throw PreconditionError("sort_tuple: empty tuple");
  require_common_ring(tuple);
  const std::size_t q = tuple.size();
  const auto nvars = tuple.front().size();
  const auto k = factor_sequence(product(tuple));
  const std::size_t m = k.size();
  if (m < q)
    throw PreconditionError("sort_tuple: degenerate input, total degree " + std::to_string(m) +
                            " is smaller than the tuple length " + std::to_string(q));
  // position p of the ascending factor list goes to entry p mod q
  std::vector<MonomialBuilder> entries(q, MonomialBuilder(nvars));
  for (std::size_t p = 0; p < m; ++p) entries[p % q].add(k[p]);
  SortedTuple out;
  out.entries.reserve(q);
  for (auto& b : entries) out.entries.push_back(std::move(b).build());
  out.d = static_cast<std::int64_t>(m / q);
  out.r = static_cast<std::int64_t>(m % q);
  return out;
}

bool is_sorted_tuple(std::span<const Monomial> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (!is_sorted_pair(tuple[i], tuple[j])) return false;
  return true;
}

Tuple single_sort_step(Tuple tuple, std::size_t i, std::size_t j) {
  if (i >= j || j >= tuple.size())
    throw PreconditionError("single_sort_step: need i < j < " + std::to_string(tuple.size()) +
                            ", got (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  auto [a, b] = sort_pair(tuple[i], tuple[j]);
  tuple[i] = std::move(a);
  tuple[j] = std::move(b);
  return tuple;
}

namespace {

std::optional<SortStep> choose_step(const Tuple& t) {
  const std::size_t q = t.size();
  std::vector<std::int64_t> deg(q);
  for (std::size_t i = 0; i < q; ++i) deg[i] = t[i].degree();
  auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
  if (*hi - *lo > 1) {
    // std::minmax_element returns the last maximum; take the first one
    auto s = static_cast<std::size_t>(lo - deg.begin());
    auto first_max = static_cast<std::size_t>(std::max_element(deg.begin(), deg.end()) - deg.begin());
    return SortStep{std::min(s, first_max), std::max(s, first_max)};
  }
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      if (deg[i] < deg[j]) return SortStep{i, j};
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      if (!is_sorted_pair(t[i], t[j])) return SortStep{i, j};
  return std::nullopt;
}

}  // namespace

Reduction reduce_to_sorted(std::span<const Monomial> tuple) {
  // validates the degenerate case up front
  auto expected = sort_tuple(tuple);
  Tuple current(tuple.begin(), tuple.end());
  Reduction out;
  while (auto step = choose_step(current)) {
    if (out.steps == kMaxSortSteps) throw Falsification("reduce_to_sorted: step limit reached");
    current = single_sort_step(std::move(current), step->i, step->j);
    out.trace.push_back(*step);
    ++out.steps;
  }
  if (current != expected.entries)
    throw Falsification("reduce_to_sorted: fixed point differs from the closed form");
  out.result = std::move(expected);
  return out;
}

std::int64_t potential_f(std::span<const Monomial> tuple) {
  std::int64_t f = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      auto diff = tuple[i].degree() - tuple[j].degree();
      f += diff < 0 ? -diff : diff;
    }
  return f;
}

bool in_balanced_class(std::span<const Monomial> tuple) {
  if (tuple.empty()) return false;
  const auto q = static_cast<std::int64_t>(tuple.size());
  std::int64_t m = 0;
  for (const auto& u : tuple) m += u.degree();
  const auto d = m / q, r = m % q;
  for (std::int64_t i = 0; i < q; ++i)
    if (tuple[static_cast<std::size_t>(i)].degree() != (i < r ? d + 1 : d)) return false;
  return true;
}

std::vector<std::size_t> interleaved_sequence(std::span<const Monomial> tuple) {
  if (!in_balanced_class(tuple))
    throw PreconditionError("potential_g: tuple is not in the balanced degree class");
  require_common_ring(tuple);
  const std::size_t q = tuple.size();
  std::vector<std::vector<std::size_t>> s(q);
  std::size_t columns = 0;
  for (std::size_t i = 0; i < q; ++i) {
    s[i] = factor_sequence(tuple[i]);
    columns = std::max(columns, s[i].size());
  }
  std::vector<std::size_t> k;
  for (std::size_t col = 0; col < columns; ++col)
    for (std::size_t i = 0; i < q; ++i)
      if (col < s[i].size()) k.push_back(s[i][col]);
  return k;
}

std::int64_t potential_g(std::span<const Monomial> tuple) {
  const auto k = interleaved_sequence(tuple);
  // sum_{a<b} (k_b - k_a) = sum_b k_b * (2b - (m - 1))
  const auto m = static_cast<std::int64_t>(k.size());
  std::int64_t g = 0;
  for (std::int64_t b = 0; b < m; ++b) g += static_cast<std::int64_t>(k[static_cast<std::size_t>(b)]) * (2 * b - (m - 1));
  return g;
}

SortabilityResult is_sortable_set(const MonomialSet& set) {
  const auto& el = set.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i; j < el.size(); ++j) {
      auto [a, b] = sort_pair(el[i], el[j]);
      if (!set.contains(a) || !set.contains(b)) return {false, std::make_pair(el[i], el[j])};
    }
  return {};
}

MonomialSet sortable_closure(const MonomialSet& set, std::size_t max_size) {
  std::set<Monomial, std::greater<>> elements(set.begin(), set.end());
  std::vector<Monomial> frontier(set.begin(), set.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    std::vector<Monomial> snapshot(elements.begin(), elements.end());
    for (const auto& u : frontier)
      for (const auto& v : snapshot) {
        auto [a, b] = sort_pair(u, v);
        for (auto* w : {&a, &b})
          if (elements.insert(*w).second) {
            if (elements.size() > max_size)
              throw CapExceeded("sortable closure exceeds " + std::to_string(max_size) + " elements");
            next.push_back(*w);
          }
      }
    frontier = std::move(next);
  }
  return MonomialSet(std::vector<Monomial>(elements.begin(), elements.end()));
}

}  // namespace sortkit
