#pragma once

// Brute-force reference implementations. Each one follows the definition
// directly and shares no search code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sortkit/graph.hpp"
#include "sortkit/monomial.hpp"
#include "sortkit/toric.hpp"

namespace oracle {

using sortkit::Monomial;
using sortkit::SimpleGraph;
using sortkit::VertexMask;

inline Monomial mono(std::vector<int> e) { return Monomial(std::vector<Monomial::Exponent>(e.begin(), e.end())); }

inline Monomial times(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Odd/even split of the spelled-out factor list of uv.
inline std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v) {
  std::vector<std::size_t> factors;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (int k = 0; k < u[i] + v[i]; ++k) factors.push_back(i);
  std::vector<Monomial::Exponent> a(u.size(), 0), b(u.size(), 0);
  for (std::size_t p = 0; p < factors.size(); ++p) (p % 2 == 0 ? a : b)[factors[p]]++;
  return {Monomial(std::move(a)), Monomial(std::move(b))};
}

inline bool pairwise_sorted(const std::vector<Monomial>& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (oracle::sort_pair(t[i], t[j]) != std::make_pair(t[i], t[j])) return false;
  return true;
}

inline void for_each_divisor(const Monomial& m, const std::function<void(const Monomial&)>& fn) {
  std::vector<Monomial::Exponent> e(m.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m.size()) {
      fn(Monomial(e));
      return;
    }
    for (e[i] = 0; e[i] <= m[i]; ++e[i]) rec(i + 1);
    e[i] = 0;
  };
  rec(0);
}

// Every ordered q-tuple of monomials (unit entries allowed) with product p
// that is pairwise sorted. A sorted pair has degrees (e, e) or (e + 1, e),
// so only divisors of degree floor(m/q) or ceil(m/q) are tried.
inline std::vector<std::vector<Monomial>> sorted_tuples_with_product(const Monomial& p, std::size_t q) {
  std::vector<std::vector<Monomial>> out;
  std::vector<Monomial> cur;
  const auto lo = p.degree() / static_cast<std::int64_t>(q);
  const auto hi = lo + (p.degree() % static_cast<std::int64_t>(q) != 0 ? 1 : 0);
  std::function<void(const Monomial&)> rec = [&](const Monomial& rest) {
    if (cur.size() + 1 == q) {
      cur.push_back(rest);
      if (pairwise_sorted(cur)) out.push_back(cur);
      cur.pop_back();
      return;
    }
    for_each_divisor(rest, [&](const Monomial& d) {
      if (d.degree() < lo || d.degree() > hi) return;
      cur.push_back(d);
      bool ok = true;
      for (std::size_t i = 0; i + 1 < cur.size() && ok; ++i)
        ok = oracle::sort_pair(cur[i], d) == std::make_pair(cur[i], d);
      if (ok) {
        std::vector<Monomial::Exponent> r(rest.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = rest[i] - d[i];
        rec(Monomial(std::move(r)));
      }
      cur.pop_back();
    });
  };
  rec(p);
  return out;
}

inline bool is_cover(const SimpleGraph& g, VertexMask c) {
  for (auto [a, b] : g.edges())
    if (!(c >> (a - 1) & 1) && !(c >> (b - 1) & 1)) return false;
  return true;
}

inline std::set<VertexMask> all_covers(const SimpleGraph& g) {
  std::set<VertexMask> out;
  for (VertexMask c = 0; c < (VertexMask{1} << g.order()); ++c)
    if (is_cover(g, c)) out.insert(c);
  return out;
}

inline std::set<VertexMask> minimal_covers(const SimpleGraph& g) {
  std::set<VertexMask> out;
  for (VertexMask c : all_covers(g)) {
    bool minimal = true;
    for (int v = 0; v < g.order() && minimal; ++v)
      if (c >> v & 1) minimal = !is_cover(g, c & ~(VertexMask{1} << v));
    if (minimal) out.insert(c);
  }
  return out;
}

inline bool proper_interval(const SimpleGraph& g) {
  for (auto [a, b] : g.edges()) {
    const int lo = std::min(a, b), hi = std::max(a, b);
    for (int i = lo; i <= hi; ++i)
      for (int j = i + 1; j <= hi; ++j)
        if (!g.adjacent(i, j)) return false;
  }
  return true;
}

// Tries all n! relabelings.
inline bool has_proper_interval_labeling(const SimpleGraph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(b - 1)]);
    if (proper_interval(SimpleGraph(g.order(), edges))) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Multisets of size q (nondecreasing index lists) whose product is target.
inline std::vector<std::vector<std::size_t>> fiber(const std::vector<Monomial>& gens, std::size_t q, const Monomial& target) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(q, 0);
  if (gens.empty()) return out;
  while (true) {
    Monomial p(target.size());
    for (auto i : idx) p = times(p, gens[i]);
    if (p == target) out.push_back(idx);
    std::size_t pos = q;
    while (pos > 0 && idx[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < q; ++t) idx[t] = idx[pos - 1];
  }
  return out;
}

// Map from product to all q-multisets producing it.
inline std::map<Monomial, std::vector<std::vector<std::size_t>>> fibers(const std::vector<Monomial>& gens, std::size_t q) {
  std::map<Monomial, std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> idx(q, 0);
  while (true) {
    Monomial p(gens.front().size());
    for (auto i : idx) p = times(p, gens[i]);
    out[p].push_back(idx);
    std::size_t pos = q;
    while (pos > 0 && idx[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < q; ++t) idx[t] = idx[pos - 1];
  }
  return out;
}

inline Monomial y_of(const std::vector<std::size_t>& idx, std::size_t q) {
  std::vector<Monomial::Exponent> e(q, 0);
  for (auto i : idx) ++e[i];
  return Monomial(std::move(e));
}

// Truncated reduced lex Groebner basis of the toric ideal of gens through
// fibers: a monomial is standard iff it is the lex-least in its fiber; the
// leads are the minimal non-standard monomials and each trail is the
// least element of the lead's fiber.
inline std::vector<sortkit::MarkedBinomial> lex_basis_by_fibers(const std::vector<Monomial>& gens, int max_degree) {
  const std::size_t q = gens.size();
  std::vector<Monomial> nonstandard;
  std::map<Monomial, Monomial> least_of;
  for (int d = 2; d <= max_degree; ++d)
    for (const auto& [prod, members] : fibers(gens, static_cast<std::size_t>(d))) {
      std::vector<Monomial> ys;
      for (const auto& m : members) ys.push_back(y_of(m, q));
      // std::less on exponent vectors is lex with position 0 largest
      const Monomial least = *std::min_element(ys.begin(), ys.end());
      for (const auto& y : ys)
        if (y != least) {
          nonstandard.push_back(y);
          least_of.emplace(y, least);
        }
    }
  std::vector<sortkit::MarkedBinomial> out;
  for (const auto& m : nonstandard) {
    bool minimal = true;
    for (const auto& o : nonstandard)
      if (o != m && oracle::divides(o, m)) minimal = false;
    if (minimal) out.push_back({m, least_of.at(m)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lead > b.lead; });
  return out;
}

// All products of k generators, then drop anything divisible by another.
inline std::set<Monomial> minimal_power_gens(const std::vector<Monomial>& gens, int k) {
  std::set<Monomial> prods{Monomial(gens.front().size())};
  for (int s = 0; s < k; ++s) {
    std::set<Monomial> next;
    for (const auto& p : prods)
      for (const auto& g : gens) next.insert(times(p, g));
    prods = std::move(next);
  }
  std::set<Monomial> out;
  for (const auto& p : prods) {
    bool minimal = true;
    for (const auto& o : prods)
      if (o != p && oracle::divides(o, p)) minimal = false;
    if (minimal) out.insert(p);
  }
  return out;
}

// (h_1..h_{i-1}) : h_i is generated by the quotients h_j / gcd(h_j, h_i);
// linear quotients means its minimal generators all have degree one.
inline bool colon_linear(const std::vector<Monomial>& prefix, const Monomial& h) {
  std::vector<Monomial> qs;
  for (const auto& p : prefix) {
    std::vector<Monomial::Exponent> e(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) e[i] = std::max(0, p[i] - h[i]);
    qs.emplace_back(std::move(e));
  }
  for (const auto& a : qs) {
    bool minimal = true;
    for (const auto& b : qs)
      if (b != a && oracle::divides(b, a)) minimal = false;
    if (minimal && a.degree() != 1) return false;
  }
  return true;
}

inline bool order_has_linear_quotients(const std::vector<Monomial>& ordered) {
  for (std::size_t i = 1; i < ordered.size(); ++i)
    if (!colon_linear({ordered.begin(), ordered.begin() + static_cast<std::ptrdiff_t>(i)}, ordered[i])) return false;
  return true;
}

}  // namespace oracle
