#include "sortkit/powers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "sortkit/rees.hpp"

namespace sortkit {

GeneratorList power_min_gens(const MonomialSet& ideal, int k, const Caps& caps) {
  if (k < 1) throw PreconditionError("power_min_gens: k must be positive");
  if (k > caps.power_k)
    throw CapExceeded("power k = " + std::to_string(k) + " exceeds the cap of " + std::to_string(caps.power_k));
  if (ideal.size() > caps.generators)
    throw CapExceeded(std::to_string(ideal.size()) + " generators exceed the cap of " + std::to_string(caps.generators));
  if (ideal.empty()) return {};

  std::map<Monomial, std::vector<std::size_t>, std::greater<>> products;
  const std::size_t q = ideal.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    Monomial p = ideal[idx[0]];
    for (std::size_t t = 1; t < idx.size(); ++t) p = mul(p, ideal[idx[t]]);
    products.emplace(std::move(p), idx);
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == q - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < idx.size(); ++t) idx[t] = idx[pos - 1];
  }

  GeneratorList out;
  out.distinct_products = products.size();
  std::vector<Monomial> all;
  for (const auto& [m, rep] : products) all.push_back(m);
  for (auto& m : minimalize(std::move(all))) {
    out.representatives.push_back(products.at(m));
    out.gens.push_back(std::move(m));
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), std::greater<>());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = i != j && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

std::optional<std::vector<ColonWitness>> colon_witnesses(std::span<const Monomial> prefix, const Monomial& h) {
  const std::size_t i = prefix.size();
  std::vector<Monomial> quotients;
  quotients.reserve(i);
  // first position whose quotient is exactly that variable
  std::vector<std::ptrdiff_t> variable_at(h.size(), -1);
  for (std::size_t l = 0; l < i; ++l) {
    quotients.push_back(quotient(prefix[l], gcd(prefix[l], h)));
    auto v = quotients.back().as_variable();
    if (v >= 0 && variable_at[static_cast<std::size_t>(v)] < 0) variable_at[static_cast<std::size_t>(v)] = static_cast<std::ptrdiff_t>(l);
  }
  std::vector<ColonWitness> out;
  out.reserve(i);
  for (std::size_t j = 0; j < i; ++j) {
    bool witnessed = false;
    for (std::size_t v = 0; v < h.size() && !witnessed; ++v) {
      if (quotients[j][v] == 0 || variable_at[v] < 0) continue;
      out.push_back({i, j, static_cast<std::size_t>(variable_at[v]), v});
      witnessed = true;
    }
    if (!witnessed) return std::nullopt;
  }
  return out;
}

bool colon_is_variable_generated(std::span<const Monomial> prefix, const Monomial& h) {
  return colon_witnesses(prefix, h).has_value();
}

std::string to_string(LqStatus s) {
  switch (s) {
    case LqStatus::found:
      return "found";
    case LqStatus::absent:
      return "absent";
    case LqStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

std::optional<std::vector<ColonWitness>> try_order(std::span<const Monomial> gens, std::span<const std::size_t> order) {
  std::vector<Monomial> prefix;
  std::vector<ColonWitness> all;
  for (auto idx : order) {
    auto w = colon_witnesses(prefix, gens[idx]);
    if (!w) return std::nullopt;
    all.insert(all.end(), w->begin(), w->end());
    prefix.push_back(gens[idx]);
  }
  return all;
}

bool is_permutation_of_indices(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto i : order) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

}  // namespace

LqResult find_linear_quotients_order(std::span<const Monomial> gens, const Caps& caps,
                                     std::span<const std::vector<std::size_t>> suggested) {
  const std::size_t s = gens.size();
  LqResult out;
  for (const auto& order : suggested) {
    if (!is_permutation_of_indices(order, s)) throw PreconditionError("suggested order is not a permutation");
    if (auto w = try_order(gens, order)) {
      return {LqStatus::found, order, std::move(*w), "suggested"};
    }
  }

  std::vector<std::size_t> candidates(s);
  std::iota(candidates.begin(), candidates.end(), 0);
  std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    if (gens[a].degree() != gens[b].degree()) return gens[a].degree() < gens[b].degree();
    return gens[a] > gens[b];
  });

  if (s <= caps.lq_greedy) {
    std::vector<std::size_t> order;
    std::vector<Monomial> prefix;
    std::vector<bool> used(s, false);
    std::vector<ColonWitness> witnesses;
    while (order.size() < s) {
      bool extended = false;
      for (auto c : candidates) {
        if (used[c]) continue;
        auto w = colon_witnesses(prefix, gens[c]);
        if (!w) continue;
        used[c] = true;
        order.push_back(c);
        prefix.push_back(gens[c]);
        witnesses.insert(witnesses.end(), w->begin(), w->end());
        extended = true;
        break;
      }
      if (!extended) break;
    }
    if (order.size() == s) return {LqStatus::found, std::move(order), std::move(witnesses), "greedy"};
  }

  if (s <= caps.lq_exhaustive) {
    std::vector<std::size_t> order;
    std::vector<Monomial> prefix;
    std::vector<bool> used(s, false);
    std::function<bool()> search = [&]() {
      if (order.size() == s) return true;
      for (auto c : candidates) {
        if (used[c] || !colon_is_variable_generated(prefix, gens[c])) continue;
        used[c] = true;
        order.push_back(c);
        prefix.push_back(gens[c]);
        if (search()) return true;
        prefix.pop_back();
        order.pop_back();
        used[c] = false;
      }
      return false;
    };
    if (search()) {
      auto w = try_order(gens, order);
      return {LqStatus::found, std::move(order), std::move(*w), "exhaustive"};
    }
    return {LqStatus::absent, {}, {}, ""};
  }
  return out;
}

ReplayResult replay_certificate(std::span<const Monomial> gens, std::span<const std::size_t> order,
                                std::span<const ColonWitness> witnesses) {
  const std::size_t s = gens.size();
  if (!is_permutation_of_indices(order, s)) return {false, "order is not a permutation of the generators"};
  // covered[i][j]: pair (i, j) has a valid witness
  std::vector<std::vector<bool>> covered(s);
  for (std::size_t i = 0; i < s; ++i) covered[i].assign(i, false);
  for (const auto& w : witnesses) {
    const std::string where = "witness (" + std::to_string(w.i) + ", " + std::to_string(w.j) + ")";
    if (w.i >= s || w.j >= w.i || w.witness_l >= w.i) return {false, where + " has out-of-range positions"};
    const auto& hi = gens[order[w.i]];
    if (w.variable >= hi.size()) return {false, where + " names an unknown variable"};
    const auto ql = quotient(gens[order[w.witness_l]], gcd(gens[order[w.witness_l]], hi));
    if (ql.as_variable() != static_cast<std::ptrdiff_t>(w.variable))
      return {false, where + ": quotient of position " + std::to_string(w.witness_l) + " is not the stated variable"};
    const auto qj = quotient(gens[order[w.j]], gcd(gens[order[w.j]], hi));
    if (qj[w.variable] == 0) return {false, where + ": variable does not divide the quotient of position j"};
    covered[w.i][w.j] = true;
  }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!covered[i][j])
        return {false, "pair (" + std::to_string(i) + ", " + std::to_string(j) + ") has no witness"};
  return {};
}

bool PowersReport::falsified() const {
  return std::any_of(certificates.begin(), certificates.end(), [](const PowerCertificate& c) {
    return c.result.status == LqStatus::absent || (c.result.status == LqStatus::found && !c.replay.ok);
  });
}

bool PowersReport::inconclusive() const {
  return std::any_of(certificates.begin(), certificates.end(),
                     [](const PowerCertificate& c) { return c.result.status == LqStatus::inconclusive; });
}

PowersReport certify_powers_linear_quotients(const SimpleGraph& g, const WhiskerSpec& spec, int kmax,
                                             const Caps& caps) {
  if (kmax < 1) throw PreconditionError("kmax must be positive");
  if (kmax > caps.power_k)
    throw CapExceeded("kmax = " + std::to_string(kmax) + " exceeds the cap of " + std::to_string(caps.power_k));
  const auto pres = build_rees(g, spec, caps);
  const MonomialSet ideal(pres.cover_monomials);

  // Standard y-representatives come from the y-only basis, which is all
  // that can divide a pure y-monomial.
  const int gb_degree = std::min(std::max(kmax, 2), caps.kernel_degree);
  const auto basis = g_relations(pres, gb_degree, caps);
  const auto order = block_order(pres);
  const std::size_t total = pres.map.ring.size();

  PowersReport report{pres.base_chain(), {}};
  for (int k = 1; k <= kmax; ++k) {
    PowerCertificate cert;
    cert.k = k;
    auto gl = power_min_gens(ideal, k, caps);
    cert.generators = gl.gens;
    cert.distinct_products = gl.distinct_products;

    std::vector<Monomial> standard;
    for (const auto& rep : gl.representatives) {
      MonomialBuilder b(total);
      for (auto i : rep) b.add(i);
      standard.push_back(reduce(std::move(b).build(), basis).normal_form);
    }
    std::vector<std::size_t> ascending(gl.gens.size());
    std::iota(ascending.begin(), ascending.end(), 0);
    std::stable_sort(ascending.begin(), ascending.end(),
                     [&](std::size_t a, std::size_t b) { return order.greater(standard[b], standard[a]); });
    std::vector<std::size_t> descending(ascending.rbegin(), ascending.rend());
    const std::vector<std::vector<std::size_t>> suggested{descending, ascending};

    cert.result = find_linear_quotients_order(cert.generators, caps, suggested);
    cert.standard_order_worked = cert.result.strategy == "suggested";
    if (cert.result.status == LqStatus::found)
      cert.replay = replay_certificate(cert.generators, cert.result.order, cert.result.witnesses);
    report.certificates.push_back(std::move(cert));
  }
  return report;
}

}  // namespace sortkit
