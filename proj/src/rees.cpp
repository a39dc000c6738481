#include "sortkit/rees.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace sortkit {

std::size_t ReesPresentation::index_of_base_cover(VertexMask c) const {
  for (std::size_t l = 0; l < covers.size(); ++l)
    if (covers[l].base_cover == c) return l;
  throw StructuralError("vertex set is not a cover of the base graph");
}

std::size_t ReesPresentation::x_variable(int j) const {
  return base_variable(whiskered.base_vertex.at(static_cast<std::size_t>(j - 1)));
}

ToricPresentation ReesPresentation::fiber_ring() const {
  return make_toric_presentation(MonomialSet(cover_monomials), base_chain());
}

ReesPresentation build_rees(const SimpleGraph& g, const WhiskerSpec& spec, const Caps& caps) {
  ReesPresentation p;
  p.base_graph = g;
  p.spec = spec;
  p.whiskered = multi_whisker(g, spec);
  p.covers = whisker_minimal_covers(g, spec, p.whiskered, caps.cover_vertices);
  for (std::size_t l = 0; l < p.covers.size(); ++l) {
    p.cover_monomials.push_back(cover_monomial(p.whiskered.graph, p.covers[l].cover));
    if (l > 0 && !(p.cover_monomials[l - 1] > p.cover_monomials[l]))
      throw Falsification("whiskered covers are not strictly descending in lex");
  }
  const auto& chain = p.base_chain();
  const std::size_t nb = chain.size();
  p.map.ring = y_variables(p.q()).concat(chain);
  p.map.target = chain.concat(VarSet({"t"}));
  for (const auto& u : p.cover_monomials) {
    auto img = embed(u, 0, nb + 1);
    p.map.images.push_back(mul(img, Monomial::variable(nb + 1, nb)));
  }
  for (std::size_t v = 0; v < nb; ++v) p.map.images.push_back(Monomial::variable(nb + 1, v));
  return p;
}

BlockOrder block_order(const ReesPresentation& pres) { return BlockOrder(pres.q(), pres.base_count()); }

std::vector<MarkedBinomial> gprime_relations(const ReesPresentation& pres) {
  const std::size_t total = pres.map.ring.size();
  const auto order = block_order(pres);
  const auto& blocks = pres.spec.partition.blocks;
  std::vector<MarkedBinomial> out;
  for (std::size_t a = 0; a < pres.q(); ++a) {
    const VertexMask ca = pres.covers[a].base_cover;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (int xj : blocks[i]) {
        if (ca & vertex_bit(xj)) continue;
        const std::size_t b = pres.index_of_base_cover(ca | vertex_bit(xj));
        MonomialBuilder lead(total), trail(total);
        lead.add(pres.x_variable(xj));
        lead.add(a);
        for (int z : pres.whiskered.whisker_vertices[i]) trail.add(pres.base_variable(z));
        trail.add(b);
        auto f = make_marked(std::move(lead).build(), std::move(trail).build(), pres.map);
        if (!order.greater(f.lead, f.trail))
          throw Falsification("G' element is not led by x_j y_a under the block order");
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

std::vector<MarkedBinomial> g_relations(const ReesPresentation& pres, int degree, const Caps& caps) {
  const auto toric = pres.fiber_ring();
  const auto kernel = toric_kernel_up_to_degree(toric, degree, caps);
  const auto reduced = reduced_groebner_basis(kernel, BlockOrder::lex(pres.q()), caps.basis_budget, degree);
  const std::size_t total = pres.map.ring.size();
  std::vector<MarkedBinomial> out;
  out.reserve(reduced.size());
  for (const auto& g : reduced) out.push_back(make_marked(embed(g.lead, 0, total), embed(g.trail, 0, total), pres.map));
  return out;
}

XConditionResult x_condition_check(std::span<const MarkedBinomial> basis, std::size_t y_count) {
  XConditionResult out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& lead = basis[i].lead;
    const auto d = lead.degree(std::min(y_count, lead.size()), lead.size());
    if (d > 1) {
      out.holds = false;
      out.violations.push_back({i, d});
    }
  }
  return out;
}

namespace {

using SparseLead = std::vector<std::pair<std::size_t, Monomial::Exponent>>;

// Enumerates monomials of total degree <= max_degree avoiding every lead and
// reports the first pair with equal image.
void check_standard_injectivity(const ReesPresentation& pres, std::span<const MarkedBinomial> basis, int max_degree,
                                ReesBasisReport& report) {
  const std::size_t nvars = pres.map.ring.size();
  std::vector<SparseLead> leads;
  for (const auto& g : basis) {
    SparseLead s;
    for (std::size_t i = 0; i < g.lead.size(); ++i)
      if (g.lead[i] != 0) s.emplace_back(i, g.lead[i]);
    leads.push_back(std::move(s));
  }
  std::vector<Monomial::Exponent> exps(nvars, 0);
  auto divisible_by_lead_through = [&](std::size_t var) {
    for (const auto& s : leads) {
      bool involves = false, divides_it = true;
      for (auto [i, e] : s) {
        if (i == var) involves = true;
        if (exps[i] < e) {
          divides_it = false;
          break;
        }
      }
      if (divides_it && involves) return true;
    }
    return false;
  };
  std::unordered_map<Monomial, Monomial, MonomialHash> seen;
  bool failed = false;
  std::function<void(std::size_t, int)> walk = [&](std::size_t from, int budget) {
    Monomial w{std::vector<Monomial::Exponent>(exps)};
    ++report.standard_monomials;
    auto [it, fresh] = seen.emplace(pres.map.image(w), w);
    if (!fresh && !failed) {
      failed = true;
      report.omega_ok = false;
      report.violations.push_back("standard monomials " + format(it->second, pres.map.ring) + " and " +
                                  format(w, pres.map.ring) + " have the same image");
    }
    if (budget == 0) return;
    for (std::size_t v = from; v < nvars; ++v) {
      ++exps[v];
      if (!divisible_by_lead_through(v)) walk(v, budget - 1);
      --exps[v];
    }
  };
  walk(0, max_degree);
}

}  // namespace

ReesBasisReport verify_basis(const ReesPresentation& pres, std::span<const MarkedBinomial> basis, int degree) {
  ReesBasisReport report;
  report.basis_size = basis.size();
  const auto order = block_order(pres);

  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!image_balanced(basis[i], pres.map)) {
      report.kernel_ok = false;
      report.violations.push_back("element " + std::to_string(i) + " is not in the kernel");
    }

  bool marked = true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!order.greater(basis[i].lead, basis[i].trail)) {
      marked = false;
      report.spairs_ok = false;
      report.violations.push_back("element " + std::to_string(i) + " is mis-marked under the block order");
    }
  if (marked) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        // everything is y-homogeneous, so pairs past the degree bound only
        // involve basis elements beyond it
        if (lcm(basis[i].lead, basis[j].lead).degree(0, pres.q()) > degree) continue;
        ++report.spairs_checked;
        if (!s_pair_reduces_to_zero(basis[i], basis[j], basis, order)) {
          if (report.spairs_ok)
            report.violations.push_back("S-pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                        ") does not reduce to zero");
          report.spairs_ok = false;
        }
      }
  }

  check_standard_injectivity(pres, basis, degree, report);

  auto xc = x_condition_check(basis, pres.q());
  report.x_condition_ok = xc.holds;
  for (const auto& v : xc.violations)
    report.violations.push_back("lead of element " + std::to_string(v.index) + " has base degree " +
                                std::to_string(v.base_degree));
  return report;
}

ReesBasisReport verify_rees_basis(const ReesPresentation& pres, int degree, const Caps& caps,
                             std::optional<std::size_t> drop_gprime) {
  auto g = g_relations(pres, degree, caps);
  auto gp = gprime_relations(pres);
  if (drop_gprime) {
    if (*drop_gprime >= gp.size()) throw PreconditionError("drop index beyond the G' list");
    gp.erase(gp.begin() + static_cast<std::ptrdiff_t>(*drop_gprime));
  }
  std::vector<MarkedBinomial> basis = g;
  basis.insert(basis.end(), gp.begin(), gp.end());
  auto report = verify_basis(pres, basis, degree);
  report.g_size = g.size();
  report.gprime_size = gp.size();
  return report;
}

}  // namespace sortkit
