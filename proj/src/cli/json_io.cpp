#include "sortkit/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace sortkit::io {

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

SimpleGraph graph_from_json(const json& j) {
  const int n = get_field<int>(j, "n");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : get_field<std::vector<std::vector<int>>>(j, "edges")) {
    if (e.size() != 2) throw ParseError("each edge must have two endpoints");
    edges.emplace_back(e[0], e[1]);
  }
  if (j.contains("names")) return SimpleGraph(n, edges, VarSet(get_field<std::vector<std::string>>(j, "names")));
  return SimpleGraph(n, edges);
}

json graph_to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"n", g.order()}, {"edges", edges}, {"names", g.names().names()}};
}

WhiskerSpec spec_from_json(const json& j) {
  WhiskerSpec spec;
  spec.partition.blocks = get_field<std::vector<std::vector<int>>>(j, "blocks");
  spec.multiplicities = get_field<std::vector<int>>(j, "r");
  return spec;
}

json spec_to_json(const WhiskerSpec& spec) { return {{"blocks", spec.partition.blocks}, {"r", spec.multiplicities}}; }

json vertex_names(const SimpleGraph& g, VertexMask set) {
  json out = json::array();
  for (int v : vertex_list(set)) out.push_back(g.names().name(static_cast<std::size_t>(v - 1)));
  return out;
}

json monomial_to_json(const Monomial& m) {
  return json(std::vector<Monomial::Exponent>(m.exponents().begin(), m.exponents().end()));
}

Monomial monomial_from_json(const json& j, const VarSet& vars) {
  if (j.is_string()) return parse_monomial(j.get<std::string>(), vars);
  if (!j.is_array()) throw ParseError("monomial must be an exponent array or a text monomial");
  std::vector<Monomial::Exponent> exps;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > INT32_MAX)
      throw ParseError("exponents must be nonnegative integers");
    exps.push_back(e.get<Monomial::Exponent>());
  }
  if (exps.size() != vars.size())
    throw ParseError("exponent array of length " + std::to_string(exps.size()) + " for " +
                     std::to_string(vars.size()) + " variables");
  return Monomial(std::move(exps));
}

json monomials_to_json(std::span<const Monomial> ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(monomial_to_json(m));
  return out;
}

json binomial_to_json(const MarkedBinomial& b) { return {{"lead", monomial_to_json(b.lead)}, {"trail", monomial_to_json(b.trail)}}; }

json binomials_to_json(std::span<const MarkedBinomial> bs) {
  json out = json::array();
  for (const auto& b : bs) out.push_back(binomial_to_json(b));
  return out;
}

std::vector<MarkedBinomial> binomials_from_json(const json& j, const VarSet& vars) {
  if (!j.is_array()) throw ParseError("binomial list must be an array");
  std::vector<MarkedBinomial> out;
  for (const auto& b : j) {
    auto lead = monomial_from_json(get_field<json>(b, "lead"), vars);
    auto trail = monomial_from_json(get_field<json>(b, "trail"), vars);
    if (lead == trail) throw ParseError("binomial with equal lead and trail");
    out.push_back({std::move(lead), std::move(trail)});
  }
  return out;
}

json rees_basis_to_json(const ReesBasisReport& r) {
  return {{"kernel_ok", r.kernel_ok},
          {"spairs_ok", r.spairs_ok},
          {"omega_ok", r.omega_ok},
          {"x_condition_ok", r.x_condition_ok},
          {"basis_size", r.basis_size},
          {"g_size", r.g_size},
          {"gprime_size", r.gprime_size},
          {"spairs_checked", r.spairs_checked},
          {"standard_monomials", r.standard_monomials},
          {"violations", r.violations}};
}

json powers_to_json(const PowersReport& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) {
    json witnesses = json::array();
    for (const auto& w : c.result.witnesses)
      witnesses.push_back({{"i", w.i}, {"j", w.j}, {"witness_l", w.witness_l}, {"variable", r.vars.name(w.variable)}});
    certs.push_back({{"k", c.k},
                     {"status", to_string(c.result.status)},
                     {"strategy", c.result.strategy},
                     {"standard_order_worked", c.standard_order_worked},
                     {"distinct_products", c.distinct_products},
                     {"generators", monomials_to_json(c.generators)},
                     {"order", c.result.order},
                     {"witnesses", witnesses},
                     {"replay_ok", c.replay.ok},
                     {"replay_message", c.replay.message}});
  }
  return {{"vars", r.vars.names()}, {"certificates", certs}};
}

CertificateFile certificate_from_json(const json& j) {
  CertificateFile f;
  f.vars = VarSet(get_field<std::vector<std::string>>(j, "vars"));
  for (const auto& c : get_field<json>(j, "certificates")) {
    CertificateEntry e;
    e.k = get_field<int>(c, "k");
    e.status = get_field<std::string>(c, "status");
    for (const auto& g : get_field<json>(c, "generators")) e.generators.push_back(monomial_from_json(g, f.vars));
    e.order = get_field<std::vector<std::size_t>>(c, "order");
    for (const auto& w : get_field<json>(c, "witnesses")) {
      ColonWitness cw;
      cw.i = get_field<std::size_t>(w, "i");
      cw.j = get_field<std::size_t>(w, "j");
      cw.witness_l = get_field<std::size_t>(w, "witness_l");
      cw.variable = f.vars.index_of(get_field<std::string>(w, "variable"));
      e.witnesses.push_back(cw);
    }
    f.entries.push_back(std::move(e));
  }
  return f;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace sortkit::io
