#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sortkit/graph.hpp"
#include "sortkit/powers.hpp"
#include "sortkit/rees.hpp"
#include "sortkit/toric.hpp"

namespace sortkit::io {

using nlohmann::json;

/// {"n": 3, "edges": [[1, 2], [2, 3]], "names": [...optional]}
SimpleGraph graph_from_json(const json& j);
json graph_to_json(const SimpleGraph& g);

/// {"blocks": [[1, 2, 3], [4]], "r": [2, 3]}
WhiskerSpec spec_from_json(const json& j);
json spec_to_json(const WhiskerSpec& spec);

/// Vertex set as a list of vertex names.
json vertex_names(const SimpleGraph& g, VertexMask set);

/// Monomials are exponent arrays against a "vars" list stored once per
/// document. Parsing also accepts text monomials.
json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const json& j, const VarSet& vars);
json monomials_to_json(std::span<const Monomial> ms);

/// {"lead": "...", "trail": "..."}
json binomial_to_json(const MarkedBinomial& b);
json binomials_to_json(std::span<const MarkedBinomial> bs);
std::vector<MarkedBinomial> binomials_from_json(const json& j, const VarSet& vars);

json rees_basis_to_json(const ReesBasisReport& r);

/// {"vars": [...], "certificates": [{k, status, generators, order, witnesses, ...}]}
json powers_to_json(const PowersReport& r);

struct CertificateEntry {
  int k = 0;
  std::string status;
  std::vector<Monomial> generators;
  std::vector<std::size_t> order;
  std::vector<ColonWitness> witnesses;
};

struct CertificateFile {
  VarSet vars;
  std::vector<CertificateEntry> entries;
};

CertificateFile certificate_from_json(const json& j);

/// Reads a file and parses it as JSON; ParseError on failure.
json read_json_file(const std::string& path);

}  // namespace sortkit::io
