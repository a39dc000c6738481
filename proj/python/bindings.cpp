#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <sstream>

#include "sortkit/cli.hpp"
#include "sortkit/errors.hpp"
#include "sortkit/graph.hpp"
#include "sortkit/json_io.hpp"
#include "sortkit/powers.hpp"
#include "sortkit/rees.hpp"
#include "sortkit/sorting.hpp"

namespace py = pybind11;
using namespace sortkit;
using nlohmann::json;

namespace {

using Edges = std::vector<std::pair<int, int>>;

VarSet ring_for(const std::vector<std::string>& monomials, const std::optional<std::vector<std::string>>& vars) {
  if (vars) return VarSet(*vars);
  std::vector<std::string> names;
  for (const auto& m : monomials)
    for (auto& n : mentioned_names(m)) names.push_back(std::move(n));
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return VarSet(natural_sort(std::move(names)));
}

std::vector<Monomial> parse_all(const std::vector<std::string>& ms, const VarSet& v) {
  std::vector<Monomial> out;
  for (const auto& m : ms) out.push_back(parse_monomial(m, v));
  return out;
}

std::vector<std::string> format_all(std::span<const Monomial> ms, const VarSet& v) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(format(m, v));
  return out;
}

std::vector<std::vector<int>> as_lists(const std::vector<VertexMask>& sets) {
  std::vector<std::vector<int>> out;
  for (auto s : sets) out.push_back(vertex_list(s));
  return out;
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sorting of monomials, vertex cover ideals and their Rees algebras.";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<Falsification>(m, "Falsification", base.ptr());

  m.def(
      "sort_pair",
      [](const std::string& u, const std::string& v, std::optional<std::vector<std::string>> vars) {
        const auto ring = ring_for({u, v}, vars);
        auto [a, b] = sort_pair(parse_monomial(u, ring), parse_monomial(v, ring));
        return std::make_pair(format(a, ring), format(b, ring));
      },
      py::arg("u"), py::arg("v"), py::arg("vars") = py::none());

  m.def(
      "sort_tuple",
      [](const std::vector<std::string>& tuple, std::optional<std::vector<std::string>> vars) {
        const auto ring = ring_for(tuple, vars);
        return format_all(sort_tuple(parse_all(tuple, ring)).entries, ring);
      },
      py::arg("tuple"), py::arg("vars") = py::none());

  m.def(
      "reduce_to_sorted",
      [](const std::vector<std::string>& tuple, std::optional<std::vector<std::string>> vars) {
        const auto ring = ring_for(tuple, vars);
        const auto r = reduce_to_sorted(parse_all(tuple, ring));
        std::vector<std::pair<std::size_t, std::size_t>> trace;
        for (const auto& s : r.trace) trace.emplace_back(s.i, s.j);
        return std::make_pair(format_all(r.result.entries, ring), trace);
      },
      py::arg("tuple"), py::arg("vars") = py::none(),
      "Sorted tuple and the (i, j) positions of each sorting step.");

  m.def(
      "is_sortable",
      [](const std::vector<std::string>& set, std::optional<std::vector<std::string>> vars)
          -> std::pair<bool, std::optional<std::pair<std::string, std::string>>> {
        const auto ring = ring_for(set, vars);
        const auto r = is_sortable_set(MonomialSet(parse_all(set, ring)));
        if (!r.witness) return {r.sortable, std::nullopt};
        return {r.sortable, std::make_pair(format(r.witness->first, ring), format(r.witness->second, ring))};
      },
      py::arg("set"), py::arg("vars") = py::none());

  m.def(
      "minimal_vertex_covers", [](int n, const Edges& edges) { return as_lists(minimal_vertex_covers(SimpleGraph(n, edges))); },
      py::arg("n"), py::arg("edges"));

  m.def(
      "cover_ideal",
      [](int n, const Edges& edges) {
        const SimpleGraph g(n, edges);
        return format_all(cover_ideal(g).elements(), g.names());
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "is_proper_interval_labeling", [](int n, const Edges& edges) { return is_proper_interval_labeling(SimpleGraph(n, edges)); },
      py::arg("n"), py::arg("edges"));

  m.def(
      "rees_verify",
      [](const std::string& graph, const std::string& spec, int degree) {
        const auto g = io::graph_from_json(json::parse(graph));
        auto s = io::spec_from_json(json::parse(spec));
        s.validate(g);
        auto j = io::rees_basis_to_json(verify_rees_basis(build_rees(g, s), degree));
        j["schema_version"] = cli::kSchemaVersion;
        return dump(j);
      },
      py::arg("graph"), py::arg("spec"), py::arg("degree") = 3, "Report as a JSON string.");

  m.def(
      "powers_certify",
      [](const std::string& graph, const std::string& spec, int kmax) {
        const auto g = io::graph_from_json(json::parse(graph));
        auto s = io::spec_from_json(json::parse(spec));
        s.validate(g);
        auto j = io::powers_to_json(certify_powers_linear_quotients(g, s, kmax));
        j["schema_version"] = cli::kSchemaVersion;
        return dump(j);
      },
      py::arg("graph"), py::arg("spec"), py::arg("kmax") = 3, "Report as a JSON string.");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a command-line invocation in-process: (exit code, stdout, stderr).");
}
