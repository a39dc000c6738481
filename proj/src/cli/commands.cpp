#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "sortkit/cli.hpp"
#include "sortkit/json_io.hpp"
#include "sortkit/powers.hpp"
#include "sortkit/rees.hpp"
#include "sortkit/sorting.hpp"
#include "sortkit/toric.hpp"

namespace sortkit::cli {

using nlohmann::json;

namespace {

// Thrown by a command to end with a given exit code after its report is out.
struct Verdict {
  int code;
};

class Context {
 public:
  Context(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  RunConfig config;
  std::string caps_arg;
  std::string vars_arg;

  std::ostream& err() { return err_; }

  bool text() const { return config.format == "text"; }

  // Writes the report. With --out, the report goes to the file and stdout
  // gets nothing.
  void emit(json report) {
    report["schema_version"] = kSchemaVersion;
    write(report.dump(2) + "\n");
  }

  void emit_text(const std::string& text) { write(text); }

  void emit_line(const json& j) { write(j.dump() + "\n"); }

  void flush() {
    if (config.out.empty()) {
      out_ << buffer_.str();
      return;
    }
    std::ofstream f(config.out, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + config.out + "'");
    f << buffer_.str();
  }

 private:
  void write(const std::string& s) { buffer_ << s; }

  std::ostream& out_;
  std::ostream& err_;
  std::ostringstream buffer_;
};

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// --vars if given, otherwise every name mentioned, in natural order.
VarSet resolve_vars(const Context& ctx, const std::vector<std::string>& texts) {
  if (!ctx.vars_arg.empty()) return VarSet(split_names(ctx.vars_arg));
  std::set<std::string> names;
  for (const auto& t : texts)
    for (auto& n : mentioned_names(t)) names.insert(std::move(n));
  if (names.empty()) throw ParseError("no variables mentioned; pass --vars");
  return VarSet(natural_sort({names.begin(), names.end()}));
}

std::vector<Monomial> parse_all(const std::vector<std::string>& texts, const VarSet& vars) {
  std::vector<Monomial> out;
  for (const auto& t : texts) out.push_back(parse_monomial(t, vars));
  return out;
}

json text_list(std::span<const Monomial> ms, const VarSet& vars) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(format(m, vars));
  return out;
}

std::string tuple_text(std::span<const Monomial> ms, const VarSet& vars) {
  std::string s = "(";
  for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? ", " : "") + format(ms[i], vars);
  return s + ")";
}

json load_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return io::read_json_file(arg.substr(1));
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("inline JSON: ") + e.what());
    }
  }
  return io::read_json_file(arg);
}

SimpleGraph load_graph(const std::string& arg) { return io::graph_from_json(load_json_arg(arg)); }

WhiskerSpec load_spec(const std::string& arg, const SimpleGraph& g) {
  auto spec = io::spec_from_json(load_json_arg(arg));
  spec.validate(g);
  return spec;
}

// Monomial input shared by check-sortable and relations: either positional
// monomials or the cover ideal of --graph.
struct SetInput {
  std::vector<std::string> monomials;
  std::string graph;

  std::pair<MonomialSet, VarSet> load(const Context& ctx) const {
    if (!graph.empty()) {
      if (!monomials.empty()) throw ParseError("give monomials or --graph, not both");
      auto g = load_graph(graph);
      return {cover_ideal(g), g.names()};
    }
    if (monomials.empty()) throw ParseError("no monomials given");
    auto vars = resolve_vars(ctx, monomials);
    return {MonomialSet(parse_all(monomials, vars)), vars};
  }
};

json covers_json(const SimpleGraph& g, const std::vector<VertexMask>& covers) {
  json out = json::array();
  for (auto c : covers) out.push_back(io::vertex_names(g, c));
  return out;
}

void add_set_options(CLI::App* sub, SetInput& in) {
  sub->add_option("monomials", in.monomials, "Monomials in text form");
  sub->add_option("--graph", in.graph, "Graph JSON (file, @file or inline); uses its cover ideal");
}

struct Options {
  std::string u, v;
  std::vector<std::string> tuple;
  bool trace = false;
  SetInput set;
  std::string graph, spec;
  bool all = false;
  bool find = false;
  std::string rules;
  std::string monomial;
  int random_orders = 0;
  std::string basis;
  int degree = 3;
  std::optional<std::size_t> drop_gprime;
  std::optional<std::size_t> corrupt_gprime;
  int kmax = 3;
  std::string cert;
  int n = 6;
  double density = 0.5;
};

void cmd_sort_pair(Context& ctx, const Options& o) {
  auto vars = resolve_vars(ctx, {o.u, o.v});
  auto u = parse_monomial(o.u, vars), v = parse_monomial(o.v, vars);
  auto [a, b] = sort_pair(u, v);
  if (ctx.text()) {
    ctx.emit_text("(" + format(a, vars) + ", " + format(b, vars) + ")\n");
    return;
  }
  ctx.emit({{"vars", vars.names()},
            {"input", {format(u, vars), format(v, vars)}},
            {"sorted", {format(a, vars), format(b, vars)}},
            {"was_sorted", is_sorted_pair(u, v)}});
}

void cmd_sort_tuple(Context& ctx, const Options& o) {
  auto vars = resolve_vars(ctx, o.tuple);
  auto t = parse_all(o.tuple, vars);
  const auto red = reduce_to_sorted(t);
  if (o.trace) {
    Tuple cur = t;
    auto line = [&](std::size_t step, const json& pair) {
      json g = in_balanced_class(cur) ? json(potential_g(cur)) : json(nullptr);
      ctx.emit_line({{"step", step}, {"pair", pair}, {"tuple", text_list(cur, vars)}, {"f", potential_f(cur)}, {"g", g}});
    };
    line(0, nullptr);
    for (std::size_t s = 0; s < red.trace.size(); ++s) {
      cur = single_sort_step(std::move(cur), red.trace[s].i, red.trace[s].j);
      line(s + 1, {red.trace[s].i, red.trace[s].j});
    }
    return;
  }
  if (ctx.text()) {
    ctx.emit_text(tuple_text(red.result.entries, vars) + "\n");
    return;
  }
  ctx.emit({{"vars", vars.names()},
            {"input", text_list(t, vars)},
            {"sorted", text_list(red.result.entries, vars)},
            {"d", red.result.d},
            {"r", red.result.r},
            {"steps", red.steps}});
}

void cmd_check_sortable(Context& ctx, const Options& o) {
  auto [set, vars] = o.set.load(ctx);
  const auto res = is_sortable_set(set);
  if (ctx.text()) {
    if (res.sortable)
      ctx.emit_text("sortable (" + std::to_string(set.size()) + " monomials)\n");
    else
      ctx.emit_text("not sortable: " + tuple_text(std::vector{res.witness->first, res.witness->second}, vars) + "\n");
  } else {
    json witness = nullptr;
    if (res.witness) witness = {format(res.witness->first, vars), format(res.witness->second, vars)};
    ctx.emit({{"vars", vars.names()},
              {"size", set.size()},
              {"sortable", res.sortable},
              {"witness", witness}});
  }
  if (!res.sortable) throw Verdict{kFalsified};
}

void cmd_covers(Context& ctx, const Options& o) {
  const auto g = load_graph(o.graph);
  const auto covers = o.all ? all_vertex_covers(g, ctx.config.caps.cover_vertices) : minimal_vertex_covers(g);
  if (ctx.text()) {
    std::string s;
    for (auto c : covers) {
      std::string line;
      for (const auto& name : io::vertex_names(g, c)) line += (line.empty() ? "" : " ") + name.get<std::string>();
      s += "{" + line + "}\n";
    }
    ctx.emit_text(s);
    return;
  }
  ctx.emit({{"kind", o.all ? "all" : "minimal"}, {"count", covers.size()}, {"covers", covers_json(g, covers)}});
}

void cmd_cover_ideal(Context& ctx, const Options& o) {
  const auto g = load_graph(o.graph);
  const auto ideal = cover_ideal(g);
  if (ctx.text()) {
    std::string s;
    for (const auto& m : ideal) s += format(m, g.names()) + "\n";
    ctx.emit_text(s);
    return;
  }
  ctx.emit({{"vars", g.names().names()},
            {"generators", io::monomials_to_json(ideal.elements())},
            {"generators_text", text_list(ideal.elements(), g.names())}});
}

void cmd_check_proper_interval(Context& ctx, const Options& o) {
  const auto g = load_graph(o.graph);
  const bool labeled = is_proper_interval_labeling(g);
  json report{{"labeling_ok", labeled}};
  bool pass = labeled;
  if (o.find) {
    auto perm = find_proper_interval_labeling(g, ctx.config.caps.labeling_vertices);
    report["relabeling"] = perm ? json(*perm) : json(nullptr);
    pass = perm.has_value();
  }
  if (ctx.text()) {
    std::string s = labeled ? "labeling is proper interval\n" : "labeling is not proper interval\n";
    if (o.find) {
      if (auto p = report["relabeling"]; p.is_null()) {
        s += "no proper interval labeling exists\n";
      } else {
        s += "relabeling:";
        for (int v : p.get<std::vector<int>>()) s += " " + std::to_string(v);
        s += "\n";
      }
    }
    ctx.emit_text(s);
  } else {
    ctx.emit(report);
  }
  if (!pass) throw Verdict{kFalsified};
}

void cmd_whisker(Context& ctx, const Options& o) {
  const auto g = load_graph(o.graph);
  const auto spec = load_spec(o.spec, g);
  const auto w = multi_whisker(g, spec);
  const auto covers = whisker_minimal_covers(g, spec, w, ctx.config.caps.cover_vertices);
  json cover_list = json::array();
  for (const auto& c : covers)
    cover_list.push_back({{"base_cover", io::vertex_names(g, c.base_cover)},
                          {"cover", io::vertex_names(w.graph, c.cover)},
                          {"monomial", format(cover_monomial(w.graph, c.cover), w.graph.names())}});
  ctx.emit({{"graph", io::graph_to_json(w.graph)}, {"spec", io::spec_to_json(spec)}, {"covers", cover_list}});
}

void cmd_relations(Context& ctx, const Options& o) {
  auto [set, vars] = o.set.load(ctx);
  const auto pres = make_toric_presentation(set, vars);
  const auto rels = sorting_relations(pres);
  ctx.emit({{"vars", pres.map.ring.names()},
            {"generators", text_list(set.elements(), vars)},
            {"base", vars.names()},
            {"binomials", io::binomials_to_json(rels)}});
}

// {"vars": [...], "binomials": [...]} as written by `relations`.
std::pair<VarSet, std::vector<MarkedBinomial>> load_binomial_file(const std::string& arg) {
  const auto j = load_json_arg(arg);
  if (!j.is_object() || !j.contains("vars") || !j.contains("binomials"))
    throw ParseError("binomial file needs 'vars' and 'binomials'");
  VarSet vars(j.at("vars").get<std::vector<std::string>>());
  auto bs = io::binomials_from_json(j.at("binomials"), vars);
  return {std::move(vars), std::move(bs)};
}

void cmd_reduce(Context& ctx, const Options& o) {
  auto [vars, rules] = load_binomial_file(o.rules);
  const auto mon = parse_monomial(o.monomial, vars);
  const auto res = reduce(mon, rules);
  std::vector<std::size_t> random_steps;
  if (o.random_orders > 0) {
    std::mt19937_64 rng(ctx.config.seed);
    for (int i = 0; i < o.random_orders; ++i) {
      auto r = reduce(mon, rules, &rng);
      if (r.normal_form != res.normal_form)
        throw Falsification("random rewrite order reached " + format(r.normal_form, vars) + " instead of " +
                            format(res.normal_form, vars));
      random_steps.push_back(r.steps);
    }
  }
  if (ctx.text()) {
    ctx.emit_text(format(res.normal_form, vars) + "\n");
    return;
  }
  ctx.emit({{"vars", vars.names()},
            {"input", format(mon, vars)},
            {"normal_form", format(res.normal_form, vars)},
            {"steps", res.steps},
            {"random_orders", o.random_orders},
            {"random_steps", random_steps}});
}

// Checks markings and S-pairs under lex, or under the block order when the
// file carries "y_count".
void cmd_verify_gb(Context& ctx, const Options& o) {
  const auto j = load_json_arg(o.basis);
  auto [vars, basis] = load_binomial_file(o.basis);
  std::size_t y_count = 0;
  if (j.contains("y_count")) y_count = j.at("y_count").get<std::size_t>();
  if (y_count > vars.size()) throw ParseError("y_count exceeds the number of variables");
  const BlockOrder order(y_count, vars.size() - y_count);
  std::vector<std::string> violations;
  bool marked = true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!order.greater(basis[i].lead, basis[i].trail)) {
      marked = false;
      violations.push_back("element " + std::to_string(i) + " is mis-marked");
    }
  std::size_t checked = 0;
  bool spairs = marked;
  if (marked)
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        ++checked;
        if (!s_pair_reduces_to_zero(basis[a], basis[b], basis, order)) {
          spairs = false;
          violations.push_back("S-pair (" + std::to_string(a) + ", " + std::to_string(b) + ") does not reduce to zero");
        }
      }
  ctx.emit({{"marked_ok", marked},
            {"spairs_ok", spairs},
            {"spairs_checked", checked},
            {"basis_size", basis.size()},
            {"violations", violations}});
  if (!spairs) throw Verdict{kFalsified};
}

void cmd_rees_verify(Context& ctx, const Options& o) {
  const auto g = load_graph(o.graph);
  const auto spec = load_spec(o.spec, g);
  const auto& caps = ctx.config.caps;
  if (o.degree < 2) throw PreconditionError("--degree must be at least 2");
  if (o.degree > caps.kernel_degree)
    throw CapExceeded("degree " + std::to_string(o.degree) + " exceeds kernel_degree cap " +
                      std::to_string(caps.kernel_degree));
  const auto pres = build_rees(g, spec, caps);
  ReesBasisReport report;
  if (o.corrupt_gprime) {
    auto gs = g_relations(pres, o.degree, caps);
    auto gp = gprime_relations(pres);
    if (*o.corrupt_gprime >= gp.size()) throw PreconditionError("--corrupt-gprime index beyond the G' list");
    // swap in the next cover's y-variable on the trail side
    auto& f = gp[*o.corrupt_gprime];
    const auto yb = static_cast<std::size_t>(
        std::find_if(f.trail.exponents().begin(), f.trail.exponents().begin() + pres.q(), [](auto e) { return e; }) -
        f.trail.exponents().begin());
    MonomialBuilder t(f.trail.size());
    for (std::size_t i = 0; i < f.trail.size(); ++i)
      if (i != yb && f.trail[i]) t.add(i, f.trail[i]);
    t.add((yb + 1) % pres.q());
    f.trail = std::move(t).build();
    std::vector<MarkedBinomial> basis = gs;
    basis.insert(basis.end(), gp.begin(), gp.end());
    report = verify_basis(pres, basis, o.degree);
    report.g_size = gs.size();
    report.gprime_size = gp.size();
  } else {
    report = verify_rees_basis(pres, o.degree, caps, o.drop_gprime);
  }
  auto j = io::rees_basis_to_json(report);
  j["degree"] = o.degree;
  j["q"] = pres.q();
  j["vars"] = pres.map.ring.names();
  ctx.emit(j);
  if (!report.ok()) throw Verdict{kFalsified};
}

void cmd_powers_certify(Context& ctx, const Options& o) {
  const auto g = load_graph(o.graph);
  const auto spec = load_spec(o.spec, g);
  const auto report = certify_powers_linear_quotients(g, spec, o.kmax, ctx.config.caps);
  auto j = io::powers_to_json(report);
  j["kmax"] = o.kmax;
  ctx.emit(j);
  if (report.falsified()) throw Verdict{kFalsified};
  if (report.inconclusive()) throw Verdict{kInconclusive};
}

void cmd_replay_cert(Context& ctx, const Options& o) {
  const auto file = io::certificate_from_json(load_json_arg(o.cert));
  json results = json::array();
  bool all_ok = !file.entries.empty();
  for (const auto& e : file.entries) {
    ReplayResult r;
    if (e.status != "found")
      r = {false, "status is '" + e.status + "'"};
    else if (minimalize(e.generators).size() != e.generators.size())
      r = {false, "generators are not minimal"};
    else
      r = replay_certificate(e.generators, e.order, e.witnesses);
    all_ok = all_ok && r.ok;
    results.push_back({{"k", e.k}, {"ok", r.ok}, {"message", r.message}});
  }
  if (ctx.text()) {
    std::string s;
    for (const auto& r : results)
      s += "k=" + std::to_string(r["k"].get<int>()) + ": " + (r["ok"].get<bool>() ? "ok" : r["message"].get<std::string>()) +
           "\n";
    ctx.emit_text(s);
  } else {
    ctx.emit({{"ok", all_ok}, {"entries", results}});
  }
  if (!all_ok) throw Verdict{kFalsified};
}

void cmd_gen_pig(Context& ctx, const Options& o) {
  const auto g = generate_proper_interval(o.n, o.density, ctx.config.seed, ctx.config.caps.generator_vertices);
  if (!is_proper_interval_labeling(g)) throw Falsification("generated graph fails the proper interval check");
  auto j = io::graph_to_json(g);
  j["seed"] = ctx.config.seed;
  j["density"] = o.density;
  ctx.emit(j);
}

int code_for(const std::exception& e) {
  if (dynamic_cast<const Falsification*>(&e)) return kFalsified;
  if (dynamic_cast<const CapExceeded*>(&e)) return kInconclusive;
  return kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx(out, err);
  Options o;
  CLI::App app{"Sortable monomial sets, toric relations and cover ideals of whiskered graphs", "sortkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", ctx.config.seed, "Seed for generated instances and random rewrite orders");
  app.add_option("--caps", ctx.caps_arg, "Cap overrides as inline JSON or @file");
  app.add_option("--out", ctx.config.out, "Write the report to this file");
  app.add_option("--format", ctx.config.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--vars", ctx.vars_arg, "Variable order, comma separated (default: names in natural order)");

  std::function<void(Context&, const Options&)> action;
  auto sub = [&](const char* name, const char* help, void (*fn)(Context&, const Options&)) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  auto* sp = sub("sort-pair", "Sort a pair of monomials", cmd_sort_pair);
  sp->add_option("u", o.u)->required();
  sp->add_option("v", o.v)->required();

  auto* st = sub("sort-tuple", "Sorted form of a tuple", cmd_sort_tuple);
  st->add_option("monomials", o.tuple)->required();
  st->add_flag("--trace", o.trace, "Emit every sorting step with both potentials as JSON lines");

  add_set_options(sub("check-sortable", "Check that a monomial set is closed under sorting", cmd_check_sortable), o.set);

  auto* cv = sub("covers", "Minimal vertex covers", cmd_covers);
  cv->add_option("--graph", o.graph)->required();
  cv->add_flag("--all", o.all, "List all vertex covers");

  sub("cover-ideal", "Generators of the cover ideal", cmd_cover_ideal)->add_option("--graph", o.graph)->required();

  auto* pi = sub("check-proper-interval", "Check the labeling, or search for one with --find", cmd_check_proper_interval);
  pi->add_option("--graph", o.graph)->required();
  pi->add_flag("--find", o.find, "Search for a proper interval relabeling");

  auto* wh = sub("whisker", "Clique multi-whiskered graph and its minimal covers", cmd_whisker);
  wh->add_option("--graph", o.graph)->required();
  wh->add_option("--spec", o.spec)->required();

  add_set_options(sub("relations", "Sorting relations of a sortable set", cmd_relations), o.set);

  auto* rd = sub("reduce", "Normal form modulo marked binomials", cmd_reduce);
  rd->add_option("--rules", o.rules, "Binomial file as written by relations")->required();
  rd->add_option("monomial", o.monomial)->required();
  rd->add_option("--random", o.random_orders, "Also reduce along this many seeded random rule orders");

  sub("verify-gb", "Check markings and S-pair reductions of a binomial list", cmd_verify_gb)
      ->add_option("--basis", o.basis)
      ->required();

  auto* rv = sub("rees-verify", "Verify the Rees Groebner basis and the x-condition", cmd_rees_verify);
  rv->add_option("--graph", o.graph)->required();
  rv->add_option("--spec", o.spec)->required();
  rv->add_option("--degree", o.degree, "Degree bound for kernel generation and standard monomials")->capture_default_str();
  auto* drop = rv->add_option("--drop-gprime", o.drop_gprime, "Omit one G' element (falsification harness)");
  rv->add_option("--corrupt-gprime", o.corrupt_gprime, "Alter one G' element (falsification harness)")->excludes(drop);

  auto* pc = sub("powers-certify", "Linear-quotient certificates for powers of the cover ideal", cmd_powers_certify);
  pc->add_option("--graph", o.graph)->required();
  pc->add_option("--spec", o.spec)->required();
  pc->add_option("--kmax", o.kmax)->capture_default_str();

  sub("replay-cert", "Re-check a certificate file", cmd_replay_cert)->add_option("--cert", o.cert)->required();

  auto* gp = sub("gen-pig", "Random proper-interval-labeled graph", cmd_gen_pig);
  gp->add_option("--n", o.n)->capture_default_str();
  gp->add_option("--density", o.density)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    Caps caps = caps_from_env();
    if (!ctx.caps_arg.empty()) caps = caps_from_json(load_json_arg(ctx.caps_arg), caps);
    ctx.config.caps = caps;
    int code = kPass;
    try {
      action(ctx, o);
    } catch (const Verdict& v) {
      code = v.code;
    }
    ctx.flush();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return code_for(e);
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace sortkit::cli
