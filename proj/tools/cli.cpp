#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cozero/classify.hpp"
#include "cozero/error.hpp"
#include "cozero/finite_ring.hpp"
#include "cozero/harness.hpp"
#include "cozero/ideal.hpp"
#include "cozero/ring_graph.hpp"

namespace cozero {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string label_set(const FiniteRing& R, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Index x) {
    if (!first) out += ",";
    out += R.label(x);
    first = false;
  });
  return out + "}";
}

// "(g)" for the least single generator when the ideal is principal.
std::string ideal_text(const FiniteRing& R, const Ideal& I) {
  for (Index g = 0; g < R.order(); ++g)
    if (I.contains(g) && principal_ideal(R, g) == I) return "(" + R.label(g) + ")";
  return label_set(R, I.members());
}

json tri(const std::optional<bool>& b) { return b ? json(*b) : json("n/a"); }

json ext_json(const ExtendedNat& e) { return e.is_finite() ? json(e.value()) : json("inf"); }

int describe_ring(const std::string& spec, const std::string& format, std::ostream& out) {
  const auto R = build_ring(spec);
  const auto pred = ring_predicates(*R);
  if (format == "json") {
    json j;
    j["ring"] = R->name();
    j["order"] = R->order();
    j["labels"] = std::vector<std::string>(R->labels().begin(), R->labels().end());
    j["units"] = R->units().to_vector();
    j["zero_divisors"] = R->zero_divisors().to_vector();
    auto maxes = json::array();
    for (const auto& m : R->maximal_ideals()) maxes.push_back(m.members().to_vector());
    j["maximal_ideals"] = std::move(maxes);
    j["jacobson"] = R->jacobson_radical().members().to_vector();
    j["local"] = pred.is_local;
    j["field"] = pred.is_field;
    j["reduced"] = pred.is_reduced;
    j["zero_dimensional"] = pred.is_zero_dimensional;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "ring: " << R->name() << "\n";
  out << "order: " << R->order() << "\n";
  out << "units: " << label_set(*R, R->units()) << "\n";
  out << "zero-divisors: " << label_set(*R, R->zero_divisors()) << "\n";
  out << "Max = {";
  for (std::size_t i = 0; i < R->maximal_ideals().size(); ++i)
    out << (i ? "," : "") << ideal_text(*R, R->maximal_ideals()[i]);
  out << "}\n";
  out << "J(R) = " << label_set(*R, R->jacobson_radical().members()) << "\n";
  out << std::boolalpha << "local=" << pred.is_local << " field=" << pred.is_field
      << " reduced=" << pred.is_reduced << " zero-dimensional=" << pred.is_zero_dimensional << "\n";
  return 0;
}

int list_ideals(const std::string& spec, const std::string& format, std::ostream& out) {
  const auto R = build_ring(spec);
  const auto& ideals = R->all_ideals();
  if (format == "json") {
    auto arr = json::array();
    for (const auto& I : ideals) {
      json j;
      j["size"] = I.size();
      j["spec"] = ideal_spec_string(I);
      j["members"] = I.members().to_vector();
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
    return 0;
  }
  out << ideals.size() << " ideals\n";
  for (const auto& I : ideals)
    out << "  " << ideal_text(*R, I) << " size=" << I.size() << " " << label_set(*R, I.members()) << "\n";
  return 0;
}

int classify_ideal(const std::string& spec, const std::string& ideal_spec, const std::string& format,
                   std::ostream& out) {
  const auto R = build_ring(spec);
  const auto I = parse_ideal_spec(*R, ideal_spec);
  const auto rec = classify(*R, I);
  json j;
  j["ring"] = R->name();
  j["ideal"] = I.members().to_vector();
  j["w_set"] = rec.w_set.to_vector();
  j["ann"] = rec.ann.members().to_vector();
  j["second"] = tri(rec.is_second);
  j["secondary"] = tri(rec.is_secondary);
  j["secondal"] = tri(rec.is_secondal);
  j["secondal_prime"] = rec.secondal_prime ? json(rec.secondal_prime->members().to_vector()) : json(nullptr);
  j["s_set"] = rec.s_set ? json(rec.s_set->to_vector()) : json("n/a");
  j["primal"] = tri(rec.is_primal);
  j["prime"] = tri(rec.is_prime);
  j["radical"] = rec.is_radical;
  j["z_ideal_set"] = rec.z_ideal_set ? json(rec.z_ideal_set->to_vector()) : json("n/a");
  if (format == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << ": " << it.value().dump() << "\n";
  return 0;
}

struct GraphSelection {
  std::string ring;
  std::string ideal;
  std::string kind;
  bool minus_jacobson = false;
};

void add_selection(CLI::App* cmd, GraphSelection& sel) {
  cmd->add_option("--ring", sel.ring, "ring spec")->required();
  cmd->add_option("--ideal", sel.ideal, "ideal spec");
  cmd->add_option("--kind", sel.kind, "graph kind")
      ->required()
      ->check(CLI::IsMember({"zero", "zero-ideal", "cozero", "cozero-ideal"}));
  cmd->add_flag("--minus-jacobson", sel.minus_jacobson, "delete J(R) from the vertex set");
}

RingGraph select_graph(const GraphSelection& sel) {
  const bool needs_ideal = sel.kind == "zero-ideal" || sel.kind == "cozero-ideal";
  if (needs_ideal && sel.ideal.empty()) throw UsageError("--kind " + sel.kind + " requires --ideal");
  if (!needs_ideal && !sel.ideal.empty()) throw UsageError("--kind " + sel.kind + " takes no --ideal");
  const auto R = build_ring(sel.ring);
  std::optional<RingGraph> G;
  if (sel.kind == "zero") G = zero_divisor_graph(*R);
  else if (sel.kind == "cozero") G = cozero_divisor_graph(*R);
  else if (sel.kind == "zero-ideal") G = ideal_zero_divisor_graph(*R, parse_ideal_spec(*R, sel.ideal));
  else G = ideal_cozero_divisor_graph(*R, parse_ideal_spec(*R, sel.ideal));
  if (sel.minus_jacobson) G = remove_vertices(*G, R->jacobson_radical().members());
  return std::move(*G);
}

const std::vector<std::string> kMetricNames = {"connected", "diameter", "girth",    "clique_number",
                                               "chromatic_number", "bipartite", "complete_bipartite",
                                               "complete", "planar"};

int analyze_graph(const GraphSelection& sel, const std::vector<std::string>& metrics, std::ostream& out) {
  std::vector<std::string> wanted;
  for (const auto& m : metrics) {
    if (m == "all") {
      wanted = kMetricNames;
      break;
    }
    if (std::find(kMetricNames.begin(), kMetricNames.end(), m) == kMetricNames.end())
      throw UsageError("unknown metric '" + m + "'");
    if (std::find(wanted.begin(), wanted.end(), m) == wanted.end()) wanted.push_back(m);
  }
  if (wanted.empty()) wanted = kMetricNames;
  const auto G = select_graph(sel);
  const auto& g = G.graph();
  json j;
  j["kind"] = to_string(G.kind());
  j["ring_spec"] = G.ring_name();
  j["ideal_members"] = G.ideal() ? json(G.ideal()->members().to_vector()) : json(nullptr);
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  auto& m = j["metrics"];
  m = json::object();
  for (const auto& name : kMetricNames) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    try {
      if (name == "connected") m[name] = is_connected(g);
      else if (name == "diameter") m[name] = ext_json(diameter(g));
      else if (name == "girth") m[name] = ext_json(girth(g));
      else if (name == "clique_number") m[name] = clique_number(g);
      else if (name == "chromatic_number") m[name] = chromatic_number(g);
      else if (name == "bipartite") m[name] = partite_structure(g).bipartite;
      else if (name == "complete_bipartite") {
        const auto cb = partite_structure(g).complete_bipartite;
        m[name] = cb ? json::array({cb->first, cb->second}) : json(nullptr);
      } else if (name == "complete") m[name] = partite_structure(g).complete;
      else m[name] = is_planar(g);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::cap_exceeded) throw Error(ErrorKind::cap_exceeded, name + ": " + e.what());
      throw;
    }
  }
  out << j.dump(2) << "\n";
  return 0;
}

struct VerifyOptions {
  std::vector<std::string> families;
  std::size_t max_order = 36;
  std::size_t max_cyclic = 36;
  std::vector<std::string> checks = {"all"};
  std::vector<std::string> rings;
  std::size_t pair_cap = 64;
  bool no_full_quantifier = false;
};

int verify(const VerifyOptions& opt, std::ostream& out) {
  CorpusConfig config;
  config.max_order = opt.max_order;
  config.max_cyclic_n = opt.max_cyclic;
  config.pair_order_cap = opt.pair_cap;
  config.include_full_ideal_quantifier = !opt.no_full_quantifier;
  bool custom = false;
  for (const auto& f : opt.families) {
    if (f == "cyclic") config.cyclic = true;
    else if (f == "products") config.products = true;
    else if (f == "galois") config.galois = true;
    else if (f == "custom") custom = true;
    else throw UsageError("unknown family '" + f + "'");
  }
  if (custom && opt.rings.empty()) throw UsageError("family custom needs at least one --ring");
  for (const auto& r : opt.rings) config.custom.push_back(parse_ring_spec(r));
  validate(config);

  std::vector<std::string> ids;
  for (const auto& c : opt.checks) {
    if (c == "all") {
      const auto every = all_check_ids();
      ids.insert(ids.end(), every.begin(), every.end());
    } else {
      ids.push_back(c);
    }
  }
  const auto report = run_checks(generate_corpus(config), ids, config);
  out << to_json(report).dump(2) << "\n";
  return report.overall_pass ? 0 : 1;
}

int exit_code_for(const Error& e) { return e.kind() == ErrorKind::cap_exceeded ? 3 : 2; }

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ring-derived graphs over finite commutative rings", "cozero-cli"};
  app.require_subcommand(1);

  std::string ring_spec, ideal_spec, format;
  auto* ring_cmd = app.add_subcommand("ring", "ring queries")->require_subcommand(1);
  auto* describe = ring_cmd->add_subcommand("describe", "order, units, Max(R), J(R), predicates");
  describe->add_option("--ring", ring_spec, "ring spec")->required();
  describe->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* ideal_cmd = app.add_subcommand("ideal", "ideal queries")->require_subcommand(1);
  auto* list = ideal_cmd->add_subcommand("list", "every ideal of the ring");
  list->add_option("--ring", ring_spec, "ring spec")->required();
  list->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "classify one ideal");
  classify_cmd->add_option("--ring", ring_spec, "ring spec")->required();
  classify_cmd->add_option("--ideal", ideal_spec, "ideal spec")->required();
  classify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  GraphSelection sel;
  std::string graph_format = "dot";
  auto* graph_cmd = app.add_subcommand("graph", "emit a graph");
  add_selection(graph_cmd, sel);
  graph_cmd->add_option("--format", graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  std::vector<std::string> metrics = {"all"};
  auto* analyze_cmd = app.add_subcommand("analyze", "graph invariants as json");
  add_selection(analyze_cmd, sel);
  analyze_cmd->add_option("--metrics", metrics, "comma list or all")->delimiter(',');
  analyze_cmd->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "run the property checks over a corpus");
  verify_cmd->add_option("--families", vopt.families, "cyclic,products,galois,custom")
      ->required()
      ->delimiter(',');
  verify_cmd->add_option("--max-order", vopt.max_order, "largest product or field order");
  verify_cmd->add_option("--max-cyclic", vopt.max_cyclic, "largest n for Z_n");
  verify_cmd->add_option("--checks", vopt.checks, "C01,...,C30 or all")->delimiter(',');
  verify_cmd->add_option("--ring", vopt.rings, "extra ring spec (repeatable)");
  verify_cmd->add_option("--pair-order-cap", vopt.pair_cap, "largest ring order for ideal-pair checks");
  verify_cmd->add_flag("--no-full-ideal-quantifier", vopt.no_full_quantifier,
                       "skip the comultiplication hypothesis");
  verify_cmd->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream help_out, help_err;
      app.exit(e, help_out, help_err);
      out << help_out.str();
      return 0;
    }
    err << "error: usage: " << one_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (describe->parsed()) return describe_ring(ring_spec, format, out);
    if (list->parsed()) return list_ideals(ring_spec, format, out);
    if (classify_cmd->parsed()) return classify_ideal(ring_spec, ideal_spec, format, out);
    if (graph_cmd->parsed()) {
      out << emit_graph(select_graph(sel), graph_format == "json" ? GraphFormat::json : GraphFormat::dot);
      return 0;
    }
    if (analyze_cmd->parsed()) return analyze_graph(sel, metrics, out);
    if (verify_cmd->parsed()) return verify(vopt, out);
  } catch (const UsageError& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << one_line(e.what()) << "\n";
    return exit_code_for(e);
  }
  err << "error: usage: no command\n";
  return 2;
}

}  // namespace cozero
