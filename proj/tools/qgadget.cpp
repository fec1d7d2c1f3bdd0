// qgadget: quadratize, embed and solve pseudo-Boolean polynomials.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qgadget/anneal.hpp"
#include "qgadget/dot.hpp"
#include "qgadget/embed.hpp"
#include "qgadget/error.hpp"
#include "qgadget/gadget.hpp"
#include "qgadget/hardware.hpp"
#include "qgadget/patterns.hpp"
#include "qgadget/pipeline.hpp"
#include "qgadget/quadratize.hpp"
#include "qgadget/report.hpp"
#include "qgadget/serialize.hpp"
#include "qgadget/synth.hpp"

using namespace qgadget;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::string format = "text";
  bool json = false;
  std::string patterns_path;
  PatternStore store;

  bool want_json() const { return json || format == "json"; }
  bool want_dot() const { return format == "dot" && !json; }
  const PatternStore& patterns() const {
    return patterns_path.empty() ? default_patterns() : store;
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HostGraph make_host(const std::string& family, int m, int n, int t) {
  if (family == "chimera") return chimera(m, n < 0 ? m : n, t);
  if (family == "pegasus") return pegasus(m);
  throw Error("unknown hardware family '" + family + "' (expected chimera or pegasus)");
}

int sign_of(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1" || s == "pos") return 1;
  if (s == "-" || s == "-1" || s == "neg") return -1;
  throw Error("sign must be + or -");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratization gadgets, hardware embedding and annealing for pseudo-Boolean "
               "polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed for annealing")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_flag("--json", g.json, "Shorthand for --format json");
  app.add_option("--patterns", g.patterns_path,
                 "Pattern store for K6-4e/K6-e (default: the one built into the library)");

  // quadratize
  auto* quad = app.add_subcommand("quadratize", "Replace cubic and quartic terms with gadgets");
  std::string quad_input = "-", quad_hw = "chimera";
  bool quad_verify = false;
  quad->add_option("input", quad_input, "Polynomial file, or - for stdin")->capture_default_str();
  quad->add_option("--hardware", quad_hw, "Target hardware")
      ->check(CLI::IsMember({"chimera", "pegasus"}))
      ->capture_default_str();
  quad->add_flag("--verify", quad_verify, "Check the result by enumeration");

  // gadgets
  auto* gad = app.add_subcommand("gadgets", "List, verify and recommend registry gadgets");
  std::string gad_show, gad_graph, gad_hw = "chimera", gad_sign = "+";
  int gad_degree = 0;
  bool gad_catalog = false;
  gad->add_option("--show", gad_show, "Print one registry gadget (name)");
  gad->add_option("--sign", gad_sign, "Term sign for --show/--recommend")->capture_default_str();
  gad->add_option("--degree", gad_degree, "Term degree for --show/--recommend (3 or 4)");
  gad->add_option("--graph", gad_graph, "Print one catalog graph (use --format dot for DOT)");
  gad->add_flag("--catalog", gad_catalog, "List the catalog graphs and their aux accounting");
  auto* gad_rec = gad->add_flag("--recommend", "Recommend a gadget for --sign/--degree");
  gad->add_option("--hardware", gad_hw, "Hardware for --recommend")
      ->check(CLI::IsMember({"chimera", "pegasus"}))
      ->capture_default_str();

  // synth
  auto* syn = app.add_subcommand("synth", "Synthesize gadgets on a template graph");
  std::string syn_graph, syn_sign = "+", syn_method = "certificate", syn_resolve, syn_store;
  Coeff syn_bound = 4;
  bool syn_allow_zero = false;
  syn->add_option("--graph", syn_graph, "Catalog graph to use as the template");
  syn->add_option("--sign", syn_sign, "Target sign")->capture_default_str();
  syn->add_option("--bound", syn_bound, "Coefficient bound C")->capture_default_str();
  syn->add_option("--method", syn_method, "Search method")
      ->check(CLI::IsMember({"certificate", "grid"}))
      ->capture_default_str();
  syn->add_flag("--allow-zero-edges", syn_allow_zero, "Allow zero coefficients on template edges");
  syn->add_option("--resolve", syn_resolve, "Resolve the K6-4e or K6-e pattern")
      ->check(CLI::IsMember({"K6-4e", "K6-e"}));
  syn->add_option("--store", syn_store, "Pattern store to update with --resolve")
      ->capture_default_str();

  // hardware
  auto* hw = app.add_subcommand("hardware", "Generate Chimera or Pegasus graphs");
  std::string hw_family = "chimera";
  int hw_m = 1, hw_n = -1, hw_t = 4;
  std::vector<int> hw_cell;
  hw->add_option("--family", hw_family, "chimera or pegasus")
      ->check(CLI::IsMember({"chimera", "pegasus"}))
      ->capture_default_str();
  hw->add_option("--m", hw_m, "Rows (Chimera) or size (Pegasus)")->capture_default_str();
  hw->add_option("--n", hw_n, "Columns (Chimera; default m)");
  hw->add_option("--t", hw_t, "Shore size (Chimera)")->capture_default_str();
  auto* hw_cell_flag = hw->add_flag("--cell", "Only the unit cell (Chimera cell 0,0 or the Pegasus K4 cell)");

  // embed
  auto* emb = app.add_subcommand("embed", "Minor-embed a catalog graph into hardware");
  std::string emb_graph, emb_family = "chimera";
  int emb_m = 1, emb_n = -1, emb_t = 4, emb_max_aux = -1, emb_max_chain = 2;
  std::uint64_t emb_budget = 50'000'000;
  bool emb_first = false;
  emb->add_option("graph", emb_graph, "Catalog graph name")->required();
  emb->add_option("--family", emb_family, "chimera or pegasus")
      ->check(CLI::IsMember({"chimera", "pegasus"}))
      ->capture_default_str();
  emb->add_option("--m", emb_m, "Rows (Chimera) or size (Pegasus)")->capture_default_str();
  emb->add_option("--n", emb_n, "Columns (Chimera; default m)");
  emb->add_option("--t", emb_t, "Shore size (Chimera)")->capture_default_str();
  emb->add_option("--max-aux", emb_max_aux, "Aux budget (default: all free host qubits)");
  emb->add_option("--max-chain", emb_max_chain, "Maximum chain length")->capture_default_str();
  emb->add_option("--node-budget", emb_budget, "Search node cutoff")->capture_default_str();
  emb->add_flag("--first", emb_first, "Return the first embedding within --max-aux, not the minimum");

  // solve
  auto* sol = app.add_subcommand("solve", "Quadratize, embed, and minimize a polynomial");
  std::string sol_input = "-", sol_hw = "pegasus";
  bool sol_exact = false, sol_sa = false;
  std::uint64_t sol_sweeps = 1000;
  int sol_restarts = 8, sol_max_chain = 3;
  Coeff sol_chain_strength = 0;
  sol->add_option("input", sol_input, "Polynomial file, or - for stdin")->capture_default_str();
  sol->add_option("--hardware", sol_hw, "Target hardware")
      ->check(CLI::IsMember({"chimera", "pegasus"}))
      ->capture_default_str();
  auto* sol_exact_flag = sol->add_flag("--exact", sol_exact, "Exhaustive solver (default)");
  sol->add_flag("--sa", sol_sa, "Simulated annealing")->excludes(sol_exact_flag);
  sol->add_option("--sweeps", sol_sweeps, "Annealing sweeps")->capture_default_str();
  sol->add_option("--restarts", sol_restarts, "Annealing restarts")->capture_default_str();
  sol->add_option("--chain-strength", sol_chain_strength,
                  "Chain penalty (default 1 + sum of |coefficients|)");
  sol->add_option("--max-chain", sol_max_chain, "Maximum chain length")->capture_default_str();
  auto* sol_qubo_flag = sol->add_flag("--qubo", "Print the embedded QUBO instead of solving");

  // tables
  auto* tab = app.add_subcommand("tables", "Recompute the aux-qubit tables for all catalog graphs");
  bool tab_context = false;
  tab->add_flag("--context", tab_context, "Also print the RSA-230 figures (cited, not computed)");

  // factor-demo
  auto* fac = app.add_subcommand("factor-demo", "Factor 15, 21 or 35 through the full pipeline");
  int fac_n = 15;
  fac->add_option("n", fac_n, "Semiprime to factor")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!g.patterns_path.empty()) g.store = PatternStore::load(g.patterns_path);
    std::ostream& out = std::cout;

    if (quad->parsed()) {
      Polynomial p = parse_pbf(read_input(quad_input));
      auto r = quadratize(p, QuadratizePolicy{parse_hardware(quad_hw)}, g.patterns());
      if (quad_verify && !verify_quadratization(p, r)) throw Error("quadratization failed verification");
      if (g.want_json()) {
        out << quadratization_json(r);
      } else {
        out << r.quadratic.to_string();
        out << "# aux " << r.ledger.total_aux << ", expected total with embedding "
            << r.ledger.expected_total_aux << '\n';
        for (const auto& rec : r.ledger.records) {
          std::string mono;
          for (const auto& v : rec.monomial) mono += (mono.empty() ? "" : " ") + v;
          out << "# " << rec.coefficient << " : " << mono << " -> " << rec.gadget << " ("
              << rec.catalog_graph << ", aux";
          for (const auto& a : rec.aux) out << ' ' << a;
          out << ")\n";
        }
      }
      return 0;
    }

    if (gad->parsed()) {
      if (!gad_graph.empty()) {
        GadgetGraph gg = catalog_graph(gad_graph, g.patterns());
        if (g.want_dot()) {
          out << export_dot(gg);
        } else {
          out << gg.name << ": logical";
          for (const auto& v : gg.logical) out << ' ' << v;
          out << "; aux";
          for (const auto& v : gg.aux) out << ' ' << v;
          out << "\n";
          for (const auto& [a, b] : gg.edges) out << a << ' ' << b << '\n';
        }
        return 0;
      }
      if (*gad_rec) {
        auto rec = recommend(sign_of(gad_sign), gad_degree, parse_hardware(gad_hw));
        out << rec.gadget << " on " << rec.catalog_graph << ": quadratization aux "
            << rec.quadratization_aux << ", expected total " << rec.expected_total_aux << '\n';
        return 0;
      }
      if (!gad_show.empty()) {
        // Degree defaults to the only registry entry with this name, if unique.
        if (gad_degree == 0) {
          int matches = 0;
          for (const auto& e : registry_entries()) {
            if (e.name == gad_show) {
              gad_degree = e.degree;
              ++matches;
            }
          }
          if (matches > 1) throw Error("gadgets --show " + gad_show + ": pass --degree");
        }
        Gadget gd = builtin_gadget(gad_show, sign_of(gad_sign), gad_degree, g.patterns());
        if (g.want_json()) out << gadget_json(gd);
        else out << gd.quadratic.to_string() << "# exact: " << (verify_gadget(gd) ? "yes" : "no") << '\n';
        return 0;
      }
      if (gad_catalog) {
        out << std::left << std::setw(12) << "graph" << "deg quad chimera(emb/total) pegasus(emb/total)\n";
        for (const auto& a : catalog_accounting()) {
          out << std::left << std::setw(12) << a.graph << a.degree << "   " << a.quadratization_aux
              << "    " << a.chimera_embedding_aux << "/" << a.chimera_total_aux << "               "
              << a.pegasus_embedding_aux << "/" << a.pegasus_total_aux << '\n';
        }
        return 0;
      }
      auto entries = registry_entries(g.patterns());
      if (g.want_json()) {
        out << registry_json(entries);
        return 0;
      }
      bool all_exact = true;
      for (const auto& e : entries) {
        const bool ok = verify_gadget(builtin_gadget(e.name, e.sign, e.degree, g.patterns()));
        all_exact = all_exact && ok;
        out << std::left << std::setw(16) << e.name << (e.sign > 0 ? "+" : "-") << e.degree << "  "
            << std::setw(12) << (e.catalog_graph.empty() ? "-" : e.catalog_graph)
            << (ok ? "exact" : "NOT EXACT") << "  " << e.formula << '\n';
      }
      return all_exact ? 0 : 1;
    }

    if (syn->parsed()) {
      if (!syn_resolve.empty()) {
        const int removed = syn_resolve == "K6-4e" ? 4 : 1;
        ResolveOptions opts;
        opts.coeff_bound = syn_bound;
        std::vector<ResolvedCandidate> tried;
        ResolvedPattern pat = resolve_catalog_pattern(removed, sign_of(syn_sign), opts, &tried);
        const std::string path = syn_store.empty() ? "catalog_patterns.json" : syn_store;
        PatternStore store;
        if (std::ifstream(path)) store = PatternStore::load(path);
        store.put(pat);
        store.save(path);
        out << pat.graph_name << ": removed";
        for (const auto& [a, b] : pat.removed_edges) out << ' ' << a << '-' << b;
        out << " (" << tried.size() << " candidates tried); saved to " << path << '\n'
            << pat.quadratic.to_string();
        return 0;
      }
      if (syn_graph.empty()) throw Error("synth: give --graph or --resolve");
      GadgetGraph tg = catalog_graph(syn_graph, g.patterns());
      SynthesisProblem prob{standard_target(sign_of(syn_sign), static_cast<int>(tg.logical.size())),
                            tg, syn_bound, !syn_allow_zero};
      auto r = synthesize(prob, syn_method == "grid" ? SynthesisMethod::grid : SynthesisMethod::certificate);
      if (g.want_json()) {
        out << synthesis_json(r);
      } else if (r.gadget) {
        out << r.gadget->quadratic.to_string();
      } else {
        out << "infeasible: no gadget on " << syn_graph << " with coefficients in [-" << syn_bound
            << ", " << syn_bound << "]\n";
      }
      return 0;
    }

    if (hw->parsed()) {
      HostGraph host = make_host(hw_family, hw_m, hw_n, hw_t);
      if (*hw_cell_flag) {
        host = hw_family == "chimera" ? chimera_cell(host, 0, 0).graph : pegasus_cell(host).graph;
      }
      if (g.want_json()) out << host_json(host);
      else if (g.want_dot()) out << export_dot(host);
      else out << export_edge_list(host);
      return 0;
    }

    if (emb->parsed()) {
      GadgetGraph guest = catalog_graph(emb_graph, g.patterns());
      HostGraph host = make_host(emb_family, emb_m, emb_n, emb_t);
      EmbedLimits limits;
      limits.max_chain_len = emb_max_chain;
      limits.node_budget = emb_budget;
      limits.max_aux = emb_max_aux >= 0 ? emb_max_aux
                                        : static_cast<int>(host.size()) - static_cast<int>(guest.vertex_count());
      std::optional<Embedding> e;
      if (emb_first) {
        auto r = embed_search(guest, host, limits);
        if (r.status == EmbedStatus::budget_exhausted) throw Error("embed: node budget exhausted");
        e = r.embedding;
        if (!e) {
          out << "none: no embedding with at most " << limits.max_aux << " aux and chains of length at most "
              << limits.max_chain_len << '\n';
          return 0;
        }
      } else {
        auto r = min_aux(guest, host, limits);
        if (!r.complete) throw Error("embed: " + r.report);
        if (g.want_json()) {
          out << min_aux_json(r, host);
          return 0;
        }
        if (!r.embedding) {
          out << "none: " << r.report << '\n';
          return 0;
        }
        e = r.embedding;
      }
      if (g.want_json()) out << embedding_json(*e, host);
      else if (g.want_dot()) out << export_dot(host, &*e, &guest);
      else out << "# " << guest.name << " -> " << host.name() << ", aux " << e->aux_count() << '\n'
               << embedding_text(*e, host);
      return 0;
    }

    if (sol->parsed()) {
      Polynomial p = parse_pbf(read_input(sol_input));
      PipelineOptions opts;
      opts.hardware = parse_hardware(sol_hw);
      opts.max_chain_len = sol_max_chain;
      opts.solver = sol_sa ? Solver::sa : Solver::exact;
      opts.schedule.sweeps = sol_sweeps;
      opts.schedule.seed = g.seed;
      opts.restarts = sol_restarts;
      if (sol_chain_strength > 0) opts.chain_strength = sol_chain_strength;
      auto r = run_pipeline(p, opts);
      const HostGraph host = default_host(opts.hardware);
      if (*sol_qubo_flag) {
        if (g.want_json()) {
          out << qubo_json(r.qubo, host);
        } else {
          out << "offset " << r.qubo.offset << '\n';
          for (const auto& [v, c] : r.qubo.linear) out << c << " : " << host.label(v) << '\n';
          for (const auto& [uv, c] : r.qubo.quadratic)
            out << c << " : " << host.label(uv.first) << ' ' << host.label(uv.second) << '\n';
        }
        return 0;
      }
      if (g.want_json()) {
        out << solve_json(r.solve, r.unembedded, host);
      } else {
        out << "value " << r.value << "\n";
        for (const auto& [v, b] : r.assignment) out << v << " = " << b << '\n';
        out << "# qubo energy " << r.solve.energy << ", host qubits " << r.embedding.host_vertex_count()
            << ", broken chains " << r.unembedded.broken_chains << '\n';
      }
      return 0;
    }

    if (tab->parsed()) {
      TablesOptions opts;
      opts.patterns = &g.patterns();
      auto report = run_tables_report(opts);
      if (g.want_json()) out << tables_json(report, tab_context);
      else out << format_tables(report, tab_context);
      return report.ok() ? 0 : 1;
    }

    if (fac->parsed()) {
      auto r = run_factor_demo(fac_n);
      if (g.want_json()) out << factor_json(r);
      else out << r.n << " = " << r.p << " x " << r.q << "  (" << r.logical_variables
               << " logical variables, " << r.quadratized_variables << " after quadratization, "
               << r.host_qubits << " qubits)\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "qgadget: parse error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "qgadget: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
