#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgadget/anneal.hpp"
#include "qgadget/dot.hpp"
#include "qgadget/embed.hpp"
#include "qgadget/gadget.hpp"
#include "qgadget/hardware.hpp"
#include "qgadget/pipeline.hpp"
#include "qgadget/quadratize.hpp"
#include "qgadget/report.hpp"
#include "qgadget/synth.hpp"

namespace py = pybind11;
using namespace qgadget;

namespace {

Hardware hardware_arg(const std::string& s) { return parse_hardware(s); }

GadgetGraph graph_arg(const py::object& g) {
  if (py::isinstance<py::str>(g)) return catalog_graph(g.cast<std::string>());
  return g.cast<GadgetGraph>();
}

py::dict chains_dict(const Embedding& e, const HostGraph& host) {
  py::dict out;
  for (const auto& [v, chain] : e.chains) {
    py::list labels;
    for (int h : chain) labels.append(host.label(h));
    out[py::str(v)] = labels;
  }
  return out;
}

py::list terms_list(const Polynomial& p) {
  py::list out;
  for (const auto& [m, c] : p.terms()) out.append(py::make_tuple(m, c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quadratization gadgets, hardware embedding and annealing";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<>())
      .def_static("parse", &parse_pbf, py::arg("text"))
      .def("add_term", &Polynomial::add_term, py::arg("vars"), py::arg("coeff"))
      .def("evaluate", &Polynomial::evaluate, py::arg("assignment"))
      .def("restrict", &Polynomial::restrict, py::arg("partial"))
      .def("variables", &Polynomial::variables)
      .def("degree", &Polynomial::degree)
      .def("terms", &terms_list)
      .def("is_zero", &Polynomial::is_zero)
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) {
        return "<Polynomial " + std::to_string(p.terms().size()) + " terms>";
      });

  py::class_<GadgetGraph>(m, "GadgetGraph")
      .def(py::init<std::string, std::vector<Var>, std::vector<Var>>(), py::arg("name"),
           py::arg("logical"), py::arg("aux"))
      .def_readonly("name", &GadgetGraph::name)
      .def_readonly("logical", &GadgetGraph::logical)
      .def_readonly("aux", &GadgetGraph::aux)
      .def_property_readonly("edges",
                             [](const GadgetGraph& g) {
                               return std::vector<GadgetGraph::Edge>(g.edges.begin(), g.edges.end());
                             })
      .def("add_edge", &GadgetGraph::add_edge)
      .def("to_dot", [](const GadgetGraph& g) { return export_dot(g); });

  m.def("catalog_names", &catalog_names);
  m.def("catalog_graph", [](const std::string& name) { return catalog_graph(name); },
        py::arg("name"));
  m.def("classify_graph", [](const GadgetGraph& g) { return classify_graph(g); }, py::arg("graph"));

  py::class_<Gadget>(m, "Gadget")
      .def_property_readonly("coefficient", [](const Gadget& g) { return g.target.coefficient; })
      .def_property_readonly("logical", [](const Gadget& g) { return g.target.vars; })
      .def_readonly("aux", &Gadget::aux)
      .def_readonly("quadratic", &Gadget::quadratic)
      .def_readonly("provenance", &Gadget::provenance)
      .def("verify", [](const Gadget& g) { return verify_gadget(g); })
      .def("graph", [](const Gadget& g) { return extract_graph(g); })
      .def("scaled", &Gadget::scaled, py::arg("factor"));

  m.def("builtin_gadget",
        [](const std::string& name, int sign, int degree) {
          return builtin_gadget(name, sign, degree);
        },
        py::arg("name"), py::arg("sign"), py::arg("degree"));
  m.def("registry", [] {
    py::list out;
    for (const auto& e : registry_entries()) {
      py::dict d;
      d["name"] = e.name;
      d["sign"] = e.sign;
      d["degree"] = e.degree;
      d["graph"] = e.catalog_graph;
      d["formula"] = e.formula;
      out.append(d);
    }
    return out;
  });
  m.def(
      "recommend",
      [](int sign, int degree, const std::string& hw) {
        auto r = recommend(sign, degree, hardware_arg(hw));
        py::dict d;
        d["gadget"] = r.gadget;
        d["graph"] = r.catalog_graph;
        d["quadratization_aux"] = r.quadratization_aux;
        d["total_aux"] = r.expected_total_aux;
        return d;
      },
      py::arg("sign"), py::arg("degree"), py::arg("hardware") = "chimera");

  m.def(
      "quadratize",
      [](const Polynomial& p, const std::string& hw) {
        auto r = quadratize(p, QuadratizePolicy{hardware_arg(hw)});
        py::list records;
        for (const auto& rec : r.ledger.records) {
          py::dict d;
          d["monomial"] = rec.monomial;
          d["coefficient"] = rec.coefficient;
          d["gadget"] = rec.gadget;
          d["graph"] = rec.catalog_graph;
          d["aux"] = rec.aux;
          records.append(d);
        }
        return py::make_tuple(r.quadratic, records);
      },
      py::arg("poly"), py::arg("hardware") = "chimera");

  m.def(
      "synthesize",
      [](int sign, const py::object& graph, Coeff bound, const std::string& method) {
        GadgetGraph g = graph_arg(graph);
        SynthesisProblem prob{standard_target(sign, static_cast<int>(g.logical.size())), g, bound,
                              true};
        auto r = synthesize(prob, method == "grid" ? SynthesisMethod::grid
                                                   : SynthesisMethod::certificate);
        return r.gadget;
      },
      py::arg("sign"), py::arg("graph"), py::arg("bound") = 4, py::arg("method") = "certificate");

  py::class_<HostGraph>(m, "HostGraph")
      .def_property_readonly("name", &HostGraph::name)
      .def("__len__", &HostGraph::size)
      .def_property_readonly("edge_count", &HostGraph::edge_count)
      .def_property_readonly("edges", &HostGraph::edges)
      .def_property_readonly("labels", &HostGraph::labels)
      .def("max_degree", &HostGraph::max_degree)
      .def("is_bipartite", [](const HostGraph& g) { return is_bipartite(g); })
      .def("find_k4", [](const HostGraph& g) { return find_k4(g); })
      .def("to_dot", [](const HostGraph& g) { return export_dot(g); });

  m.def("chimera", &chimera, py::arg("m"), py::arg("n"), py::arg("t") = 4);
  m.def("pegasus", &pegasus, py::arg("m"));

  m.def(
      "min_aux",
      [](const py::object& graph, const HostGraph& host, int max_aux, int max_chain,
         std::uint64_t node_budget) {
        GadgetGraph g = graph_arg(graph);
        EmbedLimits limits{max_aux, max_chain, node_budget};
        MinAuxResult r;
        {
          py::gil_scoped_release release;
          r = min_aux(g, host, limits);
        }
        py::dict d;
        d["min_aux"] = r.min_aux;
        d["complete"] = r.complete;
        d["chains"] = r.embedding ? py::object(chains_dict(*r.embedding, host)) : py::none();
        return d;
      },
      py::arg("graph"), py::arg("host"), py::arg("max_aux") = 8, py::arg("max_chain") = 2,
      py::arg("node_budget") = EmbedLimits{}.node_budget);

  m.def(
      "solve",
      [](const Polynomial& p, const std::string& hw, const std::string& solver,
         std::uint64_t sweeps, std::uint64_t seed, int restarts) {
        PipelineOptions o;
        o.hardware = hardware_arg(hw);
        if (solver != "exact" && solver != "sa") throw Error("solve: solver must be exact or sa");
        o.solver = solver == "sa" ? Solver::sa : Solver::exact;
        o.schedule.sweeps = sweeps;
        o.schedule.seed = seed;
        o.restarts = restarts;
        PipelineResult r;
        {
          py::gil_scoped_release release;
          r = run_pipeline(p, o);
        }
        py::dict d;
        d["assignment"] = r.assignment;
        d["value"] = r.value;
        d["energy"] = r.solve.energy;
        d["qubits"] = r.qubo.variables.size();
        d["broken_chains"] = r.unembedded.broken_chains;
        return d;
      },
      py::arg("poly"), py::arg("hardware") = "pegasus", py::arg("solver") = "exact",
      py::arg("sweeps") = 1000, py::arg("seed") = 1, py::arg("restarts") = 8);

  m.def("brute_force_minimum", &brute_force_minimum, py::arg("poly"));

  m.def(
      "factor",
      [](int n) {
        auto r = run_factor_demo(n);
        return py::make_tuple(r.p, r.q);
      },
      py::arg("n"));

  m.def("tables", [] {
    TableReport report;
    {
      py::gil_scoped_release release;
      report = run_tables_report();
    }
    py::list rows;
    for (const auto& row : report.rows) {
      py::dict d;
      d["graph"] = row.graph;
      d["hardware"] = std::string(to_string(row.hardware));
      d["host"] = row.host;
      d["quadratization_aux"] = row.quadratization_aux;
      d["embedding_aux"] = row.embedding_aux;
      d["total_aux"] = row.total_aux;
      d["published_total_aux"] = row.published_total_aux;
      d["match"] = row.match;
      d["improvement"] = row.improvement;
      d["exceeds"] = row.exceeds;
      rows.append(d);
    }
    return rows;
  });
}
