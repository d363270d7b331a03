#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cliquepoly/cliques.hpp"
#include "cliquepoly/errors.hpp"
#include "cliquepoly/expansion.hpp"
#include "cliquepoly/graph.hpp"
#include "cliquepoly/search.hpp"

namespace py = pybind11;
using namespace cliquepoly;

namespace {

// Accepts "0-1,0-2" or an iterable of (i, j) pairs.
EdgeSet to_edges(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return EdgeSet::parse(obj.cast<std::string>());
    std::vector<Edge> edges;
    for (auto item : obj) {
        auto pair = item.cast<std::pair<int, int>>();
        edges.push_back(Edge::make(pair.first, pair.second));
    }
    return EdgeSet(std::move(edges));
}

py::list edge_list(const EdgeSet& s) {
    py::list out;
    for (const auto& e : s) out.append(py::make_tuple(e.u, e.v));
    return out;
}

py::dict record_dict(const ClassificationRecord& r) {
    py::dict d;
    d["graph"] = r.graph;
    d["m"] = r.m;
    d["holds"] = r.holds;
    d["m_edge_complete"] = r.m_edge_complete;
    d["support_clique"] = r.support_clique;
    d["diff"] = r.diff;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact clique polynomials and edge-subgraph expansion checks";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ScaleError>(m, "ScaleError", base.ptr());
    py::register_exception<OverflowError>(m, "OverflowError", base.ptr());

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<>())
        .def(py::init([](const std::vector<Polynomial::Coefficient>& c) { return Polynomial(c); }), py::arg("coefficients"))
        .def_property_readonly("coefficients", [](const Polynomial& p) {
            return std::vector<Polynomial::Coefficient>(p.coefficients().begin(), p.coefficients().end());
        })
        .def_property_readonly("degree", &Polynomial::degree)
        .def("coeff", &Polynomial::coeff)
        .def("is_zero", &Polynomial::is_zero)
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__neg__", [](const Polynomial& a) { return -a; })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });
    m.def("scale_shift", &scale_shift, py::arg("p"), py::arg("c"), py::arg("shift"));

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init([](int n, const py::object& edges) { return Graph::from_edges(n, to_edges(edges)); }),
             py::arg("n"), py::arg("edges"))
        .def_static("complete", &Graph::complete)
        .def_static("from_edge_list", [](const std::string& text) { return parse_edge_list(text); })
        .def_static("from_graph6", [](const std::string& text) { return parse_graph6(text); })
        .def("to_graph6", [](const Graph& g) { return encode_graph6(g); })
        .def("to_edge_list", [](const Graph& g) { return format_edge_list(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return edge_list(g.edges()); })
        .def("adjacent", &Graph::adjacent)
        .def("delete_edges", [](const Graph& g, const py::object& m) { return delete_edges(g, to_edges(m)); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph.from_graph6('" + encode_graph6(g) + "')"; });

    m.def("clique_polynomial", [](const Graph& g) { return clique_polynomial(g); });
    m.def("count_cliques_bruteforce", &count_cliques_bruteforce);
    m.def("clique_count", &clique_count, py::arg("g"), py::arg("k"));

    m.def("cstar", [](const Graph& g, const py::object& s) { return cstar(g, to_edges(s)); });
    m.def("theorem_rhs", [](const Graph& g, const py::object& e) { return theorem_rhs(g, to_edges(e)); });
    m.def("inclusion_exclusion_rhs",
          [](const Graph& g, const py::object& e) { return inclusion_exclusion_rhs(g, to_edges(e)); });
    m.def("identity_check", [](const Graph& g, const py::object& e) {
        const IdentityCheck c = identity_check(g, to_edges(e));
        py::dict d;
        d["holds"] = c.holds;
        d["m_edge_complete"] = c.m_edge_complete;
        d["support_clique"] = c.support_clique;
        d["clique_polynomial"] = c.clique_poly;
        d["theorem_rhs"] = c.theorem;
        d["diff"] = c.diff;
        return d;
    });
    m.def("explain_diff", [](const Graph& g, const py::object& e) {
        const TermLedger ledger = explain_diff(g, to_edges(e));
        py::list entries;
        for (const auto& row : ledger.entries) {
            py::dict d;
            d["source"] = row.source == TermSource::Theorem ? "theorem" : "inclusion_exclusion";
            d["subset"] = edge_list(row.subset);
            d["support"] = row.support.to_vector();
            d["sign"] = row.sign;
            d["contribution"] = row.contribution;
            entries.append(d);
        }
        py::list residuals;
        for (const auto& r : ledger.residuals()) {
            py::dict d;
            d["support"] = r.support.to_vector();
            d["inclusion_exclusion"] = r.inclusion_exclusion;
            d["theorem"] = r.theorem;
            d["residual"] = r.residual;
            residuals.append(d);
        }
        py::dict out;
        out["theorem_base"] = ledger.theorem_base;
        out["entries"] = entries;
        out["residuals"] = residuals;
        out["inclusion_exclusion_total"] = ledger.total(TermSource::InclusionExclusion);
        out["theorem_total"] = ledger.total(TermSource::Theorem);
        return out;
    });
    m.def("spanning_subgraph_count", &spanning_subgraph_count, py::arg("p"), py::arg("q"));
    m.def("alternating_spanning_sum", &alternating_spanning_sum, py::arg("p"));

    m.def("classify", [](const Graph& g, const py::object& e) { return record_dict(classify(g, to_edges(e))); });
    m.def("enumerate_edge_masks", &enumerate_edge_masks, py::arg("n"), py::arg("dedup") = false);
    m.def("graph_from_edge_mask", &graph_from_edge_mask, py::arg("n"), py::arg("mask"));
    m.def("sample_gnp", py::overload_cast<int, double, std::uint64_t>(&sample_gnp), py::arg("n"), py::arg("p"),
          py::arg("seed"));

    m.def(
        "sweep_json",
        [](int n_min, int n_max, const std::string& mode, const std::string& m_mode, int graph_samples,
           int m_samples, double edge_probability, std::uint64_t seed, bool dedup, int witness_cap, int threads) {
            SweepConfig c;
            c.n_min = n_min;
            c.n_max = n_max;
            if (mode != "exhaustive" && mode != "random") throw DomainError("mode must be exhaustive or random");
            if (m_mode != "all-subsets" && m_mode != "sampled") throw DomainError("m_mode must be all-subsets or sampled");
            c.mode = mode == "random" ? SweepMode::Random : SweepMode::Exhaustive;
            c.m_mode = m_mode == "sampled" ? SubsetMode::Sampled : SubsetMode::AllSubsets;
            c.graph_samples = graph_samples;
            c.m_samples = m_samples;
            c.edge_probability = edge_probability;
            c.seed = seed;
            c.dedup = dedup;
            c.witness_cap = witness_cap;
            c.threads = threads;
            py::gil_scoped_release release;
            return to_json(sweep(c));
        },
        py::arg("n_min"), py::arg("n_max"), py::arg("mode") = "exhaustive", py::arg("m_mode") = "all-subsets",
        py::arg("graph_samples") = 100, py::arg("m_samples") = 16, py::arg("edge_probability") = 0.5,
        py::arg("seed") = 0, py::arg("dedup") = false, py::arg("witness_cap") = 10, py::arg("threads") = 1);
}
