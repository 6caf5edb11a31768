#include "rainbow/exact.hpp"
#include "rainbow/latin.hpp"
#include "rainbow/report_json.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace rainbow;

namespace {

ColoredGraph graph_from_rows(const std::vector<std::vector<ColorId>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<ColorId> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("color matrix must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return ColoredGraph(n, std::move(flat));
}

Path make_path(const ColoredGraph& g, const std::vector<int>& vertices) {
  return Path(g, vertices);
}

SearchLimits limits_from_args(int max_n, std::optional<long long> node_budget,
                              std::optional<long long> time_budget_ms, bool parallel) {
  SearchLimits limits;
  limits.max_n = max_n;
  limits.node_budget = node_budget;
  limits.time_budget_ms = time_budget_ms;
  limits.parallel = parallel;
  return limits;
}

std::vector<std::vector<int>> square_rows(const LatinSquare& sq) {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < sq.order(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < sq.order(); ++c) row.push_back(sq.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_rainbow, m) {
  m.doc() = "rainbow and k-rainbow paths in properly edge-colored complete graphs";

  py::class_<ColoredGraph>(m, "ColoredGraph")
      .def(py::init(&graph_from_rows), py::arg("rows"),
           "build from a symmetric n*n nested list of positive colors")
      .def_property_readonly("n", &ColoredGraph::n)
      .def("color", &ColoredGraph::color, py::arg("u"), py::arg("v"))
      .def_property_readonly("palette", &ColoredGraph::palette)
      .def("__eq__", [](const ColoredGraph& a, const ColoredGraph& b) { return a == b; })
      .def("__repr__", [](const ColoredGraph& g) {
        return "<ColoredGraph n=" + std::to_string(g.n()) + " colors=" +
               std::to_string(g.palette_size()) + ">";
      });

  m.def("mm_coloring", &mm_coloring, py::arg("m"), py::arg("size_cap") = kDefaultSizeCap);
  m.def("round_robin_coloring", &round_robin_coloring, py::arg("n"),
        py::arg("size_cap") = kDefaultSizeCap);
  m.def("random_proper_coloring", &random_proper_coloring, py::arg("n"), py::arg("seed"),
        py::arg("size_cap") = kDefaultSizeCap);
  m.def(
      "validate_proper",
      [](const ColoredGraph& g) -> std::optional<std::tuple<int, int, int>> {
        if (auto v = validate_proper(g)) return std::make_tuple(v->u, v->v, v->w);
        return std::nullopt;
      },
      py::arg("graph"), "None when proper, else a witness (u, v, w) with c(u,v) == c(u,w)");
  m.def("read_coloring", [](const std::string& text) { return read_coloring(text); },
        py::arg("text"));
  m.def("write_coloring", &write_coloring, py::arg("graph"));
  m.def(
      "relabel_palette",
      [](const ColoredGraph& g) {
        RelabelResult r = relabel_palette(g);
        return std::make_pair(std::move(r.graph), r.mapping);
      },
      py::arg("graph"));

  // path machinery; paths cross the boundary as vertex lists
  m.def(
      "path_colors",
      [](const ColoredGraph& g, const std::vector<int>& p) { return path_colors(make_path(g, p)); },
      py::arg("graph"), py::arg("path"));
  m.def(
      "is_k_rainbow",
      [](const ColoredGraph& g, const std::vector<int>& p, int k) {
        return is_k_rainbow(make_path(g, p), k);
      },
      py::arg("graph"), py::arg("path"), py::arg("k"));
  m.def(
      "new_neighborhood",
      [](const ColoredGraph& g, const std::vector<int>& p, int v) {
        return new_neighborhood(make_path(g, p), v);
      },
      py::arg("graph"), py::arg("path"), py::arg("v"));
  m.def(
      "compute_A",
      [](const ColoredGraph& g, const std::vector<int>& p) { return compute_A(make_path(g, p)); },
      py::arg("graph"), py::arg("path"));
  m.def(
      "compute_B",
      [](const ColoredGraph& g, const std::vector<int>& p) { return compute_B(make_path(g, p)); },
      py::arg("graph"), py::arg("path"));
  m.def(
      "compute_R",
      [](const ColoredGraph& g, const std::vector<int>& p, int a) {
        return compute_R(make_path(g, p), a);
      },
      py::arg("graph"), py::arg("path"), py::arg("a"));
  m.def(
      "is_nice",
      [](const ColoredGraph& g, const std::vector<int>& p, int t, long long eps_num,
         long long eps_den, int a) {
        return is_nice(make_path(g, p), t, Rational(eps_num, eps_den), a);
      },
      py::arg("graph"), py::arg("path"), py::arg("t"), py::arg("eps_num"),
      py::arg("eps_den") = 1, py::arg("a") = 0);
  m.def(
      "rotate",
      [](const ColoredGraph& g, const std::vector<int>& p, int i) {
        return rotate(make_path(g, p), i).vertices();
      },
      py::arg("graph"), py::arg("path"), py::arg("i"));
  m.def(
      "compute_C_A",
      [](const ColoredGraph& g, const std::vector<int>& p, int k) {
        return compute_C_A(make_path(g, p), k);
      },
      py::arg("graph"), py::arg("path"), py::arg("k"));
  m.def("count_without_k_successor", &count_without_k_successor, py::arg("positions"),
        py::arg("k"), py::arg("t"));

  py::class_<MaximalityCertificate>(m, "MaximalityCertificate")
      .def_readonly("start_condition", &MaximalityCertificate::start_condition)
      .def_readonly("end_condition", &MaximalityCertificate::end_condition)
      .def_readonly("c_a", &MaximalityCertificate::c_a)
      .def_readonly("start_witnesses", &MaximalityCertificate::start_witnesses)
      .def_readonly("end_witnesses", &MaximalityCertificate::end_witnesses)
      .def("__repr__", [](const MaximalityCertificate& c) {
        return std::string("<MaximalityCertificate start=") +
               (c.start_condition ? "True" : "False") +
               " end=" + (c.end_condition ? "True" : "False") + ">";
      });
  m.def(
      "maximality_certificate",
      [](const ColoredGraph& g, const std::vector<int>& p, int k) {
        return maximality_certificate(make_path(g, p), k);
      },
      py::arg("graph"), py::arg("path"), py::arg("k"));

  py::class_<SolveReport>(m, "SolveReport")
      .def_property_readonly("vertices",
                             [](const SolveReport& r) { return r.path.vertices(); })
      .def_property_readonly("length", [](const SolveReport& r) { return r.path.size(); })
      .def_property_readonly("method",
                             [](const SolveReport& r) { return std::string(method_name(r.method)); })
      .def_readonly("k", &SolveReport::k)
      .def_readonly("certificate", &SolveReport::certificate)
      .def_readonly("c_k_size", &SolveReport::c_k_size)
      .def_readonly("exhaustive", &SolveReport::exhaustive)
      .def_property_readonly("bound",
                             [](const SolveReport& r) {
                               return std::make_pair(r.guaranteed_bound.num(),
                                                     r.guaranteed_bound.den());
                             })
      .def_property_readonly("trace",
                             [](const SolveReport& r) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const Move& mv : r.trace) {
                                 const char* op = mv.kind == Move::Kind::extend_start
                                                      ? "extend_start"
                                                      : mv.kind == Move::Kind::extend_end
                                                            ? "extend_end"
                                                            : "rotate";
                                 out.emplace_back(op, mv.value);
                               }
                               return out;
                             })
      .def("to_json", [](const SolveReport& r) { return report_to_json(r).dump(); })
      .def("__repr__", [](const SolveReport& r) {
        return "<SolveReport method=" + std::string(method_name(r.method)) +
               " k=" + std::to_string(r.k) + " length=" + std::to_string(r.path.size()) + ">";
      });

  m.def("greedy_extend", &greedy_extend, py::arg("graph"), py::arg("start"), py::arg("k") = 1);
  m.def(
      "maximalize",
      [](const ColoredGraph& g, const std::vector<int>& p0, int k) {
        return maximalize(g, make_path(g, p0), k);
      },
      py::arg("graph"), py::arg("initial_path"), py::arg("k") = 1);
  m.def("maximalize_restarts", &maximalize_restarts, py::arg("graph"), py::arg("k"),
        py::arg("restarts"), py::arg("seed"));
  m.def("ladder", &ladder, py::arg("graph"), py::arg("k_max"));
  m.def("naive_recursive", &naive_recursive, py::arg("graph"), py::arg("k"), py::arg("start") = 0);
  m.def(
      "complete_to_hamiltonian_cycle",
      [](const ColoredGraph& g, const std::vector<int>& p) {
        CycleCompletion c = complete_to_hamiltonian_cycle(g, make_path(g, p));
        return std::make_pair(c.cycle, c.distinct_colors);
      },
      py::arg("graph"), py::arg("path"));

  m.def(
      "max_k_rainbow_path_exact",
      [](const ColoredGraph& g, int k, int max_n, std::optional<long long> node_budget,
         std::optional<long long> time_budget_ms, bool parallel) {
        return max_k_rainbow_path_exact(g, k,
                                        limits_from_args(max_n, node_budget, time_budget_ms,
                                                         parallel));
      },
      py::arg("graph"), py::arg("k") = 1, py::arg("max_n") = 11,
      py::arg("node_budget") = std::nullopt, py::arg("time_budget_ms") = std::nullopt,
      py::arg("parallel") = false);
  m.def(
      "has_hamiltonian_rainbow_path",
      [](const ColoredGraph& g, int max_n, std::optional<long long> node_budget,
         std::optional<long long> time_budget_ms) {
        auto res = has_hamiltonian_rainbow_path(
            g, limits_from_args(max_n, node_budget, time_budget_ms, false));
        const char* outcome = res.outcome == HamOutcome::exists       ? "exists"
                              : res.outcome == HamOutcome::not_exists ? "not_exists"
                                                                      : "budget_exhausted";
        std::optional<std::vector<int>> witness;
        if (res.witness) witness = res.witness->vertices();
        return std::make_pair(std::string(outcome), witness);
      },
      py::arg("graph"), py::arg("max_n") = 11, py::arg("node_budget") = std::nullopt,
      py::arg("time_budget_ms") = std::nullopt,
      "returns (outcome, witness): outcome in {exists, not_exists, budget_exhausted}");
  m.def(
      "max_rainbow_cycle_exact",
      [](const ColoredGraph& g, int max_n, std::optional<long long> node_budget,
         std::optional<long long> time_budget_ms) {
        auto res = max_rainbow_cycle_exact(
            g, limits_from_args(max_n, node_budget, time_budget_ms, false));
        return std::make_pair(res.cycle, res.exhaustive);
      },
      py::arg("graph"), py::arg("max_n") = 11, py::arg("node_budget") = std::nullopt,
      py::arg("time_budget_ms") = std::nullopt);

  py::class_<LatinSquare>(m, "LatinSquare")
      .def(py::init([](const std::vector<std::vector<int>>& rows) {
             int n = static_cast<int>(rows.size());
             std::vector<int> flat;
             for (const auto& row : rows) {
               if (static_cast<int>(row.size()) != n)
                 throw std::invalid_argument("grid must be square");
               flat.insert(flat.end(), row.begin(), row.end());
             }
             return LatinSquare(n, std::move(flat));
           }),
           py::arg("rows"))
      .def_property_readonly("order", &LatinSquare::order)
      .def("at", &LatinSquare::at, py::arg("row"), py::arg("col"))
      .def_property_readonly("rows", &square_rows)
      .def("__eq__", [](const LatinSquare& a, const LatinSquare& b) { return a == b; })
      .def("__repr__", [](const LatinSquare& sq) {
        return "<LatinSquare order=" + std::to_string(sq.order()) + ">";
      });

  m.def(
      "validate_latin",
      [](const LatinSquare& sq) -> std::optional<std::tuple<std::string, int, int>> {
        if (auto v = validate_latin(sq))
          return std::make_tuple(
              std::string(v->kind == LatinViolation::Kind::row ? "row" : "column"), v->index,
              v->value);
        return std::nullopt;
      },
      py::arg("square"));
  m.def("cyclic_latin", &cyclic_latin, py::arg("n"));
  m.def("coloring_to_latin", &coloring_to_latin, py::arg("graph"));
  m.def("latin_to_coloring", &latin_to_coloring, py::arg("square"));
  m.def("read_latin", &read_latin, py::arg("text"));
  m.def("write_latin", &write_latin, py::arg("square"));
  m.def(
      "find_transversal",
      [](const LatinSquare& sq, int max_n, std::optional<long long> node_budget,
         std::optional<long long> time_budget_ms) {
        auto res =
            find_transversal(sq, limits_from_args(max_n, node_budget, time_budget_ms, false));
        std::optional<std::vector<std::pair<int, int>>> cells;
        if (res.transversal) cells = res.transversal->cells;
        return std::make_pair(std::string(status_name(res.status)), cells);
      },
      py::arg("square"), py::arg("max_n") = 9, py::arg("node_budget") = std::nullopt,
      py::arg("time_budget_ms") = std::nullopt,
      "returns (status, cells): status in {found, none, budget_exhausted}");
  m.def(
      "max_partial_transversal",
      [](const LatinSquare& sq, int max_n, std::optional<long long> node_budget,
         std::optional<long long> time_budget_ms) {
        auto res = max_partial_transversal(
            sq, limits_from_args(max_n, node_budget, time_budget_ms, false));
        return std::make_pair(res.transversal.cells, res.exhaustive);
      },
      py::arg("square"), py::arg("max_n") = 9, py::arg("node_budget") = std::nullopt,
      py::arg("time_budget_ms") = std::nullopt);
  m.def(
      "transversal_to_rainbow_subgraph",
      [](const LatinSquare& sq, const std::vector<std::pair<int, int>>& cells) {
        Transversal t;
        t.cells = cells;
        RainbowSubgraph sub = transversal_to_rainbow_subgraph(sq, t);
        py::dict out;
        out["edges"] = sub.edges;
        out["colors"] = sub.colors;
        out["excluded_vertex"] = sub.excluded_vertex ? py::cast(*sub.excluded_vertex)
                                                     : py::none().cast<py::object>();
        return out;
      },
      py::arg("square"), py::arg("cells"));
  m.def(
      "latin_to_bipartite_matching",
      [](const LatinSquare& sq, int max_n, std::optional<long long> node_budget,
         std::optional<long long> time_budget_ms) {
        auto res = latin_to_bipartite_matching(
            sq, limits_from_args(max_n, node_budget, time_budget_ms, false));
        return std::make_pair(std::string(status_name(res.status)), res.edges);
      },
      py::arg("square"), py::arg("max_n") = 9, py::arg("node_budget") = std::nullopt,
      py::arg("time_budget_ms") = std::nullopt);
}
