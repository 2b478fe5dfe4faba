// Python bindings for the cut-complex core: family parsing, facets,
// f-vectors, exact homology, element matchings, and the verification
// harness. Product vertices (i, j) use flat indices i*n + j throughout.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>

#include "cutcomplex/complex.hpp"
#include "cutcomplex/family.hpp"
#include "cutcomplex/graph.hpp"
#include "cutcomplex/homology.hpp"
#include "cutcomplex/morse.hpp"
#include "cutcomplex/verify.hpp"

namespace py = pybind11;

namespace {

using namespace cutcomplex;

ComplexKind kind_from(const std::string& kind) {
    if (kind == "total") return ComplexKind::total_cut;
    if (kind == "cut") return ComplexKind::cut;
    throw std::invalid_argument("kind must be 'total' or 'cut'");
}

ComplexSpec spec_from(const std::string& family, const std::string& kind,
                      int k) {
    return ComplexSpec(build_graph(parse_family(family)), kind_from(kind), k);
}

py::list face_to_list(const VertexSet& face) {
    py::list out;
    face.for_each([&](int v) { out.append(v); });
    return out;
}

py::object torsion_to_py(const std::vector<Int>& invariants) {
    py::list out;
    for (const auto& inv : invariants) {
        if (inv <= std::numeric_limits<long long>::max()) {
            out.append(inv.convert_to<long long>());
        } else {
            out.append(inv.str());
        }
    }
    return out;
}

py::dict report_to_dict(const VerificationReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["family"] = r.family;
    d["params"] = r.params;
    d["method"] = r.method;
    d["result"] = r.result;
    d["expected"] = r.expected;
    d["computed"] = r.computed;
    d["reason"] = r.reason;
    d["conjecture"] = r.conjecture;
    d["table_backed"] = r.table_backed;
    d["interpreted"] = r.interpreted;
    if (!r.r_comparison.empty()) d["r_comparison"] = r.r_comparison;
    d["seconds"] = r.seconds;
    return d;
}

Budget budget_from(std::optional<int> vertex_cap, int jobs) {
    Budget budget = vertex_cap ? Budget::capped(*vertex_cap) : Budget{};
    budget.jobs = jobs;
    return budget;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Total k-cut and k-cut complexes of graphs: facets, f-vectors, "
        "exact integer homology, sequential element matchings, and "
        "verification against built-in reference tables.";

    m.def(
        "describe",
        [](const std::string& family) { return describe(parse_family(family)); },
        py::arg("family"),
        "Parse a family expression and return its canonical text form.");

    m.def(
        "vertex_count",
        [](const std::string& family) {
            return build_graph(parse_family(family)).vertex_count();
        },
        py::arg("family"));

    m.def(
        "edges",
        [](const std::string& family) {
            const Graph g = build_graph(parse_family(family));
            py::list out;
            for (int u = 0; u < g.vertex_count(); ++u) {
                g.neighbors(u).for_each([&](int v) {
                    if (u < v) out.append(py::make_tuple(u, v));
                });
            }
            return out;
        },
        py::arg("family"), "Edge list of the underlying graph.");

    m.def(
        "facets",
        [](const std::string& family, const std::string& kind, int k) {
            const ComplexSpec spec = spec_from(family, kind, k);
            py::list out;
            for (const auto& f : facets(spec)) out.append(face_to_list(f));
            return out;
        },
        py::arg("family"), py::arg("kind") = "total", py::arg("k") = 2);

    m.def(
        "is_face",
        [](const std::string& family, const std::string& kind, int k,
           const std::vector<int>& face) {
            const ComplexSpec spec = spec_from(family, kind, k);
            return is_face(spec, VertexSet::of(face.begin(), face.end()));
        },
        py::arg("family"), py::arg("kind") = "total", py::arg("k") = 2,
        py::arg("face") = std::vector<int>{});

    m.def(
        "f_vector",
        [](const std::string& family, const std::string& kind, int k) {
            const FVector fv = f_vector(spec_from(family, kind, k));
            py::dict counts;
            for (int d = -1; d <= fv.dim(); ++d)
                counts[py::int_(d)] = fv[d];
            py::dict out;
            out["void"] = fv.void_complex;
            out["dim"] = fv.dim();
            out["counts"] = counts;
            return out;
        },
        py::arg("family"), py::arg("kind") = "total", py::arg("k") = 2);

    m.def(
        "betti",
        [](const std::string& family, const std::string& kind, int k,
           std::optional<std::pair<int, int>> dims,
           std::optional<long long> face_budget) {
            const ComplexSpec spec = spec_from(family, kind, k);
            HomologyOptions options;
            if (face_budget) options.face_budget = *face_budget;
            const BettiReport report = reduced_homology(spec, dims, options);
            py::dict by_dim;
            for (int d = report.dim_low; d <= report.dim_high; ++d) {
                if (report.beta(d) == 0 && report.torsion(d).empty())
                    continue;
                py::dict entry;
                entry["rank"] = report.beta(d);
                entry["torsion"] = torsion_to_py(report.torsion(d));
                by_dim[py::int_(d)] = entry;
            }
            py::dict out;
            out["dims"] = by_dim;
            const bool window =
                report.coverage == BettiReport::Coverage::window;
            out["coverage"] = window ? "window" : "full";
            if (window)
                out["window"] =
                    py::make_tuple(report.dim_low, report.dim_high);
            if (report.coverage == BettiReport::Coverage::void_complex)
                out["coverage"] = "void";
            return out;
        },
        py::arg("family"), py::arg("kind") = "total", py::arg("k") = 2,
        py::arg("dims") = std::nullopt, py::arg("face_budget") = std::nullopt,
        "Reduced integer homology; pass dims=(a, b) to compute a window.");

    m.def(
        "morse",
        [](const std::string& family, const std::string& kind, int k,
           std::optional<std::vector<int>> order, bool emit_pairs) {
            const FamilyExpr expr = parse_family(family);
            const ComplexSpec spec(build_graph(expr), kind_from(kind), k);
            std::vector<int> stages;
            if (order) {
                stages = *order;
            } else {
                const int count =
                    expr.is_product() ? expr.b : spec.vertex_count();
                stages.resize(static_cast<std::size_t>(count));
                for (int i = 0; i < count; ++i)
                    stages[static_cast<std::size_t>(i)] = i;
            }
            const MorseData data = run_element_matchings(spec, stages);
            const AcyclicityCheck acyclic = verify_acyclic(spec, data);
            const HomotopyClaim claim = homotopy_claim(data, acyclic);
            py::dict out;
            out["order"] = data.order;
            py::list critical;
            for (const auto& cell : data.critical) {
                py::dict c;
                c["dim"] = cell.count() - 1;
                c["face"] = face_to_list(cell);
                critical.append(c);
            }
            out["critical"] = critical;
            out["acyclic"] = acyclic.ok;
            out["claim"] = to_string(claim);
            out["filtration_sizes"] = data.filtration_sizes;
            if (emit_pairs) {
                py::list pairs;
                for (const auto& p : data.pairs) {
                    py::dict pd;
                    pd["lower"] = face_to_list(p.lower);
                    pd["upper"] = face_to_list(p.upper);
                    pd["stage"] = p.stage;
                    pairs.append(pd);
                }
                out["pairs"] = pairs;
            }
            return out;
        },
        py::arg("family"), py::arg("kind") = "total", py::arg("k") = 2,
        py::arg("order") = std::nullopt, py::arg("emit_pairs") = false,
        "Run the sequential element matchings; default order 0..n-1 "
        "(products: the first complete-factor row).");

    m.def(
        "verify",
        [](const std::string& suite, std::optional<int> budget, int jobs) {
            const auto reports =
                run_suite(parse_suite(suite), budget_from(budget, jobs));
            py::list out;
            for (const auto& r : reports) out.append(report_to_dict(r));
            return out;
        },
        py::arg("suite") = "all", py::arg("budget") = std::nullopt,
        py::arg("jobs") = 0,
        "Run a verification suite; budget caps the vertex budgets.");

    m.def(
        "check_cycle_power",
        [](int n, int p, std::optional<int> budget) {
            return report_to_dict(
                check_cycle_power(n, p, budget_from(budget, 0)));
        },
        py::arg("n"), py::arg("p"), py::arg("budget") = std::nullopt);

    m.def(
        "check_cycle_power_middle",
        [](int n, int p, std::optional<int> budget) {
            return report_to_dict(
                check_cycle_power_middle(n, p, budget_from(budget, 0)));
        },
        py::arg("n"), py::arg("p"), py::arg("budget") = std::nullopt);

    m.def(
        "check_complete_path",
        [](int m, int n, std::optional<int> budget) {
            return report_to_dict(check_km_pn(m, n, budget_from(budget, 0)));
        },
        py::arg("m"), py::arg("n"), py::arg("budget") = std::nullopt);

    m.def(
        "check_complete_cycle",
        [](int m, int n, std::optional<int> budget) {
            return report_to_dict(check_km_cn(m, n, budget_from(budget, 0)));
        },
        py::arg("m"), py::arg("n"), py::arg("budget") = std::nullopt);

    m.def(
        "check_table",
        [](int table_id, std::optional<int> budget) {
            py::list out;
            for (const auto& r :
                 check_table(table_id, budget_from(budget, 0)))
                out.append(report_to_dict(r));
            return out;
        },
        py::arg("table_id"), py::arg("budget") = std::nullopt);
}
