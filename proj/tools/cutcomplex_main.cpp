// Command-line driver for cut-complex computations.
//
// Vertex encoding: cartesian(complete(m), path(n)) and
// cartesian(complete(m), cycle(n)) place vertex (i, j) — row i of the
// complete factor, position j of the path/cycle — at flat index i*n + j.
// JSON output always uses flat indices; csv/markdown output renders product
// vertices as "i.j".
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cutcomplex/complex.hpp"
#include "cutcomplex/family.hpp"
#include "cutcomplex/graph.hpp"
#include "cutcomplex/homology.hpp"
#include "cutcomplex/morse.hpp"
#include "cutcomplex/verify.hpp"

namespace {

using cutcomplex::Budget;
using cutcomplex::ComplexKind;
using cutcomplex::ComplexSpec;
using cutcomplex::FamilyExpr;
using cutcomplex::VertexSet;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ComplexKind parse_kind(const std::string& kind) {
    if (kind == "total") return ComplexKind::total_cut;
    if (kind == "cut") return ComplexKind::cut;
    throw UsageError("--kind must be 'total' or 'cut'");
}

std::pair<int, int> parse_range(const std::string& text, const char* flag) {
    const std::size_t sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, sep));
        const int hi = std::stoi(text.substr(sep + 2));
        if (hi < lo) throw UsageError(std::string(flag) + ": empty range");
        return {lo, hi};
    } catch (const UsageError&) {
        throw;
    } catch (...) {
        throw UsageError(std::string(flag) +
                         " expects 'a..b' or a single integer");
    }
}

long long face_budget_from_env(long long fallback) {
    const char* raw = std::getenv("CUTCOMPLEX_BUDGET");
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        std::size_t used = 0;
        const long long value = std::stoll(raw, &used);
        if (used != std::string(raw).size() || value <= 0)
            throw std::invalid_argument("");
        return value;
    } catch (...) {
        throw UsageError(
            "CUTCOMPLEX_BUDGET must be a positive integer (face budget)");
    }
}

// "i.j" for product vertices, plain index otherwise.
std::string human_vertex(const FamilyExpr& expr, int v) {
    if (expr.is_product()) {
        return std::to_string(v / expr.b) + "." + std::to_string(v % expr.b);
    }
    return std::to_string(v);
}

std::string human_face(const FamilyExpr& expr, const VertexSet& face) {
    std::string out = "{";
    bool first = true;
    face.for_each([&](int v) {
        if (!first) out += ",";
        first = false;
        out += human_vertex(expr, v);
    });
    return out + "}";
}

ordered_json face_to_json(const VertexSet& face) {
    ordered_json arr = ordered_json::array();
    face.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

ordered_json torsion_to_json(const std::vector<cutcomplex::Int>& invariants) {
    ordered_json arr = ordered_json::array();
    for (const auto& inv : invariants) {
        if (inv <= std::numeric_limits<long long>::max()) {
            arr.push_back(inv.convert_to<long long>());
        } else {
            arr.push_back(inv.str());
        }
    }
    return arr;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    out << text;
}

// ---------------------------------------------------------------------------

struct CommonArgs {
    std::string family_text;
    std::string kind = "total";
    int k = 2;
    std::string format = "json";
};

struct Parsed {
    FamilyExpr expr;
    ComplexSpec spec;
};

Parsed make_spec(const CommonArgs& args) {
    FamilyExpr expr = cutcomplex::parse_family(args.family_text);
    cutcomplex::Graph graph = cutcomplex::build_graph(expr);
    return Parsed{expr, ComplexSpec(std::move(graph), parse_kind(args.kind),
                                    args.k)};
}

int cmd_facets(const CommonArgs& args) {
    Parsed parsed = make_spec(args);
    const auto facet_list = cutcomplex::facets(parsed.spec);
    if (args.format == "json") {
        ordered_json j;
        j["family"] = cutcomplex::describe(parsed.expr);
        j["n"] = parsed.spec.vertex_count();
        j["kind"] = args.kind;
        j["k"] = args.k;
        ordered_json arr = ordered_json::array();
        for (const auto& f : facet_list) arr.push_back(face_to_json(f));
        j["facets"] = arr;
        std::cout << j.dump(2) << "\n";
    } else if (args.format == "csv") {
        for (const auto& f : facet_list) {
            std::string line;
            f.for_each([&](int v) {
                if (!line.empty()) line += ",";
                line += human_vertex(parsed.expr, v);
            });
            std::cout << line << "\n";
        }
    } else {
        std::cout << "Facets of " << cutcomplex::describe(parsed.expr) << " ("
                  << args.kind << ", k=" << args.k << "):\n";
        for (const auto& f : facet_list)
            std::cout << "- " << human_face(parsed.expr, f) << "\n";
    }
    return 0;
}

int cmd_fvector(const CommonArgs& args) {
    Parsed parsed = make_spec(args);
    const cutcomplex::FVector fv = cutcomplex::f_vector(parsed.spec);
    if (args.format == "json") {
        ordered_json j;
        j["family"] = cutcomplex::describe(parsed.expr);
        j["kind"] = args.kind;
        j["k"] = args.k;
        j["void"] = fv.void_complex;
        j["dim"] = fv.dim();
        ordered_json counts = ordered_json::object();
        for (int d = -1; d <= fv.dim(); ++d)
            counts[std::to_string(d)] = fv[d];
        j["counts"] = counts;
        std::cout << j.dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "dim,count\n";
        for (int d = -1; d <= fv.dim(); ++d)
            std::cout << d << "," << fv[d] << "\n";
    } else {
        std::cout << "| dim | faces |\n|---|---|\n";
        for (int d = -1; d <= fv.dim(); ++d)
            std::cout << "| " << d << " | " << fv[d] << " |\n";
        if (fv.void_complex) std::cout << "\n(void complex)\n";
    }
    return 0;
}

int cmd_betti(const CommonArgs& args, const std::string& dims_text) {
    Parsed parsed = make_spec(args);
    cutcomplex::HomologyOptions options;
    options.face_budget = face_budget_from_env(options.face_budget);
    std::optional<std::pair<int, int>> dims;
    if (!dims_text.empty()) dims = parse_range(dims_text, "--dims");
    const cutcomplex::BettiReport report =
        cutcomplex::reduced_homology(parsed.spec, dims, options);
    if (args.format == "json") {
        ordered_json j;
        ordered_json dims_obj = ordered_json::object();
        for (int d = report.dim_low; d <= report.dim_high; ++d) {
            if (report.beta(d) == 0 && report.torsion(d).empty()) continue;
            ordered_json entry;
            entry["rank"] = report.beta(d);
            entry["torsion"] = torsion_to_json(report.torsion(d));
            dims_obj[std::to_string(d)] = entry;
        }
        j["dims"] = dims_obj;
        if (report.coverage == cutcomplex::BettiReport::Coverage::window) {
            j["window"] = {report.dim_low, report.dim_high};
        }
        if (report.coverage ==
            cutcomplex::BettiReport::Coverage::void_complex) {
            j["void"] = true;
        }
        std::cout << j.dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "dim,rank,torsion\n";
        for (int d = report.dim_low; d <= report.dim_high; ++d) {
            if (report.beta(d) == 0 && report.torsion(d).empty()) continue;
            std::string torsion;
            for (const auto& inv : report.torsion(d)) {
                if (!torsion.empty()) torsion += " ";
                torsion += inv.str();
            }
            std::cout << d << "," << report.beta(d) << "," << torsion << "\n";
        }
    } else {
        std::cout << "| dim | rank | torsion |\n|---|---|---|\n";
        for (int d = report.dim_low; d <= report.dim_high; ++d) {
            if (report.beta(d) == 0 && report.torsion(d).empty()) continue;
            std::string torsion;
            for (const auto& inv : report.torsion(d)) {
                if (!torsion.empty()) torsion += ", ";
                torsion += inv.str();
            }
            std::cout << "| " << d << " | " << report.beta(d) << " | "
                      << torsion << " |\n";
        }
    }
    return 0;
}

std::vector<int> canonical_order(const FamilyExpr& expr, int vertex_count) {
    const int stages = expr.is_product() ? expr.b : vertex_count;
    std::vector<int> order(static_cast<std::size_t>(stages));
    for (int i = 0; i < stages; ++i) order[static_cast<std::size_t>(i)] = i;
    return order;
}

int cmd_morse(const CommonArgs& args, std::vector<int> order,
              bool emit_pairs) {
    Parsed parsed = make_spec(args);
    if (order.empty())
        order = canonical_order(parsed.expr, parsed.spec.vertex_count());
    const cutcomplex::MorseData data =
        cutcomplex::run_element_matchings(parsed.spec, order);
    const cutcomplex::AcyclicityCheck acyclic =
        cutcomplex::verify_acyclic(parsed.spec, data);
    const cutcomplex::HomotopyClaim claim =
        cutcomplex::homotopy_claim(data, acyclic);
    if (args.format == "json") {
        ordered_json j;
        j["family"] = cutcomplex::describe(parsed.expr);
        j["order"] = data.order;
        ordered_json critical = ordered_json::array();
        for (const auto& cell : data.critical) {
            ordered_json c;
            c["dim"] = cell.count() - 1;
            c["face"] = face_to_json(cell);
            critical.push_back(c);
        }
        j["critical"] = critical;
        j["acyclic"] = acyclic.ok;
        if (!acyclic.ok) {
            ordered_json witness = ordered_json::array();
            for (const auto& f : acyclic.witness)
                witness.push_back(face_to_json(f));
            j["cycle_witness"] = witness;
        }
        j["claim"] = cutcomplex::to_string(claim);
        j["filtration_sizes"] = data.filtration_sizes;
        if (emit_pairs) {
            ordered_json pairs = ordered_json::array();
            for (const auto& p : data.pairs) {
                ordered_json pj;
                pj["lower"] = face_to_json(p.lower);
                pj["upper"] = face_to_json(p.upper);
                pj["stage"] = p.stage;
                pairs.push_back(pj);
            }
            j["pairs"] = pairs;
        }
        std::cout << j.dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "dim,face\n";
        for (const auto& cell : data.critical) {
            std::string face;
            cell.for_each([&](int v) {
                if (!face.empty()) face += " ";
                face += human_vertex(parsed.expr, v);
            });
            std::cout << (cell.count() - 1) << "," << face << "\n";
        }
    } else {
        std::cout << "Matching for " << cutcomplex::describe(parsed.expr)
                  << ": " << cutcomplex::to_string(claim) << "\n";
        std::cout << "- acyclic: " << (acyclic.ok ? "yes" : "NO") << "\n";
        std::cout << "- critical cells (" << data.critical.size() << "):\n";
        for (const auto& cell : data.critical)
            std::cout << "  - dim " << (cell.count() - 1) << ": "
                      << human_face(parsed.expr, cell) << "\n";
        if (emit_pairs) {
            std::cout << "- pairs (" << data.pairs.size() << "):\n";
            for (const auto& p : data.pairs)
                std::cout << "  - stage " << p.stage << ": "
                          << human_face(parsed.expr, p.lower) << " <-> "
                          << human_face(parsed.expr, p.upper) << "\n";
        }
    }
    return acyclic.ok ? 0 : 1;
}

std::string render_reports(
    const std::vector<cutcomplex::VerificationReport>& reports,
    const std::string& format) {
    if (format == "json") return cutcomplex::reports_to_json(reports);
    if (format == "csv") return cutcomplex::reports_to_csv(reports);
    return cutcomplex::reports_to_markdown(reports);
}

void summarize(const std::vector<cutcomplex::VerificationReport>& reports) {
    long long pass = 0, fail = 0, skipped = 0, agree = 0, disagree = 0;
    for (const auto& r : reports) {
        if (r.result == "pass") ++pass;
        else if (r.result == "fail") ++fail;
        else if (r.result == "skipped") ++skipped;
        else if (r.result == "agree") ++agree;
        else if (r.result == "disagree") ++disagree;
    }
    std::cerr << reports.size() << " claims: " << pass << " pass, " << fail
              << " fail, " << agree << " agree, " << disagree << " disagree, "
              << skipped << " skipped\n";
}

Budget make_budget(int budget_vertices, int jobs) {
    Budget budget =
        budget_vertices > 0 ? Budget::capped(budget_vertices) : Budget{};
    budget.faces = face_budget_from_env(budget.faces);
    budget.jobs = jobs;
    return budget;
}

int cmd_verify(const std::string& suite_name, int budget_vertices, int jobs,
               const std::string& format, const std::string& out_path) {
    const cutcomplex::Suite suite = cutcomplex::parse_suite(suite_name);
    const Budget budget = make_budget(budget_vertices, jobs);
    const auto reports = cutcomplex::run_suite(suite, budget);
    emit(render_reports(reports, format), out_path);
    summarize(reports);
    return cutcomplex::has_required_failure(reports) ? 1 : 0;
}

int cmd_sweep(const std::string& family, const std::string& n_text,
              const std::string& p_text, const std::string& m_text,
              int budget_vertices, int jobs, const std::string& format,
              const std::string& out_path) {
    const Budget budget = make_budget(budget_vertices, jobs);
    std::vector<std::function<cutcomplex::VerificationReport()>> points;
    if (family == "cycle_power") {
        if (n_text.empty() || p_text.empty())
            throw UsageError("sweep over cycle_power needs --n a..b and --p a..b");
        const auto [n_lo, n_hi] = parse_range(n_text, "--n");
        const auto [p_lo, p_hi] = parse_range(p_text, "--p");
        for (int n = n_lo; n <= n_hi; ++n) {
            for (int p = p_lo; p <= p_hi; ++p) {
                points.push_back([n, p, budget] {
                    if (n >= 2 * p + 3 && n <= 3 * p)
                        return cutcomplex::check_cycle_power_middle(n, p,
                                                                    budget);
                    return cutcomplex::check_cycle_power(n, p, budget);
                });
            }
        }
    } else if (family == "complete_path" || family == "complete_cycle") {
        if (n_text.empty() || m_text.empty())
            throw UsageError("sweep over products needs --m a..b and --n a..b");
        const auto [m_lo, m_hi] = parse_range(m_text, "--m");
        const auto [n_lo, n_hi] = parse_range(n_text, "--n");
        const bool is_path = family == "complete_path";
        for (int m = m_lo; m <= m_hi; ++m) {
            for (int n = n_lo; n <= n_hi; ++n) {
                points.push_back([is_path, m, n, budget] {
                    return is_path ? cutcomplex::check_km_pn(m, n, budget)
                                   : cutcomplex::check_km_cn(m, n, budget);
                });
            }
        }
    } else {
        throw UsageError(
            "--family must be cycle_power, complete_path, or complete_cycle");
    }
    std::vector<cutcomplex::VerificationReport> reports(points.size());
    std::atomic<std::size_t> next{0};
    int workers = budget.jobs > 0
                      ? budget.jobs
                      : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers,
                                        static_cast<int>(points.size())));
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) break;
            reports[i] = points[i]();
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    emit(render_reports(reports, format), out_path);
    summarize(reports);
    return cutcomplex::has_required_failure(reports) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "cutcomplex: total k-cut and k-cut complexes of graphs — facets, "
        "f-vectors, exact homology, sequential element matchings, and "
        "verification against the built-in reference tables.\n"
        "Product families cartesian(complete(m), path(n)|cycle(n)) place "
        "vertex (i,j) at flat index i*n+j; JSON uses flat indices, csv and "
        "markdown print 'i.j'.\n"
        "The CUTCOMPLEX_BUDGET environment variable overrides the face "
        "budget for full-range homology."};
    app.require_subcommand(1);

    const std::string family_help =
        "Family expression: cycle_power(n,p) | circulant(n; s1,s2,...) | "
        "cartesian(complete(m), path(n)) | cartesian(complete(m), cycle(n)) "
        "| file(path)";
    const std::string format_help = "Output format (default json)";
    const auto format_validator =
        CLI::IsMember({"json", "csv", "markdown"});

    CommonArgs facets_args, fvector_args, betti_args, morse_args;
    std::string betti_dims;
    std::vector<int> morse_order;
    bool morse_emit_pairs = false;

    auto add_common = [&](CLI::App* cmd, CommonArgs& args) {
        cmd->add_option("family", args.family_text, family_help)->required();
        cmd->add_option("--kind", args.kind,
                        "Complex kind: total (independent k-sets) or cut "
                        "(disconnecting k-sets); default total")
            ->check(CLI::IsMember({"total", "cut"}));
        cmd->add_option("-k,--k", args.k,
                        "Cut parameter k (default 2; cut kind needs k >= 2)");
        cmd->add_option("--format", args.format, format_help)
            ->check(format_validator);
    };

    CLI::App* facets_cmd =
        app.add_subcommand("facets", "List the facets of the complex");
    add_common(facets_cmd, facets_args);

    CLI::App* fvector_cmd =
        app.add_subcommand("fvector", "Face counts per dimension");
    add_common(fvector_cmd, fvector_args);

    CLI::App* betti_cmd = app.add_subcommand(
        "betti",
        "Reduced integer homology (ranks and torsion) of the complex");
    add_common(betti_cmd, betti_args);
    betti_cmd->add_option(
        "--dims", betti_dims,
        "Dimension window a..b (required when 2^n exceeds the face budget)");

    CLI::App* morse_cmd = app.add_subcommand(
        "morse",
        "Run the sequential element matchings and report critical cells; "
        "the default order is 0..n-1 (products: the first complete-factor "
        "row, flats 0..n-1)");
    add_common(morse_cmd, morse_args);
    morse_cmd
        ->add_option("--order", morse_order,
                     "Matching order v0,v1,... (flat vertex indices)")
        ->delimiter(',');
    morse_cmd->add_flag("--emit-pairs", morse_emit_pairs,
                        "Include the matched pairs in the output");

    std::string verify_suite = "all";
    int verify_budget = 0;
    int verify_jobs = 0;
    std::string verify_format = "json";
    std::string verify_out;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify",
        "Check theorems, reference tables, and conjectures; exits 1 on a "
        "required failure");
    verify_cmd
        ->add_option("--suite", verify_suite,
                     "theorems | tables | conjectures | all (default all)")
        ->check(CLI::IsMember({"theorems", "tables", "conjectures", "all"}));
    verify_cmd->add_option(
        "--budget", verify_budget,
        "Vertex budget: caps full homology, windowed homology, and matching "
        "runs (defaults 18/30/20)");
    verify_cmd->add_option("--jobs", verify_jobs,
                           "Worker pool size (default: hardware parallelism)");
    verify_cmd->add_option("--format", verify_format, format_help)
        ->check(format_validator);
    verify_cmd->add_option("--out", verify_out,
                           "Write the report here instead of stdout");

    std::string sweep_family;
    std::string sweep_n, sweep_p, sweep_m;
    int sweep_budget = 0;
    int sweep_jobs = 0;
    std::string sweep_format = "json";
    std::string sweep_out;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep",
        "Check a parameter grid of one family against its closed forms");
    sweep_cmd
        ->add_option("--family", sweep_family,
                     "cycle_power | complete_path | complete_cycle")
        ->required();
    sweep_cmd->add_option("--n", sweep_n, "Range a..b for n");
    sweep_cmd->add_option("--p", sweep_p, "Range a..b for p (cycle_power)");
    sweep_cmd->add_option("--m", sweep_m, "Range a..b for m (products)");
    sweep_cmd->add_option("--budget", sweep_budget,
                          "Vertex budget (see verify --budget)");
    sweep_cmd->add_option("--jobs", sweep_jobs,
                          "Worker pool size (default: hardware parallelism)");
    sweep_cmd->add_option("--format", sweep_format, format_help)
        ->check(format_validator);
    sweep_cmd->add_option("--out", sweep_out,
                          "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(facets_cmd)) return cmd_facets(facets_args);
        if (app.got_subcommand(fvector_cmd)) return cmd_fvector(fvector_args);
        if (app.got_subcommand(betti_cmd))
            return cmd_betti(betti_args, betti_dims);
        if (app.got_subcommand(morse_cmd))
            return cmd_morse(morse_args, morse_order, morse_emit_pairs);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(verify_suite, verify_budget, verify_jobs,
                              verify_format, verify_out);
        if (app.got_subcommand(sweep_cmd))
            return cmd_sweep(sweep_family, sweep_n, sweep_p, sweep_m,
                             sweep_budget, sweep_jobs, sweep_format,
                             sweep_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cutcomplex::FamilyParseError& e) {
        std::cerr << "error: invalid family expression " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        // unreadable files, malformed edge lists, and similar input trouble
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
