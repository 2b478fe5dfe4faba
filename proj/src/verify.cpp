#include "cutcomplex/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "cutcomplex/complex.hpp"
#include "cutcomplex/graph.hpp"
#include "cutcomplex/homology.hpp"
#include "cutcomplex/morse.hpp"

namespace cutcomplex {

namespace {

using BettiMap = std::map<int, long long>;

constexpr const char* kPass = "pass";
constexpr const char* kFail = "fail";
constexpr const char* kSkipped = "skipped";
constexpr const char* kAgree = "agree";
constexpr const char* kDisagree = "disagree";

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

std::string make_id(const std::string& prefix,
                    const std::vector<long long>& params) {
    std::string out = prefix + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(params[i]);
    }
    return out + ")";
}

std::string fmt_betti(const BettiMap& betti) {
    if (betti.empty()) return "{}";
    std::string out = "{";
    bool first = true;
    for (const auto& [d, b] : betti) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(d) + ":" + std::to_string(b);
    }
    return out + "}";
}

// Exact halving for the conjectured formulas; a remainder would mean the
// formula was transcribed wrongly, which should surface loudly.
long long half(long long v) {
    if (v % 2 != 0)
        throw std::logic_error("conjectured formula produced an odd double");
    return v / 2;
}

// ---------------------------------------------------------------------------
// Reference tables
// ---------------------------------------------------------------------------

using Groups = std::vector<std::pair<int, long long>>;

TableCell known_cell(int row, int col, Groups groups, bool interpreted) {
    TableCell c;
    c.row = row;
    c.col = col;
    c.groups = std::move(groups);
    c.interpreted = interpreted;
    return c;
}

TableCell colored_cell(int row, int col, Groups groups, bool interpreted) {
    TableCell c = known_cell(row, col, std::move(groups), interpreted);
    c.conjectured_region = true;
    return c;
}

TableCell star_cell(int row, int col) {
    TableCell c;
    c.row = row;
    c.col = col;
    c.unknown = true;
    return c;
}

TableCell void_cell(int row, int col) {
    TableCell c;
    c.row = row;
    c.col = col;
    c.void_entry = true;
    return c;
}

ReferenceTable build_table_1() {
    ReferenceTable t;
    t.id = 1;
    t.title = "total 2-cut complexes of cycle powers";
    t.row_label = "n";
    t.col_label = "p";
    t.rows = {8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18,
              19, 20, 21, 22, 23, 24, 25};
    t.cols = {3, 4, 5, 6, 7, 8};
    auto& c = t.cells;
    // single sphere printed with a bare rank
    auto one = [&](int n, int p, int dim) {
        c.push_back(known_cell(n, p, {{dim, 1}}, true));
    };
    auto cone = [&](int n, int p, int dim) {
        c.push_back(colored_cell(n, p, {{dim, 1}}, true));
    };
    auto coneb = [&](int n, int p, int dim, long long beta) {
        c.push_back(colored_cell(n, p, {{dim, beta}}, false));
    };
    one(8, 3, 2);
    coneb(9, 3, 4, 2);
    one(10, 3, 6);
    one(10, 4, 3);
    one(11, 3, 7);
    cone(11, 4, 5);
    one(12, 3, 8);
    coneb(12, 4, 7, 3);
    one(12, 5, 4);
    one(13, 3, 9);
    one(13, 4, 9);
    cone(13, 5, 7);
    one(14, 3, 10);
    one(14, 4, 10);
    cone(14, 5, 8);
    one(14, 6, 5);
    one(15, 3, 11);
    one(15, 4, 11);
    coneb(15, 5, 10, 4);
    coneb(15, 6, 8, 2);
    one(16, 3, 12);
    one(16, 4, 12);
    one(16, 5, 12);
    cone(16, 6, 10);
    one(16, 7, 6);
    one(17, 3, 13);
    one(17, 4, 13);
    one(17, 5, 13);
    cone(17, 6, 11);
    cone(17, 7, 9);
    one(18, 3, 14);
    one(18, 4, 14);
    one(18, 5, 14);
    coneb(18, 6, 13, 5);
    cone(18, 7, 12);
    one(18, 8, 7);
    for (int p = 3; p <= 6; ++p) one(19, p, 15);
    cone(19, 7, 13);
    cone(19, 8, 11);
    for (int p = 3; p <= 6; ++p) one(20, p, 16);
    cone(20, 7, 14);
    coneb(20, 8, 13, 3);
    for (int p = 3; p <= 6; ++p) one(21, p, 17);
    coneb(21, 7, 16, 6);
    cone(21, 8, 15);
    for (int p = 3; p <= 7; ++p) one(22, p, 18);
    cone(22, 8, 16);
    for (int p = 3; p <= 7; ++p) one(23, p, 19);
    cone(23, 8, 17);
    for (int p = 3; p <= 7; ++p) one(24, p, 20);
    coneb(24, 8, 19, 7);
    for (int p = 3; p <= 8; ++p) one(25, p, 21);
    return t;
}

ReferenceTable build_table_2() {
    ReferenceTable t;
    t.id = 2;
    t.title = "total 3-cut complexes of complete x path products";
    t.row_label = "m";
    t.col_label = "n";
    t.rows = {2, 3, 4, 5, 6, 7};
    t.cols = {3, 4, 5, 6, 7};
    auto& c = t.cells;
    auto g = [&](int m, int n, Groups groups) {
        c.push_back(known_cell(m, n, std::move(groups), false));
    };
    c.push_back(known_cell(2, 3, {{0, 1}}, true));
    g(2, 4, {{2, 3}});
    g(2, 5, {{4, 6}});
    g(2, 6, {{6, 10}});
    g(2, 7, {{8, 15}});
    g(3, 3, {{3, 4}});
    g(3, 4, {{6, 12}});
    g(3, 5, {{9, 24}});
    g(3, 6, {{12, 40}});
    g(3, 7, {{15, 60}});
    g(4, 3, {{6, 9}});
    g(4, 4, {{10, 27}});
    g(4, 5, {{14, 54}});
    c.push_back(star_cell(4, 6));
    c.push_back(star_cell(4, 7));
    g(5, 3, {{9, 16}});
    g(5, 4, {{14, 48}});
    for (int n = 5; n <= 7; ++n) c.push_back(star_cell(5, n));
    g(6, 3, {{12, 25}});
    g(6, 4, {{18, 75}});
    for (int n = 5; n <= 7; ++n) c.push_back(star_cell(6, n));
    g(7, 3, {{15, 36}});
    for (int n = 4; n <= 7; ++n) c.push_back(star_cell(7, n));
    return t;
}

ReferenceTable build_table_3() {
    ReferenceTable t;
    t.id = 3;
    t.title = "3-cut complexes of complete x path products";
    t.row_label = "m";
    t.col_label = "n";
    t.rows = {3, 4, 5, 6};
    t.cols = {3, 4, 5, 6};
    auto& c = t.cells;
    auto g = [&](int m, int n, Groups groups) {
        c.push_back(known_cell(m, n, std::move(groups), false));
    };
    g(3, 3, {{4, 2}, {5, 6}});
    g(3, 4, {{7, 3}, {8, 21}});
    g(3, 5, {{10, 4}, {11, 45}});
    g(3, 6, {{13, 5}, {14, 78}});
    g(4, 3, {{7, 6}, {8, 12}});
    g(4, 4, {{11, 9}, {12, 40}});
    g(4, 5, {{15, 12}, {16, 84}});
    c.push_back(star_cell(4, 6));
    g(5, 3, {{10, 12}, {11, 20}});
    g(5, 4, {{15, 18}, {16, 65}});
    c.push_back(star_cell(5, 5));
    c.push_back(star_cell(5, 6));
    g(6, 3, {{13, 20}, {14, 30}});
    for (int n = 4; n <= 6; ++n) c.push_back(star_cell(6, n));
    return t;
}

ReferenceTable build_table_4() {
    ReferenceTable t;
    t.id = 4;
    t.title = "total 3-cut complexes of complete x cycle products";
    t.row_label = "m";
    t.col_label = "n";
    t.rows = {2, 3, 4, 5, 6, 7};
    t.cols = {3, 4, 5, 6, 7, 8, 9, 10};
    auto& c = t.cells;
    auto g = [&](int m, int n, Groups groups) {
        c.push_back(known_cell(m, n, std::move(groups), false));
    };
    c.push_back(void_cell(2, 3));
    g(2, 4, {{2, 9}});
    g(2, 5, {{4, 14}});
    g(2, 6, {{6, 22}});
    g(2, 7, {{8, 29}});
    g(2, 8, {{10, 37}});
    g(2, 9, {{12, 46}});
    g(2, 10, {{14, 56}});
    c.push_back(known_cell(3, 3, {{3, 1}}, true));
    g(3, 4, {{6, 30}});
    g(3, 5, {{9, 48}});
    g(3, 6, {{12, 73}});
    g(3, 7, {{15, 99}});
    for (int n = 8; n <= 10; ++n) c.push_back(star_cell(3, n));
    g(4, 3, {{6, 3}});
    g(4, 4, {{10, 63}});
    g(4, 5, {{14, 102}});
    for (int n = 6; n <= 10; ++n) c.push_back(star_cell(4, n));
    g(5, 3, {{9, 6}});
    g(5, 4, {{14, 108}});
    for (int n = 5; n <= 10; ++n) c.push_back(star_cell(5, n));
    g(6, 3, {{12, 10}});
    g(6, 4, {{18, 165}});
    for (int n = 5; n <= 10; ++n) c.push_back(star_cell(6, n));
    g(7, 3, {{15, 15}});
    for (int n = 4; n <= 10; ++n) c.push_back(star_cell(7, n));
    return t;
}

ReferenceTable build_table_5() {
    ReferenceTable t;
    t.id = 5;
    t.title = "3-cut complexes of complete x cycle products";
    t.row_label = "m";
    t.col_label = "n";
    t.rows = {2, 3, 4, 5};
    t.cols = {4, 5, 6, 7, 8};
    auto& c = t.cells;
    auto g = [&](int m, int n, Groups groups) {
        c.push_back(known_cell(m, n, std::move(groups), false));
    };
    c.push_back(known_cell(2, 4, {{3, 1}, {4, 4}}, true));
    g(2, 5, {{6, 11}});
    g(2, 6, {{8, 25}});
    g(2, 7, {{10, 43}});
    g(2, 8, {{12, 65}});
    g(3, 4, {{7, 6}, {8, 12}});
    g(3, 5, {{10, 5}, {11, 31}});
    g(3, 6, {{13, 6}, {14, 64}});
    c.push_back(star_cell(3, 7));
    c.push_back(star_cell(3, 8));
    g(4, 4, {{11, 15}, {12, 24}});
    g(4, 5, {{15, 15}, {16, 61}});
    for (int n = 6; n <= 8; ++n) c.push_back(star_cell(4, n));
    g(5, 4, {{15, 28}, {16, 40}});
    for (int n = 5; n <= 8; ++n) c.push_back(star_cell(5, n));
    return t;
}

// Table id -> (family string, complex kind, k, graph builder).
struct TableFamily {
    const char* family;
    ComplexKind kind;
    int k;
};

TableFamily table_family(int table_id) {
    switch (table_id) {
        case 1: return {"cycle_power", ComplexKind::total_cut, 2};
        case 2: return {"complete_path_product", ComplexKind::total_cut, 3};
        case 3: return {"complete_path_product", ComplexKind::cut, 3};
        case 4: return {"complete_cycle_product", ComplexKind::total_cut, 3};
        case 5: return {"complete_cycle_product", ComplexKind::cut, 3};
        default:
            throw std::out_of_range("reference table id must be 1..5");
    }
}

Graph table_graph(int table_id, int row, int col) {
    if (table_id == 1) return cycle_power(/*n=*/row, /*p=*/col);
    if (table_id == 2 || table_id == 3)
        return cartesian_product(complete(row), path(col));
    return cartesian_product(complete(row), cycle(col));
}

int table_vertex_count(int table_id, int row, int col) {
    return table_id == 1 ? row : row * col;
}

// ---------------------------------------------------------------------------
// Computation helpers shared by the checks
// ---------------------------------------------------------------------------

struct PartResult {
    bool ran = false;
    bool ok = false;
    std::string method;
    std::string computed;
    std::string detail;  // first mismatch, empty when ok
};

// Compares computed homology against `expected` (nonzero reduced Betti
// numbers; everything else must vanish, no torsion anywhere). Full-range
// within the full budget, a window around the expected dimensions within the
// window budget, otherwise not run.
PartResult homology_part(const ComplexSpec& spec, const BettiMap& expected,
                         const Budget& budget) {
    PartResult part;
    const int n = spec.vertex_count();
    HomologyOptions options;
    options.face_budget = budget.faces;
    const bool full_ok =
        n <= budget.full_homology && n < 62 && (1ll << n) <= budget.faces;
    if (full_ok) {
        part.ran = true;
        part.method = "homology";
        BettiReport report = reduced_homology(spec, std::nullopt, options);
        BettiMap got;
        for (int d = report.dim_low; d <= report.dim_high; ++d) {
            if (report.beta(d) != 0) got[d] = report.beta(d);
        }
        part.computed = "betti " + fmt_betti(got);
        part.ok = got == expected;
        if (!part.ok) {
            part.detail = "computed betti " + fmt_betti(got) +
                          " != expected " + fmt_betti(expected);
        }
        if (report.any_torsion()) {
            part.ok = false;
            part.computed += " with torsion";
            if (part.detail.empty()) part.detail = "unexpected torsion";
        }
        if (part.ok && !euler_characteristic_check(spec, report)) {
            part.ok = false;
            part.detail = "Euler characteristic mismatch";
        }
        return part;
    }
    if (n <= budget.window && !expected.empty()) {
        part.ran = true;
        part.method = "homology-window";
        const int top = spec.top_dim();
        int lo = std::max(expected.begin()->first - 1, 0);
        int hi = std::min(expected.rbegin()->first + 1, top);
        if (lo > hi) lo = hi;
        BettiReport report =
            reduced_homology(spec, std::make_pair(lo, hi), options);
        part.ok = true;
        BettiMap got;
        for (int d = lo; d <= hi; ++d) {
            got[d] = report.beta(d);
            const long long want =
                expected.count(d) ? expected.at(d) : 0;
            if (report.beta(d) != want) part.ok = false;
            if (!report.torsion(d).empty()) {
                part.ok = false;
                if (part.detail.empty())
                    part.detail =
                        "unexpected torsion in dimension " + std::to_string(d);
            }
        }
        part.computed = "betti " + fmt_betti(got) + " on window [" +
                        std::to_string(lo) + "," + std::to_string(hi) + "]";
        if (!part.ok && part.detail.empty()) {
            part.detail = "windowed betti " + fmt_betti(got) +
                          " != expected " + fmt_betti(expected);
        }
        return part;
    }
    return part;
}

std::string render_cells(const std::vector<VertexSet>& cells,
                         std::size_t limit = 6) {
    std::string out = "[";
    for (std::size_t i = 0; i < cells.size() && i < limit; ++i) {
        if (i) out += ", ";
        out += cells[i].to_string();
    }
    if (cells.size() > limit)
        out += ", ... (" + std::to_string(cells.size()) + " total)";
    return out + "]";
}

// Canonical matching run: verifies acyclicity, diffs the critical cells
// against the closed form, and demands the wedge claim (count, dim).
PartResult morse_part(const ComplexSpec& spec, const std::vector<int>& order,
                      CriticalFamily family, int a, int b, long long count,
                      int dim, const Budget& budget) {
    PartResult part;
    const int n = spec.vertex_count();
    if (n > budget.morse || n > kFaceTableMaxVertices) return part;
    part.ran = true;
    part.method = "morse";
    MorseData data = run_element_matchings(spec, order);
    AcyclicityCheck acyclic = verify_acyclic(spec, data);
    if (!acyclic.ok) {
        part.detail = "matching digraph contains a cycle of " +
                      std::to_string(acyclic.witness.size()) + " faces";
        part.computed = "non-acyclic matching";
        return part;
    }
    std::vector<VertexSet> critical = data.critical;
    std::vector<VertexSet> predicted = predicted_critical_cells(family, a, b);
    std::sort(critical.begin(), critical.end());
    std::sort(predicted.begin(), predicted.end());
    if (critical != predicted) {
        part.detail = "critical cells " + render_cells(critical) +
                      " != closed form " + render_cells(predicted);
        part.computed = "critical " + render_cells(critical);
        return part;
    }
    HomotopyClaim claim = homotopy_claim(data, acyclic);
    if (claim.kind != HomotopyClaim::Kind::wedge || claim.count != count ||
        claim.dim != dim) {
        part.detail = "matching certifies '" + to_string(claim) +
                      "', expected a wedge of " + std::to_string(count) +
                      " spheres of dimension " + std::to_string(dim);
        part.computed = to_string(claim);
        return part;
    }
    part.ok = true;
    part.computed = std::to_string(critical.size()) +
                    " critical cells of dimension " + std::to_string(dim) +
                    ", acyclic, matching the closed form";
    return part;
}

// Merges part outcomes into the report. Any executed-and-failed part fails;
// nothing executed => skipped for the given reason.
void merge_parts(VerificationReport& r, const std::vector<PartResult>& parts,
                 bool as_conjecture) {
    std::vector<std::string> methods;
    std::string computed;
    bool any_ran = false;
    bool all_ok = true;
    for (const auto& part : parts) {
        if (!part.ran) continue;
        any_ran = true;
        methods.push_back(part.method);
        if (!computed.empty()) computed += "; ";
        computed += part.computed;
        if (!part.ok) {
            all_ok = false;
            if (r.reason.empty()) r.reason = part.detail;
        }
    }
    if (!any_ran) {
        r.method = "none";
        r.result = kSkipped;
        if (r.reason.empty()) r.reason = "beyond the vertex budgets";
        return;
    }
    std::string method;
    for (const auto& m : methods) {
        if (!method.empty()) method += "+";
        method += m;
    }
    r.method = method;
    r.computed = computed;
    r.result = all_ok ? (as_conjecture ? kAgree : kPass)
                      : (as_conjecture ? kDisagree : kFail);
}

std::vector<int> iota_order(int count) {
    std::vector<int> order(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) order[static_cast<std::size_t>(i)] = i;
    return order;
}

bool table_has_known_cell(int table_id, int row, int col) {
    const TableCell* cell = reference_table(table_id).find(row, col);
    return cell != nullptr && !cell->unknown && !cell->void_entry;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

Budget Budget::capped(int vertex_cap) {
    Budget b;
    b.full_homology = vertex_cap;
    b.window = vertex_cap;
    b.morse = vertex_cap;
    return b;
}

const TableCell* ReferenceTable::find(int row, int col) const {
    for (const TableCell& cell : cells) {
        if (cell.row == row && cell.col == col) return &cell;
    }
    return nullptr;
}

const ReferenceTable& reference_table(int id) {
    static const ReferenceTable t1 = build_table_1();
    static const ReferenceTable t2 = build_table_2();
    static const ReferenceTable t3 = build_table_3();
    static const ReferenceTable t4 = build_table_4();
    static const ReferenceTable t5 = build_table_5();
    switch (id) {
        case 1: return t1;
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
        case 5: return t5;
        default:
            throw std::out_of_range("reference table id must be 1..5");
    }
}

VerificationReport check_cycle_power(int n, int p, const Budget& budget) {
    Timer timer;
    VerificationReport r;
    r.family = "cycle_power";
    r.params = {n, p};
    r.id = make_id("thm-cycle-power", r.params);
    if (n < 3 || p < 1) {
        r.method = "none";
        r.result = kSkipped;
        r.reason = "parameters outside the family (need n >= 3, p >= 1)";
        r.seconds = timer.elapsed();
        return r;
    }
    ComplexSpec spec(cycle_power(n, p), ComplexKind::total_cut, 2);
    if (n < 2 * p + 2) {
        r.expected = "void complex";
        r.method = "membership";
        const bool is_void = spec.is_void();
        r.computed = is_void ? "void complex" : "nonvoid complex";
        r.result = is_void ? kPass : kFail;
        if (!is_void) r.reason = "expected a void complex below n = 2p+2";
        r.seconds = timer.elapsed();
        return r;
    }
    if (n != 2 * p + 2 && n < 3 * p + 1) {
        r.method = "none";
        r.result = kSkipped;
        r.reason =
            "no closed form for 2p+3 <= n <= 3p; covered by "
            "conj-cycle-power-middle";
        r.seconds = timer.elapsed();
        return r;
    }
    const bool small_regime = n == 2 * p + 2;
    const int dim = small_regime ? (n - 4) / 2 : n - 4;
    const CriticalFamily family = small_regime
                                      ? CriticalFamily::cycle_power_small_n
                                      : CriticalFamily::cycle_power_large_n;
    HomotopyClaim claim;
    claim.kind = HomotopyClaim::Kind::wedge;
    claim.count = 1;
    claim.dim = dim;
    r.expected = to_string(claim);
    std::vector<PartResult> parts;
    parts.push_back(
        morse_part(spec, iota_order(n), family, n, p, 1, dim, budget));
    parts.push_back(homology_part(spec, {{dim, 1}}, budget));
    merge_parts(r, parts, /*as_conjecture=*/false);
    r.seconds = timer.elapsed();
    return r;
}

VerificationReport check_cycle_power_middle(int n, int p,
                                            const Budget& budget) {
    Timer timer;
    VerificationReport r;
    r.family = "cycle_power";
    r.params = {n, p};
    r.id = make_id("conj-cycle-power-middle", r.params);
    r.conjecture = true;
    r.r_comparison = "exact-rational";
    if (p < 1 || n < 2 * p + 3 || n > 3 * p) {
        r.method = "none";
        r.result = kSkipped;
        r.reason = "outside the middle regime 2p+3 <= n <= 3p";
        r.seconds = timer.elapsed();
        return r;
    }
    // r is the unique positive integer with 2p + p/(r+1) < n <= 2p + p/r;
    // both comparisons are done in exact integer arithmetic.
    const int gap = n - 2 * p;  // >= 3
    const int rr = p / gap;
    if (!(rr >= 1 && static_cast<long long>(rr) * gap <= p &&
          static_cast<long long>(rr + 1) * gap > p)) {
        throw std::logic_error("middle-regime bracketing failed");
    }
    const bool boundary = rr * gap == p;  // n == 2p + p/r exactly
    BettiMap expected;
    if (boundary) {
        expected[n - 2 * rr - 3] = gap - 1;  // wedge of n-2p-1 spheres
    } else {
        expected[n - 2 * rr - 4] = 1;  // single sphere
    }
    r.expected = std::string("r=") + std::to_string(rr) +
                 (boundary ? " (boundary case r(n-2p)=p): betti "
                           : " (interior case): betti ") +
                 fmt_betti(expected);
    r.table_backed = [&] {
        const TableCell* cell = reference_table(1).find(n, p);
        return cell != nullptr && !cell->unknown && !cell->void_entry;
    }();
    ComplexSpec spec(cycle_power(n, p), ComplexKind::total_cut, 2);
    std::vector<PartResult> parts{homology_part(spec, expected, budget)};
    merge_parts(r, parts, /*as_conjecture=*/true);
    r.seconds = timer.elapsed();
    return r;
}

VerificationReport check_km_pn(int m, int n, const Budget& budget) {
    Timer timer;
    VerificationReport r;
    r.family = "complete_path_product";
    r.params = {m, n};
    r.id = make_id("thm-complete-path", r.params);
    if (m < 2 || n < 2) {
        r.method = "none";
        r.result = kSkipped;
        r.reason = "theorem needs m, n >= 2";
        r.seconds = timer.elapsed();
        return r;
    }
    const int vertices = m * n;
    const int dim = vertices - 4;
    const long long count =
        static_cast<long long>(m - 1) * static_cast<long long>(n - 1);
    ComplexSpec spec(cartesian_product(complete(m), path(n)),
                     ComplexKind::total_cut, 2);
    HomotopyClaim claim;
    claim.kind = HomotopyClaim::Kind::wedge;
    claim.count = count;
    claim.dim = dim;
    r.expected = to_string(claim);
    std::vector<PartResult> parts;
    parts.push_back(morse_part(spec, iota_order(n),
                               CriticalFamily::complete_path_product, m, n,
                               count, dim, budget));
    parts.push_back(homology_part(spec, {{dim, count}}, budget));
    merge_parts(r, parts, /*as_conjecture=*/false);
    r.seconds = timer.elapsed();
    return r;
}

VerificationReport check_km_cn(int m, int n, const Budget& budget) {
    Timer timer;
    VerificationReport r;
    r.family = "complete_cycle_product";
    r.params = {m, n};
    r.id = make_id("thm-complete-cycle", r.params);
    if (m < 2 || n < 4) {
        r.method = "none";
        r.result = kSkipped;
        r.reason = "theorem needs m >= 2 and n >= 4";
        r.seconds = timer.elapsed();
        return r;
    }
    const int vertices = m * n;
    const int dim = vertices - 4;
    const long long count =
        static_cast<long long>(n) * static_cast<long long>(m - 1) + 1;
    ComplexSpec spec(cartesian_product(complete(m), cycle(n)),
                     ComplexKind::total_cut, 2);
    HomotopyClaim claim;
    claim.kind = HomotopyClaim::Kind::wedge;
    claim.count = count;
    claim.dim = dim;
    r.expected = to_string(claim);
    std::vector<PartResult> parts;
    parts.push_back(morse_part(spec, iota_order(n),
                               CriticalFamily::complete_cycle_product, m, n,
                               count, dim, budget));
    parts.push_back(homology_part(spec, {{dim, count}}, budget));
    merge_parts(r, parts, /*as_conjecture=*/false);
    r.seconds = timer.elapsed();
    return r;
}

namespace {

VerificationReport check_table_cell(int table_id, int row, int col,
                                    const Budget& budget) {
    Timer timer;
    const ReferenceTable& table = reference_table(table_id);
    const TableFamily fam = table_family(table_id);
    VerificationReport r;
    r.family = fam.family;
    r.params = {row, col};
    r.id = make_id("table-" + std::to_string(table_id) + "-entry", r.params);
    r.table_backed = true;
    const TableCell* cell = table.find(row, col);
    if (cell == nullptr) {
        r.method = "none";
        r.result = kSkipped;
        r.expected = "void complex";
        r.reason = "blank entry (void complex in the reference data)";
        r.seconds = timer.elapsed();
        return r;
    }
    if (cell->unknown) {
        r.method = "none";
        r.result = kSkipped;
        r.expected = "*";
        r.reason = "entry not known in the reference data";
        r.seconds = timer.elapsed();
        return r;
    }
    if (cell->void_entry) {
        r.expected = "void complex";
        r.method = "membership";
        ComplexSpec spec(table_graph(table_id, row, col), fam.kind, fam.k);
        const bool is_void = spec.is_void();
        r.computed = is_void ? "void complex" : "nonvoid complex";
        r.result = is_void ? kPass : kFail;
        if (!is_void) r.reason = "reference data expects a void complex";
        r.seconds = timer.elapsed();
        return r;
    }
    r.interpreted = cell->interpreted;
    BettiMap expected;
    for (const auto& [d, b] : cell->groups) expected[d] = b;
    r.expected = "betti " + fmt_betti(expected);
    const int vertices = table_vertex_count(table_id, row, col);
    if (vertices > budget.window) {
        r.method = "none";
        r.result = kSkipped;
        r.reason = "beyond the vertex budget (" + std::to_string(vertices) +
                   " vertices)";
        r.seconds = timer.elapsed();
        return r;
    }
    ComplexSpec spec(table_graph(table_id, row, col), fam.kind, fam.k);
    std::vector<PartResult> parts{homology_part(spec, expected, budget)};
    merge_parts(r, parts, /*as_conjecture=*/false);
    r.seconds = timer.elapsed();
    return r;
}

}  // namespace

std::vector<VerificationReport> check_table(int table_id,
                                            const Budget& budget) {
    const ReferenceTable& table = reference_table(table_id);
    std::vector<VerificationReport> out;
    out.reserve(table.rows.size() * table.cols.size());
    for (int row : table.rows) {
        for (int col : table.cols) {
            out.push_back(check_table_cell(table_id, row, col, budget));
        }
    }
    return out;
}

VerificationReport check_conjectures_products(ProductConjecture which, int m,
                                              int n, const Budget& budget) {
    Timer timer;
    VerificationReport r;
    r.params = {m, n};
    r.conjecture = true;
    int table_id = 0;
    ComplexKind kind = ComplexKind::total_cut;
    bool is_cycle = false;
    switch (which) {
        case ProductConjecture::total3_path:
            r.family = "complete_path_product";
            r.id = make_id("conj-total3-path", r.params);
            table_id = 2;
            kind = ComplexKind::total_cut;
            break;
        case ProductConjecture::cut3_path:
            r.family = "complete_path_product";
            r.id = make_id("conj-cut3-path", r.params);
            table_id = 3;
            kind = ComplexKind::cut;
            break;
        case ProductConjecture::total3_cycle:
            r.family = "complete_cycle_product";
            r.id = make_id("conj-total3-cycle", r.params);
            table_id = 4;
            kind = ComplexKind::total_cut;
            is_cycle = true;
            break;
        case ProductConjecture::cut3_cycle:
            r.family = "complete_cycle_product";
            r.id = make_id("conj-cut3-cycle", r.params);
            table_id = 5;
            kind = ComplexKind::cut;
            is_cycle = true;
            break;
    }
    auto skip = [&](const std::string& reason) {
        r.method = "none";
        r.result = kSkipped;
        r.reason = reason;
        r.seconds = timer.elapsed();
        return r;
    };
    const long long mm = m;
    const long long nn = n;
    BettiMap expected;
    switch (which) {
        case ProductConjecture::total3_path:
            if (m < 2 || n < 3)
                return skip("conjectured formula needs m >= 2 and n >= 3");
            expected[m * n - 6] = half((nn - 1) * (nn - 2)) * (mm - 1) * (mm - 1);
            break;
        case ProductConjecture::cut3_path:
            if (m < 3 || n < 3)
                return skip("conjectured formula needs m, n >= 3");
            expected[m * n - 5] = half((mm - 1) * (mm - 2)) * (nn - 1);
            expected[m * n - 4] = half(mm * (mm * nn - mm - 2) * (nn - 2));
            break;
        case ProductConjecture::total3_cycle:
            if (m >= 3 && n == 3) {
                expected[3 * m - 6] = half((mm - 1) * (mm - 2));
            } else if (m >= 2 && (n == 4 || n == 5)) {
                expected[m * n - 6] =
                    half((mm - 1) *
                         ((mm - 1) * nn * nn - (mm - 3) * nn - 2));
            } else if (m >= 2 && n >= 6) {
                expected[m * n - 6] =
                    half((mm - 1) * (mm - 1) * nn * nn -
                         (mm - 1) * (mm - 3) * nn + 2);
            } else {
                return skip("no conjectured formula for these parameters");
            }
            break;
        case ProductConjecture::cut3_cycle:
            if (m >= 2 && n == 4) {
                expected[4 * m - 5] = 2 * mm * mm - 5 * mm + 3;
                expected[4 * m - 4] = 2 * mm * (mm - 1);
            } else if (m == 2 && n >= 5) {
                expected[2 * n - 4] = 2 * nn * nn - 8 * nn + 1;
            } else {
                return skip("no conjectured formula for these parameters");
            }
            break;
    }
    r.expected = "betti " + fmt_betti(expected) + " (conjectured)";
    r.table_backed = table_has_known_cell(table_id, m, n);
    Graph graph = is_cycle ? cartesian_product(complete(m), cycle(n))
                           : cartesian_product(complete(m), path(n));
    ComplexSpec spec(std::move(graph), kind, 3);
    std::vector<PartResult> parts{homology_part(spec, expected, budget)};
    merge_parts(r, parts, /*as_conjecture=*/true);
    r.seconds = timer.elapsed();
    return r;
}

Suite parse_suite(const std::string& name) {
    if (name == "theorems") return Suite::theorems;
    if (name == "tables") return Suite::tables;
    if (name == "conjectures") return Suite::conjectures;
    if (name == "all") return Suite::all;
    throw std::invalid_argument(
        "unknown suite '" + name +
        "' (expected theorems, tables, conjectures, or all)");
}

namespace {

using JobFn = std::function<std::vector<VerificationReport>()>;

std::vector<VerificationReport> run_jobs(std::vector<JobFn> jobs,
                                         int requested_workers) {
    std::vector<std::vector<VerificationReport>> slots(jobs.size());
    int workers = requested_workers > 0
                      ? requested_workers
                      : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers,
                                        static_cast<int>(jobs.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            slots[i] = jobs[i]();
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    std::vector<VerificationReport> out;
    for (auto& slot : slots) {
        for (auto& report : slot) out.push_back(std::move(report));
    }
    return out;
}

// Wraps a single-claim check so an unexpected exception becomes a visible
// failing report instead of killing the worker.
JobFn claim_job(std::string id, std::function<VerificationReport()> body) {
    return [id = std::move(id),
            body = std::move(body)]() -> std::vector<VerificationReport> {
        try {
            return {body()};
        } catch (const std::exception& e) {
            VerificationReport r;
            r.id = id;
            r.method = "none";
            r.result = kFail;
            r.reason = std::string("unexpected error: ") + e.what();
            return {r};
        }
    };
}

void add_theorem_jobs(std::vector<JobFn>& jobs, const Budget& budget) {
    for (int p = 1; p <= 6; ++p) {
        std::set<int> ns;
        ns.insert(2 * p + 2);
        for (int n = 3 * p + 1; n <= 20; ++n) ns.insert(n);
        for (int n : ns) {
            jobs.push_back(claim_job(
                make_id("thm-cycle-power", {n, p}),
                [n, p, budget] { return check_cycle_power(n, p, budget); }));
        }
    }
    for (int m = 2; 2 * m <= 16; ++m) {
        for (int n = 2; m * n <= 16; ++n) {
            jobs.push_back(claim_job(
                make_id("thm-complete-path", {m, n}),
                [m, n, budget] { return check_km_pn(m, n, budget); }));
        }
    }
    for (int m = 2; 4 * m <= 16; ++m) {
        for (int n = 4; m * n <= 16; ++n) {
            jobs.push_back(claim_job(
                make_id("thm-complete-cycle", {m, n}),
                [m, n, budget] { return check_km_cn(m, n, budget); }));
        }
    }
}

void add_table_jobs(std::vector<JobFn>& jobs, const Budget& budget) {
    for (int id = 1; id <= 5; ++id) {
        const ReferenceTable& table = reference_table(id);
        for (int row : table.rows) {
            for (int col : table.cols) {
                jobs.push_back(claim_job(
                    make_id("table-" + std::to_string(id) + "-entry",
                            {row, col}),
                    [id, row, col, budget] {
                        return check_table_cell(id, row, col, budget);
                    }));
            }
        }
    }
}

void add_conjecture_jobs(std::vector<JobFn>& jobs, const Budget& budget) {
    const ReferenceTable& t1 = reference_table(1);
    for (int row : t1.rows) {
        for (int col : t1.cols) {
            const TableCell* cell = t1.find(row, col);
            if (cell == nullptr || !cell->conjectured_region) continue;
            const int n = row, p = col;
            jobs.push_back(claim_job(
                make_id("conj-cycle-power-middle", {n, p}), [n, p, budget] {
                    return check_cycle_power_middle(n, p, budget);
                }));
        }
    }
    struct TableConjecture {
        int table_id;
        ProductConjecture which;
        const char* prefix;
    };
    const TableConjecture table_conjectures[] = {
        {2, ProductConjecture::total3_path, "conj-total3-path"},
        {3, ProductConjecture::cut3_path, "conj-cut3-path"},
        {4, ProductConjecture::total3_cycle, "conj-total3-cycle"},
        {5, ProductConjecture::cut3_cycle, "conj-cut3-cycle"},
    };
    for (const auto& tc : table_conjectures) {
        const ReferenceTable& table = reference_table(tc.table_id);
        for (int row : table.rows) {
            for (int col : table.cols) {
                if (!table_has_known_cell(tc.table_id, row, col)) continue;
                const auto which = tc.which;
                const int m = row, n = col;
                jobs.push_back(claim_job(
                    make_id(tc.prefix, {m, n}), [which, m, n, budget] {
                        return check_conjectures_products(which, m, n, budget);
                    }));
            }
        }
    }
}

}  // namespace

std::vector<VerificationReport> run_suite(Suite suite, const Budget& budget) {
    std::vector<JobFn> jobs;
    if (suite == Suite::theorems || suite == Suite::all)
        add_theorem_jobs(jobs, budget);
    if (suite == Suite::tables || suite == Suite::all)
        add_table_jobs(jobs, budget);
    if (suite == Suite::conjectures || suite == Suite::all)
        add_conjecture_jobs(jobs, budget);
    return run_jobs(std::move(jobs), budget.jobs);
}

bool has_required_failure(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (r.result == kFail) return true;
        if (r.result == kDisagree && r.table_backed) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

using nlohmann::ordered_json;

ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["id"] = r.id;
    j["family"] = r.family;
    j["params"] = r.params;
    j["method"] = r.method;
    j["result"] = r.result;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.conjecture) {
        j["conjecture"] = true;
        j["table_backed"] = r.table_backed;
    }
    if (r.interpreted) j["interpreted"] = true;
    if (!r.r_comparison.empty()) j["r_comparison"] = r.r_comparison;
    j["seconds"] = std::round(r.seconds * 1000.0) / 1000.0;
    return j;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string md_escape(const std::string& field) {
    std::string out;
    for (char ch : field) {
        if (ch == '|') out += "\\|";
        else out += ch;
    }
    return out;
}

// Parses "table-<id>-entry(row,col)" ids; returns 0 when the id is not a
// table entry.
int parse_table_entry_id(const VerificationReport& r) {
    const std::string prefix = "table-";
    if (r.id.rfind(prefix, 0) != 0 || r.params.size() != 2) return 0;
    const std::size_t dash = r.id.find('-', prefix.size());
    if (dash == std::string::npos ||
        r.id.compare(dash, 7, "-entry(") != 0)
        return 0;
    try {
        return std::stoi(r.id.substr(prefix.size(), dash - prefix.size()));
    } catch (...) {
        return 0;
    }
}

std::string grid_cell_text(const VerificationReport& r) {
    if (r.result == kSkipped) {
        if (r.expected == "*") return "*";
        if (r.reason.rfind("blank entry", 0) == 0) return "";
        return "skipped";
    }
    std::string body = r.expected;
    const std::string betti_prefix = "betti ";
    if (body.rfind(betti_prefix, 0) == 0) body = body.substr(betti_prefix.size());
    if (r.result == kPass || r.result == kAgree) return body + " ok";
    return body + " **" + r.result + "**";
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out =
        "id,family,params,method,result,expected,computed,reason,seconds\n";
    for (const auto& r : reports) {
        std::string params;
        for (std::size_t i = 0; i < r.params.size(); ++i) {
            if (i) params += " ";
            params += std::to_string(r.params[i]);
        }
        std::ostringstream seconds;
        seconds << std::round(r.seconds * 1000.0) / 1000.0;
        out += csv_escape(r.id) + "," + csv_escape(r.family) + "," +
               csv_escape(params) + "," + csv_escape(r.method) + "," +
               csv_escape(r.result) + "," + csv_escape(r.expected) + "," +
               csv_escape(r.computed) + "," + csv_escape(r.reason) + "," +
               seconds.str() + "\n";
    }
    return out;
}

std::string reports_to_markdown(
    const std::vector<VerificationReport>& reports) {
    // Group table-entry reports into per-table grids; everything else goes
    // into one flat results table, in input order.
    std::map<int, std::map<std::pair<int, int>, const VerificationReport*>>
        grids;
    std::vector<const VerificationReport*> flat;
    for (const auto& r : reports) {
        const int table_id = parse_table_entry_id(r);
        if (table_id >= 1 && table_id <= 5) {
            grids[table_id][{static_cast<int>(r.params[0]),
                             static_cast<int>(r.params[1])}] = &r;
        } else {
            flat.push_back(&r);
        }
    }
    std::string out;
    for (const auto& [table_id, cells] : grids) {
        const ReferenceTable& table = reference_table(table_id);
        out += "### Reference table " + std::to_string(table_id) + ": " +
               table.title + "\n\n";
        out += "| " + table.row_label + " \\ " + table.col_label + " |";
        for (int col : table.cols) out += " " + std::to_string(col) + " |";
        out += "\n|---|";
        for (std::size_t i = 0; i < table.cols.size(); ++i) out += "---|";
        out += "\n";
        for (int row : table.rows) {
            out += "| " + std::to_string(row) + " |";
            for (int col : table.cols) {
                const auto it = cells.find({row, col});
                out += " ";
                if (it != cells.end())
                    out += md_escape(grid_cell_text(*it->second));
                out += " |";
            }
            out += "\n";
        }
        out += "\n";
    }
    if (!flat.empty()) {
        out += "### Results\n\n";
        out += "| id | method | result | expected | computed | reason |\n";
        out += "|---|---|---|---|---|---|\n";
        for (const VerificationReport* r : flat) {
            out += "| " + md_escape(r->id) + " | " + md_escape(r->method) +
                   " | " + md_escape(r->result) + " | " +
                   md_escape(r->expected) + " | " + md_escape(r->computed) +
                   " | " + md_escape(r->reason) + " |\n";
        }
    }
    return out;
}

}  // namespace cutcomplex
