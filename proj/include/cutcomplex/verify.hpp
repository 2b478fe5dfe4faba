#pragma once

#include <map>
#include <string>
#include <vector>

namespace cutcomplex {

// Resource ceilings for verification runs.  The three vertex budgets gate
// which method a check may use; `faces` caps full-range homology enumeration
// (the CUTCOMPLEX_BUDGET environment variable, when set, overrides it at the
// CLI layer).  `jobs` sizes the worker pool; 0 means "ask the hardware".
struct Budget {
    int full_homology = 18;      // vertices: full-range homology
    int window = 30;             // vertices: windowed top-dimension homology
    int morse = 20;              // vertices: matching runs (2^n face table)
    long long faces = 1ll << 20; // face-count cap for full-range homology
    int jobs = 0;

    // All three vertex budgets clamped to `vertex_cap` (the CLI --budget N).
    static Budget capped(int vertex_cap);
};

// One verifiable statement: a named family instance plus what the closed
// form predicts for it.  `regime` records the guard that admitted it.
struct Claim {
    std::string id;
    std::string family;
    std::vector<long long> params;
    std::string regime;
    std::string expected;
};

// Outcome of checking one claim.
//   result: "pass" | "fail" | "skipped"            (theorem/table claims)
//           "agree" | "disagree" | "skipped"       (conjecture claims)
//   method: comma-free summary such as "morse+homology", "homology-window",
//           "membership", or "none" for skips.
struct VerificationReport {
    std::string id;
    std::string family;
    std::vector<long long> params;
    std::string method;
    std::string result;
    std::string expected;
    std::string computed;
    std::string reason;          // skip reason or failure detail
    bool conjecture = false;     // agree/disagree vocabulary
    bool table_backed = false;   // disagreement here fails a build
    bool interpreted = false;    // a bare Z in the table was read as Z^1
    std::string r_comparison;    // "exact-rational" on middle-regime checks
    double seconds = 0.0;
};

// --- Reference-table access ---------------------------------------------

// One cell of a reference table.  `groups` lists the nonzero reduced
// homology as (dimension, rank) pairs; `unknown` marks entries the
// reference leaves open (*); `void_entry` marks an expected void complex.
struct TableCell {
    int row = 0;  // n (table 1) or m (tables 2-5)
    int col = 0;  // p (table 1) or n (tables 2-5)
    std::vector<std::pair<int, long long>> groups;
    bool unknown = false;
    bool void_entry = false;
    bool conjectured_region = false;  // table 1: no theorem covers the cell
    bool interpreted = false;         // some rank was printed as a bare Z
};

struct ReferenceTable {
    int id = 0;
    std::string title;       // e.g. "total 2-cut complexes of cycle powers"
    std::string row_label;   // "n" or "m"
    std::string col_label;   // "p" or "n"
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<TableCell> cells;  // row-major over rows x cols

    const TableCell* find(int row, int col) const;
};

// The five frozen tables of computed homology this project verifies
// against (ids 1..5).  Throws std::out_of_range for other ids.
const ReferenceTable& reference_table(int id);

// --- Individual checks ----------------------------------------------------

// Total 2-cut complex of the p-th power of an n-cycle, theorem regimes:
// void for n < 2p+2, a single (n-4)/2-sphere at n = 2p+2, a single
// (n-4)-sphere for n >= 3p+1.  Runs the canonical matching (acyclicity
// verified, critical cells diffed against the closed form) within the morse
// budget and homology within the homology budgets.  The middle regime
// 2p+3 <= n <= 3p is skipped here; see check_cycle_power_middle.
VerificationReport check_cycle_power(int n, int p, const Budget& budget);

// Middle regime 2p+3 <= n <= 3p (conjectured): with r = floor(p/(n-2p)),
// expects a wedge of n-2p-1 spheres of dimension n-2r-3 when r(n-2p) = p
// and a single (n-2r-4)-sphere otherwise.  All regime arithmetic is exact
// (integer/rational); reports agree/disagree, never pass/fail.
VerificationReport check_cycle_power_middle(int n, int p, const Budget& budget);

// Total 2-cut complex of complete x path (m,n >= 2): wedge of (m-1)(n-1)
// spheres of dimension mn-4.  Morse within the morse budget; homology full
// when mn fits the full budget, top-window otherwise up to the window budget.
VerificationReport check_km_pn(int m, int n, const Budget& budget);

// Total 2-cut complex of complete x cycle (m >= 2, n >= 4): wedge of
// n(m-1)+1 spheres of dimension mn-4.  Same method policy as check_km_pn.
VerificationReport check_km_cn(int m, int n, const Budget& budget);

// Recomputes every known entry of reference table `table_id` whose complex
// fits the budgets and diffs computed homology against the table.  Unknown
// (*) cells, blank cells, and over-budget cells are reported skipped with
// the reason.  Expected-void cells are verified by membership.
std::vector<VerificationReport> check_table(int table_id, const Budget& budget);

// Conjectured Betti formulas for the four product families.
enum class ProductConjecture {
    total3_path,   // total 3-cut of complete x path
    cut3_path,     // 3-cut of complete x path
    total3_cycle,  // total 3-cut of complete x cycle
    cut3_cycle,    // 3-cut of complete x cycle
};

// Evaluates the conjectured formula at (m,n) and diffs it against computed
// homology within the budgets.  Out-of-regime parameters are skipped.
// `table_backed` is set when (m,n) is a known cell of the matching table.
VerificationReport check_conjectures_products(ProductConjecture which, int m,
                                              int n, const Budget& budget);

// --- Suites ----------------------------------------------------------------

enum class Suite { theorems, tables, conjectures, all };

Suite parse_suite(const std::string& name);  // throws std::invalid_argument

// Runs a suite over its fixed claim grid using a worker pool of
// budget.jobs threads; reports are merged deterministically (stable family
// + parameter order, independent of scheduling).
std::vector<VerificationReport> run_suite(Suite suite, const Budget& budget);

// True when `reports` contains a failure that should fail a build: any
// "fail", or a "disagree" on a table-backed conjecture point.
bool has_required_failure(const std::vector<VerificationReport>& reports);

// --- Rendering -------------------------------------------------------------

// JSON array, one object per report:
//   {id, family, params, method, result, expected, computed, seconds}
// plus reason/interpreted/r_comparison when set.  Deterministic key order.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

// CSV with a fixed header, one row per report.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

// Markdown: table-entry reports are laid out as grids mirroring the
// reference tables (rows x cols) for visual diffing; everything else is
// rendered as a flat results table.
std::string reports_to_markdown(const std::vector<VerificationReport>& reports);

}  // namespace cutcomplex
