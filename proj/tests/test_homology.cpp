#include <array>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"

#include "cutcomplex/homology.hpp"

using namespace cutcomplex;

namespace {

Graph figure_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(1, 4);
    g.add_edge(4, 2);
    return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

std::vector<std::vector<Int>> to_dense(const SparseIntMatrix& m) {
    std::vector<std::vector<Int>> a(
        static_cast<std::size_t>(m.rows),
        std::vector<Int>(static_cast<std::size_t>(m.cols), Int(0)));
    for (const auto& e : m.entries)
        a[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] =
            e.value;
    return a;
}

// Deliberately naive dense Smith reduction (row/column operations with a
// smallest-entry pivot and explicit divisibility repair), used only to
// cross-check the production routine on small matrices.  Returns every
// invariant factor, including trivial ones.
std::vector<Int> dense_invariant_factors(std::vector<std::vector<Int>> a) {
    using boost::multiprecision::abs;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<Int> factors;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pr = 0, pc = 0;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (!found || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);

        bool leftovers = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            const Int q = a[i][t] / a[t][t];
            for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) leftovers = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            const Int q = a[t][j] / a[t][t];
            for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) leftovers = true;
        }
        if (leftovers) continue;  // rerun the step with a smaller pivot

        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj)
                        a[t][jj] += a[i][jj];
                    divides = false;
                }
        if (!divides) continue;
        factors.push_back(abs(a[t][t]));
        ++t;
    }
    return factors;
}

SparseIntMatrix diagonal(std::vector<long long> values) {
    SparseIntMatrix m;
    m.rows = m.cols = static_cast<long long>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0)
            m.add(static_cast<long long>(i), static_cast<long long>(i),
                  Int(values[i]));
    return m;
}

// a (r x m) composed with b (m x c); true iff the product vanishes
bool composes_to_zero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) return false;
    std::map<std::pair<long long, long long>, Int> product;
    std::multimap<long long, std::pair<long long, Int>> a_by_col;
    for (const auto& e : a.entries) a_by_col.insert({e.col, {e.row, e.value}});
    for (const auto& e : b.entries) {
        auto [first, last] = a_by_col.equal_range(e.row);
        for (auto it = first; it != last; ++it)
            product[{it->second.first, e.col}] += it->second.second * e.value;
    }
    for (const auto& [pos, value] : product)
        if (value != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("boundary matrices carry the simplicial signs") {
    ComplexSpec spec(cycle(4), ComplexKind::total_cut, 2);

    SparseIntMatrix d0 = boundary_matrix(spec, 0);
    CHECK(d0.rows == 1);
    CHECK(d0.cols == 4);
    CHECK(d0.entries.size() == 4);
    for (const auto& e : d0.entries) CHECK(e.value == 1);

    SparseIntMatrix d1 = boundary_matrix(spec, 1);
    CHECK(d1.rows == 4);
    CHECK(d1.cols == 2);
    // columns: {0,2} then {1,3}; rows: vertices in order
    std::map<std::pair<long long, long long>, Int> got;
    for (const auto& e : d1.entries) got[{e.row, e.col}] = e.value;
    std::map<std::pair<long long, long long>, Int> want{
        {{2, 0}, Int(1)}, {{0, 0}, Int(-1)},   // boundary of {0,2}
        {{3, 1}, Int(1)}, {{1, 1}, Int(-1)}};  // boundary of {1,3}
    CHECK(got == want);

    CHECK(smith_normal_form(d1).rank == 2);
    CHECK(rational_rank(d1) == 2);

    CHECK_THROWS_AS(boundary_matrix(spec, 2), std::invalid_argument);
    CHECK_THROWS_AS(boundary_matrix(spec, -1), std::invalid_argument);
    ComplexSpec void_spec(complete(3), ComplexKind::total_cut, 2);
    CHECK_THROWS_AS(boundary_matrix(void_spec, 0), std::invalid_argument);
}

TEST_CASE("consecutive boundary maps compose to zero") {
    std::vector<ComplexSpec> specs;
    specs.emplace_back(figure_graph(), ComplexKind::total_cut, 2);
    specs.emplace_back(cartesian_product(complete(3), path(3)),
                       ComplexKind::total_cut, 2);
    specs.emplace_back(cycle(7), ComplexKind::cut, 3);
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 3), 0.45);
        for (int k = 2; k <= 3; ++k) {
            ComplexSpec spec(g, ComplexKind::total_cut, k);
            if (!spec.is_void()) specs.push_back(spec);
            ComplexSpec cut_spec(g, ComplexKind::cut, k);
            if (!cut_spec.is_void()) specs.push_back(cut_spec);
        }
    }
    for (const ComplexSpec& spec : specs)
        for (int d = 1; d <= spec.top_dim(); ++d)
            CHECK(composes_to_zero(boundary_matrix(spec, d - 1),
                                   boundary_matrix(spec, d)));
}

TEST_CASE("smith form on fixed matrices") {
    {
        SparseIntMatrix m;  // 0 x 0
        SmithResult snf = smith_normal_form(m);
        CHECK(snf.rank == 0);
        CHECK(snf.invariants.empty());
        CHECK(rational_rank(m) == 0);
    }
    {
        SparseIntMatrix m;
        m.rows = 3;
        m.cols = 2;  // all zero
        SmithResult snf = smith_normal_form(m);
        CHECK(snf.rank == 0);
        CHECK(rational_rank(m) == 0);
    }
    {
        SparseIntMatrix m;
        m.rows = m.cols = 1;
        m.add(0, 0, Int(5));
        SmithResult snf = smith_normal_form(m);
        CHECK(snf.rank == 1);
        CHECK(snf.invariants == std::vector<Int>{Int(5)});
    }
    {
        SmithResult snf = smith_normal_form(diagonal({2, 3}));
        CHECK(snf.rank == 2);
        CHECK(snf.invariants == std::vector<Int>{Int(6)});
    }
    {
        SmithResult snf = smith_normal_form(diagonal({4, 6}));
        CHECK(snf.rank == 2);
        CHECK(snf.invariants == std::vector<Int>{Int(2), Int(12)});
    }
    {
        SmithResult snf = smith_normal_form(diagonal({1, 2, 4}));
        CHECK(snf.rank == 3);
        CHECK(snf.invariants == std::vector<Int>{Int(2), Int(4)});
    }
}

TEST_CASE("smith form of a projective-plane boundary has 2-torsion") {
    // 2-dimensional boundary map of the 6-vertex triangulation of the real
    // projective plane; its cokernel carries the Z/2
    const std::vector<std::array<int, 3>> triangles{
        {0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
    std::map<std::pair<int, int>, long long> edge_row;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) {
            const long long next = static_cast<long long>(edge_row.size());
            edge_row[{u, v}] = next;
        }
    SparseIntMatrix d2;
    d2.rows = 15;
    d2.cols = static_cast<long long>(triangles.size());
    for (std::size_t c = 0; c < triangles.size(); ++c) {
        const auto [a, b, cc] = triangles[c];
        d2.add(edge_row.at({b, cc}), static_cast<long long>(c), Int(1));
        d2.add(edge_row.at({a, cc}), static_cast<long long>(c), Int(-1));
        d2.add(edge_row.at({a, b}), static_cast<long long>(c), Int(1));
    }
    SmithResult snf = smith_normal_form(d2);
    CHECK(snf.rank == 10);
    CHECK(snf.invariants == std::vector<Int>{Int(2)});
    CHECK(rational_rank(d2) == 10);
}

TEST_CASE("smith form agrees with a naive dense reduction") {
    std::mt19937 rng(77013);
    std::uniform_int_distribution<int> value(-4, 4);
    std::bernoulli_distribution keep(0.4);
    for (int trial = 0; trial < 60; ++trial) {
        SparseIntMatrix m;
        m.rows = 3 + static_cast<long long>(rng() % 6);
        m.cols = 3 + static_cast<long long>(rng() % 6);
        for (long long r = 0; r < m.rows; ++r)
            for (long long c = 0; c < m.cols; ++c) {
                if (!keep(rng)) continue;
                const int v = value(rng);
                if (v != 0) m.add(r, c, Int(v));
            }
        const std::vector<Int> factors = dense_invariant_factors(to_dense(m));
        SmithResult snf = smith_normal_form(m);
        CHECK(snf.rank == static_cast<long long>(factors.size()));
        CHECK(rational_rank(m) == snf.rank);
        std::vector<Int> nontrivial;
        for (const Int& f : factors)
            if (f > 1) nontrivial.push_back(f);
        CHECK(snf.invariants == nontrivial);
    }
}

TEST_CASE("matrix dump round trip") {
    SparseIntMatrix m;
    m.rows = 3;
    m.cols = 4;
    m.add(0, 0, Int(7));
    m.add(2, 3, Int("-123456789012345678901234567890"));
    std::ostringstream out;
    write_matrix_dump(out, m);
    std::istringstream in(out.str());
    SparseIntMatrix back = read_matrix_dump(in);
    CHECK(back.rows == m.rows);
    CHECK(back.cols == m.cols);
    REQUIRE(back.entries.size() == 2);
    CHECK(back.entries[1].value == m.entries[1].value);
}

TEST_CASE("homology of the small worked examples") {
    {
        // two points: a 0-sphere
        ComplexSpec spec(cycle(4), ComplexKind::total_cut, 2);
        BettiReport report = reduced_homology(spec);
        CHECK(report.coverage == BettiReport::Coverage::full);
        CHECK(report.beta(-1) == 0);
        CHECK(report.beta(0) == 1);
        CHECK(report.beta(1) == 0);
        CHECK_FALSE(report.any_torsion());
        CHECK(euler_characteristic_check(spec, report));
    }
    {
        // the 5-vertex example is a circle
        ComplexSpec spec(figure_graph(), ComplexKind::total_cut, 2);
        BettiReport report = reduced_homology(spec);
        CHECK(report.beta(0) == 0);
        CHECK(report.beta(1) == 1);
        CHECK(report.beta(2) == 0);
        CHECK_FALSE(report.any_torsion());
        CHECK(euler_characteristic_check(spec, report));
    }
    {
        // a 2-sphere
        ComplexSpec spec(cycle_power(8, 3), ComplexKind::total_cut, 2);
        BettiReport report = reduced_homology(spec);
        for (int d = -1; d <= spec.top_dim(); ++d)
            CHECK(report.beta(d) == (d == 2 ? 1 : 0));
        CHECK(euler_characteristic_check(spec, report));
    }
    {
        // void complex
        ComplexSpec spec(complete(4), ComplexKind::total_cut, 2);
        BettiReport report = reduced_homology(spec);
        CHECK(report.coverage == BettiReport::Coverage::void_complex);
        CHECK(report.beta(0) == 0);
        CHECK(euler_characteristic_check(spec, report));
    }
    {
        // the complex {emptyset}: reduced homology Z in dimension -1
        ComplexSpec spec(Graph(2), ComplexKind::total_cut, 2);
        BettiReport report = reduced_homology(spec);
        CHECK(report.coverage == BettiReport::Coverage::empty_only);
        CHECK(report.beta(-1) == 1);
        CHECK(euler_characteristic_check(spec, report));
    }
}

TEST_CASE("windowed homology matches the full computation") {
    ComplexSpec spec(cycle_power(9, 3), ComplexKind::total_cut, 2);
    BettiReport full = reduced_homology(spec);
    CHECK(full.beta(4) == 2);

    BettiReport window = reduced_homology(spec, std::pair<int, int>{3, 5});
    CHECK(window.coverage == BettiReport::Coverage::window);
    CHECK(window.covers(3));
    CHECK(window.covers(5));
    CHECK_FALSE(window.covers(2));
    for (int d = 3; d <= 5; ++d) {
        CHECK(window.beta(d) == full.beta(d));
        CHECK(window.torsion(d) == full.torsion(d));
    }
    // out-of-window dimensions read as zero
    CHECK(window.beta(0) == 0);

    // an over-wide window clamps to the full range
    BettiReport wide = reduced_homology(spec, std::pair<int, int>{-5, 50});
    CHECK(wide.coverage == BettiReport::Coverage::full);
    for (int d = -1; d <= spec.top_dim(); ++d)
        CHECK(wide.beta(d) == full.beta(d));

    // an inverted window covers nothing
    BettiReport none = reduced_homology(spec, std::pair<int, int>{5, 3});
    CHECK(none.coverage == BettiReport::Coverage::window);
    CHECK_FALSE(none.covers(4));

    CHECK_THROWS_AS(euler_characteristic_check(spec, window),
                    std::invalid_argument);
}

TEST_CASE("the missing-cell shortcut changes nothing") {
    HomologyOptions direct;
    direct.use_skeleton_shortcut = false;

    std::vector<ComplexSpec> specs;
    specs.emplace_back(cycle_power(9, 3), ComplexKind::total_cut, 2);
    specs.emplace_back(cartesian_product(complete(3), path(3)),
                       ComplexKind::total_cut, 2);
    specs.emplace_back(cartesian_product(complete(2), cycle(4)),
                       ComplexKind::cut, 3);
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 6 + static_cast<int>(rng() % 3), 0.5);
        ComplexSpec spec(g, ComplexKind::total_cut, 2 + trial % 2);
        if (!spec.is_void()) specs.push_back(spec);
    }
    for (const ComplexSpec& spec : specs) {
        BettiReport fast = reduced_homology(spec);
        BettiReport slow = reduced_homology(spec, {}, direct);
        for (int d = -1; d <= spec.top_dim(); ++d) {
            CHECK(fast.beta(d) == slow.beta(d));
            CHECK(fast.torsion(d) == slow.torsion(d));
        }
        CHECK(euler_characteristic_check(spec, fast));
    }
}

TEST_CASE("full-range homology respects the face budget") {
    ComplexSpec spec(cycle_power(22, 3), ComplexKind::total_cut, 2);
    CHECK_THROWS_AS(reduced_homology(spec), std::length_error);

    HomologyOptions tight;
    tight.face_budget = 1 << 10;
    ComplexSpec small(cycle_power(11, 3), ComplexKind::total_cut, 2);
    CHECK_THROWS_AS(reduced_homology(small, {}, tight), std::length_error);

    // a window is the sanctioned way in: top dimension is n - 4 = 18
    BettiReport window = reduced_homology(spec, std::pair<int, int>{17, 18});
    CHECK(window.beta(18) == 1);
    CHECK(window.beta(17) == 0);
    CHECK_FALSE(window.any_torsion());
}

TEST_CASE("sparse matrix construction rejects bad entries") {
    SparseIntMatrix m;
    m.rows = 2;
    m.cols = 2;
    CHECK_THROWS_AS(m.add(2, 0, Int(1)), std::out_of_range);
    CHECK_THROWS_AS(m.add(0, -1, Int(1)), std::out_of_range);
    CHECK_THROWS_AS(m.add(0, 0, Int(0)), std::invalid_argument);
    m.add(0, 0, Int(3));
    m.add(0, 0, Int(4));  // duplicate: rejected when consumed
    CHECK_THROWS_AS(smith_normal_form(m), std::invalid_argument);
}
