#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cutcomplex/homology.hpp"
#include "cutcomplex/morse.hpp"

using namespace cutcomplex;

namespace {

std::vector<int> iota_order(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

std::multiset<std::vector<int>> as_sets(const std::vector<VertexSet>& faces) {
    std::multiset<std::vector<int>> out;
    for (const VertexSet& f : faces) out.insert(f.to_vector());
    return out;
}

}  // namespace

TEST_CASE("matchings collapse the 8-cycle cube to a single 2-cell") {
    ComplexSpec spec(cycle_power(8, 3), ComplexKind::total_cut, 2);
    MorseData data = run_element_matchings(spec, iota_order(8));

    CHECK(data.critical == std::vector<VertexSet>{VertexSet{1, 2, 3}});
    CHECK(data.face_count() ==
          2 * static_cast<long long>(data.pairs.size()) + 1);
    CHECK(data.filtration_sizes.size() == 9);
    CHECK(data.filtration_sizes.back() == 1);
    CHECK(std::is_sorted(data.filtration_sizes.rbegin(),
                         data.filtration_sizes.rend()));

    // the empty face is matched at the very first stage
    bool empty_matched = false;
    for (const MorsePair& p : data.pairs)
        if (p.lower.empty()) {
            empty_matched = true;
            CHECK(p.stage == 0);
            CHECK(p.upper == VertexSet{0});
        }
    CHECK(empty_matched);

    AcyclicityCheck acyclic = verify_acyclic(spec, data);
    CHECK(acyclic.ok);
    CHECK(acyclic.witness.empty());

    HomotopyClaim claim = homotopy_claim(data, acyclic);
    CHECK(claim.kind == HomotopyClaim::Kind::wedge);
    CHECK(claim.count == 1);
    CHECK(claim.dim == 2);
    CHECK(to_string(claim) == "sphere of dimension 2");
}

TEST_CASE("matchings collapse the 10-cycle cube to a single 6-cell") {
    ComplexSpec spec(cycle_power(10, 3), ComplexKind::total_cut, 2);
    MorseData data = run_element_matchings(spec, iota_order(10));
    CHECK(data.critical ==
          std::vector<VertexSet>{VertexSet{1, 2, 3, 5, 6, 8, 9}});
    AcyclicityCheck acyclic = verify_acyclic(spec, data);
    CHECK(acyclic.ok);
    HomotopyClaim claim = homotopy_claim(data, acyclic);
    CHECK(claim.kind == HomotopyClaim::Kind::wedge);
    CHECK(claim.count == 1);
    CHECK(claim.dim == 6);
}

TEST_CASE("product complexes need only the second-factor stages") {
    // K2 x P2 on the flat vertices {0,1,2,3}; stages at 0 and 1 only
    ComplexSpec spec(cartesian_product(complete(2), path(2)),
                     ComplexKind::total_cut, 2);
    MorseData data = run_element_matchings(spec, {0, 1});
    CHECK(data.critical == std::vector<VertexSet>{VertexSet{1}});
    AcyclicityCheck acyclic = verify_acyclic(spec, data);
    CHECK(acyclic.ok);
    HomotopyClaim claim = homotopy_claim(data, acyclic);
    CHECK(claim.kind == HomotopyClaim::Kind::wedge);
    CHECK(claim.count == 1);
    CHECK(claim.dim == 0);
}

TEST_CASE("closed-form critical cells") {
    CHECK(predicted_critical_cells(CriticalFamily::cycle_power_small_n, 8, 3) ==
          std::vector<VertexSet>{VertexSet{1, 2, 3}});
    CHECK(predicted_critical_cells(CriticalFamily::cycle_power_large_n, 10,
                                   3) ==
          std::vector<VertexSet>{VertexSet{1, 2, 3, 5, 6, 8, 9}});

    // K3 x P3: one cell per (i, j) with i, j >= 1
    auto path_cells = as_sets(
        predicted_critical_cells(CriticalFamily::complete_path_product, 3, 3));
    CHECK(path_cells.size() == 4);
    CHECK(path_cells.count({1, 2, 5, 6, 7, 8}) == 1);  // drop 0, 3, 4
    CHECK(path_cells.count({1, 2, 3, 6, 7, 8}) == 1);  // drop 0, 4, 5
    CHECK(path_cells.count({1, 2, 3, 4, 5, 8}) == 1);  // drop 0, 6, 7
    CHECK(path_cells.count({1, 2, 3, 4, 5, 6}) == 1);  // drop 0, 7, 8

    // K2 x C4: n(m-1) + 1 = 5 cells
    auto cycle_cells = as_sets(
        predicted_critical_cells(CriticalFamily::complete_cycle_product, 2, 4));
    CHECK(cycle_cells.size() == 5);
    CHECK(cycle_cells.count({1, 4, 5, 6, 7}) == 1);  // drop 0, 2, 3
    CHECK(cycle_cells.count({1, 2, 3, 5, 6}) == 1);  // drop 0, 4, 7
    CHECK(cycle_cells.count({1, 2, 3, 6, 7}) == 1);  // drop 0, 4, 5
    CHECK(cycle_cells.count({1, 2, 3, 4, 7}) == 1);  // drop 0, 5, 6
    CHECK(cycle_cells.count({1, 2, 3, 4, 5}) == 1);  // drop 0, 6, 7

    // regime guards
    CHECK_THROWS_AS(
        predicted_critical_cells(CriticalFamily::cycle_power_small_n, 9, 3),
        std::invalid_argument);
    CHECK_THROWS_AS(
        predicted_critical_cells(CriticalFamily::cycle_power_large_n, 9, 3),
        std::invalid_argument);
    CHECK_THROWS_AS(
        predicted_critical_cells(CriticalFamily::complete_path_product, 1, 3),
        std::invalid_argument);
    CHECK_THROWS_AS(
        predicted_critical_cells(CriticalFamily::complete_cycle_product, 2, 3),
        std::invalid_argument);
}

TEST_CASE("closed forms match the actual runs across a small sweep") {
    for (int p = 1; p <= 4; ++p) {
        // n = 2p+2
        {
            const int n = 2 * p + 2;
            ComplexSpec spec(cycle_power(n, p), ComplexKind::total_cut, 2);
            MorseData data = run_element_matchings(spec, iota_order(n));
            CHECK(data.critical ==
                  predicted_critical_cells(CriticalFamily::cycle_power_small_n,
                                           n, p));
            CHECK(verify_acyclic(spec, data).ok);
        }
        // n >= 3p+1
        for (int n = 3 * p + 1; n <= 3 * p + 3 && n <= 14; ++n) {
            ComplexSpec spec(cycle_power(n, p), ComplexKind::total_cut, 2);
            MorseData data = run_element_matchings(spec, iota_order(n));
            CHECK(data.critical ==
                  predicted_critical_cells(CriticalFamily::cycle_power_large_n,
                                           n, p));
            CHECK(verify_acyclic(spec, data).ok);
        }
    }
    for (int m = 2; m <= 3; ++m)
        for (int n = 2; n <= 4; ++n) {
            ComplexSpec spec(cartesian_product(complete(m), path(n)),
                             ComplexKind::total_cut, 2);
            MorseData data = run_element_matchings(spec, iota_order(n));
            CHECK(as_sets(data.critical) ==
                  as_sets(predicted_critical_cells(
                      CriticalFamily::complete_path_product, m, n)));
            CHECK(verify_acyclic(spec, data).ok);
        }
    for (int m = 2; m <= 3; ++m)
        for (int n = 4; n <= 5; ++n) {
            ComplexSpec spec(cartesian_product(complete(m), cycle(n)),
                             ComplexKind::total_cut, 2);
            MorseData data = run_element_matchings(spec, iota_order(n));
            CHECK(as_sets(data.critical) ==
                  as_sets(predicted_critical_cells(
                      CriticalFamily::complete_cycle_product, m, n)));
            CHECK(verify_acyclic(spec, data).ok);
        }
}

TEST_CASE("critical cells bound the Betti numbers") {
    struct Run {
        ComplexSpec spec;
        std::vector<int> order;
    };
    std::vector<Run> runs;
    runs.push_back({ComplexSpec(cycle_power(10, 3), ComplexKind::total_cut, 2),
                    iota_order(10)});
    runs.push_back({ComplexSpec(cartesian_product(complete(3), path(3)),
                                ComplexKind::total_cut, 2),
                    iota_order(3)});
    runs.push_back({ComplexSpec(cartesian_product(complete(3), cycle(4)),
                                ComplexKind::total_cut, 2),
                    iota_order(4)});
    for (const Run& run : runs) {
        MorseData data = run_element_matchings(run.spec, run.order);
        REQUIRE(verify_acyclic(run.spec, data).ok);
        std::vector<long long> by_dim(
            static_cast<std::size_t>(run.spec.top_dim()) + 2, 0);
        for (const VertexSet& c : data.critical)
            ++by_dim[static_cast<std::size_t>(c.count())];  // slot d+1
        BettiReport hom = reduced_homology(run.spec);
        for (int d = -1; d <= run.spec.top_dim(); ++d)
            CHECK(by_dim[static_cast<std::size_t>(d) + 1] >= hom.beta(d));
    }
}

TEST_CASE("a trivial complex collapses to nothing") {
    // P3: only independent pair is {0,2}, so the complex is {emptyset, {1}}
    ComplexSpec spec(path(3), ComplexKind::total_cut, 2);
    MorseData data = run_element_matchings(spec, {1});
    CHECK(data.pairs.size() == 1);
    CHECK(data.critical.empty());
    AcyclicityCheck acyclic = verify_acyclic(spec, data);
    CHECK(acyclic.ok);
    CHECK(homotopy_claim(data, acyclic).kind ==
          HomotopyClaim::Kind::contractible);
}

TEST_CASE("an empty stage list leaves everything critical") {
    ComplexSpec spec(cycle(4), ComplexKind::total_cut, 2);
    MorseData data = run_element_matchings(spec, {});
    CHECK(data.pairs.empty());
    CHECK(data.critical.size() == 7);
    CHECK(data.filtration_sizes == std::vector<long long>{7});
    AcyclicityCheck acyclic = verify_acyclic(spec, data);
    CHECK(acyclic.ok);
    // the empty face is critical, so no homotopy verdict is available
    CHECK(homotopy_claim(data, acyclic).kind ==
          HomotopyClaim::Kind::undetermined);
}

TEST_CASE("run rejects bad input") {
    ComplexSpec spec(cycle(4), ComplexKind::total_cut, 2);
    CHECK_THROWS_AS(run_element_matchings(spec, {0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_element_matchings(spec, {4}), std::invalid_argument);
    CHECK_THROWS_AS(run_element_matchings(spec, {-1}), std::invalid_argument);

    ComplexSpec void_spec(complete(4), ComplexKind::total_cut, 2);
    CHECK_THROWS_AS(run_element_matchings(void_spec, {0}),
                    std::invalid_argument);
}

TEST_CASE("the audit rejects tampered certificates") {
    ComplexSpec spec(cycle_power(8, 3), ComplexKind::total_cut, 2);
    const MorseData good = run_element_matchings(spec, iota_order(8));
    REQUIRE(verify_acyclic(spec, good).ok);

    {
        MorseData bad = good;
        bad.vertex_count = 9;
        CHECK_THROWS_AS(verify_acyclic(spec, bad), std::invalid_argument);
    }
    {
        MorseData bad = good;
        bad.pairs.pop_back();  // partition no longer covers every face
        CHECK_THROWS_AS(verify_acyclic(spec, bad), std::invalid_argument);
    }
    {
        MorseData bad = good;
        bad.critical.push_back(VertexSet{0, 1});  // {0,1} is not a face
        CHECK_THROWS_AS(verify_acyclic(spec, bad), std::invalid_argument);
    }
    {
        MorseData bad = good;
        bad.critical.push_back(bad.critical.front());  // duplicate
        CHECK_THROWS_AS(verify_acyclic(spec, bad), std::invalid_argument);
    }
    {
        MorseData bad = good;
        bad.critical.push_back(bad.pairs.front().lower);  // matched + critical
        CHECK_THROWS_AS(verify_acyclic(spec, bad), std::invalid_argument);
    }
    {
        MorseData bad = good;
        bad.pairs.front().stage = 99;
        CHECK_THROWS_AS(verify_acyclic(spec, bad), std::invalid_argument);
    }
    {
        MorseData bad = good;
        bad.filtration_sizes.front() += 1;
        CHECK_THROWS_AS(verify_acyclic(spec, bad), std::invalid_argument);
    }
    {
        MorseData bad = good;
        bad.filtration_sizes.pop_back();
        CHECK_THROWS_AS(verify_acyclic(spec, bad), std::invalid_argument);
    }
}

TEST_CASE("the audit finds a planted directed cycle") {
    // Hand-built "matching" on the 6-cycle complex: three pairs that chain
    // {2} -> {0,2} -> {0} -> {0,1} -> {1} -> {1,2} -> back to {2}.  Every
    // structural invariant holds, but the V-paths loop.
    ComplexSpec spec(cycle(6), ComplexKind::total_cut, 2);
    FaceTable table(spec);

    MorseData planted;
    planted.order = {0, 1, 2};
    planted.vertex_count = 6;
    planted.pairs = {
        MorsePair{VertexSet{2}, VertexSet{0, 2}, 0},
        MorsePair{VertexSet{0}, VertexSet{0, 1}, 1},
        MorsePair{VertexSet{1}, VertexSet{1, 2}, 2},
    };
    std::set<std::uint64_t> matched;
    for (const MorsePair& p : planted.pairs) {
        matched.insert(p.lower.low_mask());
        matched.insert(p.upper.low_mask());
    }
    long long total = 0;
    for (std::uint64_t s = 0; s <= table.full_mask(); ++s) {
        if (!table.is_face_mask(s)) continue;
        ++total;
        if (!matched.count(s)) planted.critical.push_back(VertexSet::from_mask(s));
    }
    planted.filtration_sizes = {total, total - 2, total - 4, total - 6};

    AcyclicityCheck check = verify_acyclic(spec, planted);
    CHECK_FALSE(check.ok);
    CHECK(check.witness.size() == 6);
    CHECK(as_sets(check.witness) ==
          as_sets({VertexSet{2}, VertexSet{0, 2}, VertexSet{0}, VertexSet{0, 1},
                   VertexSet{1}, VertexSet{1, 2}}));
    // consecutive witness faces differ by one vertex, alternating dimension
    for (std::size_t i = 0; i < check.witness.size(); ++i) {
        const VertexSet& a = check.witness[i];
        const VertexSet& b = check.witness[(i + 1) % check.witness.size()];
        const VertexSet small = a.count() < b.count() ? a : b;
        const VertexSet large = a.count() < b.count() ? b : a;
        CHECK(small.count() + 1 == large.count());
        CHECK(small.subset_of(large));
    }

    // and a cyclic certificate supports no homotopy claim
    CHECK_THROWS_AS(homotopy_claim(planted, check), std::invalid_argument);
}

TEST_CASE("single-stage diagnostics agree with the membership rule") {
    ComplexSpec spec(cycle(4), ComplexKind::total_cut, 2);
    std::vector<VertexSet> pool = first_matching_diagnostics(spec, 0);
    CHECK(pool == std::vector<VertexSet>{VertexSet{1}, VertexSet{3},
                                         VertexSet{1, 3}});

    // a void complex yields an empty pool
    ComplexSpec void_spec(complete(4), ComplexKind::total_cut, 2);
    CHECK(first_matching_diagnostics(void_spec, 0).empty());

    // only defined for independence-pair complexes
    ComplexSpec cut3(cycle(6), ComplexKind::cut, 3);
    CHECK_THROWS_AS(first_matching_diagnostics(cut3, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(first_matching_diagnostics(spec, 7), std::out_of_range);

    // cross-check against the full stage run on a few graphs
    for (int n = 4; n <= 7; ++n) {
        ComplexSpec s(cycle(n), ComplexKind::total_cut, 2);
        std::vector<VertexSet> diag = first_matching_diagnostics(s, 1);
        MorseData data = run_element_matchings(s, {1});
        CHECK(diag == data.critical);
    }
}
