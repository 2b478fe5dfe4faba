#include "cutcomplex/morse.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "cutcomplex/graph.hpp"

namespace cutcomplex {

namespace {

void check_order(int n, const std::vector<int>& order) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("matching vertex " + std::to_string(v) +
                                        " out of range for " +
                                        std::to_string(n) + " vertices");
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("duplicate matching vertex " +
                                        std::to_string(v));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

}  // namespace

MorseData run_element_matchings(const ComplexSpec& spec,
                                const std::vector<int>& order) {
    if (spec.is_void())
        throw std::invalid_argument(
            "element matchings require a nonvoid complex");
    check_order(spec.vertex_count(), order);

    const FaceTable table(spec);
    const std::uint64_t full = table.full_mask();
    // 0 = not a face, 1 = still in the pool, 2 = matched
    std::vector<std::uint8_t> status(full + 1, 0);
    long long pool = 0;
    for (std::uint64_t s = 0;; ++s) {
        if (table.is_face_mask(s)) {
            status[s] = 1;
            ++pool;
        }
        if (s == full) break;
    }

    MorseData data;
    data.order = order;
    data.vertex_count = spec.vertex_count();
    data.filtration_sizes.push_back(pool);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::uint64_t bit = 1ull << order[i];
        for (std::uint64_t s = 0;; ++s) {
            if (!(s & bit) && status[s] == 1 && status[s | bit] == 1) {
                status[s] = status[s | bit] = 2;
                data.pairs.push_back(MorsePair{VertexSet::from_mask(s),
                                               VertexSet::from_mask(s | bit),
                                               static_cast<int>(i)});
                pool -= 2;
            }
            if (s == full) break;
        }
        data.filtration_sizes.push_back(pool);
    }
    for (std::uint64_t s = 0;; ++s) {
        if (status[s] == 1) data.critical.push_back(VertexSet::from_mask(s));
        if (s == full) break;
    }
    return data;
}

AcyclicityCheck verify_acyclic(const ComplexSpec& spec, const MorseData& data) {
    if (spec.is_void())
        throw std::invalid_argument("no matching data exists for a void complex");
    if (data.vertex_count != spec.vertex_count())
        throw std::invalid_argument("matching data is for a different graph");
    check_order(spec.vertex_count(), data.order);

    const FaceTable table(spec);
    const std::uint64_t full = table.full_mask();
    long long total_faces = 0;
    for (std::uint64_t s = 0;; ++s) {
        if (table.is_face_mask(s)) ++total_faces;
        if (s == full) break;
    }

    // --- structural audit ------------------------------------------------
    std::unordered_map<std::uint64_t, std::uint64_t> partner;
    partner.reserve(data.pairs.size() * 4);
    std::vector<long long> matched_at_stage(data.order.size(), 0);
    for (const MorsePair& p : data.pairs) {
        if (p.stage < 0 || p.stage >= static_cast<int>(data.order.size()))
            throw std::invalid_argument("pair stage out of range");
        const std::uint64_t lo = p.lower.low_mask();
        const std::uint64_t hi = p.upper.low_mask();
        const std::uint64_t bit = 1ull
                                  << data.order[static_cast<std::size_t>(p.stage)];
        if (lo & bit)
            throw std::invalid_argument(
                "lower face of a pair contains its stage vertex");
        if (hi != (lo | bit))
            throw std::invalid_argument(
                "pair members must differ in exactly the stage vertex");
        if (!table.is_face_mask(lo) || !table.is_face_mask(hi))
            throw std::invalid_argument("matched pair uses a non-face");
        if (!partner.emplace(lo, hi).second || !partner.emplace(hi, lo).second)
            throw std::invalid_argument("a face appears in two pairs");
        ++matched_at_stage[static_cast<std::size_t>(p.stage)];
    }
    std::unordered_set<std::uint64_t> critical;
    critical.reserve(data.critical.size() * 2);
    for (const VertexSet& c : data.critical) {
        const std::uint64_t s = c.low_mask();
        if (!table.is_face_mask(s))
            throw std::invalid_argument("critical set contains a non-face");
        if (partner.count(s))
            throw std::invalid_argument("a face is both matched and critical");
        if (!critical.insert(s).second)
            throw std::invalid_argument("duplicate critical face");
    }
    if (total_faces != 2 * static_cast<long long>(data.pairs.size()) +
                           static_cast<long long>(data.critical.size()))
        throw std::invalid_argument(
            "faces are not partitioned into pairs and critical faces");
    if (data.filtration_sizes.size() != data.order.size() + 1)
        throw std::invalid_argument("filtration size list has wrong length");
    long long pool = total_faces;
    for (std::size_t i = 0; i <= data.order.size(); ++i) {
        if (data.filtration_sizes[i] != pool)
            throw std::invalid_argument("filtration sizes are inconsistent");
        if (i < data.order.size()) pool -= 2 * matched_at_stage[i];
    }

    // --- cycle search, one dimension pair at a time -----------------------
    // Nodes are faces of dimensions d and d+1.  A matched pair contributes
    // the upward edge lower -> upper; every other codimension-1 incidence
    // points downward.  A directed cycle must alternate, so it stays within
    // one dimension pair and enters lower faces only through matched pairs:
    // starting the search at each matched lower face covers every cycle.
    std::vector<std::vector<std::uint64_t>> lowers_by_card(
        static_cast<std::size_t>(spec.vertex_count()) + 1);
    for (const MorsePair& p : data.pairs)
        lowers_by_card[static_cast<std::size_t>(p.lower.count())].push_back(
            p.lower.low_mask());

    const auto children_of = [&](std::uint64_t s, int lower_card,
                                 std::vector<std::uint64_t>& out) {
        out.clear();
        if (std::popcount(s) == lower_card) {
            const auto it = partner.find(s);
            if (it != partner.end() &&
                std::popcount(it->second) == lower_card + 1)
                out.push_back(it->second);
        } else {
            const auto it = partner.find(s);
            const std::uint64_t mate =
                (it != partner.end() && std::popcount(it->second) ==
                                            lower_card)
                    ? it->second
                    : ~0ull;
            for (std::uint64_t bits = s; bits;) {
                const std::uint64_t low = bits & (~bits + 1);
                bits ^= low;
                const std::uint64_t facet = s ^ low;
                if (facet != mate) out.push_back(facet);
            }
        }
    };

    for (int card = 0; card <= spec.vertex_count(); ++card) {
        const auto& starts = lowers_by_card[static_cast<std::size_t>(card)];
        if (starts.empty()) continue;
        // 0 unseen / 1 on current path / 2 done
        std::unordered_map<std::uint64_t, std::uint8_t> color;
        struct Frame {
            std::uint64_t node;
            std::vector<std::uint64_t> children;
            std::size_t next = 0;
        };
        std::vector<Frame> stack;
        std::vector<std::uint64_t> scratch;
        for (const std::uint64_t start : starts) {
            if (color.count(start)) continue;
            stack.clear();
            color[start] = 1;
            children_of(start, card, scratch);
            stack.push_back(Frame{start, scratch, 0});
            while (!stack.empty()) {
                Frame& top = stack.back();
                if (top.next == top.children.size()) {
                    color[top.node] = 2;
                    stack.pop_back();
                    continue;
                }
                const std::uint64_t child = top.children[top.next++];
                const auto it = color.find(child);
                if (it == color.end()) {
                    color[child] = 1;
                    children_of(child, card, scratch);
                    stack.push_back(Frame{child, scratch, 0});
                } else if (it->second == 1) {
                    // directed cycle: report the path from `child` onward
                    AcyclicityCheck bad;
                    bad.ok = false;
                    std::size_t from = 0;
                    while (from < stack.size() && stack[from].node != child)
                        ++from;
                    for (std::size_t i = from; i < stack.size(); ++i)
                        bad.witness.push_back(
                            VertexSet::from_mask(stack[i].node));
                    return bad;
                }
            }
        }
    }
    return AcyclicityCheck{};
}

std::vector<VertexSet> predicted_critical_cells(CriticalFamily family, int a,
                                                int b) {
    std::vector<VertexSet> cells;
    switch (family) {
        case CriticalFamily::cycle_power_small_n: {
            const int n = a, p = b;
            if (p < 1 || n != 2 * p + 2)
                throw std::invalid_argument(
                    "closed form needs p >= 1 and n = 2p+2");
            VertexSet tau;
            for (int v = 1; v <= p; ++v) tau.add(v);
            cells.push_back(tau);
            return cells;
        }
        case CriticalFamily::cycle_power_large_n: {
            const int n = a, p = b;
            if (p < 1 || n < 3 * p + 1)
                throw std::invalid_argument(
                    "closed form needs p >= 1 and n >= 3p+1 (none is known "
                    "for 2p+3 <= n <= 3p)");
            cells.push_back(VertexSet::full(n)
                                .without(0)
                                .without(n - 2 * p)
                                .without(n - p));
            return cells;
        }
        case CriticalFamily::complete_path_product: {
            const int m = a, n = b;
            if (m < 2 || n < 2)
                throw std::invalid_argument("closed form needs m, n >= 2");
            const VertexSet all = VertexSet::full(m * n);
            for (int i = 1; i < m; ++i)
                for (int j = 1; j < n; ++j)
                    cells.push_back(all.without(0)
                                        .without(i * n + j - 1)
                                        .without(i * n + j));
            return cells;
        }
        case CriticalFamily::complete_cycle_product: {
            const int m = a, n = b;
            if (m < 2 || n < 4)
                throw std::invalid_argument(
                    "closed form needs m >= 2 and n >= 4");
            const VertexSet all = VertexSet::full(m * n);
            cells.push_back(all.without(0).without(n - 2).without(n - 1));
            for (int i = 1; i < m; ++i)
                cells.push_back(
                    all.without(0).without(i * n).without(i * n + n - 1));
            for (int i = 1; i < m; ++i)
                for (int j = 1; j < n; ++j)
                    cells.push_back(all.without(0)
                                        .without(i * n + j - 1)
                                        .without(i * n + j));
            return cells;
        }
    }
    throw std::invalid_argument("unknown critical-cell family");
}

HomotopyClaim homotopy_claim(const MorseData& data,
                             const AcyclicityCheck& acyclicity) {
    if (!acyclicity.ok)
        throw std::invalid_argument(
            "homotopy claim requires a passing acyclicity certificate");
    HomotopyClaim claim;
    if (data.critical.empty()) {
        claim.kind = HomotopyClaim::Kind::contractible;
        return claim;
    }
    const int dim = data.critical.front().count() - 1;
    bool uniform = dim >= 0;
    for (const VertexSet& c : data.critical)
        uniform = uniform && (c.count() - 1 == dim);
    if (uniform) {
        claim.kind = HomotopyClaim::Kind::wedge;
        claim.count = static_cast<long long>(data.critical.size());
        claim.dim = dim;
    }
    return claim;  // otherwise undetermined
}

std::string to_string(const HomotopyClaim& claim) {
    switch (claim.kind) {
        case HomotopyClaim::Kind::void_complex:
            return "void complex";
        case HomotopyClaim::Kind::contractible:
            return "contractible";
        case HomotopyClaim::Kind::wedge:
            if (claim.count == 1)
                return "sphere of dimension " + std::to_string(claim.dim);
            return "wedge of " + std::to_string(claim.count) +
                   " spheres of dimension " + std::to_string(claim.dim);
        case HomotopyClaim::Kind::undetermined:
            break;
    }
    return "undetermined";
}

std::vector<VertexSet> first_matching_diagnostics(const ComplexSpec& spec,
                                                  int v) {
    if (spec.kind != ComplexKind::total_cut || spec.k != 2)
        throw std::invalid_argument(
            "first-matching diagnostics are defined for total 2-cut "
            "complexes");
    if (v < 0 || v >= spec.vertex_count())
        throw std::out_of_range("vertex out of range");
    if (spec.is_void()) return {};

    const FaceTable table(spec);
    const std::uint64_t full = table.full_mask();
    const std::uint64_t bit = 1ull << v;

    // route (a): run the single stage of the filtration
    std::vector<VertexSet> by_stage;
    for (std::uint64_t s = 0;; ++s) {
        if (table.is_face_mask(s)) {
            const bool matched = (s & bit)
                                     ? table.is_face_mask(s ^ bit)
                                     : table.is_face_mask(s | bit);
            if (!matched) by_stage.push_back(VertexSet::from_mask(s));
        }
        if (s == full) break;
    }

    // route (b): a face survives iff adding v leaves no disconnected 2-set
    // in the complement, i.e. the complement minus v induces a complete
    // (possibly tiny) subgraph
    std::vector<VertexSet> by_rule;
    const VertexSet everything = VertexSet::full(spec.vertex_count());
    for (std::uint64_t s = 0;; ++s) {
        if (table.is_face_mask(s) && !(s & bit)) {
            const VertexSet comp =
                (everything - VertexSet::from_mask(s)).without(v);
            if (comp.count() < 2 || is_complete_on(spec.graph, comp))
                by_rule.push_back(VertexSet::from_mask(s));
        }
        if (s == full) break;
    }

    if (by_stage != by_rule)
        throw std::logic_error(
            "first-matching routes disagree: filtration remainder differs "
            "from the membership characterization");
    return by_stage;
}

}  // namespace cutcomplex
