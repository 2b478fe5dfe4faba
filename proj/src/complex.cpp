#include "cutcomplex/complex.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace cutcomplex {

ComplexSpec::ComplexSpec(Graph g, ComplexKind kind_, int k_)
    : graph(std::move(g)), kind(kind_), k(k_) {
    if (k < 1) throw std::invalid_argument("complex requires k >= 1");
    if (kind == ComplexKind::cut && k < 2)
        throw std::invalid_argument("cut complex requires k >= 2");
}

namespace {

// Does cand contain an independent set of the given size? Take-or-skip
// branching on the smallest candidate, pruning when too few vertices remain.
bool has_independent_subset(const Graph& g, const VertexSet& cand, int need) {
    if (need == 0) return true;
    if (cand.count() < need) return false;
    const int v = cand.min();
    // take v: drop v and its neighbors from the candidates
    if (has_independent_subset(g, cand - g.closed_neighborhood(v), need - 1))
        return true;
    // skip v
    return has_independent_subset(g, cand.without(v), need);
}

// Does cand contain a k-subset inducing a disconnected subgraph? Such a
// subset splits as A | B with no edges in between and |A| <= k/2, so it
// exists iff some nonempty A within cand with |A| <= k/2 leaves at least
// k - |A| candidates outside A and its neighborhood.
bool disconnected_split_search(const Graph& g, const VertexSet& cand,
                               const VertexSet& chosen, VertexSet neighborhood,
                               int chosen_size, int k, int max_side) {
    if (chosen_size > 0) {
        const VertexSet rest = cand - chosen - neighborhood;
        if (rest.count() >= k - chosen_size) return true;
    }
    if (chosen_size == max_side) return false;
    // extend the split side A with a candidate above its current maximum to
    // enumerate each A once
    VertexSet ext = cand;
    if (chosen_size > 0) ext = ext - VertexSet::full(chosen.max() + 1);
    bool found = false;
    ext.for_each([&](int v) {
        if (found) return;
        if (disconnected_split_search(g, cand, chosen.with(v),
                                      neighborhood | g.neighbors(v),
                                      chosen_size + 1, k, max_side))
            found = true;
    });
    return found;
}

bool has_disconnected_subset(const Graph& g, const VertexSet& cand, int k) {
    if (cand.count() < k) return false;
    return disconnected_split_search(g, cand, VertexSet{}, VertexSet{}, 0, k,
                                     k / 2);
}

}  // namespace

bool is_face(const ComplexSpec& spec, const VertexSet& sigma) {
    const VertexSet all = spec.graph.vertices();
    if (!sigma.subset_of(all))
        throw std::out_of_range("face not within the graph's vertex set");
    const VertexSet comp = all - sigma;
    if (spec.kind == ComplexKind::total_cut) {
        if (spec.k == 2)  // hot path: complement not a clique
            return comp.count() >= 2 && !is_complete_on(spec.graph, comp);
        return has_independent_subset(spec.graph, comp, spec.k);
    }
    return has_disconnected_subset(spec.graph, comp, spec.k);
}

bool ComplexSpec::is_void() const {
    // the empty set is a face iff the complex has any face at all
    return !is_face(*this, VertexSet{});
}

void for_each_face_of_dim(const ComplexSpec& spec, int d,
                          const std::function<void(const VertexSet&)>& fn) {
    if (d < -1)
        throw std::invalid_argument("face dimension below -1");
    if (d > spec.top_dim()) return;
    const int n = spec.vertex_count();
    if (d == -1) {
        if (!spec.is_void()) fn(VertexSet{});
        return;
    }
    // ascending index combinations enumerate (d+1)-subsets in lexicographic
    // order of their sorted vertex lists
    const int size = d + 1;
    std::vector<int> c(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet sigma = VertexSet::of(c);
        if (is_face(spec, sigma)) fn(sigma);
        int i = size - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<VertexSet> faces_of_dim(const ComplexSpec& spec, int d) {
    std::vector<VertexSet> out;
    for_each_face_of_dim(spec, d,
                         [&](const VertexSet& f) { out.push_back(f); });
    return out;
}

std::vector<VertexSet> facets(const ComplexSpec& spec) {
    const int top = spec.top_dim();
    if (top < -1) return {};
    return faces_of_dim(spec, top);
}

FaceTable::FaceTable(const ComplexSpec& spec)
    : n_(spec.vertex_count()), full_(0) {
    if (n_ > kFaceTableMaxVertices)
        throw std::length_error(
            "face table limited to " +
            std::to_string(kFaceTableMaxVertices) +
            " vertices (2^n membership bits); use per-dimension enumeration");
    full_ = (std::uint64_t{1} << n_) - 1;
    contains_generator_.assign(std::size_t{1} << n_, 0);

    // mark the generating k-subsets ...
    const Graph& g = spec.graph;
    const int k = spec.k;
    if (k <= n_) {
        std::vector<int> c(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
        while (true) {
            const VertexSet t = VertexSet::of(c);
            bool generator;
            if (spec.kind == ComplexKind::total_cut) {
                generator = true;  // independent: no member sees another
                t.for_each([&](int v) {
                    if (g.neighbors(v).intersects(t)) generator = false;
                });
            } else {
                generator = !is_connected_on(g, t);
            }
            if (generator) contains_generator_[t.low_mask()] = 1;
            int i = k - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == n_ - k + i) --i;
            if (i < 0) break;
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] =
                    c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    // ... then close upward: S contains a generator iff S minus some vertex
    // does, or S is itself marked.
    for (int v = 0; v < n_; ++v) {
        const std::uint64_t bit = 1ull << v;
        for (std::uint64_t s = 0; s <= full_; ++s)
            if ((s & bit) && contains_generator_[s ^ bit])
                contains_generator_[s] = 1;
    }
}

FVector f_vector(const ComplexSpec& spec) {
    FVector fv;
    if (spec.is_void()) {
        fv.void_complex = true;
        return fv;
    }
    const int top = spec.top_dim();
    fv.counts.assign(static_cast<std::size_t>(top) + 2, 0);
    // counting is exhaustive over subsets, so it rides the face table
    FaceTable table(spec);
    const std::uint64_t full = table.full_mask();
    for (std::uint64_t s = 0;; ++s) {
        if (table.is_face_mask(s))
            ++fv.counts[static_cast<std::size_t>(std::popcount(s))];
        if (s == full) break;
    }
    return fv;
}

}  // namespace cutcomplex
