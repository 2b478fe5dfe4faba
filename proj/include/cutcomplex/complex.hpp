#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cutcomplex/graph.hpp"

namespace cutcomplex {

enum class ComplexKind {
    total_cut,  // faces: complements contain an independent k-set
    cut         // faces: complements contain a k-set inducing a disconnected graph
};

// Lazy description of the simplicial complex; faces are never globally
// materialized unless a caller asks for a specific dimension.
struct ComplexSpec {
    ComplexSpec(Graph graph, ComplexKind kind, int k);

    int vertex_count() const { return graph.vertex_count(); }

    // Dimension of the facets, n-k-1; below -1 means the complex is void.
    int top_dim() const { return graph.vertex_count() - k - 1; }

    bool is_void() const;  // no faces at all (not even the empty face)

    Graph graph;
    ComplexKind kind;
    int k;
};

// Face counts per dimension. counts[d+1] holds the number of d-faces, so the
// first slot is f_{-1} (1 for any nonvoid complex). A void complex has an
// empty counts list and the flag set; this distinguishes it from the complex
// whose only face is the empty set (counts = [1]).
struct FVector {
    std::vector<long long> counts;
    bool void_complex = false;

    // f_d, 0 outside the stored range.
    long long operator[](int d) const {
        int i = d + 1;
        if (void_complex || i < 0 || i >= static_cast<int>(counts.size()))
            return 0;
        return counts[static_cast<std::size_t>(i)];
    }

    // Dimension of the complex; -2 for the void complex, -1 for {emptyset}.
    int dim() const {
        return void_complex ? -2 : static_cast<int>(counts.size()) - 2;
    }

    friend bool operator==(const FVector& a, const FVector& b) {
        return a.void_complex == b.void_complex && a.counts == b.counts;
    }
};

// Membership test. total-cut: the complement of sigma contains an independent
// set of size k (for k = 2: the complement induces a non-complete graph on
// >= 2 vertices). cut: the complement contains a k-subset inducing a
// disconnected subgraph. Downward closed by construction.
bool is_face(const ComplexSpec& spec, const VertexSet& sigma);

// All faces of size n-k (the maximal faces; these complexes are pure).
// Empty list iff the complex is void.
std::vector<VertexSet> facets(const ComplexSpec& spec);

// Faces of dimension d (-1 <= d), in lexicographic order of the ascending
// vertex lists. This order is a contract relied on by the homology module.
// Dimensions above top_dim() yield an empty list.
std::vector<VertexSet> faces_of_dim(const ComplexSpec& spec, int d);

// Streaming variant of faces_of_dim, same order.
void for_each_face_of_dim(const ComplexSpec& spec, int d,
                          const std::function<void(const VertexSet&)>& fn);

// Counts every face exhaustively (2^n subset scan); refuses graphs above
// kFaceTableMaxVertices with std::length_error.
FVector f_vector(const ComplexSpec& spec);

// --- exhaustive face table ---------------------------------------------------
// Membership bits for every subset of the (at most kFaceTableMaxVertices)
// vertices, used by the Morse engine and by full-range face counting where
// 2^n work is acceptable. Index = low 64-bit subset mask.
inline constexpr int kFaceTableMaxVertices = 26;

class FaceTable {
public:
    explicit FaceTable(const ComplexSpec& spec);

    int vertex_count() const { return n_; }

    bool is_face_mask(std::uint64_t sigma) const {
        return contains_generator_[(~sigma & full_) ] != 0;
    }

    std::uint64_t full_mask() const { return full_; }

private:
    int n_;
    std::uint64_t full_;
    // contains_generator_[S] = 1 iff S contains an independent k-set
    // (total-cut) / a k-set inducing a disconnected subgraph (cut); sigma is a
    // face iff its complement does.
    std::vector<std::uint8_t> contains_generator_;
};

}  // namespace cutcomplex
