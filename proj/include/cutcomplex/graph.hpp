#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cutcomplex/vertex_set.hpp"

namespace cutcomplex {

// Simple undirected graph on vertices 0..n-1 with per-vertex neighbor masks.
// Invariants: adjacency is symmetric, no loops, every neighbor index < n.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    // Inserts the undirected edge {u, v}; rejects loops and out-of-range
    // endpoints. Inserting an existing edge is a no-op.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;

    const VertexSet& neighbors(int v) const;

    // Neighbors of v together with v itself.
    VertexSet closed_neighborhood(int v) const;

    VertexSet vertices() const { return VertexSet::full(n_); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<VertexSet> adj_;
};

// --- standard families (all on vertex set {0, ..., n-1}) -------------------

// Complete graph, n >= 1.
Graph complete(int n);

// Path 0-1-...-(n-1), n >= 1.
Graph path(int n);

// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph cycle(int n);

// p-th power of the n-cycle: i ~ j iff the circular distance
// min(|i-j|, n-|i-j|) lies in [1, p]. Requires n >= 3, p >= 1; complete for
// n <= 2p+1.
Graph cycle_power(int n, int p);

// Circulant graph: u ~ v iff (u-v) mod n lies in S or n-S. Requires n >= 2
// and S a nonempty set of shifts inside [1, n-1].
Graph circulant(int n, const std::vector<int>& shifts);

// Cartesian product: vertex (i, j) is flattened to i*|V(H)| + j (row-major by
// the left factor; this encoding is part of the external contract).
// (i1,j1) ~ (i2,j2) iff (i1 = i2 and j1 ~ j2 in H) or (j1 = j2 and i1 ~ i2 in G).
Graph cartesian_product(const Graph& g, const Graph& h);

// --- induced-subgraph predicates -------------------------------------------

// True iff every pair of distinct members of s is adjacent; true for |s| <= 1.
bool is_complete_on(const Graph& g, const VertexSet& s);

// True iff the subgraph induced on s is connected; true for |s| <= 1
// (the empty set counts as connected by convention).
bool is_connected_on(const Graph& g, const VertexSet& s);

// --- edge-list text I/O -----------------------------------------------------
// Format: first line "n m", then m lines "u v" (0-indexed, whitespace
// separated). Duplicate edges, loops, bad counts and malformed tokens are
// rejected with a line-numbered std::runtime_error.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace cutcomplex
