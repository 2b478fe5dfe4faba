#pragma once

#include <string>
#include <vector>

#include "cutcomplex/complex.hpp"

namespace cutcomplex {

// One matched pair of an element matching: upper = lower + the stage vertex.
struct MorsePair {
    VertexSet lower;
    VertexSet upper;
    int stage = 0;  // index into MorseData::order

    friend bool operator==(const MorsePair& a, const MorsePair& b) {
        return a.lower == b.lower && a.upper == b.upper && a.stage == b.stage;
    }
};

// Result of a sequential element-matching run.
//
// The run starts from C_0 = all faces (including the empty face) and, for
// each vertex x_i of `order` in turn, matches sigma \ {x_i} with
// sigma + {x_i} whenever both still lie in the current pool C_i; C_{i+1} is
// the unmatched remainder.  `critical` is the final pool C_t.
struct MorseData {
    std::vector<int> order;
    std::vector<MorsePair> pairs;    // stage-ascending, then lower-face order
    std::vector<VertexSet> critical; // final pool, deterministic order
    std::vector<long long> filtration_sizes;  // |C_0|, ..., |C_t|
    int vertex_count = 0;

    long long face_count() const {
        return filtration_sizes.empty() ? 0 : filtration_sizes.front();
    }
};

// Outcome of the independent acyclicity audit.  When `ok` is false,
// `witness` lists a directed cycle as faces of alternating dimension
// (d, d+1, d, d+1, ...) in traversal order.
struct AcyclicityCheck {
    bool ok = true;
    std::vector<VertexSet> witness;
};

// Verdict the matching supports about the homotopy type.
struct HomotopyClaim {
    enum class Kind { void_complex, contractible, wedge, undetermined };
    Kind kind = Kind::undetermined;
    long long count = 0;  // number of spheres, when kind == wedge
    int dim = 0;          // sphere dimension, when kind == wedge
};

std::string to_string(const HomotopyClaim& claim);

// Families with closed-form critical cells (all for kind = total, k = 2).
enum class CriticalFamily {
    cycle_power_small_n,     // C_n^p at n = 2p+2, params (n, p)
    cycle_power_large_n,     // C_n^p at n >= 3p+1, params (n, p)
    complete_path_product,   // K_m x P_n, params (m, n), m,n >= 2
    complete_cycle_product,  // K_m x C_n, params (m, n), m >= 2, n >= 4
};

// Runs the sequential element matchings for `order` (distinct vertices of
// the graph; need not be all of them).  Rejects void complexes and bad
// orders.  Deterministic: pairs are reported stage-ascending and, within a
// stage, by lower face; critical faces in a fixed set order.
MorseData run_element_matchings(const ComplexSpec& spec,
                                const std::vector<int>& order);

// Audits `data` against the complex, then checks that the matching is
// acyclic: for every consecutive dimension pair (d, d+1), the directed graph
// with matched pairs pointing upward and every other codimension-1 incidence
// pointing downward must have no directed cycle.  This is deliberately a
// plain graph-cycle search so it does not lean on the theory it validates.
// Structural mismatches (faces not in the complex, a face in two pairs,
// stage/vertex inconsistencies, wrong bookkeeping) throw invalid_argument;
// a well-formed but cyclic matching returns ok = false with a witness.
AcyclicityCheck verify_acyclic(const ComplexSpec& spec, const MorseData& data);

// Closed-form critical cells for the supported families, as faces.
// Parameters outside a family's regime throw invalid_argument (for cycle
// powers that includes the window 2p+3 <= n <= 3p, where no closed form is
// known).
std::vector<VertexSet> predicted_critical_cells(CriticalFamily family, int a,
                                                int b);

// Reads off the homotopy type a verified run certifies: contractible when
// nothing is critical, wedge(count, d) when all critical faces share one
// dimension d >= 0 (the empty face being matched), undetermined otherwise.
// Refuses to run without a passing acyclicity certificate.
HomotopyClaim homotopy_claim(const MorseData& data,
                             const AcyclicityCheck& acyclicity);

// The pool after a single element matching at `v`, computed two ways and
// cross-checked (total 2-cut complexes only): (a) by running the stage, and
// (b) by the membership characterization "sigma survives iff sigma + {v} is
// not a face", evaluated from the graph directly.  Disagreement throws
// logic_error.  A void complex yields an empty pool.
std::vector<VertexSet> first_matching_diagnostics(const ComplexSpec& spec,
                                                  int v);

}  // namespace cutcomplex
