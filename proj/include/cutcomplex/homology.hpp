#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cutcomplex/complex.hpp"

namespace cutcomplex {

using Int = boost::multiprecision::cpp_int;

// Sparse integer matrix in triplet form. Invariants: no duplicate (row, col)
// pair, no stored zero; both are enforced when the matrix is consumed.
struct SparseIntMatrix {
    struct Entry {
        long long row;
        long long col;
        Int value;
    };

    long long rows = 0;
    long long cols = 0;
    std::vector<Entry> entries;

    void add(long long r, long long c, Int v);
};

// Dump format for cross-checking with external tools:
// header "rows cols nnz", then one "r c v" triple per line.
void write_matrix_dump(std::ostream& out, const SparseIntMatrix& m);
SparseIntMatrix read_matrix_dump(std::istream& in);

// Boundary matrix of the complex: columns indexed by d-faces, rows by
// (d-1)-faces, both in the lexicographic order of faces_of_dim. The column of
// face [v0 < ... < vd] has entry (-1)^i at the row of the face without vi.
// d = 0 maps vertices onto the single empty face (augmentation row of ones).
// Rejects a void complex and d outside [0, top_dim].
SparseIntMatrix boundary_matrix(const ComplexSpec& spec, int d);

struct SmithResult {
    long long rank = 0;
    // nontrivial invariant factors (> 1), each dividing the next
    std::vector<Int> invariants;
};

// Exact Smith normal form data (rank + invariant factors) via integer-
// preserving sparse elimination: free singleton pivots first, then unit
// pivots chosen to minimize fill, and gcd reduction steps for the rare
// non-unit pivot. Arithmetic runs over checked 64-bit integers and restarts
// over arbitrary-precision integers if anything overflows.
SmithResult smith_normal_form(const SparseIntMatrix& m);

// Rank over the rationals by an independent code path: sparse Gaussian
// elimination with exact rational arithmetic. Used to cross-check the Smith
// normal form rank; deliberately shares no elimination code with it.
long long rational_rank(const SparseIntMatrix& m);

struct BettiEntry {
    long long beta = 0;         // free rank of reduced homology in this dim
    std::vector<Int> torsion;   // invariant factors > 1, divisibility chain
};

struct BettiReport {
    enum class Coverage {
        void_complex,  // no faces at all; every group vanishes
        empty_only,    // the complex {emptyset}: reduced homology Z in dim -1
        full,          // every dimension -1..top covered
        window         // restricted dimension range covered
    };

    Coverage coverage = Coverage::full;
    int dim_low = 0, dim_high = -1;  // inclusive covered range (empty if low>high)
    std::vector<BettiEntry> entries;  // index d - dim_low

    bool covers(int d) const { return d >= dim_low && d <= dim_high; }

    // free rank in dimension d; 0 when d is outside the covered range
    long long beta(int d) const {
        return covers(d) ? entries[static_cast<std::size_t>(d - dim_low)].beta
                         : 0;
    }

    const std::vector<Int>& torsion(int d) const;

    bool any_torsion() const;
};

struct HomologyOptions {
    // Full-range computation is refused when 2^n exceeds this budget (2^n
    // bounds the face count of these complexes and the exhaustive scans the
    // computation would perform); pass a dimension window instead.
    long long face_budget = 1ll << 20;

    // Downward closure makes missing (d-1)-cells zero rows, so the boundary
    // map is the simplex boundary restricted to the face columns and its
    // rank/torsion can be recovered from the (usually far smaller) matrix of
    // coefficients the (d+1)-simplices place on the missing d-cells. Applied
    // whenever the missing cells are no more numerous than the faces; with no
    // missing cells the Smith form is the simplex's (rank C(n-1,d), torsion
    // free) outright. Disable to force explicit boundary-matrix elimination.
    bool use_skeleton_shortcut = true;
};

// Reduced integer homology: beta_d = f_d - rank d_d - rank d_{d+1}, torsion
// of dimension d = invariant factors of d_{d+1} exceeding 1, with the
// augmentation row included so beta_{-1} is representable. If dims is given,
// only that window of dimensions is computed (boundary matrices at d and d+1
// are built per requested d); otherwise all of -1..top_dim, subject to the
// face budget.
BettiReport reduced_homology(const ComplexSpec& spec,
                             std::optional<std::pair<int, int>> dims = {},
                             const HomologyOptions& options = {});

// Checks sum_{d >= -1} (-1)^d f_d == sum_{d >= -1} (-1)^d beta_d (reduced
// Euler characteristic, both sides including the (-1)-dimensional terms).
// Requires a report covering every dimension.
bool euler_characteristic_check(const ComplexSpec& spec,
                                const BettiReport& report);

}  // namespace cutcomplex
