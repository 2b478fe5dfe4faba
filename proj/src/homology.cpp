#include "cutcomplex/homology.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace cutcomplex {

using Rational = boost::multiprecision::cpp_rational;

void SparseIntMatrix::add(long long r, long long c, Int v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("matrix entry (" + std::to_string(r) + "," +
                                std::to_string(c) + ") outside " +
                                std::to_string(rows) + "x" +
                                std::to_string(cols));
    if (v == 0) throw std::invalid_argument("explicit zero matrix entry");
    entries.push_back(Entry{r, c, std::move(v)});
}

void write_matrix_dump(std::ostream& out, const SparseIntMatrix& m) {
    out << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n';
    for (const auto& e : m.entries)
        out << e.row << ' ' << e.col << ' ' << e.value << '\n';
}

SparseIntMatrix read_matrix_dump(std::istream& in) {
    SparseIntMatrix m;
    std::size_t nnz = 0;
    if (!(in >> m.rows >> m.cols >> nnz))
        throw std::runtime_error("matrix dump: bad header");
    m.entries.reserve(nnz);
    for (std::size_t i = 0; i < nnz; ++i) {
        long long r, c;
        Int v;
        if (!(in >> r >> c >> v))
            throw std::runtime_error("matrix dump: bad entry " +
                                     std::to_string(i));
        m.add(r, c, std::move(v));
    }
    return m;
}

SparseIntMatrix boundary_matrix(const ComplexSpec& spec, int d) {
    if (spec.is_void())
        throw std::invalid_argument("boundary matrix of a void complex");
    if (d < 0 || d > spec.top_dim())
        throw std::invalid_argument("boundary dimension " + std::to_string(d) +
                                    " outside [0, " +
                                    std::to_string(spec.top_dim()) + "]");
    const std::vector<VertexSet> row_faces = faces_of_dim(spec, d - 1);
    const std::vector<VertexSet> col_faces = faces_of_dim(spec, d);

    std::unordered_map<VertexSet, long long, VertexSet::Hash> row_index;
    row_index.reserve(row_faces.size() * 2);
    for (std::size_t i = 0; i < row_faces.size(); ++i)
        row_index.emplace(row_faces[i], static_cast<long long>(i));

    SparseIntMatrix m;
    m.rows = static_cast<long long>(row_faces.size());
    m.cols = static_cast<long long>(col_faces.size());
    m.entries.reserve(col_faces.size() * static_cast<std::size_t>(d + 1));
    for (std::size_t c = 0; c < col_faces.size(); ++c) {
        int i = 0;
        col_faces[c].for_each([&](int v) {
            const auto it = row_index.find(col_faces[c].without(v));
            // downward closure guarantees every codimension-1 subface exists
            assert(it != row_index.end());
            m.add(it->second, static_cast<long long>(c),
                  (i % 2 == 0) ? Int(1) : Int(-1));
            ++i;
        });
    }
    return m;
}

// ---------------------------------------------------------------------------
// Smith normal form via sparse integer-preserving elimination.
//
// The eliminator is templated over a scalar policy so the whole pass can run
// on checked 64-bit words (the common case: boundary matrices keep tiny
// values) and transparently restart with arbitrary precision on overflow.
// ---------------------------------------------------------------------------

namespace {

struct OverflowEscape {};

struct Ops64 {
    using S = long long;
    static S add(S a, S b) {
        S r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowEscape{};
        return r;
    }
    static S sub(S a, S b) {
        S r;
        if (__builtin_sub_overflow(a, b, &r)) throw OverflowEscape{};
        return r;
    }
    static S mul(S a, S b) {
        S r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowEscape{};
        return r;
    }
    static S abs(S a) {
        if (a == std::numeric_limits<S>::min()) throw OverflowEscape{};
        return a < 0 ? -a : a;
    }
    static S quot(S a, S b) { return a / b; }  // truncated
    static bool divides(S a, S b) { return b % a == 0; }
    static bool is_unit(S a) { return a == 1 || a == -1; }
    static S from_int(const Int& v) {
        if (v > std::numeric_limits<S>::max() ||
            v < std::numeric_limits<S>::min())
            throw OverflowEscape{};
        return v.convert_to<S>();
    }
    static Int to_int(S v) { return Int(v); }
};

struct OpsBig {
    using S = Int;
    static S add(const S& a, const S& b) { return a + b; }
    static S sub(const S& a, const S& b) { return a - b; }
    static S mul(const S& a, const S& b) { return a * b; }
    static S abs(const S& a) { return boost::multiprecision::abs(a); }
    static S quot(const S& a, const S& b) { return a / b; }  // truncated
    static bool divides(const S& a, const S& b) { return b % a == 0; }
    static bool is_unit(const S& a) { return a == 1 || a == -1; }
    static S from_int(const Int& v) { return v; }
    static Int to_int(const S& v) { return v; }
};

template <class Ops>
class Eliminator {
    using S = typename Ops::S;
    using ColEntry = std::pair<long long, S>;  // (row, value), sorted by row

public:
    Eliminator(const SparseIntMatrix& m, std::size_t max_live_entries)
        : nrows_(m.rows),
          ncols_(m.cols),
          max_live_(max_live_entries),
          col_(static_cast<std::size_t>(m.cols)),
          col_alive_(static_cast<std::size_t>(m.cols), 1),
          row_alive_(static_cast<std::size_t>(m.rows), 1),
          row_nnz_(static_cast<std::size_t>(m.rows), 0),
          row_cols_(static_cast<std::size_t>(m.rows)) {
        for (const auto& e : m.entries) {
            col_[static_cast<std::size_t>(e.col)].emplace_back(
                e.row, Ops::from_int(e.value));
        }
        live_ = 0;
        for (long long c = 0; c < ncols_; ++c) {
            auto& v = col_at(c);
            std::sort(v.begin(), v.end(),
                      [](const ColEntry& a, const ColEntry& b) {
                          return a.first < b.first;
                      });
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i].first == v[i - 1].first)
                    throw std::invalid_argument(
                        "duplicate matrix entry at row " +
                        std::to_string(v[i].first));
            for (const auto& [r, val] : v) {
                (void)val;
                ++row_nnz_[static_cast<std::size_t>(r)];
                row_cols_[static_cast<std::size_t>(r)].push_back(c);
            }
            live_ += v.size();
        }
        buckets_.resize(kBucketCount);
        for (long long c = 0; c < ncols_; ++c) push_bucket(c);
        for (long long r = 0; r < nrows_; ++r)
            if (row_nnz_[static_cast<std::size_t>(r)] == 1)
                single_rows_.push_back(r);
    }

    SmithResult run() {
        while (true) {
            if (eliminate_singleton_row()) continue;
            long long c = pop_bucket();
            if (c < 0) break;
            auto [r, unit] = choose_pivot_in_col(c);
            if (r < 0) continue;  // column emptied meanwhile
            if (!unit) reduce_until_divides(r, c);
            eliminate(r, c);
        }
        SmithResult result;
        result.rank = static_cast<long long>(diagonal_.size());
        result.invariants = normalize_invariants();
        return result;
    }

private:
    static constexpr int kBucketCount = 65;  // nnz >= 64 shares the last one

    std::vector<ColEntry>& col_at(long long c) {
        return col_[static_cast<std::size_t>(c)];
    }

    int bucket_of(long long c) {
        return static_cast<int>(
            std::min<std::size_t>(col_at(c).size(), kBucketCount - 1));
    }

    void push_bucket(long long c) {
        const int b = bucket_of(c);
        buckets_[static_cast<std::size_t>(b)].push_back(c);
        if (b < bucket_cursor_) bucket_cursor_ = b;
    }

    // Lowest-fill column, lazily validated.
    long long pop_bucket() {
        while (bucket_cursor_ < kBucketCount) {
            auto& b = buckets_[static_cast<std::size_t>(bucket_cursor_)];
            if (b.empty()) {
                ++bucket_cursor_;
                continue;
            }
            const long long c = b.back();
            b.pop_back();
            if (!col_alive_[static_cast<std::size_t>(c)]) continue;
            if (col_at(c).empty()) {  // structurally zero column
                col_alive_[static_cast<std::size_t>(c)] = 0;
                continue;
            }
            if (bucket_of(c) != bucket_cursor_) {
                push_bucket(c);  // stale position, requeue
                continue;
            }
            return c;
        }
        return -1;
    }

    // Entry of the column to pivot on: prefer units in the sparsest row,
    // otherwise the smallest magnitude. Returns (row, is_unit).
    std::pair<long long, bool> choose_pivot_in_col(long long c) {
        long long best_row = -1;
        bool best_unit = false;
        long long best_rnnz = 0;
        S best_abs{};
        for (const auto& [r, v] : col_at(c)) {
            const long long rnnz =
                static_cast<long long>(row_nnz_[static_cast<std::size_t>(r)]);
            const bool unit = Ops::is_unit(v);
            const S a = Ops::abs(v);
            bool better;
            if (best_row < 0)
                better = true;
            else if (unit != best_unit)
                better = unit;
            else if (unit)
                better = rnnz < best_rnnz;
            else
                better = a < best_abs || (a == best_abs && rnnz < best_rnnz);
            if (better) {
                best_row = r;
                best_unit = unit;
                best_rnnz = rnnz;
                best_abs = a;
            }
        }
        return {best_row, best_unit};
    }

    // Rows with one live entry eliminate for free when the entry is a unit:
    // the Schur update is empty and the pivot column simply disappears.
    bool eliminate_singleton_row() {
        while (!single_rows_.empty()) {
            const long long r = single_rows_.back();
            single_rows_.pop_back();
            if (!row_alive_[static_cast<std::size_t>(r)] ||
                row_nnz_[static_cast<std::size_t>(r)] != 1)
                continue;
            const long long c = scrub_row(r).front();
            const S v = *value_at(r, c);
            if (!Ops::is_unit(v)) continue;  // leave to the general path
            eliminate(r, c);
            return true;
        }
        return false;
    }

    // Drops stale column ids from row_cols_[r]; returns the verified list.
    std::vector<long long>& scrub_row(long long r) {
        auto& lst = row_cols_[static_cast<std::size_t>(r)];
        std::size_t w = 0;
        for (std::size_t i = 0; i < lst.size(); ++i) {
            const long long c = lst[i];
            if (!col_alive_[static_cast<std::size_t>(c)]) continue;
            if (!value_at(r, c)) continue;
            bool dup = false;
            for (std::size_t j = 0; j < w; ++j)
                if (lst[j] == c) {
                    dup = true;
                    break;
                }
            if (!dup) lst[w++] = c;
        }
        lst.resize(w);
        return lst;
    }

    const S* value_at(long long r, long long c) {
        const auto& v = col_at(c);
        const auto it = std::lower_bound(
            v.begin(), v.end(), r,
            [](const ColEntry& e, long long row) { return e.first < row; });
        if (it == v.end() || it->first != r) return nullptr;
        return &it->second;
    }

    void note_insert(long long r, long long c) {
        ++row_nnz_[static_cast<std::size_t>(r)];
        row_cols_[static_cast<std::size_t>(r)].push_back(c);
        ++live_;
        if (live_ > max_live_)
            throw std::runtime_error(
                "sparse elimination fill exceeded the memory budget");
    }

    void note_erase(long long r) {
        auto& nnz = row_nnz_[static_cast<std::size_t>(r)];
        --nnz;
        --live_;
        if (nnz == 1 && row_alive_[static_cast<std::size_t>(r)])
            single_rows_.push_back(r);
    }

    // col[j] -= q * col[c]; the pivot row entry must cancel exactly.
    void column_axpy(long long j, const S& q, long long c, long long pivot_row) {
        auto& target = col_at(j);
        const auto& source = col_at(c);
        scratch_.clear();
        scratch_.reserve(target.size() + source.size());
        std::size_t a = 0, b = 0;
        while (a < target.size() || b < source.size()) {
            if (b == source.size() ||
                (a < target.size() && target[a].first < source[b].first)) {
                scratch_.push_back(target[a++]);
            } else if (a == target.size() ||
                       source[b].first < target[a].first) {
                const long long r = source[b].first;
                S nv = Ops::sub(S{}, Ops::mul(q, source[b].second));
                ++b;
                if (nv != 0) {
                    scratch_.emplace_back(r, std::move(nv));
                    note_insert(r, j);
                }
            } else {
                const long long r = target[a].first;
                S nv = Ops::sub(target[a].second, Ops::mul(q, source[b].second));
                ++a;
                ++b;
                if (nv != 0) {
                    assert(r != pivot_row);
                    scratch_.emplace_back(r, std::move(nv));
                } else {
                    note_erase(r);
                }
            }
        }
        (void)pivot_row;
        target.swap(scratch_);
        push_bucket(j);
    }

    // Single-entry update M[i][j] -= q * a (used by the row operations of the
    // non-unit reduction), keeping the column sorted.
    void entry_axpy(long long i, long long j, const S& q, const S& a) {
        auto& v = col_at(j);
        const auto it = std::lower_bound(
            v.begin(), v.end(), i,
            [](const ColEntry& e, long long row) { return e.first < row; });
        const S delta = Ops::mul(q, a);
        if (it != v.end() && it->first == i) {
            it->second = Ops::sub(it->second, delta);
            if (it->second == 0) {
                v.erase(it);
                note_erase(i);
                push_bucket(j);
            }
        } else {
            v.insert(it, ColEntry{i, Ops::sub(S{}, delta)});
            note_insert(i, j);
            push_bucket(j);
        }
    }

    // Euclidean steps (column ops along the pivot row, row ops along the
    // pivot column) until the pivot value divides everything in its row and
    // column. Each swap strictly shrinks |pivot|, so this terminates.
    void reduce_until_divides(long long& r, long long& c) {
        while (true) {
            const S v = *value_at(r, c);
            if (Ops::is_unit(v)) return;
            bool again = false;
            // row r: reduce non-divisible entries with column operations
            for (const long long j : scrub_row(r)) {
                if (j == c) continue;
                const S a = *value_at(r, j);
                if (Ops::divides(v, a)) continue;
                const S q = Ops::quot(a, v);
                column_axpy(j, q, c, -1);
                if (const S* rem = value_at(r, j)) {
                    c = j;  // remainder is smaller than |v|: adopt as pivot
                    (void)rem;
                }
                again = true;
                break;
            }
            if (again) continue;
            // column c: reduce non-divisible entries with row operations
            const std::vector<ColEntry> snapshot = col_at(c);
            for (const auto& [i, a] : snapshot) {
                if (i == r) continue;
                if (Ops::divides(v, a)) continue;
                const S q = Ops::quot(a, v);
                // row_i -= q * row_r across every column with an entry in r
                for (const long long j : std::vector<long long>(scrub_row(r)))
                    entry_axpy(i, j, q, *value_at(r, j));
                if (value_at(i, c)) r = i;  // adopt the smaller remainder
                again = true;
                break;
            }
            if (!again) return;
        }
    }

    void eliminate(long long r, long long c) {
        const S v = *value_at(r, c);
        // Schur update: clear row r from every other column
        for (const long long j : std::vector<long long>(scrub_row(r))) {
            if (j == c) continue;
            const S a = *value_at(r, j);
            assert(Ops::divides(v, a));
            column_axpy(j, Ops::quot(a, v), c, r);
        }
        // retire the pivot column and row; the remaining column entries die
        // with it (implicit row operations, exact because v divides... they
        // subtract multiples of the now-singleton row r)
        for (const auto& [i, val] : col_at(c)) {
            (void)val;
            if (i != r) note_erase(i);
            else --live_;
        }
        col_at(c).clear();
        col_at(c).shrink_to_fit();
        col_alive_[static_cast<std::size_t>(c)] = 0;
        row_alive_[static_cast<std::size_t>(r)] = 0;
        row_nnz_[static_cast<std::size_t>(r)] = 0;
        row_cols_[static_cast<std::size_t>(r)].clear();
        row_cols_[static_cast<std::size_t>(r)].shrink_to_fit();
        diagonal_.push_back(Ops::abs(v));
    }

    // Pairwise gcd/lcm passes turn the diagonal into the divisibility chain;
    // diag(a,b) and diag(gcd,lcm) are equivalent up to unimodular changes.
    std::vector<Int> normalize_invariants() {
        std::vector<S>& d = diagonal_;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < d.size(); ++i)
                for (std::size_t j = i + 1; j < d.size(); ++j) {
                    if (Ops::divides(d[i], d[j])) continue;
                    S g = gcd_s(d[i], d[j]);
                    S l = Ops::mul(Ops::quot(d[i], g), d[j]);
                    d[i] = std::move(g);
                    d[j] = std::move(l);
                    changed = true;
                }
        }
        std::sort(d.begin(), d.end());
        std::vector<Int> out;
        for (const S& v : d)
            if (!Ops::is_unit(v)) out.push_back(Ops::to_int(v));
        return out;
    }

    static typename Ops::S gcd_s(const S& a, const S& b) {
        S x = Ops::abs(a), y = Ops::abs(b);
        while (y != 0) {
            S t = x % y;
            x = std::move(y);
            y = std::move(t);
        }
        return x;
    }

    long long nrows_, ncols_;
    std::size_t max_live_;
    std::size_t live_ = 0;
    std::vector<std::vector<ColEntry>> col_;
    std::vector<char> col_alive_, row_alive_;
    std::vector<long long> row_nnz_;
    std::vector<std::vector<long long>> row_cols_;
    std::vector<std::vector<long long>> buckets_;
    int bucket_cursor_ = 0;
    std::vector<long long> single_rows_;
    std::vector<ColEntry> scratch_;
    std::vector<S> diagonal_;
};

// ~2 GiB of 16-byte column entries before the eliminator gives up
constexpr std::size_t kMaxLiveEntries = 130'000'000;

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m) {
    try {
        return Eliminator<Ops64>(m, kMaxLiveEntries).run();
    } catch (const OverflowEscape&) {
        return Eliminator<OpsBig>(m, kMaxLiveEntries / 2).run();
    }
}

// ---------------------------------------------------------------------------
// Independent rational-rank path: plain sparse Gaussian elimination over
// exact rationals, its own pivoting, no shared elimination code.
// ---------------------------------------------------------------------------

long long rational_rank(const SparseIntMatrix& m) {
    using ColEntry = std::pair<long long, Rational>;
    std::vector<std::vector<ColEntry>> col(static_cast<std::size_t>(m.cols));
    for (const auto& e : m.entries) {
        if (e.row < 0 || e.row >= m.rows || e.col < 0 || e.col >= m.cols)
            throw std::out_of_range("matrix entry out of range");
        col[static_cast<std::size_t>(e.col)].emplace_back(e.row,
                                                          Rational(e.value));
    }
    std::vector<char> col_alive(static_cast<std::size_t>(m.cols), 1);
    for (auto& v : col) {
        std::sort(v.begin(), v.end(), [](const ColEntry& a, const ColEntry& b) {
            return a.first < b.first;
        });
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i].first == v[i - 1].first)
                throw std::invalid_argument("duplicate matrix entry");
    }

    const auto find_row = [](std::vector<ColEntry>& v, long long r)
        -> Rational* {
        const auto it = std::lower_bound(
            v.begin(), v.end(), r,
            [](const ColEntry& e, long long row) { return e.first < row; });
        if (it == v.end() || it->first != r) return nullptr;
        return &it->second;
    };

    long long rank = 0;
    while (true) {
        // sparsest live column
        long long c = -1;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (long long j = 0; j < m.cols; ++j) {
            const auto js = static_cast<std::size_t>(j);
            if (!col_alive[js]) continue;
            if (col[js].empty()) {
                col_alive[js] = 0;
                continue;
            }
            if (col[js].size() < best) {
                best = col[js].size();
                c = j;
            }
        }
        if (c < 0) break;
        const auto cs = static_cast<std::size_t>(c);
        const long long r = col[cs].front().first;
        const Rational v = *find_row(col[cs], r);

        for (long long j = 0; j < m.cols; ++j) {
            const auto js = static_cast<std::size_t>(j);
            if (j == c || !col_alive[js]) continue;
            const Rational* a = find_row(col[js], r);
            if (!a) continue;
            const Rational factor = *a / v;
            // col_j -= factor * col_c, then drop the now-zero row r entry
            std::vector<ColEntry> merged;
            merged.reserve(col[js].size() + col[cs].size());
            std::size_t x = 0, y = 0;
            while (x < col[js].size() || y < col[cs].size()) {
                if (y == col[cs].size() ||
                    (x < col[js].size() &&
                     col[js][x].first < col[cs][y].first)) {
                    merged.push_back(col[js][x++]);
                } else if (x == col[js].size() ||
                           col[cs][y].first < col[js][x].first) {
                    Rational nv = -factor * col[cs][y].second;
                    if (nv != 0) merged.emplace_back(col[cs][y].first,
                                                     std::move(nv));
                    ++y;
                } else {
                    Rational nv = col[js][x].second - factor * col[cs][y].second;
                    if (nv != 0) merged.emplace_back(col[js][x].first,
                                                     std::move(nv));
                    ++x;
                    ++y;
                }
            }
            col[js].swap(merged);
        }
        col[cs].clear();
        col_alive[cs] = 0;
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Reduced homology driver
// ---------------------------------------------------------------------------

namespace {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

template <class F>
void for_each_subset_of_size(int n, int m, F&& fn) {
    if (m < 0 || m > n) return;
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(VertexSet::of(idx.begin(), idx.end()));
        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            idx[static_cast<std::size_t>(j)] =
                idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

const std::vector<Int>& BettiReport::torsion(int d) const {
    static const std::vector<Int> kNone;
    return covers(d) ? entries[static_cast<std::size_t>(d - dim_low)].torsion
                     : kNone;
}

bool BettiReport::any_torsion() const {
    for (const auto& e : entries)
        if (!e.torsion.empty()) return true;
    return false;
}

BettiReport reduced_homology(const ComplexSpec& spec,
                             std::optional<std::pair<int, int>> dims,
                             const HomologyOptions& options) {
    BettiReport report;
    if (spec.is_void()) {
        report.coverage = BettiReport::Coverage::void_complex;
        report.dim_low = 0;
        report.dim_high = -1;
        return report;
    }
    const int n = spec.vertex_count();
    const int top = spec.top_dim();

    int lo = -1, hi = top;
    if (dims) {
        lo = std::max(dims->first, -1);
        hi = std::min(dims->second, top);
        if (lo > hi) {
            report.coverage = BettiReport::Coverage::window;
            report.dim_low = lo;
            report.dim_high = lo - 1;
            return report;
        }
    } else {
        if (n >= 62 || (1ll << n) > options.face_budget)
            throw std::length_error(
                "full-range homology refused: 2^" + std::to_string(n) +
                " potential faces exceed the budget of " +
                std::to_string(options.face_budget) +
                "; pass a dimension window");
    }

    // face lists for dims lo-1 .. hi+1 (boundary at d needs layers d-1 and d)
    const int face_lo = std::max(lo - 1, -1);
    const int face_hi = std::min(hi + 1, top);
    std::vector<std::vector<VertexSet>> faces(
        static_cast<std::size_t>(face_hi - face_lo + 1));
    for (int d = face_lo; d <= face_hi; ++d)
        faces[static_cast<std::size_t>(d - face_lo)] = faces_of_dim(spec, d);
    const auto count_of = [&](int d) -> long long {
        if (d < face_lo || d > face_hi) return 0;
        return static_cast<long long>(
            faces[static_cast<std::size_t>(d - face_lo)].size());
    };

    // rank and invariant factors of each needed boundary map
    std::vector<long long> rank(static_cast<std::size_t>(hi - lo + 2), 0);
    std::vector<std::vector<Int>> invariants(
        static_cast<std::size_t>(hi - lo + 2));
    for (int d = lo; d <= hi + 1; ++d) {
        const auto slot = static_cast<std::size_t>(d - lo);
        if (d <= -1 || d > top) continue;  // no map: rank stays 0
        if (d == 0) {
            // augmentation row of ones
            rank[slot] = count_of(0) > 0 ? 1 : 0;
            continue;
        }
        if (count_of(d) == 0) continue;  // no columns
        if (options.use_skeleton_shortcut) {
            // Because the complex is downward closed, a missing (d-1)-cell
            // forces a zero row, so the boundary map is the full simplex
            // boundary restricted to the face columns.  Its kernel is the
            // simplex cycle space Z_d intersected with those coordinates,
            // and exactness of the (augmented) simplex chain complex makes
            // Z_d the image of the simplex boundary one dimension up.
            // Writing S for the missing d-cells and T for the matrix of
            // coefficients that (d+1)-simplices place on S,
            //   rank dB_d = C(n-1,d) - |S| + rank T,
            // and Z^S / im T is, up to free summands, the cokernel that
            // carries the torsion of dB_d, so the nontrivial invariant
            // factors of dB_d are exactly those of T.
            const auto& layer = faces[static_cast<std::size_t>(d - face_lo)];
            std::unordered_set<VertexSet, VertexSet::Hash> present(
                layer.begin(), layer.end());
            std::vector<VertexSet> missing;
            for_each_subset_of_size(n, d + 1, [&](const VertexSet& s) {
                if (!present.count(s)) missing.push_back(s);
            });
            if (missing.empty()) {
                rank[slot] = binomial(n - 1, d).convert_to<long long>();
                continue;
            }
            if (static_cast<long long>(missing.size()) <= count_of(d)) {
                std::unordered_map<VertexSet, long long, VertexSet::Hash>
                    missing_index;
                missing_index.reserve(missing.size() * 2);
                for (std::size_t i = 0; i < missing.size(); ++i)
                    missing_index.emplace(missing[i],
                                          static_cast<long long>(i));
                std::unordered_map<VertexSet, long long, VertexSet::Hash>
                    coface_index;
                SparseIntMatrix t;
                t.rows = static_cast<long long>(missing.size());
                t.cols = 0;
                for (const VertexSet& s : missing) {
                    for (int v = 0; v < n; ++v) {
                        if (s.contains(v)) continue;
                        const VertexSet tau = s.with(v);
                        if (coface_index.count(tau)) continue;
                        const long long col = t.cols++;
                        coface_index.emplace(tau, col);
                        int i = 0;
                        tau.for_each([&](int u) {
                            const auto it = missing_index.find(tau.without(u));
                            if (it != missing_index.end())
                                t.add(it->second, col,
                                      (i % 2 == 0) ? Int(1) : Int(-1));
                            ++i;
                        });
                    }
                }
                SmithResult snf = smith_normal_form(t);
                rank[slot] =
                    (binomial(n - 1, d) - Int(missing.size()) + snf.rank)
                        .convert_to<long long>();
                invariants[slot] = std::move(snf.invariants);
                continue;
            }
            // more cells absent than present: the explicit matrix is smaller
        }
        SparseIntMatrix md;
        md.rows = count_of(d - 1);
        md.cols = count_of(d);
        const auto& rows_faces = faces[static_cast<std::size_t>(d - 1 - face_lo)];
        const auto& cols_faces = faces[static_cast<std::size_t>(d - face_lo)];
        std::unordered_map<VertexSet, long long, VertexSet::Hash> row_index;
        row_index.reserve(rows_faces.size() * 2);
        for (std::size_t i = 0; i < rows_faces.size(); ++i)
            row_index.emplace(rows_faces[i], static_cast<long long>(i));
        md.entries.reserve(cols_faces.size() * static_cast<std::size_t>(d + 1));
        for (std::size_t c = 0; c < cols_faces.size(); ++c) {
            int i = 0;
            cols_faces[c].for_each([&](int v) {
                md.add(row_index.at(cols_faces[c].without(v)),
                       static_cast<long long>(c),
                       (i % 2 == 0) ? Int(1) : Int(-1));
                ++i;
            });
        }
        SmithResult snf = smith_normal_form(md);
        rank[slot] = snf.rank;
        invariants[slot] = std::move(snf.invariants);
    }

    report.dim_low = lo;
    report.dim_high = hi;
    report.entries.resize(static_cast<std::size_t>(hi - lo + 1));
    for (int d = lo; d <= hi; ++d) {
        auto& entry = report.entries[static_cast<std::size_t>(d - lo)];
        entry.beta = count_of(d) - rank[static_cast<std::size_t>(d - lo)] -
                     rank[static_cast<std::size_t>(d + 1 - lo)];
        entry.torsion = invariants[static_cast<std::size_t>(d + 1 - lo)];
    }
    if (!dims || (lo == -1 && hi == top))
        report.coverage = top == -1 ? BettiReport::Coverage::empty_only
                                    : BettiReport::Coverage::full;
    else
        report.coverage = BettiReport::Coverage::window;
    return report;
}

bool euler_characteristic_check(const ComplexSpec& spec,
                                const BettiReport& report) {
    if (report.coverage == BettiReport::Coverage::void_complex)
        return spec.is_void();  // 0 == 0
    if (report.coverage == BettiReport::Coverage::window)
        throw std::invalid_argument(
            "euler check requires a full-coverage report");
    const FVector fv = f_vector(spec);
    long long faces_side = 0, betti_side = 0;
    for (int d = -1; d <= spec.top_dim(); ++d) {
        const long long sign = (d % 2 == 0) ? 1 : -1;  // (-1)^d, d = -1 gives -1
        faces_side += sign * fv[d];
        betti_side += sign * report.beta(d);
    }
    return faces_side == betti_side;
}

}  // namespace cutcomplex
