#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutcomplex {

// Hard cap on ambient vertex count: every subset fits in two machine words.
inline constexpr int kMaxVertices = 128;

// A subset of {0, ..., n-1} for an ambient n <= kMaxVertices, used for faces,
// their complements and every other vertex collection in the engine.
// Value-type semantics: cheap to copy, immutable sharing is safe.
class VertexSet {
public:
    constexpr VertexSet() : w_{0, 0} {}

    VertexSet(std::initializer_list<int> verts) : w_{0, 0} {
        for (int v : verts) add(v);
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.add(v);
        return s;
    }

    // {0, ..., n-1}
    static VertexSet full(int n) {
        check_range(n == 0 ? 0 : n - 1);
        VertexSet s;
        if (n >= 64) {
            s.w_[0] = ~0ull;
            s.w_[1] = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
        } else if (n > 0) {
            s.w_[0] = (1ull << n) - 1;
        }
        return s;
    }

    // Subset of {0,...,63} given directly as a bit mask (bit v <=> vertex v).
    static VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.w_[0] = mask;
        return s;
    }

    template <class It>
    static VertexSet of(It first, It last) {
        VertexSet s;
        for (; first != last; ++first) s.add(static_cast<int>(*first));
        return s;
    }

    static VertexSet of(const std::vector<int>& verts) {
        return of(verts.begin(), verts.end());
    }

    bool contains(int v) const {
        check_range(v);
        return (w_[v >> 6] >> (v & 63)) & 1ull;
    }

    void add(int v) {
        check_range(v);
        w_[v >> 6] |= 1ull << (v & 63);
    }

    void remove(int v) {
        check_range(v);
        w_[v >> 6] &= ~(1ull << (v & 63));
    }

    VertexSet with(int v) const {
        VertexSet s = *this;
        s.add(v);
        return s;
    }

    VertexSet without(int v) const {
        VertexSet s = *this;
        s.remove(v);
        return s;
    }

    int count() const {
        return std::popcount(w_[0]) + std::popcount(w_[1]);
    }

    bool empty() const { return w_[0] == 0 && w_[1] == 0; }

    bool subset_of(const VertexSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    bool intersects(const VertexSet& o) const {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) {
        a.w_[0] |= b.w_[0];
        a.w_[1] |= b.w_[1];
        return a;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) {
        a.w_[0] &= b.w_[0];
        a.w_[1] &= b.w_[1];
        return a;
    }

    // set difference
    friend VertexSet operator-(VertexSet a, const VertexSet& b) {
        a.w_[0] &= ~b.w_[0];
        a.w_[1] &= ~b.w_[1];
        return a;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.w_[0] == b.w_[0] && a.w_[1] == b.w_[1];
    }

    friend bool operator!=(const VertexSet& a, const VertexSet& b) {
        return !(a == b);
    }

    // Lexicographic order of the ascending vertex lists; this is also the
    // order in which faces of a fixed dimension are enumerated and indexed.
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        return compare_lex(a, b) < 0;
    }

    // Smallest member, or -1 when empty.
    int min() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    // Largest member, or -1 when empty.
    int max() const {
        if (w_[1]) return 127 - std::countl_zero(w_[1]);
        if (w_[0]) return 63 - std::countl_zero(w_[0]);
        return -1;
    }

    // Visits members in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (int word = 0; word < 2; ++word) {
            std::uint64_t bits = w_[word];
            while (bits) {
                int v = 64 * word + std::countr_zero(bits);
                f(v);
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::uint64_t word(int i) const { return w_[i]; }

    // Low 64-bit mask; only valid when every member is < 64.
    std::uint64_t low_mask() const {
        if (w_[1] != 0)
            throw std::logic_error("VertexSet::low_mask: member >= 64");
        return w_[0];
    }

    // -1 / 0 / +1 comparison in lexicographic order of ascending vertex lists
    // (a proper prefix precedes its extensions).
    static int compare_lex(const VertexSet& a, const VertexSet& b) {
        VertexSet x = a, y = b;
        while (true) {
            int av = x.min(), bv = y.min();
            if (av == bv) {
                if (av < 0) return 0;  // both exhausted: equal
                x.remove(av);
                y.remove(bv);
                continue;
            }
            if (av < 0) return -1;  // a is a proper prefix of b
            if (bv < 0) return 1;
            return av < bv ? -1 : 1;
        }
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        });
        s += "}";
        return s;
    }

    struct Hash {
        std::size_t operator()(const VertexSet& s) const {
            std::uint64_t h = s.w_[0] * 0x9e3779b97f4a7c15ull;
            h ^= s.w_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

private:
    static void check_range(int v) {
        if (v < 0 || v >= kMaxVertices)
            throw std::out_of_range("vertex index " + std::to_string(v) +
                                    " outside [0, " +
                                    std::to_string(kMaxVertices) + ")");
    }

    std::uint64_t w_[2];
};

}  // namespace cutcomplex
