#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cutcomplex/graph.hpp"

namespace cutcomplex {

// Parse error with the byte offset of the offending character.
class FamilyParseError : public std::runtime_error {
public:
    FamilyParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("at byte " + std::to_string(offset) + ": " +
                             what),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A parsed graph-family descriptor.  Supported forms:
//   cycle_power(n,p) | circulant(n; s1,s2,...) |
//   cartesian(complete(m), path(n)) | cartesian(complete(m), cycle(n)) |
//   file(path)
struct FamilyExpr {
    enum class Kind {
        cycle_power,
        circulant,
        complete_path_product,
        complete_cycle_product,
        file,
    };
    Kind kind = Kind::cycle_power;
    int a = 0;                // n (cycle_power, circulant) or m (products)
    int b = 0;                // p (cycle_power) or n (products)
    std::vector<int> shifts;  // circulant
    std::string path;         // file

    // For products: vertex (i,j) has flat index i*b + j.  True when the
    // expression carries that two-coordinate structure.
    bool is_product() const {
        return kind == Kind::complete_path_product ||
               kind == Kind::complete_cycle_product;
    }
};

// Parses the grammar above.  Whitespace-insensitive; integers are decimal.
// Unknown names, wrong arity, malformed syntax, or trailing input throw
// FamilyParseError with a byte offset.  Parameter *ranges* are validated by
// the graph constructors inside build_graph.
FamilyExpr parse_family(const std::string& text);

// Builds the graph the expression describes (file(...) reads an edge list).
Graph build_graph(const FamilyExpr& expr);

// Canonical text form, parseable back by parse_family (except file paths
// containing ')' — not representable in the grammar and rejected on parse).
std::string describe(const FamilyExpr& expr);

}  // namespace cutcomplex
