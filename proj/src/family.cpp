#include "cutcomplex/family.hpp"

#include <cctype>
#include <limits>

namespace cutcomplex {

namespace {

// Tiny recursive-descent parser over a byte buffer.  Every token accessor
// skips leading whitespace first, so the grammar is whitespace-insensitive.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    FamilyExpr parse() {
        FamilyExpr expr = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("trailing characters after family expression");
        }
        return expr;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw FamilyParseError(pos_, what);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                ++pos_;
            } else {
                break;
            }
        }
        if (pos_ == start) fail("expected a family name");
        return text_.substr(start, pos_ - start);
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_ = start;
            fail("expected an integer");
        }
        long long value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) {
                pos_ = start;
                fail("integer out of range");
            }
            ++pos_;
        }
        return static_cast<int>(negative ? -value : value);
    }

    FamilyExpr parse_expr() {
        skip_ws();
        std::size_t name_at = pos_;
        std::string name = parse_name();
        if (name == "cycle_power") return parse_cycle_power();
        if (name == "circulant") return parse_circulant();
        if (name == "cartesian") return parse_cartesian();
        if (name == "file") return parse_file();
        pos_ = name_at;
        fail("unknown family '" + name +
             "' (expected cycle_power, circulant, cartesian, or file)");
    }

    FamilyExpr parse_cycle_power() {
        FamilyExpr expr;
        expr.kind = FamilyExpr::Kind::cycle_power;
        expect('(');
        expr.a = parse_int();
        expect(',');
        expr.b = parse_int();
        expect(')');
        return expr;
    }

    FamilyExpr parse_circulant() {
        FamilyExpr expr;
        expr.kind = FamilyExpr::Kind::circulant;
        expect('(');
        expr.a = parse_int();
        expect(';');
        expr.shifts.push_back(parse_int());
        while (peek_is(',')) {
            expect(',');
            expr.shifts.push_back(parse_int());
        }
        expect(')');
        return expr;
    }

    FamilyExpr parse_cartesian() {
        FamilyExpr expr;
        expect('(');
        skip_ws();
        std::size_t left_at = pos_;
        std::string left = parse_name();
        if (left != "complete") {
            pos_ = left_at;
            fail("the first cartesian factor must be complete(m)");
        }
        expect('(');
        expr.a = parse_int();
        expect(')');
        expect(',');
        skip_ws();
        std::size_t right_at = pos_;
        std::string right = parse_name();
        if (right == "path") {
            expr.kind = FamilyExpr::Kind::complete_path_product;
        } else if (right == "cycle") {
            expr.kind = FamilyExpr::Kind::complete_cycle_product;
        } else {
            pos_ = right_at;
            fail("the second cartesian factor must be path(n) or cycle(n)");
        }
        expect('(');
        expr.b = parse_int();
        expect(')');
        expect(')');
        return expr;
    }

    FamilyExpr parse_file() {
        FamilyExpr expr;
        expr.kind = FamilyExpr::Kind::file;
        expect('(');
        std::size_t end = text_.find(')', pos_);
        if (end == std::string::npos) {
            pos_ = text_.size();
            fail("expected ')' closing the file path");
        }
        std::string raw = text_.substr(pos_, end - pos_);
        std::size_t lo = raw.find_first_not_of(" \t\r\n");
        std::size_t hi = raw.find_last_not_of(" \t\r\n");
        if (lo == std::string::npos) fail("empty file path");
        expr.path = raw.substr(lo, hi - lo + 1);
        pos_ = end + 1;
        return expr;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

FamilyExpr parse_family(const std::string& text) { return Parser(text).parse(); }

Graph build_graph(const FamilyExpr& expr) {
    switch (expr.kind) {
        case FamilyExpr::Kind::cycle_power:
            return cycle_power(expr.a, expr.b);
        case FamilyExpr::Kind::circulant:
            return circulant(expr.a, expr.shifts);
        case FamilyExpr::Kind::complete_path_product:
            return cartesian_product(complete(expr.a), path(expr.b));
        case FamilyExpr::Kind::complete_cycle_product:
            return cartesian_product(complete(expr.a), cycle(expr.b));
        case FamilyExpr::Kind::file:
            return read_edge_list_file(expr.path);
    }
    throw std::logic_error("unreachable family kind");
}

std::string describe(const FamilyExpr& expr) {
    switch (expr.kind) {
        case FamilyExpr::Kind::cycle_power:
            return "cycle_power(" + std::to_string(expr.a) + "," +
                   std::to_string(expr.b) + ")";
        case FamilyExpr::Kind::circulant: {
            std::string out = "circulant(" + std::to_string(expr.a) + "; ";
            for (std::size_t i = 0; i < expr.shifts.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(expr.shifts[i]);
            }
            return out + ")";
        }
        case FamilyExpr::Kind::complete_path_product:
            return "cartesian(complete(" + std::to_string(expr.a) + "), path(" +
                   std::to_string(expr.b) + "))";
        case FamilyExpr::Kind::complete_cycle_product:
            return "cartesian(complete(" + std::to_string(expr.a) +
                   "), cycle(" + std::to_string(expr.b) + "))";
        case FamilyExpr::Kind::file:
            return "file(" + expr.path + ")";
    }
    throw std::logic_error("unreachable family kind");
}

}  // namespace cutcomplex
