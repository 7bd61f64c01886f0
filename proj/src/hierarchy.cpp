#include "bosewalk/hierarchy.hpp"

#include <cctype>
#include <climits>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bosewalk/errors.hpp"

namespace bosewalk {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg, size_t at) const {
        throw ValidationError("hierarchy expression: " + msg + " at position " +
                              std::to_string(at));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek_char(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    void expect_char(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    bool peek_int() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    long long parse_int() {
        skip_ws();
        const size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer", start);
        if (pos - start > 9) fail("integer too large", start);
        return std::stoll(text.substr(start, pos - start));
    }

    double parse_real() {
        skip_ws();
        const size_t start = pos;
        size_t consumed = 0;
        double value = 0;
        try {
            value = std::stod(text.substr(start), &consumed);
        } catch (const std::exception&) {
            fail("expected a number", start);
        }
        pos = start + consumed;
        return value;
    }

    bool peek_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) != 0) return false;
        const size_t after = pos + w.size();
        if (after < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_'))
            return false;
        return true;
    }

    bool eat_word(const std::string& w) {
        if (!peek_word(w)) return false;
        skip_ws();
        pos += w.size();
        return true;
    }

    std::shared_ptr<const HierarchySpec> parse_expr() {
        skip_ws();
        const size_t mark = pos;
        if (peek_int()) {
            const long long n = parse_int();
            if (eat_word("on")) {
                if (n < 1) fail("boson count must be at least 1", mark);
                auto node = std::make_shared<HierarchySpec>();
                node->kind = HierarchySpec::Kind::Dual;
                node->count = static_cast<int>(n);
                node->child = parse_expr();
                return apply_powers(node);
            }
            // bare integer leaf: path with that many vertices
            if (n < 1) fail("path needs at least one vertex", mark);
            auto leaf = std::make_shared<HierarchySpec>();
            leaf->kind = HierarchySpec::Kind::Path;
            leaf->path_sites = static_cast<int>(n);
            return apply_powers(leaf);
        }
        return apply_powers(parse_atom());
    }

    std::shared_ptr<const HierarchySpec> apply_powers(
        std::shared_ptr<const HierarchySpec> node) {
        while (peek_char('^')) {
            expect_char('^');
            const size_t mark = pos;
            const long long e = parse_int();
            if (e < 1) fail("exponent must be at least 1", mark);
            auto power = std::make_shared<HierarchySpec>();
            power->kind = HierarchySpec::Kind::Power;
            power->count = static_cast<int>(e);
            power->child = std::move(node);
            node = std::move(power);
        }
        return node;
    }

    std::shared_ptr<const HierarchySpec> parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input", pos);
        if (peek_char('(')) {
            expect_char('(');
            auto inner = parse_expr();
            expect_char(')');
            return inner;
        }
        if (eat_word("P")) {
            auto leaf = std::make_shared<HierarchySpec>();
            leaf->kind = HierarchySpec::Kind::Path;
            leaf->path_sites = 2;
            return leaf;
        }
        if (eat_word("T")) {
            auto leaf = std::make_shared<HierarchySpec>();
            leaf->kind = HierarchySpec::Kind::Triangle;
            return leaf;
        }
        if (eat_word("SQ")) {
            auto leaf = std::make_shared<HierarchySpec>();
            leaf->kind = HierarchySpec::Kind::PhasedSquare;
            expect_char('(');
            leaf->alpha = parse_real();
            expect_char(',');
            leaf->beta = parse_real();
            expect_char(',');
            leaf->gamma = parse_real();
            expect_char(')');
            return leaf;
        }
        if (eat_word("file")) {
            expect_char('(');
            const size_t start = pos;
            while (pos < text.size() && text[pos] != ')') ++pos;
            if (pos >= text.size()) fail("unterminated file reference", start);
            auto leaf = std::make_shared<HierarchySpec>();
            leaf->kind = HierarchySpec::Kind::FileRef;
            leaf->path = text.substr(start, pos - start);
            ++pos;  // ')'
            if (leaf->path.empty()) fail("empty file reference", start);
            return leaf;
        }
        fail("unknown atom", pos);
    }
};

long long saturating_pow(long long base, int exp) {
    __int128 acc = 1;
    for (int k = 0; k < exp; ++k) {
        acc *= base;
        if (acc > LLONG_MAX) return LLONG_MAX;
    }
    return static_cast<long long>(acc);
}

// Depth-first search for the smallest subtree whose build would exceed the
// cap; reports that subtree rather than the whole expression.
void check_cap(const HierarchySpec& s, long long cap, const GraphLoader& loader) {
    if (s.child) check_cap(*s.child, cap, loader);
    const long long count = estimated_vertex_count(s, loader);
    if (count > cap)
        throw ValidationError("subtree \"" + hierarchy_print(s) + "\" would have " +
                              (count == LLONG_MAX ? std::string("over ") + std::to_string(LLONG_MAX)
                                                  : std::to_string(count)) +
                              " vertices, above the cap of " + std::to_string(cap));
}

WeightedGraph build_node(const HierarchySpec& s, long long cap, const GraphLoader& loader) {
    switch (s.kind) {
        case HierarchySpec::Kind::Path:
            if (s.path_sites == 1) return WeightedGraph(1, {});
            return build_weighted_chain(std::vector<cplx>(s.path_sites - 1, cplx(1.0, 0.0)));
        case HierarchySpec::Kind::Triangle:
            return build_triangle_complex();
        case HierarchySpec::Kind::PhasedSquare:
            return build_phased_square(s.alpha, s.beta, s.gamma);
        case HierarchySpec::Kind::FileRef:
            return loader(s.path);
        case HierarchySpec::Kind::Dual:
            return dual_graph(build_node(*s.child, cap, loader), s.count, cap);
        case HierarchySpec::Kind::Power: {
            WeightedGraph base = build_node(*s.child, cap, loader);
            WeightedGraph result = base;
            for (int k = 1; k < s.count; ++k) result = cartesian_product(result, base);
            return result;
        }
    }
    throw ValidationError("unhandled hierarchy node");
}

}  // namespace

HierarchySpec hierarchy_parse(const std::string& text) {
    Parser p(text);
    auto root = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input", p.pos);
    return *root;
}

std::string hierarchy_print(const HierarchySpec& s) {
    switch (s.kind) {
        case HierarchySpec::Kind::Path:
            return s.path_sites == 2 ? "P" : std::to_string(s.path_sites);
        case HierarchySpec::Kind::Triangle:
            return "T";
        case HierarchySpec::Kind::PhasedSquare: {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "SQ(%.17g,%.17g,%.17g)", s.alpha, s.beta, s.gamma);
            return buf;
        }
        case HierarchySpec::Kind::FileRef:
            return "file(" + s.path + ")";
        case HierarchySpec::Kind::Dual: {
            std::string inner = hierarchy_print(*s.child);
            if (s.child->kind == HierarchySpec::Kind::Dual ||
                s.child->kind == HierarchySpec::Kind::Power)
                inner = "(" + inner + ")";
            return std::to_string(s.count) + " on " + inner;
        }
        case HierarchySpec::Kind::Power: {
            std::string inner = hierarchy_print(*s.child);
            if (s.child->kind == HierarchySpec::Kind::Dual) inner = "(" + inner + ")";
            return inner + "^" + std::to_string(s.count);
        }
    }
    return "";
}

WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open graph file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

long long estimated_vertex_count(const HierarchySpec& s, const GraphLoader& loader) {
    switch (s.kind) {
        case HierarchySpec::Kind::Path:
            return s.path_sites;
        case HierarchySpec::Kind::Triangle:
            return 3;
        case HierarchySpec::Kind::PhasedSquare:
            return 4;
        case HierarchySpec::Kind::FileRef:
            return loader(s.path).vertex_count();
        case HierarchySpec::Kind::Dual: {
            const long long child = estimated_vertex_count(*s.child, loader);
            if (child >= INT_MAX) return LLONG_MAX;
            return FockBasis::dimension(static_cast<int>(child), s.count);
        }
        case HierarchySpec::Kind::Power:
            return saturating_pow(estimated_vertex_count(*s.child, loader), s.count);
    }
    return 0;
}

WeightedGraph hierarchy_build(const HierarchySpec& s, long long cap,
                              const GraphLoader& loader) {
    check_cap(s, cap, loader);
    return build_node(s, cap, loader);
}

}  // namespace bosewalk
