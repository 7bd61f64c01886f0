#pragma once
// Expression trees for the recursive walk hierarchy: duals of duals and
// Cartesian powers over a few primitive graphs, written in a small grammar
// like "2 on (2 on 2)" or "(2 on (2 on 2))^2".
//
//   expr  := INT "on" expr | pexpr          (right associative "on")
//   pexpr := atom ("^" INT)*
//   atom  := "P" | "T" | "SQ(a,b,c)" | "file(path)" | INT | "(" expr ")"
//
// A bare integer leaf is the unweighted path with that many vertices, so
// "P" and "2" name the same graph. "T" is the complex-weighted triangle and
// "SQ(a,b,c)" the phased square.

#include <functional>
#include <memory>
#include <string>

#include "bosewalk/fock.hpp"
#include "bosewalk/graph.hpp"

namespace bosewalk {

struct HierarchySpec {
    enum class Kind { Path, Triangle, PhasedSquare, FileRef, Dual, Power };

    Kind kind = Kind::Path;
    int path_sites = 2;                        // Path
    double alpha = 0, beta = 0, gamma = 0;     // PhasedSquare
    std::string path;                          // FileRef
    int count = 1;                             // Dual: bosons; Power: exponent
    std::shared_ptr<const HierarchySpec> child;
};

// Parse the grammar above; syntax errors carry the character position.
HierarchySpec hierarchy_parse(const std::string& text);

// Canonical rendering; hierarchy_parse(hierarchy_print(s)) rebuilds s.
std::string hierarchy_print(const HierarchySpec& s);

using GraphLoader = std::function<WeightedGraph(const std::string&)>;

// Default loader for file(...) leaves: parse_graph over the file contents.
WeightedGraph load_graph_file(const std::string& path);

// Vertex count the build would produce, saturating on overflow.
long long estimated_vertex_count(const HierarchySpec& s,
                                 const GraphLoader& loader = load_graph_file);

// Recursive evaluation: Dual applies dual_graph, Power applies repeated
// cartesian_product. When the result would exceed `cap` vertices, the
// smallest offending subtree is reported in the error.
WeightedGraph hierarchy_build(const HierarchySpec& s,
                              long long cap = kDefaultBasisCap,
                              const GraphLoader& loader = load_graph_file);

}  // namespace bosewalk
