#pragma once
// Hermitian weighted graphs, the hopping Hamiltonians of the walks. An edge
// (i, j, w) with i < j stores the directed hop amplitude i -> j, so the dense
// matrix is H(j, i) = w, H(i, j) = conj(w), with zero diagonal. Weights are
// in units of the hopping scale tau; times downstream are in 1/tau, hbar = 1.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace bosewalk {

using cplx = std::complex<double>;

struct Edge {
    int i = 0;
    int j = 0;  // i < j after normalization
    cplx w;     // amplitude for the hop i -> j
};

class WeightedGraph {
public:
    WeightedGraph() = default;

    // Edges may arrive in either orientation; (j, i, w) with j > i is stored
    // as (i, j, conj(w)). Zero-weight edges are dropped. Self-loops,
    // duplicate pairs, out-of-range endpoints and non-finite weights are
    // rejected. `labels` must be empty or have one entry per vertex.
    WeightedGraph(int vertex_count, std::vector<Edge> edges,
                  std::vector<std::string> labels = {});

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    Eigen::MatrixXcd matrix() const;

    // Directed hop amplitude <to|H|from>; zero when the pair shares no edge.
    cplx amplitude(int from, int to) const;

    // adjacency()[u] lists (neighbor, amplitude u -> neighbor), sorted by
    // neighbor index.
    const std::vector<std::vector<std::pair<int, cplx>>>& adjacency() const {
        return adj_;
    }

    double max_weight() const;  // max |w| over edges, 0 when edgeless

    // Exact comparison: structure, weights bit for bit, and labels.
    bool operator==(const WeightedGraph& other) const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;  // sorted by (i, j)
    std::vector<std::string> labels_;
    std::vector<std::vector<std::pair<int, cplx>>> adj_;
};

// Path on weights.size()+1 vertices; edge (k, k+1) carries weights[k].
WeightedGraph build_weighted_chain(const std::vector<cplx>& weights);

// Quantum wire on n_bosons+1 vertices: edge (n, n+1) has weight
// sqrt((n+1)(N-n)). Vertex n is labeled with the two-site occupation
// "N-n,n". Spectrum is {-N, -N+2, ..., N}; both ends swap at t = pi/2.
WeightedGraph build_g_line(int n_bosons);

// Unit-weight hypercube on 2^dim vertices labeled by bitstrings (most
// significant bit first); vertices at Hamming distance 1 share an edge.
WeightedGraph build_hypercube(int dim);

// Triangle with weights i/sqrt(3), oriented so that a walker started at
// vertex 0 moves 0 -> 2 -> 1 -> 0, one hop per t = 2*pi/3. Reading the
// labels 0,1,2 clockwise, the motion is counterclockwise.
WeightedGraph build_triangle_complex();

// 4-cycle 0-1-2-3-0. The stored low-to-high amplitudes on edges (0,1),
// (1,2), (2,3), (0,3) are 1, e^{i alpha}, e^{i beta}, e^{i gamma}, which
// makes the flux around 0->1->2->3->0 equal alpha + beta - gamma. Zero flux
// (gamma = alpha + beta) gives perfect corner-to-corner transfer at pi/2.
WeightedGraph build_phased_square(double alpha, double beta, double gamma);

// Complete graph K4 with weight a on the 4-cycle edges (0,1),(1,2),(2,3),
// (0,3) and b on the diagonals (0,2),(1,3), amplitudes in the low-to-high
// direction.
WeightedGraph build_complete4(cplx a, cplx b);

// Graph Cartesian product, H = H_A (x) I + I (x) H_B. Product vertex (u, v)
// gets index u * b.vertex_count() + v; labels join as "u|v" when both
// factors are labeled.
WeightedGraph cartesian_product(const WeightedGraph& a, const WeightedGraph& b);

// Relabel vertices: old vertex i becomes perm[i]. Useful for automorphism
// and isomorphism checks.
WeightedGraph permute_vertices(const WeightedGraph& g, const std::vector<int>& perm);

struct RescaledGraph {
    WeightedGraph graph;
    double scale = 1.0;  // max |w| of the input
};

// Divide all weights by the largest magnitude so the heaviest edge becomes
// unit strength; any hitting time t on the input maps to t * scale on the
// rescaled graph.
RescaledGraph rescale_to_max_weight(const WeightedGraph& g);

struct CycleFlux {
    std::vector<int> cycle;  // closed walk, first vertex repeated at the end
    double flux = 0.0;       // arg of the amplitude product, in (-pi, pi]
};

// Flux around a closed walk of at least 3 steps; the final return to the
// start may be given explicitly or left implicit. Gauge invariant under
// per-vertex phase rotations.
CycleFlux cycle_flux(const WeightedGraph& g, std::vector<int> cycle);

// Text round trip; weights survive bit-exactly. parse_graph reports
// malformed input with the byte position.
std::string serialize_graph(const WeightedGraph& g);
WeightedGraph parse_graph(const std::string& text);

// Graphviz export with undirected edges labeled "|w| angle arg(w)".
std::string export_dot(const WeightedGraph& g);

}  // namespace bosewalk
