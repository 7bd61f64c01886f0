#include "bosewalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bosewalk/errors.hpp"

namespace bosewalk {

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : vertex_count_(vertex_count) {
    if (vertex_count < 1)
        throw ValidationError("graph needs at least one vertex, got " +
                              std::to_string(vertex_count));
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count)
        throw ValidationError("expected " + std::to_string(vertex_count) +
                              " vertex labels, got " + std::to_string(labels.size()));

    for (auto& e : edges) {
        if (e.i < 0 || e.i >= vertex_count || e.j < 0 || e.j >= vertex_count)
            throw ValidationError("edge (" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + ") leaves the vertex range 0.." +
                                  std::to_string(vertex_count - 1));
        if (e.i == e.j)
            throw ValidationError("self-loop at vertex " + std::to_string(e.i));
        if (!std::isfinite(e.w.real()) || !std::isfinite(e.w.imag()))
            throw ValidationError("non-finite weight on edge (" + std::to_string(e.i) +
                                  "," + std::to_string(e.j) + ")");
        if (e.i > e.j) {
            std::swap(e.i, e.j);
            e.w = std::conj(e.w);
        }
    }
    std::erase_if(edges, [](const Edge& e) { return e.w == cplx(0.0, 0.0); });
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    for (size_t k = 1; k < edges.size(); ++k)
        if (edges[k].i == edges[k - 1].i && edges[k].j == edges[k - 1].j)
            throw ValidationError("duplicate edge (" + std::to_string(edges[k].i) + "," +
                                  std::to_string(edges[k].j) + ")");

    edges_ = std::move(edges);
    labels_ = std::move(labels);

    adj_.resize(vertex_count_);
    for (const auto& e : edges_) {
        adj_[e.i].emplace_back(e.j, e.w);
        adj_[e.j].emplace_back(e.i, std::conj(e.w));
    }
    for (auto& nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
}

Eigen::MatrixXcd WeightedGraph::matrix() const {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(vertex_count_, vertex_count_);
    for (const auto& e : edges_) {
        h(e.j, e.i) = e.w;
        h(e.i, e.j) = std::conj(e.w);
    }
    return h;
}

cplx WeightedGraph::amplitude(int from, int to) const {
    if (from < 0 || from >= vertex_count_ || to < 0 || to >= vertex_count_)
        throw ValidationError("vertex pair (" + std::to_string(from) + "," +
                              std::to_string(to) + ") leaves the vertex range 0.." +
                              std::to_string(vertex_count_ - 1));
    for (const auto& [nbr, w] : adj_[from])
        if (nbr == to) return w;
    return cplx(0.0, 0.0);
}

double WeightedGraph::max_weight() const {
    double m = 0.0;
    for (const auto& e : edges_) m = std::max(m, std::abs(e.w));
    return m;
}

bool WeightedGraph::operator==(const WeightedGraph& other) const {
    if (vertex_count_ != other.vertex_count_ || labels_ != other.labels_) return false;
    if (edges_.size() != other.edges_.size()) return false;
    for (size_t k = 0; k < edges_.size(); ++k) {
        const Edge& a = edges_[k];
        const Edge& b = other.edges_[k];
        if (a.i != b.i || a.j != b.j || a.w != b.w) return false;
    }
    return true;
}

WeightedGraph build_weighted_chain(const std::vector<cplx>& weights) {
    if (weights.empty()) throw ValidationError("chain needs at least one weight");
    std::vector<Edge> edges;
    edges.reserve(weights.size());
    for (size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] == cplx(0.0, 0.0))
            throw ValidationError("zero weight at chain position " + std::to_string(k));
        edges.push_back({static_cast<int>(k), static_cast<int>(k + 1), weights[k]});
    }
    return WeightedGraph(static_cast<int>(weights.size()) + 1, std::move(edges));
}

WeightedGraph build_g_line(int n_bosons) {
    if (n_bosons < 1)
        throw ValidationError("wire needs at least one boson, got " +
                              std::to_string(n_bosons));
    const int n = n_bosons;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int v = 0; v <= n; ++v)
        labels.push_back(std::to_string(n - v) + "," + std::to_string(v));
    for (int v = 0; v < n; ++v)
        edges.push_back({v, v + 1, cplx(std::sqrt(double((v + 1) * (n - v))), 0.0)});
    return WeightedGraph(n + 1, std::move(edges), std::move(labels));
}

WeightedGraph build_hypercube(int dim) {
    if (dim < 1 || dim > 16)
        throw ValidationError("hypercube dimension must be in 1..16, got " +
                              std::to_string(dim));
    const int n = 1 << dim;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int m = 0; m < n; ++m) {
        std::string bits;
        for (int b = dim - 1; b >= 0; --b) bits += char('0' + ((m >> b) & 1));
        labels.push_back(bits);
        for (int b = 0; b < dim; ++b)
            if (!((m >> b) & 1)) edges.push_back({m, m | (1 << b), cplx(1.0, 0.0)});
    }
    return WeightedGraph(n, std::move(edges), std::move(labels));
}

WeightedGraph build_triangle_complex() {
    // The hops carrying amplitude +i/sqrt(3) run along 0 -> 2 -> 1 -> 0;
    // evolution follows that direction, so the first transfer lands on 2.
    const double c = 1.0 / std::sqrt(3.0);
    std::vector<Edge> edges = {
        {0, 1, cplx(0.0, -c)},
        {0, 2, cplx(0.0, c)},
        {1, 2, cplx(0.0, -c)},
    };
    return WeightedGraph(3, std::move(edges));
}

WeightedGraph build_phased_square(double alpha, double beta, double gamma) {
    std::vector<Edge> edges = {
        {0, 1, cplx(1.0, 0.0)},
        {1, 2, std::polar(1.0, alpha)},
        {2, 3, std::polar(1.0, beta)},
        {0, 3, std::polar(1.0, gamma)},
    };
    return WeightedGraph(4, std::move(edges));
}

WeightedGraph build_complete4(cplx a, cplx b) {
    if (a == cplx(0.0, 0.0) || b == cplx(0.0, 0.0))
        throw ValidationError("complete-4 weights must be nonzero");
    std::vector<Edge> edges = {
        {0, 1, a}, {1, 2, a}, {2, 3, a}, {0, 3, a},  // cycle
        {0, 2, b}, {1, 3, b},                        // diagonals
    };
    return WeightedGraph(4, std::move(edges));
}

WeightedGraph cartesian_product(const WeightedGraph& a, const WeightedGraph& b) {
    const int na = a.vertex_count();
    const int nb = b.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(a.edges().size() * nb + b.edges().size() * na);
    for (const auto& e : a.edges())
        for (int v = 0; v < nb; ++v)
            edges.push_back({e.i * nb + v, e.j * nb + v, e.w});
    for (const auto& e : b.edges())
        for (int u = 0; u < na; ++u)
            edges.push_back({u * nb + e.i, u * nb + e.j, e.w});

    std::vector<std::string> labels;
    if (a.has_labels() && b.has_labels()) {
        labels.reserve(size_t(na) * nb);
        for (int u = 0; u < na; ++u)
            for (int v = 0; v < nb; ++v)
                labels.push_back(a.labels()[u] + "|" + b.labels()[v]);
    }
    return WeightedGraph(na * nb, std::move(edges), std::move(labels));
}

WeightedGraph permute_vertices(const WeightedGraph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw ValidationError("permutation has " + std::to_string(perm.size()) +
                              " entries for " + std::to_string(n) + " vertices");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw ValidationError("vertex map is not a permutation of 0.." +
                                  std::to_string(n - 1));
        seen[p] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) edges.push_back({perm[e.i], perm[e.j], e.w});
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.resize(n);
        for (int v = 0; v < n; ++v) labels[perm[v]] = g.labels()[v];
    }
    return WeightedGraph(n, std::move(edges), std::move(labels));
}

RescaledGraph rescale_to_max_weight(const WeightedGraph& g) {
    if (g.edges().empty())
        throw ValidationError("cannot rescale a graph with no edges");
    const double scale = g.max_weight();
    std::vector<Edge> edges = g.edges();
    for (auto& e : edges) e.w /= scale;
    return {WeightedGraph(g.vertex_count(), std::move(edges), g.labels()), scale};
}

CycleFlux cycle_flux(const WeightedGraph& g, std::vector<int> cycle) {
    if (!cycle.empty() && cycle.front() == cycle.back()) cycle.pop_back();
    if (cycle.size() < 3)
        throw ValidationError("cycle needs at least 3 steps, got " +
                              std::to_string(cycle.size()));
    cplx product(1.0, 0.0);
    for (size_t k = 0; k < cycle.size(); ++k) {
        const int u = cycle[k];
        const int v = cycle[(k + 1) % cycle.size()];
        const cplx amp = g.amplitude(u, v);
        if (amp == cplx(0.0, 0.0))
            throw ValidationError("cycle uses the missing edge (" + std::to_string(u) +
                                  "," + std::to_string(v) + ")");
        product *= amp;
    }
    double flux = std::arg(product);
    if (flux <= -M_PI) flux += 2.0 * M_PI;  // keep the range (-pi, pi]
    cycle.push_back(cycle.front());
    return {std::move(cycle), flux};
}

std::string serialize_graph(const WeightedGraph& g) {
    nlohmann::json j;
    j["vertex_count"] = g.vertex_count();
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"i", e.i}, {"j", e.j}, {"re", e.w.real()}, {"im", e.w.imag()}});
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j.dump(2) + "\n";
}

WeightedGraph parse_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("graph text: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges"))
        throw ValidationError("graph text needs 'vertex_count' and 'edges' fields");
    if (!j["vertex_count"].is_number_integer())
        throw ValidationError("'vertex_count' must be an integer");
    if (!j["edges"].is_array())
        throw ValidationError("'edges' must be an array");

    std::vector<Edge> edges;
    for (const auto& item : j["edges"]) {
        if (!item.is_object() || !item.contains("i") || !item.contains("j") ||
            !item.contains("re") || !item.contains("im") ||
            !item["i"].is_number_integer() || !item["j"].is_number_integer() ||
            !item["re"].is_number() || !item["im"].is_number())
            throw ValidationError("each edge needs integer 'i', 'j' and numeric 're', 'im'");
        edges.push_back({item["i"].get<int>(), item["j"].get<int>(),
                         cplx(item["re"].get<double>(), item["im"].get<double>())});
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array())
            throw ValidationError("'labels' must be an array of strings");
        for (const auto& item : j["labels"]) {
            if (!item.is_string()) throw ValidationError("'labels' must be an array of strings");
            labels.push_back(item.get<std::string>());
        }
    }
    return WeightedGraph(j["vertex_count"].get<int>(), std::move(edges), std::move(labels));
}

std::string export_dot(const WeightedGraph& g) {
    std::ostringstream out;
    out << "graph walk {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.has_labels()) out << " [label=\"" << g.labels()[v] << "\"]";
        out << ";\n";
    }
    for (const auto& e : g.edges()) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g∠%.6g", std::abs(e.w), std::arg(e.w));
        out << "  " << e.i << " -- " << e.j << " [label=\"" << buf << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace bosewalk
