#pragma once

#include "obddlab/cnf.hpp"
#include "obddlab/var_order.hpp"

#include <optional>
#include <span>
#include <vector>

namespace obddlab {

using Vertex = Var;

struct Edge {
    Vertex u = 0, v = 0; // u < v

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph whose vertices are a subset of 1..n.
class Graph {
public:
    Graph() = default;
    // All of 1..n are vertices.
    Graph(std::size_t n, std::vector<Edge> edges);
    // Only `vertices` (plus edge endpoints) are vertices.
    Graph(std::size_t n, std::vector<Vertex> vertices, std::vector<Edge> edges);

    std::size_t n() const noexcept { return n_; }
    std::size_t vertexCount() const noexcept { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    bool hasVertex(Vertex v) const { return v >= 1 && v <= n_ && present_[v]; }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edgeCount() const noexcept { return edges_.size(); }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool hasEdge(Vertex a, Vertex b) const;

private:
    void build(std::vector<Edge> edges);

    std::size_t n_ = 0;
    std::vector<bool> present_;
    std::vector<Vertex> vertices_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

/// Pairwise vertex-disjoint edges, optionally tied to the bipartition they cross.
struct Matching {
    std::vector<Edge> edges;
    std::optional<Bipartition> sides;

    std::size_t size() const noexcept { return edges.size(); }
};

// Edges of M are edges of G, vertex-disjoint, and cross `sides` when present.
bool isValidMatching(const Graph& g, const Matching& m);

/// Primal graph: an edge per pair of variables sharing a clause. With
/// includeIsolated the vertex set is all of 1..n, otherwise var(F).
Graph primalGraph(const Cnf& f, bool includeIsolated = true);

std::size_t maxDegree(const Graph& g);

// |edges| <= |vertices| in every connected component.
bool everyComponentAtMostOneCycle(const Graph& g);

} // namespace obddlab
