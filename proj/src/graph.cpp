#include "obddlab/graph.hpp"

#include "obddlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace obddlab {

VarOrder::VarOrder(std::vector<Var> perm) : perm_(std::move(perm)), pos_(perm_.size() + 1, perm_.size()) {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        const Var v = perm_[i];
        if (v == 0 || v > perm_.size() || pos_[v] != perm_.size())
            throw Error("variable order is not a permutation of 1.." + std::to_string(perm_.size()));
        pos_[v] = i;
    }
}

VarOrder VarOrder::identity(std::size_t n) {
    std::vector<Var> perm(n);
    std::iota(perm.begin(), perm.end(), Var{1});
    return VarOrder(std::move(perm));
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), present_(n + 1, true) {
    present_[0] = false;
    build(std::move(edges));
}

Graph::Graph(std::size_t n, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : n_(n), present_(n + 1, false) {
    for (Vertex v : vertices) {
        if (v == 0 || v > n)
            throw Error("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        present_[v] = true;
    }
    build(std::move(edges));
}

void Graph::build(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    adj_.assign(n_ + 1, {});
    for (const auto& e : edges) {
        if (e.u == e.v)
            throw Error("self-loop at vertex " + std::to_string(e.u));
        if (e.u == 0 || e.v > n_)
            throw Error("edge endpoint outside 1.." + std::to_string(n_));
        present_[e.u] = present_[e.v] = true;
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());
    edges_ = std::move(edges);
    vertices_.clear();
    for (Vertex v = 1; v <= n_; ++v)
        if (present_[v])
            vertices_.push_back(v);
}

bool Graph::hasEdge(Vertex a, Vertex b) const {
    if (a == 0 || b == 0 || a > n_ || b > n_)
        return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

bool isValidMatching(const Graph& g, const Matching& m) {
    std::vector<Vertex> used;
    for (const auto& e : m.edges) {
        if (!g.hasEdge(e.u, e.v))
            return false;
        used.push_back(e.u);
        used.push_back(e.v);
        if (m.sides) {
            const int a = m.sides->side(e.u), b = m.sides->side(e.v);
            if (a == 0 || b == 0 || a == b)
                return false;
        }
    }
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

Graph primalGraph(const Cnf& f, bool includeIsolated) {
    std::vector<Edge> edges;
    edges.reserve(f.size());
    for (const auto& c : f.clauses())
        edges.emplace_back(c.first().var, c.second().var);
    if (includeIsolated)
        return Graph(f.n(), std::move(edges));
    return Graph(f.n(), {}, std::move(edges));
}

std::size_t maxDegree(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v : g.vertices())
        best = std::max(best, g.degree(v));
    return best;
}

bool everyComponentAtMostOneCycle(const Graph& g) {
    std::vector<Vertex> parent(g.n() + 1);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : g.edges())
        parent[find(e.u)] = find(e.v);
    std::vector<std::size_t> vertices(g.n() + 1, 0), edges(g.n() + 1, 0);
    for (Vertex v : g.vertices())
        ++vertices[find(v)];
    for (const auto& e : g.edges())
        ++edges[find(e.u)];
    for (Vertex r = 1; r <= g.n(); ++r)
        if (edges[r] > vertices[r])
            return false;
    return true;
}

} // namespace obddlab
