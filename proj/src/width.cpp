#include "obddlab/width.hpp"

#include "obddlab/errors.hpp"
#include "obddlab/random_models.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>

namespace obddlab {

namespace {

// Present vertices relabelled 0..V-1 with bitmask adjacency.
struct Compact {
    std::vector<Vertex> label;
    std::vector<std::uint32_t> adj;
};

Compact compact(const Graph& g, std::size_t guard, const char* what) {
    if (g.vertexCount() > guard)
        throw GraphTooLarge(std::string(what) + " supports at most " + std::to_string(guard) + " vertices, got " +
                            std::to_string(g.vertexCount()));
    Compact c;
    c.label = g.vertices();
    std::vector<std::size_t> idx(g.n() + 1, 0);
    for (std::size_t i = 0; i < c.label.size(); ++i)
        idx[c.label[i]] = i;
    c.adj.assign(c.label.size(), 0);
    for (const auto& e : g.edges()) {
        c.adj[idx[e.u]] |= 1u << idx[e.v];
        c.adj[idx[e.v]] |= 1u << idx[e.u];
    }
    return c;
}

// Hopcroft-Karp between left and right index sets. adjL[i] lists right indices.
class BipartiteMatcher {
public:
    BipartiteMatcher(std::size_t nl, std::size_t nr, std::vector<std::vector<std::uint32_t>> adjL)
        : nl_(nl), nr_(nr), adj_(std::move(adjL)), mateL_(nl, kNone), mateR_(nr, kNone), dist_(nl) {}

    std::size_t run() {
        std::size_t size = 0;
        while (bfs())
            for (std::size_t u = 0; u < nl_; ++u)
                if (mateL_[u] == kNone && dfs(static_cast<std::uint32_t>(u)))
                    ++size;
        return size;
    }

    const std::vector<std::uint32_t>& mateL() const { return mateL_; }
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

private:
    bool bfs() {
        std::queue<std::uint32_t> q;
        bool found = false;
        for (std::size_t u = 0; u < nl_; ++u) {
            if (mateL_[u] == kNone) {
                dist_[u] = 0;
                q.push(static_cast<std::uint32_t>(u));
            } else {
                dist_[u] = kNone;
            }
        }
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (auto r : adj_[u]) {
                const auto w = mateR_[r];
                if (w == kNone)
                    found = true;
                else if (dist_[w] == kNone) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    // Recursion depth is bounded by the augmenting path length.
    bool dfs(std::uint32_t u) {
        for (auto r : adj_[u]) {
            const auto w = mateR_[r];
            if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                mateL_[u] = r;
                mateR_[r] = u;
                return true;
            }
        }
        dist_[u] = kNone;
        return false;
    }

    std::size_t nl_, nr_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::uint32_t> mateL_, mateR_, dist_;
};

struct CrossProblem {
    std::vector<Vertex> left, right;
    std::vector<std::vector<std::uint32_t>> adj; // sorted by right vertex id
};

CrossProblem crossProblem(const Graph& g, std::span<const Vertex> v1, std::span<const Vertex> v2) {
    CrossProblem p;
    p.left.assign(v1.begin(), v1.end());
    p.right.assign(v2.begin(), v2.end());
    std::sort(p.left.begin(), p.left.end());
    std::sort(p.right.begin(), p.right.end());
    std::vector<std::uint32_t> rightIdx(g.n() + 1, BipartiteMatcher::kNone);
    for (std::size_t i = 0; i < p.right.size(); ++i)
        if (p.right[i] <= g.n())
            rightIdx[p.right[i]] = static_cast<std::uint32_t>(i);
    p.adj.resize(p.left.size());
    for (std::size_t i = 0; i < p.left.size(); ++i) {
        const Vertex u = p.left[i];
        if (u == 0 || u > g.n())
            continue;
        for (Vertex w : g.neighbors(u))
            if (rightIdx[w] != BipartiteMatcher::kNone)
                p.adj[i].push_back(rightIdx[w]);
    }
    return p;
}

std::size_t matchingSize(const CrossProblem& p) {
    BipartiteMatcher m(p.left.size(), p.right.size(), p.adj);
    return m.run();
}

void checkDisjoint(std::span<const Vertex> v1, std::span<const Vertex> v2) {
    std::vector<Vertex> a(v1.begin(), v1.end()), b(v2.begin(), v2.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Vertex> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (!both.empty())
        throw PartsOverlap("vertex " + std::to_string(both.front()) + " is on both sides");
}

Matching toMatching(const CrossProblem& p, const std::vector<std::uint32_t>& mateL) {
    Matching m;
    for (std::size_t i = 0; i < p.left.size(); ++i)
        if (mateL[i] != BipartiteMatcher::kNone)
            m.edges.emplace_back(p.left[i], p.right[mateL[i]]);
    std::sort(m.edges.begin(), m.edges.end());
    m.sides = Bipartition(p.left, p.right);
    return m;
}

// Lexicographically smallest maximum matching: try candidate edges in sorted
// order and keep an edge when a maximum matching survives committing to it.
Matching lexMinMaximumMatching(const CrossProblem& p) {
    const std::size_t target = matchingSize(p);
    std::vector<Edge> candidates;
    std::map<Edge, std::pair<std::uint32_t, std::uint32_t>> where;
    for (std::size_t i = 0; i < p.left.size(); ++i)
        for (auto r : p.adj[i]) {
            Edge e(p.left[i], p.right[r]);
            candidates.push_back(e);
            where[e] = {static_cast<std::uint32_t>(i), r};
        }
    std::sort(candidates.begin(), candidates.end());

    std::vector<bool> usedL(p.left.size(), false), usedR(p.right.size(), false);
    Matching m;
    std::size_t remaining = target;
    for (const auto& e : candidates) {
        if (remaining == 0)
            break;
        const auto [li, ri] = where[e];
        if (usedL[li] || usedR[ri])
            continue;
        CrossProblem rest;
        rest.left = p.left;
        rest.right = p.right;
        rest.adj.resize(p.left.size());
        for (std::size_t i = 0; i < p.left.size(); ++i) {
            if (usedL[i] || i == li)
                continue;
            for (auto r : p.adj[i])
                if (!usedR[r] && r != ri)
                    rest.adj[i].push_back(r);
        }
        if (matchingSize(rest) + 1 == remaining) {
            usedL[li] = usedR[ri] = true;
            m.edges.push_back(e);
            --remaining;
        }
    }
    m.sides = Bipartition(p.left, p.right);
    return m;
}

std::vector<Vertex> presentInOrder(const Graph& g, const VarOrder& order) {
    if (order.size() != g.n())
        throw Error("order has " + std::to_string(order.size()) + " variables, graph has " + std::to_string(g.n()));
    std::vector<Vertex> seq;
    seq.reserve(g.vertexCount());
    for (Var v : order.perm())
        if (g.hasVertex(v))
            seq.push_back(v);
    if (seq.size() < 3)
        throw GraphTooSmall("balanced cuts need at least 3 vertices, got " + std::to_string(seq.size()));
    return seq;
}

} // namespace

Elimination minFillElimination(const Graph& g, std::uint64_t seed, bool preferLocal) {
    const std::size_t n = g.n();
    std::vector<std::vector<Vertex>> adj(n + 1);
    for (Vertex v : g.vertices()) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    auto adjacent = [&](Vertex a, Vertex b) { return std::binary_search(adj[a].begin(), adj[a].end(), b); };
    auto addEdge = [&](Vertex a, Vertex b) {
        adj[a].insert(std::lower_bound(adj[a].begin(), adj[a].end(), b), b);
        adj[b].insert(std::lower_bound(adj[b].begin(), adj[b].end(), a), a);
    };
    auto removeFrom = [&](Vertex a, Vertex b) { adj[a].erase(std::lower_bound(adj[a].begin(), adj[a].end(), b)); };
    auto fillOf = [&](Vertex v) {
        std::size_t missing = 0;
        const auto& nb = adj[v];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!adjacent(nb[i], nb[j]))
                    ++missing;
        return missing;
    };

    Rng rng(Seed{seed, 0x6d696e66696c6cULL});
    std::vector<std::uint64_t> priority(n + 1);
    for (auto& p : priority)
        p = rng.next();

    std::vector<std::size_t> fill(n + 1, 0);
    std::set<std::tuple<std::size_t, std::uint64_t, Vertex>> queue;
    for (Vertex v : g.vertices()) {
        fill[v] = fillOf(v);
        queue.emplace(fill[v], priority[v], v);
    }

    Elimination out;
    out.order.reserve(g.vertexCount());
    std::vector<bool> touched(n + 1, false);
    std::vector<Vertex> affected;
    std::vector<Vertex> lastNeighbours;
    while (!queue.empty()) {
        Vertex v = std::get<2>(*queue.begin());
        if (preferLocal) {
            const std::size_t minFill = std::get<0>(*queue.begin());
            Vertex local = 0;
            for (Vertex u : lastNeighbours)
                if (fill[u] == minFill && (local == 0 || priority[u] < priority[local]))
                    local = u;
            if (local != 0)
                v = local;
        }
        queue.erase({fill[v], priority[v], v});
        out.order.push_back(v);
        const std::vector<Vertex> nb = adj[v];
        out.width = std::max(out.width, nb.size());
        for (Vertex u : nb)
            removeFrom(u, v);
        adj[v].clear();
        lastNeighbours = nb;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!adjacent(nb[i], nb[j]))
                    addEdge(nb[i], nb[j]);
        // Fill can only change within two hops of v.
        affected.clear();
        for (Vertex u : nb) {
            if (!touched[u]) {
                touched[u] = true;
                affected.push_back(u);
            }
            for (Vertex w : adj[u])
                if (!touched[w]) {
                    touched[w] = true;
                    affected.push_back(w);
                }
        }
        for (Vertex u : affected) {
            touched[u] = false;
            const std::size_t f = fillOf(u);
            if (f != fill[u]) {
                queue.erase({fill[u], priority[u], u});
                fill[u] = f;
                queue.emplace(f, priority[u], u);
            }
        }
    }
    return out;
}

std::size_t twExact(const Graph& g) {
    const Compact c = compact(g, kTwExactGuard, "twExact");
    const std::size_t V = c.label.size();
    if (V <= 1)
        return 0;

    std::size_t best = minFillElimination(g).width;
    std::vector<std::uint8_t> seen(std::size_t{1} << V, 0xff);

    auto dfs = [&](auto&& self, const std::vector<std::uint32_t>& adj, std::uint32_t remaining, std::size_t cur) -> void {
        if (cur >= best)
            return;
        const auto left = static_cast<std::size_t>(std::popcount(remaining));
        if (left <= cur + 1) {
            best = cur;
            return;
        }
        if (seen[remaining] <= cur)
            return;
        seen[remaining] = static_cast<std::uint8_t>(cur);
        for (std::size_t v = 0; v < V; ++v) {
            if (!(remaining >> v & 1))
                continue;
            const std::uint32_t nb = adj[v] & remaining;
            const std::size_t next = std::max(cur, static_cast<std::size_t>(std::popcount(nb)));
            if (next >= best)
                continue;
            std::vector<std::uint32_t> a2 = adj;
            for (std::size_t u = 0; u < V; ++u)
                if (nb >> u & 1)
                    a2[u] |= nb & ~(1u << u);
            self(self, a2, remaining & ~(1u << v), next);
        }
    };
    dfs(dfs, c.adj, (V == 32 ? ~0u : (1u << V) - 1), 0);
    return best;
}

PathLayout pathwidthLayout(const Graph& g) {
    const Compact c = compact(g, kPwExactGuard, "pwExact");
    const std::size_t V = c.label.size();
    PathLayout out;
    if (V == 0)
        return out;
    const std::uint32_t all = (1u << V) - 1;
    const std::size_t states = std::size_t{1} << V;
    // h[S]: best vertex separation over layouts whose first |S| vertices are S.
    std::vector<std::uint8_t> h(states, 0);
    std::vector<std::uint8_t> choice(states, 0);
    for (std::uint32_t s = 1; s < states; ++s) {
        std::uint8_t boundary = 0;
        for (std::size_t u = 0; u < V; ++u)
            if ((s >> u & 1) && (c.adj[u] & ~s & all))
                ++boundary;
        std::uint8_t best = 0xff;
        for (std::size_t v = 0; v < V; ++v) {
            if (!(s >> v & 1))
                continue;
            const std::uint8_t val = std::max(h[s & ~(1u << v)], boundary);
            if (val < best) {
                best = val;
                choice[s] = static_cast<std::uint8_t>(v);
            }
        }
        h[s] = best;
    }
    out.width = h[all];
    std::uint32_t s = all;
    while (s) {
        const auto v = choice[s];
        out.order.push_back(c.label[v]);
        s &= ~(1u << v);
    }
    std::reverse(out.order.begin(), out.order.end());
    return out;
}

Matching maxCrossMatching(const Graph& g, std::span<const Vertex> v1, std::span<const Vertex> v2) {
    checkDisjoint(v1, v2);
    const CrossProblem p = crossProblem(g, v1, v2);
    BipartiteMatcher m(p.left.size(), p.right.size(), p.adj);
    m.run();
    return toMatching(p, m.mateL());
}

std::size_t mmwLinear(const Graph& g, const VarOrder& order) {
    return bestBalancedCut(g, order).matching.size();
}

BalancedCut bestBalancedCut(const Graph& g, const VarOrder& order) {
    const std::vector<Vertex> seq = presentInOrder(g, order);
    const std::size_t V = seq.size();
    const std::size_t lo = (V + 2) / 3, hi = 2 * V / 3;
    std::size_t bestK = lo, bestSize = 0;
    bool first = true;
    for (std::size_t k = lo; k <= hi; ++k) {
        const std::span<const Vertex> all(seq);
        const std::size_t size = matchingSize(crossProblem(g, all.first(k), all.subspan(k)));
        if (first || size > bestSize) {
            bestK = k;
            bestSize = size;
            first = false;
        }
    }
    const std::span<const Vertex> all(seq);
    BalancedCut out;
    out.k = bestK;
    out.matching = lexMinMaximumMatching(crossProblem(g, all.first(bestK), all.subspan(bestK)));
    return out;
}

std::size_t minMmwLinear(const Graph& g) {
    const Compact c = compact(g, kMinMmwGuard, "minMmwLinear");
    const std::size_t V = c.label.size();
    if (V < 3)
        throw GraphTooSmall("balanced cuts need at least 3 vertices, got " + std::to_string(V));
    const std::size_t lo = (V + 2) / 3, hi = 2 * V / 3;
    const std::uint32_t all = (1u << V) - 1;
    const std::size_t states = std::size_t{1} << V;

    auto cutMatching = [&](std::uint32_t s) {
        CrossProblem p;
        std::vector<std::uint32_t> rightIdx(V, 0);
        for (std::size_t u = 0; u < V; ++u) {
            if (s >> u & 1) {
                p.left.push_back(static_cast<Vertex>(u));
            } else {
                rightIdx[u] = static_cast<std::uint32_t>(p.right.size());
                p.right.push_back(static_cast<Vertex>(u));
            }
        }
        p.adj.resize(p.left.size());
        for (std::size_t i = 0; i < p.left.size(); ++i) {
            const std::uint32_t nb = c.adj[p.left[i]] & ~s & all;
            for (std::size_t u = 0; u < V; ++u)
                if (nb >> u & 1)
                    p.adj[i].push_back(rightIdx[u]);
        }
        return matchingSize(p);
    };

    // g[S] for lo <= |S| <= hi: min over chains of prefix sets ending in S
    // of the largest cut matching along the chain.
    constexpr std::uint8_t kUnset = 0xff;
    std::vector<std::uint8_t> best(states, kUnset);
    std::uint8_t answer = kUnset;
    for (std::uint32_t s = 0; s < states; ++s) {
        const auto size = static_cast<std::size_t>(std::popcount(s));
        if (size < lo || size > hi)
            continue;
        const auto here = static_cast<std::uint8_t>(cutMatching(s));
        std::uint8_t prev = 0;
        if (size > lo) {
            prev = kUnset;
            for (std::size_t v = 0; v < V; ++v)
                if (s >> v & 1)
                    prev = std::min(prev, best[s & ~(1u << v)]);
        }
        best[s] = std::max(here, prev);
        if (size == hi)
            answer = std::min(answer, best[s]);
    }
    return answer;
}

std::vector<std::size_t> matchingClauseIndices(const Cnf& f, const Matching& m) {
    std::map<Edge, std::size_t> firstClause;
    for (const auto& e : m.edges)
        firstClause.emplace(e, f.size());
    const auto clauses = f.clauses();
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        auto it = firstClause.find(Edge(clauses[i].first().var, clauses[i].second().var));
        if (it != firstClause.end() && it->second == f.size())
            it->second = i;
    }
    std::vector<std::size_t> picked;
    for (const auto& [e, i] : firstClause) {
        if (i == f.size())
            throw EdgeWithoutClause("no clause on edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        picked.push_back(i);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

Cnf extractMatchingSubformula(const Cnf& f, const Matching& m, const Bipartition& pi) {
    for (const auto& e : m.edges) {
        const int a = pi.side(e.u), b = pi.side(e.v);
        if (a == 0 || b == 0 || a == b)
            throw NotMatchingSubformula("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} does not cross the bipartition");
    }
    std::vector<Clause> out;
    for (auto i : matchingClauseIndices(f, m))
        out.push_back(f[i]);
    return Cnf(f.n(), std::move(out), Duplicates::Forbidden);
}

} // namespace obddlab
