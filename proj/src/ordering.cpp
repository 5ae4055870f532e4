#include "obddlab/ordering.hpp"

#include "obddlab/errors.hpp"
#include "obddlab/graph.hpp"
#include "obddlab/sat2.hpp"
#include "obddlab/width.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <unordered_set>

namespace obddlab {

namespace {

std::vector<std::size_t> componentIds(const Graph& g) {
    std::vector<std::size_t> comp(g.n() + 1, std::numeric_limits<std::size_t>::max());
    std::size_t next = 0;
    for (Vertex s : g.vertices()) {
        if (comp[s] != std::numeric_limits<std::size_t>::max())
            continue;
        std::vector<Vertex> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (comp[w] == std::numeric_limits<std::size_t>::max()) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

VarOrder minfillOrder(const Cnf& f, std::uint64_t seed) {
    const Graph g = primalGraph(f, true);
    std::vector<Vertex> order = minFillElimination(g, seed, true).order;
    std::reverse(order.begin(), order.end());
    const auto comp = componentIds(g);
    // Components in order of first appearance, stable inside each.
    std::vector<std::size_t> rank(g.n() + 1, std::numeric_limits<std::size_t>::max());
    std::size_t r = 0;
    for (Vertex v : order)
        if (rank[comp[v]] == std::numeric_limits<std::size_t>::max())
            rank[comp[v]] = r++;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return rank[comp[a]] < rank[comp[b]]; });
    return VarOrder(std::move(order));
}

VarOrder bfsOrder(const Cnf& f) {
    const Graph g = primalGraph(f, true);
    std::vector<bool> seen(g.n() + 1, false);
    std::vector<Vertex> order;
    order.reserve(g.n());
    const auto comp = componentIds(g);
    // Start of each component: minimum degree, then smallest index.
    std::vector<Vertex> start;
    std::vector<Vertex> best(g.n() + 1, 0);
    for (Vertex v : g.vertices()) {
        Vertex& b = best[comp[v]];
        if (b == 0 || g.degree(v) < g.degree(b))
            b = v;
    }
    for (Vertex v : g.vertices()) {
        const Vertex s = best[comp[v]];
        if (seen[s])
            continue;
        std::deque<Vertex> q{s};
        seen[s] = true;
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop_front();
            order.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push_back(w);
                }
        }
    }
    return VarOrder(std::move(order));
}

} // namespace

const std::vector<std::string>& orderStrategies() {
    static const std::vector<std::string> names{"identity", "minfill", "bfs", "sifting"};
    return names;
}

VarOrder heuristicOrder(const Cnf& f, const std::string& strategy, std::uint64_t seed, std::size_t nodeCapacity) {
    if (strategy == "identity")
        return VarOrder::identity(f.n());
    if (strategy == "minfill")
        return minfillOrder(f, seed);
    if (strategy == "bfs")
        return bfsOrder(f);
    if (strategy == "sifting") {
        const VarOrder start = minfillOrder(f, seed);
        SiftOptions opts;
        opts.nodeCapacity = nodeCapacity;
        return sift(compile(f, start, nodeCapacity), opts).order();
    }
    throw UnknownStrategy("unknown order strategy '" + strategy + "' (identity, minfill, bfs, sifting)");
}

ExactSize exactMinSize(const Cnf& f) {
    const std::vector<Var> vars = f.variables();
    const std::size_t r = vars.size();
    if (r > kExactMinSizeGuard)
        throw TooManyVariables("exactMinSize supports at most " + std::to_string(kExactMinSizeGuard) +
                               " formula variables, got " + std::to_string(r));

    auto completeOrder = [&](std::vector<Var> prefix) {
        std::vector<bool> used(f.n() + 1, false);
        for (Var v : prefix)
            used[v] = true;
        for (Var v = 1; v <= f.n(); ++v)
            if (!used[v])
                prefix.push_back(v);
        return VarOrder(std::move(prefix));
    };

    if (!solve2Sat(f).satisfiable || f.empty())
        return {1, VarOrder::identity(f.n())};

    // Truth table over var(F): bit j of the index is vars[j].
    const std::size_t rows = std::size_t{1} << r;
    std::vector<std::uint8_t> table(rows, 1);
    std::vector<std::size_t> bit(f.n() + 1, 0);
    for (std::size_t j = 0; j < r; ++j)
        bit[vars[j]] = j;
    for (std::size_t idx = 0; idx < rows; ++idx)
        for (const auto& c : f.clauses()) {
            const bool a = (idx >> bit[c.first().var] & 1) == (c.first().positive ? 1u : 0u);
            const bool b = (idx >> bit[c.second().var] & 1) == (c.second().positive ? 1u : 0u);
            if (!a && !b) {
                table[idx] = 0;
                break;
            }
        }

    const std::uint32_t all = static_cast<std::uint32_t>(rows - 1);
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best(rows, kInf);
    std::vector<std::uint8_t> choice(rows, 0);
    best[0] = 0;

    // Subsets in increasing popcount via plain numeric order works since
    // S \ {v} < S.
    std::vector<std::uint32_t> restBits;
    for (std::uint32_t s = 0; s < rows; ++s) {
        if (best[s] == kInf)
            continue;
        const std::uint32_t rest = all & ~s;
        if (rest == 0)
            continue;
        restBits.clear();
        for (std::size_t j = 0; j < r; ++j)
            if (rest >> j & 1)
                restBits.push_back(static_cast<std::uint32_t>(j));
        const std::size_t restCount = restBits.size();
        const std::size_t cofRows = std::size_t{1} << restCount;

        // Distinct cofactors over S, each as a bit string over the rest.
        std::unordered_set<std::string> distinct;
        std::string cof(cofRows, '\0');
        for (std::uint32_t beta = s;; beta = (beta - 1) & s) {
            for (std::size_t g = 0; g < cofRows; ++g) {
                std::uint32_t idx = beta;
                for (std::size_t t = 0; t < restCount; ++t)
                    if (g >> t & 1)
                        idx |= 1u << restBits[t];
                cof[g] = static_cast<char>(table[idx]);
            }
            distinct.insert(cof);
            if (beta == 0)
                break;
        }
        for (std::size_t t = 0; t < restCount; ++t) {
            std::size_t cost = 0;
            for (const auto& c : distinct) {
                for (std::size_t g = 0; g < cofRows; ++g)
                    if (!(g >> t & 1) && c[g] != c[g | (std::size_t{1} << t)]) {
                        ++cost;
                        break;
                    }
            }
            const std::uint32_t next = s | (1u << restBits[t]);
            if (best[s] + cost < best[next]) {
                best[next] = best[s] + cost;
                choice[next] = static_cast<std::uint8_t>(restBits[t]);
            }
        }
    }

    std::vector<Var> prefix;
    for (std::uint32_t s = all; s != 0;) {
        const auto j = choice[s];
        prefix.push_back(vars[j]);
        s &= ~(1u << j);
    }
    std::reverse(prefix.begin(), prefix.end());
    // F is satisfiable and non-empty, so it is not constant: both sinks.
    return {best[all] + 2, completeOrder(std::move(prefix))};
}

PathwidthCheck pathwidthUpperBoundCheck(const Cnf& f) {
    const Graph g = primalGraph(f, true);
    const PathLayout layout = pathwidthLayout(g);
    PathwidthCheck out;
    out.pw = layout.width;
    out.order = VarOrder(layout.order);
    out.size = compile(f, out.order).size();
    out.bound = static_cast<std::uint64_t>(f.n()) * (std::uint64_t{1} << (out.pw + 1)) + 2;
    return out;
}

} // namespace obddlab
