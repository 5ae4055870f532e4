#include "obddlab/obdd.hpp"

#include "implication_graph.hpp"
#include "obddlab/errors.hpp"
#include "obddlab/sat2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace obddlab {

namespace {

inline std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 31;
    x *= 0x7fb5d329728ea185ULL;
    x ^= x >> 27;
    x *= 0x81dadef4bc2dd44dULL;
    x ^= x >> 33;
    return x;
}

// Node store with a unique table and an AND cache, both open addressing.
// Nothing is freed while a compile runs.
class Manager {
public:
    Manager(std::size_t n, std::size_t capacity) : n_(n), capacity_(capacity) {
        nodes_.push_back({static_cast<std::uint32_t>(n), 0, 0});
        nodes_.push_back({static_cast<std::uint32_t>(n), 1, 1});
        unique_.assign(1024, 0);
        cache_.assign(1024, CacheEntry{});
    }

    std::uint32_t level(NodeId u) const { return nodes_[u].level; }

    NodeId mk(std::uint32_t level, NodeId lo, NodeId hi) {
        if (lo == hi)
            return lo;
        std::size_t mask = unique_.size() - 1;
        std::size_t slot = hashNode(level, lo, hi) & mask;
        while (NodeId id = unique_[slot]) {
            const auto& nd = nodes_[id];
            if (nd.level == level && nd.lo == lo && nd.hi == hi)
                return id;
            slot = (slot + 1) & mask;
        }
        if (nodes_.size() >= capacity_)
            throw CapacityExceeded(nodes_.size());
        const auto id = static_cast<NodeId>(nodes_.size());
        nodes_.push_back({level, lo, hi});
        unique_[slot] = id;
        if (2 * (nodes_.size() - 2) > unique_.size())
            growUnique();
        return id;
    }

    NodeId conj(NodeId a, NodeId b) {
        if (a == Obdd::kFalse || b == Obdd::kFalse)
            return Obdd::kFalse;
        if (a == Obdd::kTrue || a == b)
            return b;
        if (b == Obdd::kTrue)
            return a;
        if (a > b)
            std::swap(a, b);
        const std::size_t mask = cache_.size() - 1;
        std::size_t slot = mix((std::uint64_t{a} << 32) | b) & mask;
        while (cache_[slot].a != 0) {
            if (cache_[slot].a == a && cache_[slot].b == b)
                return cache_[slot].r;
            slot = (slot + 1) & mask;
        }
        const std::uint32_t la = level(a), lb = level(b);
        const std::uint32_t top = std::min(la, lb);
        const NodeId a0 = la == top ? nodes_[a].lo : a, a1 = la == top ? nodes_[a].hi : a;
        const NodeId b0 = lb == top ? nodes_[b].lo : b, b1 = lb == top ? nodes_[b].hi : b;
        const NodeId lo = conj(a0, b0);
        const NodeId hi = conj(a1, b1);
        const NodeId r = mk(top, lo, hi);
        insertCache(a, b, r);
        return r;
    }

    const std::vector<ObddNode>& nodes() const { return nodes_; }

private:
    struct CacheEntry {
        NodeId a = 0, b = 0, r = 0;
    };

    static std::size_t hashNode(std::uint32_t level, NodeId lo, NodeId hi) {
        return mix((std::uint64_t{level} << 40) ^ (std::uint64_t{lo} << 20) ^ hi ^ (std::uint64_t{hi} << 44));
    }

    void growUnique() {
        std::vector<NodeId> bigger(unique_.size() * 2, 0);
        const std::size_t mask = bigger.size() - 1;
        for (NodeId id = 2; id < nodes_.size(); ++id) {
            const auto& nd = nodes_[id];
            std::size_t slot = hashNode(nd.level, nd.lo, nd.hi) & mask;
            while (bigger[slot])
                slot = (slot + 1) & mask;
            bigger[slot] = id;
        }
        unique_.swap(bigger);
    }

    void insertCache(NodeId a, NodeId b, NodeId r) {
        if (2 * (cacheCount_ + 1) > cache_.size()) {
            std::vector<CacheEntry> old(cache_.size() * 2);
            old.swap(cache_);
            cacheCount_ = 0;
            for (const auto& e : old)
                if (e.a != 0)
                    insertCache(e.a, e.b, e.r);
        }
        const std::size_t mask = cache_.size() - 1;
        std::size_t slot = mix((std::uint64_t{a} << 32) | b) & mask;
        while (cache_[slot].a != 0)
            slot = (slot + 1) & mask;
        cache_[slot] = {a, b, r};
        ++cacheCount_;
    }

    std::size_t n_;
    std::size_t capacity_;
    std::vector<ObddNode> nodes_;
    std::vector<NodeId> unique_;
    std::vector<CacheEntry> cache_;
    std::size_t cacheCount_ = 0;
};

// Post-order copy of the nodes reachable from root. `get(u)` yields
// (level, lo, hi) of an internal node u of the source store.
template <class Get>
Obdd extract(const VarOrder& order, NodeId root, Get&& get) {
    const auto n = static_cast<std::uint32_t>(order.size());
    if (root <= Obdd::kTrue)
        return Obdd::constant(order, root == Obdd::kTrue);
    std::vector<ObddNode> out{{n, 0, 0}, {n, 1, 1}};
    std::unordered_map<NodeId, NodeId> renumber{{0, 0}, {1, 1}};
    std::vector<std::pair<NodeId, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [u, expanded] = stack.back();
        stack.pop_back();
        if (renumber.count(u))
            continue;
        const ObddNode nd = get(u);
        if (expanded) {
            renumber[u] = static_cast<NodeId>(out.size());
            out.push_back({nd.level, renumber.at(nd.lo), renumber.at(nd.hi)});
            continue;
        }
        stack.push_back({u, true});
        if (!renumber.count(nd.hi))
            stack.push_back({nd.hi, false});
        if (!renumber.count(nd.lo))
            stack.push_back({nd.lo, false});
    }
    return Obdd(order, std::move(out), renumber.at(root));
}

// Rudell swaps need parents to keep node identities, so this store is keyed
// by variable rather than level and keeps reference counts.
class Reorderer {
public:
    Reorderer(const Obdd& b, std::size_t capacity) : n_(b.n()), capacity_(capacity) {
        varAt_ = b.order().perm();
        pos_.assign(n_ + 1, n_);
        for (std::size_t i = 0; i < n_; ++i)
            pos_[varAt_[i]] = i;
        tables_.resize(n_ + 1);
        nodes_.resize(b.nodes().size());
        nodes_[0] = {0, 0, 0, 1};
        nodes_[1] = {0, 1, 1, 1};
        for (NodeId id = 2; id < b.nodes().size(); ++id) {
            const auto& nd = b.node(id);
            nodes_[id] = {varAt_[nd.level], nd.lo, nd.hi, 0};
            tables_[nodes_[id].var][key(nd.lo, nd.hi)] = id;
        }
        for (NodeId id = 2; id < b.nodes().size(); ++id) {
            ++nodes_[nodes_[id].lo].ref;
            ++nodes_[nodes_[id].hi].ref;
        }
        root_ = b.root();
        ++nodes_[root_].ref;
        live_ = b.internalCount();
    }

    std::size_t size() const { return live_ + 2; }
    std::size_t nodesOf(Var v) const { return tables_[v].size(); }
    std::size_t position(Var v) const { return pos_[v]; }

    // Exchange the variables at positions i and i+1.
    void swap(std::size_t i) {
        const Var x = varAt_[i], y = varAt_[i + 1];
        std::vector<NodeId> xs;
        xs.reserve(tables_[x].size());
        for (const auto& [k, id] : tables_[x])
            xs.push_back(id);
        tables_[x].clear();
        std::vector<NodeId> moving;
        for (NodeId u : xs) {
            const auto& nd = nodes_[u];
            if (nodes_[nd.lo].var != y && nodes_[nd.hi].var != y)
                tables_[x][key(nd.lo, nd.hi)] = u;
            else
                moving.push_back(u);
        }
        for (NodeId u : moving) {
            const NodeId lo = nodes_[u].lo, hi = nodes_[u].hi;
            const bool loY = nodes_[lo].var == y, hiY = nodes_[hi].var == y;
            const NodeId f00 = loY ? nodes_[lo].lo : lo, f01 = loY ? nodes_[lo].hi : lo;
            const NodeId f10 = hiY ? nodes_[hi].lo : hi, f11 = hiY ? nodes_[hi].hi : hi;
            const NodeId newLo = mk(x, f00, f10);
            const NodeId newHi = mk(x, f01, f11);
            deref(lo);
            deref(hi);
            nodes_[u].var = y;
            nodes_[u].lo = newLo;
            nodes_[u].hi = newHi;
            tables_[y][key(newLo, newHi)] = u;
        }
        std::swap(varAt_[i], varAt_[i + 1]);
        pos_[x] = i + 1;
        pos_[y] = i;
    }

    Obdd toObdd() const {
        return extract(VarOrder(varAt_), root_, [&](NodeId u) {
            const auto& nd = nodes_[u];
            return ObddNode{static_cast<std::uint32_t>(pos_[nd.var]), nd.lo, nd.hi};
        });
    }

private:
    struct RNode {
        Var var; // 0 for sinks
        NodeId lo, hi;
        std::uint32_t ref;
    };

    static std::uint64_t key(NodeId lo, NodeId hi) { return (std::uint64_t{lo} << 32) | hi; }

    NodeId mk(Var v, NodeId lo, NodeId hi) {
        if (lo == hi) {
            ++nodes_[lo].ref;
            return lo;
        }
        auto& table = tables_[v];
        if (auto it = table.find(key(lo, hi)); it != table.end()) {
            ++nodes_[it->second].ref;
            return it->second;
        }
        if (live_ + 2 >= capacity_)
            throw CapacityExceeded(live_ + 2);
        NodeId id;
        if (!free_.empty()) {
            id = free_.back();
            free_.pop_back();
        } else {
            id = static_cast<NodeId>(nodes_.size());
            nodes_.push_back({});
        }
        nodes_[id] = {v, lo, hi, 1};
        ++nodes_[lo].ref;
        ++nodes_[hi].ref;
        table[key(lo, hi)] = id;
        ++live_;
        return id;
    }

    void deref(NodeId u) {
        std::vector<NodeId> dead;
        if (--nodes_[u].ref == 0 && u > Obdd::kTrue)
            dead.push_back(u);
        while (!dead.empty()) {
            const NodeId d = dead.back();
            dead.pop_back();
            const auto nd = nodes_[d];
            tables_[nd.var].erase(key(nd.lo, nd.hi));
            free_.push_back(d);
            --live_;
            for (NodeId c : {nd.lo, nd.hi})
                if (--nodes_[c].ref == 0 && c > Obdd::kTrue)
                    dead.push_back(c);
        }
    }

    std::size_t n_;
    std::size_t capacity_;
    std::vector<Var> varAt_;
    std::vector<std::size_t> pos_;
    std::vector<RNode> nodes_;
    std::vector<std::unordered_map<std::uint64_t, NodeId>> tables_;
    std::vector<NodeId> free_;
    NodeId root_ = 0;
    std::size_t live_ = 0;
};

void checkOrder(const Cnf& f, const VarOrder& order) {
    if (order.size() != f.n())
        throw Error("order covers " + std::to_string(order.size()) + " variables, formula has n = " +
                    std::to_string(f.n()));
}

} // namespace

Obdd::Obdd(VarOrder order, std::vector<ObddNode> nodes, NodeId root)
    : order_(std::move(order)), nodes_(std::move(nodes)), root_(root) {}

Obdd Obdd::constant(VarOrder order, bool value) {
    const auto n = static_cast<std::uint32_t>(order.size());
    return Obdd(std::move(order), {{n, 0, 0}, {n, 1, 1}}, value ? kTrue : kFalse);
}

std::vector<std::size_t> Obdd::widthPerLevel() const {
    std::vector<std::size_t> w(n(), 0);
    for (NodeId id = 2; id < nodes_.size(); ++id)
        ++w[nodes_[id].level];
    return w;
}

Obdd compile(const Cnf& f, const VarOrder& order, std::size_t nodeCapacity) {
    checkOrder(f, order);
    if (f.empty())
        return Obdd::constant(order, true);
    if (!solve2Sat(f).satisfiable)
        return Obdd::constant(order, false);

    Manager m(f.n(), nodeCapacity);
    struct Item {
        std::uint32_t top, bottom;
        Literal a, b; // a is read first
    };
    std::vector<Item> items;
    items.reserve(f.size());
    for (const auto& c : f.clauses()) {
        auto pa = static_cast<std::uint32_t>(order.position(c.first().var));
        auto pb = static_cast<std::uint32_t>(order.position(c.second().var));
        Literal a = c.first(), b = c.second();
        if (pa > pb) {
            std::swap(pa, pb);
            std::swap(a, b);
        }
        items.push_back({pa, pb, a, b});
    }
    // Deepest clauses first: the partial conjunction grows upward.
    std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        return std::tie(y.top, y.bottom) < std::tie(x.top, x.bottom);
    });
    NodeId acc = Obdd::kTrue;
    for (const auto& it : items) {
        const NodeId second = m.mk(it.bottom, it.b.positive ? Obdd::kFalse : Obdd::kTrue,
                                   it.b.positive ? Obdd::kTrue : Obdd::kFalse);
        const NodeId clause = it.a.positive ? m.mk(it.top, second, Obdd::kTrue) : m.mk(it.top, Obdd::kTrue, second);
        acc = m.conj(acc, clause);
    }
    const auto& nodes = m.nodes();
    return extract(order, acc, [&](NodeId u) { return nodes[u]; });
}

bool evaluate(const Obdd& b, const Assignment& alpha) {
    if (alpha.n() != b.n() || !alpha.isTotal())
        throw PartialAssignment("evaluation needs a total assignment over x1..x" + std::to_string(b.n()));
    NodeId u = b.root();
    while (!b.isSink(u)) {
        const auto& nd = b.node(u);
        u = *alpha.get(b.varOf(u)) ? nd.hi : nd.lo;
    }
    return u == Obdd::kTrue;
}

BigInt modelCount(const Obdd& b) {
    // count[u]: models over the variables at positions >= level(u).
    std::vector<BigInt> count(b.nodes().size());
    count[0] = 0;
    count[1] = 1;
    for (NodeId id = 2; id < b.nodes().size(); ++id) {
        const auto& nd = b.node(id);
        const auto& lo = b.node(nd.lo);
        const auto& hi = b.node(nd.hi);
        count[id] = (count[nd.lo] << (lo.level - nd.level - 1)) + (count[nd.hi] << (hi.level - nd.level - 1));
    }
    return count[b.root()] << b.node(b.root()).level;
}

SizeReport sizeReport(const Obdd& b) {
    return {b.size(), b.widthPerLevel(), modelCount(b)};
}

std::size_t semanticWidth(const Obdd& b, std::size_t k) {
    if (k > b.n())
        throw IndexOutOfRange("prefix length " + std::to_string(k) + " exceeds n = " + std::to_string(b.n()));
    std::unordered_set<NodeId> crossing;
    if (b.node(b.root()).level >= k)
        crossing.insert(b.root());
    for (NodeId id = 2; id < b.nodes().size(); ++id) {
        const auto& nd = b.node(id);
        if (nd.level >= k)
            continue;
        for (NodeId c : {nd.lo, nd.hi})
            if (b.node(c).level >= k)
                crossing.insert(c);
    }
    return crossing.size();
}

std::size_t semanticWidthByEnumeration(const Cnf& f, const VarOrder& order, std::size_t k) {
    checkOrder(f, order);
    if (k > f.n())
        throw IndexOutOfRange("prefix length " + std::to_string(k) + " exceeds n = " + std::to_string(f.n()));
    if (k > kSemanticWidthGuard)
        throw EnumerationTooLarge("semantic width enumerates 2^k prefixes; k = " + std::to_string(k) + " exceeds " +
                                  std::to_string(kSemanticWidthGuard));
    // A satisfiable 2-CNF is determined by its forced literals plus the
    // implications among literals of unforced variables, so that pair of
    // sorted lists is a canonical key for the residual function.
    using Key = std::pair<std::vector<std::uint32_t>, std::vector<std::pair<std::uint32_t, std::uint32_t>>>;
    std::set<Key> seen;
    bool sawFalse = false;
    const std::size_t n = f.n();
    for (std::uint64_t beta = 0; beta < (std::uint64_t{1} << k); ++beta) {
        auto valueOf = [&](Var v) -> int {
            const std::size_t p = order.position(v);
            return p < k ? static_cast<int>(beta >> p & 1) : -1;
        };
        std::vector<Clause> rest;
        std::vector<Literal> units;
        bool conflict = false;
        for (const auto& c : f.clauses()) {
            const int va = valueOf(c.first().var), vb = valueOf(c.second().var);
            const bool satA = va >= 0 && (va == 1) == c.first().positive;
            const bool satB = vb >= 0 && (vb == 1) == c.second().positive;
            if (satA || satB)
                continue;
            if (va >= 0 && vb >= 0) {
                conflict = true;
                break;
            }
            if (va >= 0)
                units.push_back(c.second());
            else if (vb >= 0)
                units.push_back(c.first());
            else
                rest.push_back(c);
        }
        if (!conflict) {
            const Cnf residual(n, rest);
            const detail::ImplicationGraph g(residual, n, units);
            const auto comp = g.components();
            for (std::uint32_t v = 0; v < n && !conflict; ++v)
                conflict = comp[2 * v] == comp[2 * v + 1];
            if (!conflict) {
                std::vector<bool> mentioned(2 * n, false);
                for (const auto& c : rest)
                    for (const auto& l : c.literals())
                        mentioned[detail::litNode(l)] = mentioned[detail::litNode(l) ^ 1] = true;
                for (const auto& l : units)
                    mentioned[detail::litNode(l)] = mentioned[detail::litNode(l) ^ 1] = true;
                auto reach = [&](std::uint32_t from) {
                    std::vector<bool> mark(2 * n, false);
                    std::vector<std::uint32_t> stack{from}, out;
                    mark[from] = true;
                    while (!stack.empty()) {
                        const auto u = stack.back();
                        stack.pop_back();
                        out.push_back(u);
                        for (auto p = g.begin(u); p != g.end(u); ++p)
                            if (!mark[*p]) {
                                mark[*p] = true;
                                stack.push_back(*p);
                            }
                    }
                    return out;
                };
                Key key;
                std::vector<bool> forced(2 * n, false);
                for (std::uint32_t u = 0; u < 2 * n; ++u) {
                    if (!mentioned[u])
                        continue;
                    for (auto w : reach(u ^ 1))
                        if (w == u) {
                            forced[u] = true;
                            key.first.push_back(u);
                        }
                }
                for (std::uint32_t u = 0; u < 2 * n; ++u) {
                    if (!mentioned[u] || forced[u] || forced[u ^ 1])
                        continue;
                    for (auto w : reach(u))
                        if (w != u && !forced[w] && !forced[w ^ 1])
                            key.second.emplace_back(u, w);
                }
                std::sort(key.second.begin(), key.second.end());
                seen.insert(std::move(key));
            }
        }
        if (conflict)
            sawFalse = true;
    }
    return seen.size() + (sawFalse ? 1 : 0);
}

std::size_t semanticWidth(const Cnf& f, const VarOrder& order, std::size_t k, std::size_t nodeCapacity) {
    checkOrder(f, order);
    if (k > f.n())
        throw IndexOutOfRange("prefix length " + std::to_string(k) + " exceeds n = " + std::to_string(f.n()));
    try {
        return semanticWidth(compile(f, order, nodeCapacity), k);
    } catch (const CapacityExceeded&) {
        return semanticWidthByEnumeration(f, order, k);
    }
}

Obdd sift(const Obdd& b, const SiftOptions& options) {
    if (b.isConstant() || b.n() < 2)
        return b;
    Reorderer r(b, options.nodeCapacity);
    const std::size_t n = b.n();
    std::size_t best = r.size();
    for (std::size_t pass = 0; pass < options.maxPasses; ++pass) {
        const std::size_t before = r.size();
        std::vector<Var> vars;
        for (Var v = 1; v <= n; ++v)
            if (r.nodesOf(v) > 0)
                vars.push_back(v);
        std::stable_sort(vars.begin(), vars.end(), [&](Var a, Var c) { return r.nodesOf(a) > r.nodesOf(c); });
        for (Var v : vars) {
            if (r.nodesOf(v) == 0)
                continue;
            best = r.size();
            std::size_t bestPos = r.position(v);
            const auto limit = static_cast<std::size_t>(static_cast<double>(best) * options.maxGrowth) + 1;
            auto tryMove = [&](bool down) {
                while (down ? r.position(v) + 1 < n : r.position(v) > 0) {
                    r.swap(down ? r.position(v) : r.position(v) - 1);
                    if (r.size() < best) {
                        best = r.size();
                        bestPos = r.position(v);
                    }
                    if (r.size() > limit)
                        break;
                }
            };
            // Nearer end first.
            const bool downFirst = r.position(v) >= n / 2;
            tryMove(downFirst);
            tryMove(!downFirst);
            while (r.position(v) < bestPos)
                r.swap(r.position(v));
            while (r.position(v) > bestPos)
                r.swap(r.position(v) - 1);
        }
        if (r.size() >= before)
            break;
    }
    Obdd out = r.toObdd();
    return out.size() <= b.size() ? out : b;
}

std::string dumpObdd(const Obdd& b) {
    std::ostringstream os;
    os << "order";
    for (Var v : b.order().perm())
        os << ' ' << v;
    os << "\nroot " << b.root() << '\n';
    for (NodeId id = 2; id < b.nodes().size(); ++id) {
        const auto& nd = b.node(id);
        os << id << ' ' << b.varOf(id) << ' ' << nd.lo << ' ' << nd.hi << '\n';
    }
    return os.str();
}

Obdd parseObddDump(const std::string& text) {
    std::istringstream in(text);
    std::string line, word;
    std::size_t lineNo = 0;
    auto next = [&]() {
        if (!std::getline(in, line))
            throw ParseError(lineNo + 1, "unexpected end of dump");
        ++lineNo;
        return std::istringstream(line);
    };
    auto head = next();
    head >> word;
    if (word != "order")
        throw ParseError(lineNo, "expected 'order'");
    std::vector<Var> perm;
    for (Var v; head >> v;)
        perm.push_back(v);
    VarOrder order;
    try {
        order = VarOrder(perm);
    } catch (const Error& e) {
        throw ParseError(lineNo, e.what());
    }
    auto rootLine = next();
    NodeId root = 0;
    if (!(rootLine >> word >> root) || word != "root")
        throw ParseError(lineNo, "expected 'root <id>'");
    const auto n = static_cast<std::uint32_t>(order.size());
    std::vector<ObddNode> nodes{{n, 0, 0}, {n, 1, 1}};
    std::set<std::tuple<std::uint32_t, NodeId, NodeId>> seen;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty())
            continue;
        std::istringstream ls(line);
        NodeId id = 0, lo = 0, hi = 0;
        Var v = 0;
        if (!(ls >> id >> v >> lo >> hi))
            throw ParseError(lineNo, "expected 'id var lo hi'");
        if (id != nodes.size() || lo >= id || hi >= id || v == 0 || v > n || lo == hi)
            throw ParseError(lineNo, "malformed node " + std::to_string(id));
        const auto level = static_cast<std::uint32_t>(order.position(v));
        if (nodes[lo].level <= level || nodes[hi].level <= level)
            throw ParseError(lineNo, "node " + std::to_string(id) + " violates the order");
        if (!seen.emplace(level, lo, hi).second)
            throw ParseError(lineNo, "node " + std::to_string(id) + " duplicates an earlier node");
        nodes.push_back({level, lo, hi});
    }
    if (root >= nodes.size())
        throw ParseError(lineNo, "root out of range");
    // Only the canonical numbering is accepted: reachable nodes in post-order.
    std::vector<NodeId> post;
    std::vector<bool> visited(nodes.size(), false);
    std::vector<std::pair<NodeId, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [id, expanded] = stack.back();
        stack.pop_back();
        if (id <= Obdd::kTrue || (visited[id] && !expanded))
            continue;
        if (expanded) {
            post.push_back(id);
            continue;
        }
        visited[id] = true;
        stack.push_back({id, true});
        stack.push_back({nodes[id].hi, false});
        stack.push_back({nodes[id].lo, false});
    }
    for (std::size_t i = 0; i < post.size(); ++i)
        if (post[i] != i + 2)
            throw ParseError(lineNo, "nodes are not the reachable nodes in post-order");
    if (post.size() != nodes.size() - 2)
        throw ParseError(lineNo, "unreachable nodes in dump");
    return Obdd(std::move(order), std::move(nodes), root);
}

} // namespace obddlab
