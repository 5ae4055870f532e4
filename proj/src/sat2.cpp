#include "obddlab/sat2.hpp"

#include "implication_graph.hpp"
#include "obddlab/errors.hpp"

#include <algorithm>
#include <limits>

namespace obddlab {
namespace detail {

ImplicationGraph::ImplicationGraph(const Cnf& f, std::size_t n, const std::vector<Literal>& units)
    : offsets_(2 * n + 1, 0) {
    auto edges = [&](auto&& emit) {
        for (const auto& c : f.clauses()) {
            emit(negNode(litNode(c.first())), litNode(c.second()));
            emit(negNode(litNode(c.second())), litNode(c.first()));
        }
        for (const auto& l : units)
            emit(negNode(litNode(l)), litNode(l));
    };
    edges([&](std::uint32_t from, std::uint32_t) { ++offsets_[from + 1]; });
    for (std::size_t i = 1; i < offsets_.size(); ++i)
        offsets_[i] += offsets_[i - 1];
    targets_.resize(offsets_.back());
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    edges([&](std::uint32_t from, std::uint32_t to) { targets_[fill[from]++] = to; });
}

std::vector<std::uint32_t> ImplicationGraph::components() const {
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    const std::size_t count = nodeCount();
    std::vector<std::uint32_t> index(count, kUnvisited), low(count, 0), comp(count, kUnvisited);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, const std::uint32_t*>> frames;
    std::uint32_t nextIndex = 0, nextComp = 0;

    for (std::uint32_t root = 0; root < count; ++root) {
        if (index[root] != kUnvisited)
            continue;
        frames.emplace_back(root, begin(root));
        index[root] = low[root] = nextIndex++;
        stack.push_back(root);
        while (!frames.empty()) {
            auto& [node, it] = frames.back();
            if (it != end(node)) {
                const std::uint32_t next = *it++;
                if (index[next] == kUnvisited) {
                    index[next] = low[next] = nextIndex++;
                    stack.push_back(next);
                    frames.emplace_back(next, begin(next));
                } else if (comp[next] == kUnvisited) {
                    low[node] = std::min(low[node], index[next]);
                }
                continue;
            }
            const std::uint32_t done = node;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            if (low[done] == index[done]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    comp[w] = nextComp;
                } while (w != done);
                ++nextComp;
            }
        }
    }
    return comp;
}

} // namespace detail

namespace {

std::size_t ambient(const Cnf& f, const Assignment& units) { return std::max(f.n(), units.n()); }

} // namespace

SatResult solve2Sat(const Cnf& f, const Assignment& units) {
    const std::size_t n = ambient(f, units);
    if (units.n() > f.n())
        for (Var v = static_cast<Var>(f.n()) + 1; v <= units.n(); ++v)
            if (units.isBound(v))
                throw FormulaError("unit on variable " + std::to_string(v) + " beyond n");
    const detail::ImplicationGraph graph(f, n, units.literals());
    const auto comp = graph.components();
    Assignment witness(f.n());
    for (Var v = 1; v <= n; ++v) {
        const std::uint32_t pos = detail::litNode({v, true});
        if (comp[pos] == comp[pos ^ 1u])
            return {false, std::nullopt};
        if (v <= f.n())
            witness.set(v, comp[pos] < comp[pos ^ 1u]);
    }
    return {true, std::move(witness)};
}

bool extendsToSat(const Cnf& f, const Assignment& alpha) { return solve2Sat(f, alpha).satisfiable; }

ExtensionOracle::ExtensionOracle(const Cnf& f, std::span<const Var> watched)
    : watched_(watched.begin(), watched.end()) {
    if (watched_.size() > kMaxWatched)
        throw EnumerationTooLarge("extension oracle watches at most 64 variables");
    std::size_t n = f.n();
    for (Var v : watched_) {
        if (v == 0)
            throw FormulaError("variable indices start at 1");
        n = std::max<std::size_t>(n, v);
    }
    const detail::ImplicationGraph graph(f, n);
    const auto comp = graph.components();
    for (std::uint32_t node = 0; node < 2 * n; node += 2)
        if (comp[node] == comp[node + 1])
            satisfiable_ = false;

    conflicts_.assign(2 * watched_.size(), 0);
    if (!satisfiable_)
        return;

    constexpr int kNone = -1;
    std::vector<int> bitAt(2 * n, kNone);
    for (std::size_t j = 0; j < watched_.size(); ++j) {
        bitAt[detail::litNode({watched_[j], true})] = static_cast<int>(2 * j);
        bitAt[detail::litNode({watched_[j], false})] = static_cast<int>(2 * j + 1);
    }
    std::vector<std::uint32_t> seen(2 * n, 0), queue;
    std::uint32_t stamp = 0;
    for (std::size_t bit = 0; bit < conflicts_.size(); ++bit) {
        const Literal start{watched_[bit / 2], bit % 2 == 0};
        ++stamp;
        queue.assign(1, detail::litNode(start));
        seen[queue[0]] = stamp;
        LiteralMask reach = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t node = queue[head];
            if (bitAt[node] != kNone)
                reach |= LiteralMask{1} << bitAt[node];
            for (auto it = graph.begin(node); it != graph.end(node); ++it)
                if (seen[*it] != stamp) {
                    seen[*it] = stamp;
                    queue.push_back(*it);
                }
        }
        // lit ⇒ l  means  lit conflicts with ¬l.
        constexpr LiteralMask kEven = (LiteralMask{0x5555555555555555ULL} << 64) | 0x5555555555555555ULL;
        conflicts_[bit] = ((reach & kEven) << 1) | ((reach >> 1) & kEven);
    }
}

std::size_t ExtensionOracle::bitOf(Literal lit) const {
    const auto it = std::find(watched_.begin(), watched_.end(), lit.var);
    if (it == watched_.end())
        throw FormulaError("variable " + std::to_string(lit.var) + " is not watched");
    return 2 * static_cast<std::size_t>(it - watched_.begin()) + (lit.positive ? 0 : 1);
}

bool ExtensionOracle::extends(LiteralMask trueLiterals) const {
    if (!satisfiable_)
        return false;
    for (LiteralMask rest = trueLiterals; rest != 0; rest &= rest - 1) {
        const auto low = static_cast<std::uint64_t>(rest);
        const int bit = low ? __builtin_ctzll(low)
                            : 64 + __builtin_ctzll(static_cast<std::uint64_t>(rest >> 64));
        if (conflicts_[bit] & trueLiterals)
            return false;
    }
    return true;
}

bool ExtensionOracle::extends(const Assignment& alpha) const {
    LiteralMask mask = 0;
    for (const auto& lit : alpha.literals())
        mask |= LiteralMask{1} << bitOf(lit);
    return extends(mask);
}

} // namespace obddlab
