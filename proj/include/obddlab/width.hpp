#pragma once

#include "obddlab/cnf.hpp"
#include "obddlab/graph.hpp"
#include "obddlab/var_order.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace obddlab {

inline constexpr std::size_t kTwExactGuard = 14;
inline constexpr std::size_t kPwExactGuard = 16;
inline constexpr std::size_t kMinMmwGuard = 16;

struct Elimination {
    std::vector<Vertex> order; // elimination order over the present vertices
    std::size_t width = 0;     // max neighbourhood size at elimination
};

/// Min-fill elimination; ties are broken by a per-vertex priority drawn from
/// `seed`, so the result is reproducible per trial. With preferLocal a tie is
/// first resolved towards neighbours of the vertex eliminated last, which
/// keeps the order walking along paths (used for variable orders).
Elimination minFillElimination(const Graph& g, std::uint64_t seed = 0, bool preferLocal = false);
inline std::size_t twUpper(const Graph& g, std::uint64_t seed = 0) { return minFillElimination(g, seed).width; }

// Branch and bound over elimination orders. |V| <= kTwExactGuard.
std::size_t twExact(const Graph& g);

struct PathLayout {
    std::size_t width = 0;
    std::vector<Vertex> order; // layout attaining the vertex separation number
};

// Optimal vertex-separation layout (= pathwidth). |V| <= kPwExactGuard.
PathLayout pathwidthLayout(const Graph& g);
inline std::size_t pwExact(const Graph& g) { return pathwidthLayout(g).width; }

/// Maximum matching of G between disjoint vertex sets v1 and v2
/// (Hopcroft-Karp on the crossing edges).
Matching maxCrossMatching(const Graph& g, std::span<const Vertex> v1, std::span<const Vertex> v2);

struct BalancedCut {
    std::size_t k = 0;  // prefix length (in present vertices of the order)
    Matching matching;  // maximum crossing matching, sides = (prefix, suffix)
};

/// Maximum matching width of the right-linear decomposition tree of `order`:
/// the largest crossing matching over prefix cuts ceil(V/3) <= k <= floor(2V/3).
std::size_t mmwLinear(const Graph& g, const VarOrder& order);

/// The cut attaining mmwLinear (smallest k on ties) with the lexicographically
/// smallest maximum matching as witness.
BalancedCut bestBalancedCut(const Graph& g, const VarOrder& order);

/// min over all orders of mmwLinear, by dynamic programming over prefix sets.
/// |V| <= kMinMmwGuard.
std::size_t minMmwLinear(const Graph& g);

// Index in F of the clause chosen for each matching edge, ascending.
std::vector<std::size_t> matchingClauseIndices(const Cnf& f, const Matching& m);

/// One clause per matching edge (the earliest in F's order), kept in F's order.
Cnf extractMatchingSubformula(const Cnf& f, const Matching& m, const Bipartition& pi);

} // namespace obddlab
