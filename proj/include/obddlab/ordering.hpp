#pragma once

#include "obddlab/cnf.hpp"
#include "obddlab/obdd.hpp"
#include "obddlab/var_order.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace obddlab {

// exactMinSize works on truth tables over var(F).
inline constexpr std::size_t kExactMinSizeGuard = 12;

/// Variable order for compiling F.
///   identity  x1..xn
///   minfill   reversed min-fill elimination order of the primal graph,
///             one connected component after another
///   bfs       breadth-first order from a minimum-degree vertex per component
///   sifting   minfill, compiled, then improved by sifting
VarOrder heuristicOrder(const Cnf& f, const std::string& strategy, std::uint64_t seed = 0,
                        std::size_t nodeCapacity = kDefaultNodeCapacity);

const std::vector<std::string>& orderStrategies();

struct ExactSize {
    std::size_t size = 0;
    VarOrder order; // an order attaining `size`
};

/// Minimum OBDD size over all variable orders, by dynamic programming over the
/// set of variables placed above a level: the nodes labelled v below a prefix
/// set S are the distinct cofactors over S that depend on v.
ExactSize exactMinSize(const Cnf& f);

struct PathwidthCheck {
    std::size_t pw = 0;
    std::size_t size = 0;
    std::uint64_t bound = 0; // n * 2^(pw+1) + 2
    VarOrder order;
    bool holds() const { return size <= bound; }
};

// Compiles F under an optimal vertex-separation layout of its primal graph.
PathwidthCheck pathwidthUpperBoundCheck(const Cnf& f);

} // namespace obddlab
