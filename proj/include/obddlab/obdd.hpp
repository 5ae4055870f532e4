#pragma once

#include "obddlab/cnf.hpp"
#include "obddlab/fraction.hpp"
#include "obddlab/var_order.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace obddlab {

inline constexpr std::size_t kDefaultNodeCapacity = std::size_t{1} << 26;
// Prefix length limit for the enumeration fallback of semanticWidth.
inline constexpr std::size_t kSemanticWidthGuard = 28;

using NodeId = std::uint32_t;

struct ObddNode {
    std::uint32_t level = 0; // position in the order; sinks sit at level n
    NodeId lo = 0, hi = 0;

    friend bool operator==(const ObddNode&, const ObddNode&) = default;
};

/// Reduced OBDD over x1..xn. Node 0 is the 0-sink, node 1 the 1-sink, and the
/// remaining nodes are exactly the internal nodes reachable from the root,
/// numbered in post-order (lo before hi). Equal functions under the same
/// order therefore give equal objects.
class Obdd {
public:
    static constexpr NodeId kFalse = 0;
    static constexpr NodeId kTrue = 1;

    Obdd() = default;
    Obdd(VarOrder order, std::vector<ObddNode> nodes, NodeId root);
    static Obdd constant(VarOrder order, bool value);

    const VarOrder& order() const noexcept { return order_; }
    std::size_t n() const noexcept { return order_.size(); }
    NodeId root() const noexcept { return root_; }
    const std::vector<ObddNode>& nodes() const noexcept { return nodes_; }
    const ObddNode& node(NodeId id) const { return nodes_[id]; }
    bool isSink(NodeId id) const noexcept { return id <= kTrue; }
    bool isConstant() const noexcept { return isSink(root_); }
    Var varOf(NodeId id) const { return order_.at(nodes_[id].level); }

    std::size_t internalCount() const noexcept { return nodes_.size() - 2; }
    // Node count including the sinks that are present (1 for constants).
    std::size_t size() const noexcept { return internalCount() + (isConstant() ? 1 : 2); }
    // Internal nodes per order position.
    std::vector<std::size_t> widthPerLevel() const;

    friend bool operator==(const Obdd&, const Obdd&) = default;

private:
    VarOrder order_;
    std::vector<ObddNode> nodes_;
    NodeId root_ = kFalse;
};

struct SizeReport {
    std::size_t size = 0;
    std::vector<std::size_t> widthPerLevel;
    BigInt modelCount;
};

/// Conjunction of the clause diagrams. Unsatisfiable formulas (decided by
/// 2-SAT first) give the 0-sink without any apply work.
Obdd compile(const Cnf& f, const VarOrder& order, std::size_t nodeCapacity = kDefaultNodeCapacity);

bool evaluate(const Obdd& b, const Assignment& alpha);
// Models over all n ambient variables.
BigInt modelCount(const Obdd& b);
SizeReport sizeReport(const Obdd& b);

// Distinct residual functions after fixing the first k variables of the
// order, read off the diagram.
std::size_t semanticWidth(const Obdd& b, std::size_t k);
// Same from the formula: compiles, and falls back to enumerating the 2^k
// prefix assignments (k <= kSemanticWidthGuard) when compilation blows up.
std::size_t semanticWidth(const Cnf& f, const VarOrder& order, std::size_t k,
                          std::size_t nodeCapacity = kDefaultNodeCapacity);
std::size_t semanticWidthByEnumeration(const Cnf& f, const VarOrder& order, std::size_t k);

struct SiftOptions {
    double maxGrowth = 1.2; // abandon a direction once size exceeds best * maxGrowth
    std::size_t maxPasses = 4;
    std::size_t nodeCapacity = kDefaultNodeCapacity;
};

// Rudell sifting by adjacent level swaps. The result is never larger.
Obdd sift(const Obdd& b, const SiftOptions& options = {});

/// Text dump:
///   order v1 v2 ... vn
///   root r
///   id var lo hi      (one line per internal node, children before parents)
/// ids 0 and 1 are the 0- and 1-sink and have no line.
std::string dumpObdd(const Obdd& b);
Obdd parseObddDump(const std::string& text);

} // namespace obddlab
