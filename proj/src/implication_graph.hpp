#pragma once

#include "obddlab/cnf.hpp"

#include <cstdint>
#include <vector>

namespace obddlab::detail {

// Node of the literal (v, positive).
inline std::uint32_t litNode(Literal l) { return 2 * (l.var - 1) + (l.positive ? 0u : 1u); }
inline std::uint32_t negNode(std::uint32_t node) { return node ^ 1u; }

// Implication graph in compressed adjacency form: clause (a ∨ b) gives
// ¬a → b and ¬b → a; a unit l gives ¬l → l.
class ImplicationGraph {
public:
    ImplicationGraph(const Cnf& f, std::size_t n, const std::vector<Literal>& units = {});

    std::size_t nodeCount() const { return offsets_.size() - 1; }
    const std::uint32_t* begin(std::uint32_t node) const { return targets_.data() + offsets_[node]; }
    const std::uint32_t* end(std::uint32_t node) const { return targets_.data() + offsets_[node + 1]; }

    // Tarjan component index per node; components are numbered in reverse
    // topological order.
    std::vector<std::uint32_t> components() const;

private:
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> targets_;
};

} // namespace obddlab::detail
