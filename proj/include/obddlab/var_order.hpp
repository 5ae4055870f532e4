#pragma once

#include "obddlab/cnf.hpp"

#include <vector>

namespace obddlab {

/// Permutation of the variables 1..n; perm()[i] is the variable at position i.
class VarOrder {
public:
    VarOrder() = default;
    explicit VarOrder(std::vector<Var> perm);
    static VarOrder identity(std::size_t n);

    std::size_t size() const noexcept { return perm_.size(); }
    const std::vector<Var>& perm() const noexcept { return perm_; }
    Var at(std::size_t position) const { return perm_[position]; }
    std::size_t position(Var v) const { return pos_[v]; }

    friend bool operator==(const VarOrder& a, const VarOrder& b) { return a.perm_ == b.perm_; }

private:
    std::vector<Var> perm_;
    std::vector<std::size_t> pos_; // index 0 unused
};

} // namespace obddlab
