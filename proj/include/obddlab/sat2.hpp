#pragma once

#include "obddlab/cnf.hpp"

#include <optional>
#include <span>
#include <vector>

namespace obddlab {

struct SatResult {
    bool satisfiable = false;
    std::optional<Assignment> witness; // total over 1..n when satisfiable
};

/// Decides F ∧ units with the implication-graph / strongly-connected-component
/// method. Units are injected as edges ¬l → l, so the query never leaves the
/// 2-CNF fragment.
SatResult solve2Sat(const Cnf& f, const Assignment& units = {});

/// True iff alpha has an extension satisfying F.
bool extendsToSat(const Cnf& f, const Assignment& alpha);

using LiteralMask = unsigned __int128;

/// Answers "does F ∧ α have a model" for many partial assignments α over a
/// fixed set of at most 64 watched variables.
///
/// For satisfiable F and a consistent literal set L, F ∧ L is satisfiable iff
/// no l1, l2 ∈ L have a path l1 ⇒ ¬l2 in the implication graph of F. The
/// oracle precomputes those paths between watched literals once; each query
/// is then a handful of mask operations.
///
/// Literal bits: 2j means watched[j] is true, 2j+1 means watched[j] is false.
class ExtensionOracle {
public:
    static constexpr std::size_t kMaxWatched = 64;

    ExtensionOracle(const Cnf& f, std::span<const Var> watched);

    bool formulaSatisfiable() const noexcept { return satisfiable_; }
    std::span<const Var> watched() const noexcept { return watched_; }

    // Bit index of a literal on a watched variable.
    std::size_t bitOf(Literal lit) const;

    // Literals l2 such that lit ⇒ ¬l2.
    LiteralMask conflictsOf(std::size_t bit) const { return conflicts_[bit]; }

    bool extends(LiteralMask trueLiterals) const;
    bool extends(const Assignment& alpha) const;

private:
    std::vector<Var> watched_;
    std::vector<LiteralMask> conflicts_;
    bool satisfiable_ = true;
};

} // namespace obddlab
