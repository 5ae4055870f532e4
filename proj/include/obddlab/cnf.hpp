#pragma once

#include "obddlab/fraction.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace obddlab {

using Var = std::uint32_t; // 1-based variable index

struct Literal {
    Var var = 0;
    bool positive = true;

    constexpr Literal negated() const noexcept { return {var, !positive}; }
    constexpr int toDimacs() const noexcept {
        return positive ? static_cast<int>(var) : -static_cast<int>(var);
    }
    static Literal fromDimacs(int lit);

    // (var, polarity) with the negative literal first.
    friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

/// Two-literal clause over distinct variables, stored in canonical order.
class Clause {
public:
    Clause(Literal a, Literal b);

    const Literal& first() const noexcept { return lits_[0]; }
    const Literal& second() const noexcept { return lits_[1]; }
    const Literal& operator[](std::size_t i) const noexcept { return lits_[i]; }
    std::span<const Literal, 2> literals() const noexcept { return lits_; }

    bool isMonotone() const noexcept { return lits_[0].positive && lits_[1].positive; }
    bool mentions(Var v) const noexcept { return lits_[0].var == v || lits_[1].var == v; }

    friend auto operator<=>(const Clause&, const Clause&) = default;

private:
    std::array<Literal, 2> lits_;
};

enum class Duplicates { Allowed, Forbidden };

/// Partial map from variables 1..n to booleans.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t n);

    std::size_t n() const noexcept { return values_.empty() ? 0 : values_.size() - 1; }
    std::size_t size() const noexcept { return bound_; }
    bool isTotal() const noexcept { return bound_ == n(); }

    void set(Var v, bool value);
    void set(Literal lit) { set(lit.var, lit.positive); }
    std::optional<bool> get(Var v) const;
    bool isBound(Var v) const { return get(v).has_value(); }
    bool satisfies(Literal lit) const;

    // The bound variables as true literals, by increasing variable.
    std::vector<Literal> literals() const;

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<std::int8_t> values_; // index 0 unused; -1 unbound
    std::size_t bound_ = 0;
};

/// Ordered 2-CNF over ambient variables x1..xn. Immutable after construction.
class Cnf {
public:
    Cnf() = default;
    explicit Cnf(std::size_t n, Duplicates mode = Duplicates::Allowed);
    Cnf(std::size_t n, std::vector<Clause> clauses, Duplicates mode = Duplicates::Allowed);

    std::size_t n() const noexcept { return n_; }
    std::span<const Clause> clauses() const noexcept { return clauses_; }
    const Clause& operator[](std::size_t i) const { return clauses_[i]; }
    std::size_t size() const noexcept { return clauses_.size(); }
    bool empty() const noexcept { return clauses_.empty(); }
    bool allowDuplicates() const noexcept { return mode_ == Duplicates::Allowed; }
    Duplicates mode() const noexcept { return mode_; }

    // var(F), ascending.
    std::vector<Var> variables() const;
    bool isMonotone() const;

    // All variables of F must be bound.
    bool evaluate(const Assignment& alpha) const;

    friend bool operator==(const Cnf&, const Cnf&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Clause> clauses_;
    Duplicates mode_ = Duplicates::Allowed;
};

/// Pair of disjoint variable sets.
class Bipartition {
public:
    Bipartition() = default;
    Bipartition(std::vector<Var> part1, std::vector<Var> part2);

    const std::vector<Var>& part1() const noexcept { return part1_; }
    const std::vector<Var>& part2() const noexcept { return part2_; }
    // 1 or 2 for the part containing v, 0 when v is in neither.
    int side(Var v) const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    std::vector<Var> part1_, part2_;
};

bool isMatchingFormula(const Cnf& f);
bool isMatchingFormula(const Cnf& f, const Bipartition& pi);

bool isSimple(const Cnf& f);
// Number of clause positions whose clause occurs at least twice.
std::size_t countNonUnique(const Cnf& f);

// 3^k for a matching formula with k clauses.
BigInt countMatchingSolutions(const Cnf& f);

} // namespace obddlab
