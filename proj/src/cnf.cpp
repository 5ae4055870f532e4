#include "obddlab/cnf.hpp"

#include "obddlab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace obddlab {

Literal Literal::fromDimacs(int lit) {
    if (lit == 0)
        throw FormulaError("literal 0 is not a variable");
    return {static_cast<Var>(std::abs(lit)), lit > 0};
}

Clause::Clause(Literal a, Literal b) {
    if (a.var == 0 || b.var == 0)
        throw FormulaError("variable indices start at 1");
    if (a.var == b.var)
        throw FormulaError("clause repeats variable " + std::to_string(a.var));
    if (b < a)
        std::swap(a, b);
    lits_ = {a, b};
}

Assignment::Assignment(std::size_t n) : values_(n + 1, -1) {}

void Assignment::set(Var v, bool value) {
    if (v == 0 || v > n())
        throw FormulaError("variable " + std::to_string(v) + " outside 1.." + std::to_string(n()));
    auto& slot = values_[v];
    if (slot >= 0 && slot != static_cast<std::int8_t>(value))
        throw FormulaError("variable " + std::to_string(v) + " bound twice");
    if (slot < 0)
        ++bound_;
    slot = static_cast<std::int8_t>(value);
}

std::optional<bool> Assignment::get(Var v) const {
    if (v == 0 || v > n() || values_[v] < 0)
        return std::nullopt;
    return values_[v] == 1;
}

bool Assignment::satisfies(Literal lit) const {
    const auto value = get(lit.var);
    return value && *value == lit.positive;
}

std::vector<Literal> Assignment::literals() const {
    std::vector<Literal> out;
    out.reserve(bound_);
    for (Var v = 1; v <= n(); ++v)
        if (values_[v] >= 0)
            out.push_back({v, values_[v] == 1});
    return out;
}

Cnf::Cnf(std::size_t n, Duplicates mode) : n_(n), mode_(mode) {}

Cnf::Cnf(std::size_t n, std::vector<Clause> clauses, Duplicates mode)
    : n_(n), clauses_(std::move(clauses)), mode_(mode) {
    for (const auto& c : clauses_)
        if (c.second().var > n_)
            throw FormulaError("clause variable " + std::to_string(c.second().var) +
                               " exceeds n = " + std::to_string(n_));
    if (mode_ == Duplicates::Forbidden && !isSimple(*this))
        throw FormulaError("duplicate clause in a formula that forbids duplicates");
}

std::vector<Var> Cnf::variables() const {
    std::vector<Var> vars;
    vars.reserve(2 * clauses_.size());
    for (const auto& c : clauses_) {
        vars.push_back(c.first().var);
        vars.push_back(c.second().var);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool Cnf::isMonotone() const {
    return std::all_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.isMonotone(); });
}

bool Cnf::evaluate(const Assignment& alpha) const {
    for (const auto& c : clauses_) {
        const auto a = alpha.get(c.first().var);
        const auto b = alpha.get(c.second().var);
        if (!a || !b)
            throw PartialAssignment("assignment does not bind every variable of the formula");
        if (*a != c.first().positive && *b != c.second().positive)
            return false;
    }
    return true;
}

Bipartition::Bipartition(std::vector<Var> part1, std::vector<Var> part2)
    : part1_(std::move(part1)), part2_(std::move(part2)) {
    std::sort(part1_.begin(), part1_.end());
    std::sort(part2_.begin(), part2_.end());
    part1_.erase(std::unique(part1_.begin(), part1_.end()), part1_.end());
    part2_.erase(std::unique(part2_.begin(), part2_.end()), part2_.end());
    std::vector<Var> common;
    std::set_intersection(part1_.begin(), part1_.end(), part2_.begin(), part2_.end(),
                          std::back_inserter(common));
    if (!common.empty())
        throw PartsOverlap("variable " + std::to_string(common.front()) + " lies in both parts");
}

int Bipartition::side(Var v) const {
    if (std::binary_search(part1_.begin(), part1_.end(), v))
        return 1;
    if (std::binary_search(part2_.begin(), part2_.end(), v))
        return 2;
    return 0;
}

bool isMatchingFormula(const Cnf& f) {
    std::vector<Var> vars;
    vars.reserve(2 * f.size());
    for (const auto& c : f.clauses()) {
        vars.push_back(c.first().var);
        vars.push_back(c.second().var);
    }
    std::sort(vars.begin(), vars.end());
    return std::adjacent_find(vars.begin(), vars.end()) == vars.end();
}

bool isMatchingFormula(const Cnf& f, const Bipartition& pi) {
    if (!isMatchingFormula(f))
        return false;
    for (const auto& c : f.clauses()) {
        const int a = pi.side(c.first().var);
        const int b = pi.side(c.second().var);
        if (a == 0 || b == 0 || a == b)
            return false;
    }
    return true;
}

bool isSimple(const Cnf& f) {
    std::vector<Clause> sorted(f.clauses().begin(), f.clauses().end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::size_t countNonUnique(const Cnf& f) {
    std::vector<Clause> sorted(f.clauses().begin(), f.clauses().end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t count = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        if (j - i >= 2)
            count += j - i;
        i = j;
    }
    return count;
}

BigInt countMatchingSolutions(const Cnf& f) {
    if (!isMatchingFormula(f))
        throw NotAMatchingFormula("clauses share a variable");
    return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(f.size()));
}

} // namespace obddlab
