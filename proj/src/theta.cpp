#include "obddlab/theta.hpp"

#include "obddlab/errors.hpp"
#include "obddlab/sat2.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace obddlab {
namespace {

LiteralMask bitMask(std::size_t bit) { return LiteralMask{1} << bit; }

// Models of a matching formula: per clause one of (¬a,b), (a,¬b), (a,b).
std::uint64_t countMatchingExtendable(const Cnf& h, const ExtensionOracle& oracle) {
    struct Option {
        LiteralMask lits;
        LiteralMask conflicts;
    };
    std::vector<std::array<Option, 3>> options;
    for (const auto& c : h.clauses()) {
        const Literal a = c.first(), b = c.second();
        const std::size_t aT = oracle.bitOf(a), aF = oracle.bitOf(a.negated());
        const std::size_t bT = oracle.bitOf(b), bF = oracle.bitOf(b.negated());
        auto make = [&](std::size_t x, std::size_t y) {
            return Option{bitMask(x) | bitMask(y), oracle.conflictsOf(x) | oracle.conflictsOf(y)};
        };
        options.push_back({make(aF, bT), make(aT, bF), make(aT, bT)});
    }
    std::uint64_t count = 0;
    auto dfs = [&](auto&& self, std::size_t i, LiteralMask lits, LiteralMask conflicts) -> void {
        if (i == options.size()) {
            ++count;
            return;
        }
        for (const auto& opt : options[i]) {
            const LiteralMask next = lits | opt.lits;
            if ((conflicts & opt.lits) || (opt.conflicts & next))
                continue;
            self(self, i + 1, next, conflicts | opt.conflicts);
        }
    };
    dfs(dfs, 0, 0, 0);
    return count;
}

ThetaCount countGeneral(const Cnf& h, const std::vector<Var>& vars, const ExtensionOracle& oracle) {
    // Clauses checked when their later variable (in vars order) gets a value.
    std::vector<std::vector<Clause>> closing(vars.size());
    auto indexOf = [&](Var v) {
        return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    };
    for (const auto& c : h.clauses())
        closing[std::max(indexOf(c.first().var), indexOf(c.second().var))].push_back(c);

    std::vector<std::int8_t> value(vars.size(), -1);
    ThetaCount out;
    auto litTrue = [&](Literal l) { return value[indexOf(l.var)] == (l.positive ? 1 : 0); };
    auto dfs = [&](auto&& self, std::size_t j, LiteralMask lits, LiteralMask conflicts, bool alive) -> void {
        if (j == vars.size()) {
            ++out.models;
            if (alive)
                ++out.extendable;
            return;
        }
        for (int bit = 0; bit < 2; ++bit) {
            value[j] = static_cast<std::int8_t>(bit);
            bool ok = true;
            for (const auto& c : closing[j])
                if (!litTrue(c.first()) && !litTrue(c.second())) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            const std::size_t litBit = 2 * j + (bit ? 0 : 1);
            const LiteralMask next = lits | bitMask(litBit);
            const bool stillAlive =
                alive && !(conflicts & bitMask(litBit)) && !(oracle.conflictsOf(litBit) & next);
            self(self, j + 1, next, conflicts | oracle.conflictsOf(litBit), stillAlive);
        }
        value[j] = -1;
    };
    dfs(dfs, 0, 0, 0, oracle.formulaSatisfiable());
    return out;
}

} // namespace

ThetaCount thetaCount(const Cnf& h, const Cnf& f) {
    const std::vector<Var> vars = h.variables();
    const bool matching = isMatchingFormula(h);
    if (matching ? h.size() > kThetaMatchingClauseGuard : vars.size() > kThetaVariableGuard)
        throw EnumerationTooLarge("sat(H) over " + std::to_string(vars.size()) +
                                  " variables exceeds the enumeration guard");
    const ExtensionOracle oracle(f, vars);
    if (!matching)
        return countGeneral(h, vars, oracle);
    std::uint64_t models = 1;
    for (std::size_t i = 0; i < h.size(); ++i)
        models *= 3;
    return {oracle.formulaSatisfiable() ? countMatchingExtendable(h, oracle) : 0, models};
}

} // namespace obddlab
