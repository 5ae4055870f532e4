#pragma once

#include "obddlab/cnf.hpp"
#include "obddlab/fraction.hpp"

#include <cstdint>

namespace obddlab {

// Enumeration guards for sat(H): general formulas up to 30 variables,
// matching formulas (3^h models, enumerated per clause) up to 20 clauses.
inline constexpr std::size_t kThetaVariableGuard = 30;
inline constexpr std::size_t kThetaMatchingClauseGuard = 20;

struct ThetaCount {
    std::uint64_t extendable = 0; // |{α ∈ sat(H) : F ∧ α ∈ SAT}|
    std::uint64_t models = 0;     // |sat(H)|

    // extendable / models, or 1 when H is unsatisfiable.
    Fraction value() const { return models == 0 ? Fraction(1, 1) : Fraction(extendable, models); }
};

/// Fraction of the models of H (over var(H)) that extend to a model of F.
/// Extension is checked over the ambient variables of F.
ThetaCount thetaCount(const Cnf& h, const Cnf& f);
inline Fraction theta(const Cnf& h, const Cnf& f) { return thetaCount(h, f).value(); }

} // namespace obddlab
